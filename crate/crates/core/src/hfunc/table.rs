use std::collections::BTreeMap;
use std::sync::Arc;

use crate::laurent::{ExponentVector, LatticeBox};

use super::{HError, HFunction};

/// H-values cached over the lattice points of a box. Points outside the box
/// are evaluated directly.
#[derive(Clone, Debug)]
pub struct HTable {
    hf: Arc<HFunction>,
    bbox: LatticeBox,
    values: BTreeMap<ExponentVector, i64>,
}

/// One row of a tabulation: the lattice point `v` and `H(v)`, `J(m)`,
/// `wtJ(m)` at `m = v - ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub v: ExponentVector,
    pub h: i64,
    pub j: i64,
    pub wtj: i64,
}

impl HTable {
    pub fn new(hf: Arc<HFunction>, bbox: LatticeBox) -> Result<Self, HError> {
        if bbox.nvars() != hf.n() {
            return Err(HError::LatticeMismatch(format!(
                "box {} has {} coordinates, link has {} components",
                bbox,
                bbox.nvars(),
                hf.n()
            )));
        }
        let mut values = BTreeMap::new();
        for v in bbox.points(hf.ell()) {
            let h = hf.h(&v)?;
            values.insert(v, h);
        }
        Ok(HTable { hf, bbox, values })
    }

    pub fn function(&self) -> &HFunction {
        &self.hf
    }

    pub fn bbox(&self) -> &LatticeBox {
        &self.bbox
    }

    pub fn points(&self) -> impl Iterator<Item = &ExponentVector> {
        self.values.keys()
    }

    pub fn h(&self, v: &ExponentVector) -> Result<i64, HError> {
        match self.values.get(v) {
            Some(&h) => Ok(h),
            None => self.hf.h(v),
        }
    }

    /// Rows in row-major order of the box.
    pub fn rows(&self) -> Result<Vec<TableRow>, HError> {
        let view = JView::new(Arc::new(self.clone()));
        self.bbox
            .points(self.hf.ell())
            .into_iter()
            .map(|v| {
                let m = (&v - self.hf.ell()).to_integers().expect("v - ℓ is integral");
                Ok(TableRow {
                    h: self.h(&v)?,
                    j: view.j(&m)?,
                    wtj: view.wtj(&m)?,
                    v,
                })
            })
            .collect()
    }
}

/// `J(m) = H(m + ℓ)` read through a shared [`HTable`].
#[derive(Clone, Debug)]
pub struct JView {
    table: Arc<HTable>,
}

impl JView {
    pub fn new(table: Arc<HTable>) -> Self {
        JView { table }
    }

    pub fn n(&self) -> usize {
        self.table.hf.n()
    }

    pub fn table(&self) -> &HTable {
        &self.table
    }

    pub fn j(&self, m: &[i64]) -> Result<i64, HError> {
        let v = &ExponentVector::from_integers(m) + self.table.hf.ell();
        self.table.h(&v)
    }

    pub fn wtj(&self, m: &[i64]) -> Result<i64, HError> {
        let hf = &self.table.hf;
        let components: i64 = m.iter().enumerate().map(|(i, &mi)| hf.component_h(i, mi)).sum();
        Ok(self.j(m)? - components)
    }
}
