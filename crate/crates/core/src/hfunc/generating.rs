use crate::laurent::{ExponentVector, LatticeBox, LaurentPoly, TruncatedSeries};
use crate::linkdata::{ComponentSet, LinkDescriptor};

use super::{ChiEntry, HError, HFunction};

/// The generating function `Σ H(v) t^v`, exact at lattice points `v` with
/// `floor ⪯ v ⪯ ℓ`.
///
/// Each sublink contributes its shifted `Δ̃` times one factor
/// `1/(1 - t_i^{-1})` per variable. Variables outside the sublink are pinned
/// at `ℓ_k` before the tail is taken, which is why the series is only
/// correct below `ℓ`. Components contribute through `Δ` with one extra factor.
pub fn h_generating_series(link: &LinkDescriptor, floor: &ExponentVector) -> Result<TruncatedSeries, HError> {
    let hf = HFunction::new(link)?;
    let n = link.n();
    let ell = hf.ell().clone();
    let mut total = TruncatedSeries::new(LaurentPoly::zero(n), floor.clone())?;
    for set in ComponentSet::all_nonempty(n) {
        let idx = set.indices();
        let sub_ell = link.sublink_linking_vector(set);
        let mut shift = ell.clone();
        for (k, &j) in idx.iter().enumerate() {
            shift.set(j, ell.get(j) - sub_ell.get(k) - 2);
        }
        let (poly, extra) = match hf.chi_table().entry(set) {
            ChiEntry::Knot(k) => (k.delta().clone(), true),
            ChiEntry::Multi(p) => (p.clone(), false),
        };
        let mut series = TruncatedSeries::new(poly.embed(n, &idx).shift(&shift), floor.clone())?;
        if extra {
            series = series.geometric_div(idx[0])?;
        }
        for i in 0..n {
            series = series.geometric_div(i)?;
        }
        total = if set.len() % 2 == 1 {
            total.try_add(&series)?
        } else {
            total.try_sub(&series)?
        };
    }
    Ok(total)
}

/// Compares the generating series with the inversion formula at every
/// lattice point of `bbox` lying below `ℓ`. Returns the number of points
/// compared.
pub fn generating_crosscheck(link: &LinkDescriptor, bbox: &LatticeBox) -> Result<usize, HError> {
    let hf = HFunction::new(link)?;
    let series = h_generating_series(link, &bbox.lo)?;
    let mut checked = 0;
    for v in bbox.points(hf.ell()) {
        if !v.preceq(hf.ell()) {
            continue;
        }
        let from_series = series.coeff(&v)?;
        let direct = hf.h(&v)?;
        if from_series != direct.into() {
            return Err(HError::CrosscheckFailed(format!(
                "generating series gives {} at {}, inversion formula gives {}",
                from_series, v, direct
            )));
        }
        checked += 1;
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdata::catalog_link;
    use num_bigint::BigInt;

    #[test]
    fn whitehead_series() {
        let w = catalog_link("whitehead", &[]).unwrap();
        let s = h_generating_series(&w, &ExponentVector::from_integers(&[-3, -3])).unwrap();
        assert_eq!(s.coeff(&ExponentVector::from_integers(&[0, 0])).unwrap(), BigInt::from(1));
        assert_eq!(s.coeff(&ExponentVector::from_integers(&[-1, 0])).unwrap(), BigInt::from(1));
        assert_eq!(s.coeff(&ExponentVector::from_integers(&[-2, -3])).unwrap(), BigInt::from(5));
    }

    #[test]
    fn catalog_crosscheck() {
        for (name, params) in [
            ("whitehead", vec![]),
            ("borromean", vec![]),
            ("torus2", vec![2]),
            ("twobridge_Ln", vec![2]),
            ("b85", vec![]),
        ] {
            let l = catalog_link(name, &params).unwrap();
            let bbox = l.probe_box();
            assert!(generating_crosscheck(&l, &bbox).unwrap() > 0, "{}", name);
        }
    }
}
