use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Row-echelon basis over `Q`, keyed by pivot column. Each stored row is
/// zero before its pivot and has a 1 there.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    width: usize,
    rows: BTreeMap<usize, Vec<BigRational>>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduces `row` against the basis and keeps it if it is independent.
    /// Returns the new pivot column.
    pub fn insert(&mut self, mut row: Vec<BigRational>) -> Option<usize> {
        assert_eq!(row.len(), self.width, "row width mismatch");
        loop {
            let lead = row.iter().position(|c| !c.is_zero())?;
            match self.rows.get(&lead) {
                Some(basis) => {
                    let factor = row[lead].clone();
                    for (r, b) in row.iter_mut().zip(basis).skip(lead) {
                        if !b.is_zero() {
                            *r -= &factor * b;
                        }
                    }
                }
                None => {
                    let inv = BigRational::one() / &row[lead];
                    for r in row.iter_mut().skip(lead) {
                        *r *= &inv;
                    }
                    self.rows.insert(lead, row);
                    return Some(lead);
                }
            }
        }
    }
}

/// Rank of a rational matrix given by rows.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let width = rows.first().map_or(0, |r| r.len());
    let mut e = Echelon::new(width);
    for r in rows {
        e.insert(r.clone());
    }
    e.rank()
}
