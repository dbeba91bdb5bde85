use std::collections::BTreeMap;
use std::sync::Mutex;

use num_rational::BigRational;
use num_traits::Zero;

use crate::laurent::ExponentVector;

use super::germ::{branch_semigroup, CurveGerm, Semigroup};
use super::linalg::Echelon;
use super::SemigroupError;

/// Ranks of the jet map at degree caps `N`, `N + 1`, `N + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    pub degree_cap: usize,
    pub ranks: [usize; 3],
}

impl RankCertificate {
    pub fn is_stable(&self) -> bool {
        self.ranks[0] == self.ranks[1] && self.ranks[1] == self.ranks[2]
    }
}

/// Hilbert function `R(v) = codim {f : ord f(γ_i) ≥ v_i}` of a germ.
///
/// Values are ranks of the map sending monomials of degree at most `N` to
/// their jets along every branch, with `N = Σ v_i` and the rank rechecked at
/// `N + 1` and `N + 2`.
#[derive(Debug)]
pub struct HilbertOracle {
    germ: CurveGerm,
    semigroups: Vec<Semigroup>,
    cache: Mutex<BTreeMap<Vec<i64>, (i64, RankCertificate)>>,
}

impl HilbertOracle {
    pub fn new(germ: CurveGerm) -> Result<Self, SemigroupError> {
        let semigroups = germ
            .branches()
            .iter()
            .map(|b| branch_semigroup(b, b.truncation()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(HilbertOracle {
            germ,
            semigroups,
            cache: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn germ(&self) -> &CurveGerm {
        &self.germ
    }

    pub fn n(&self) -> usize {
        self.germ.n()
    }

    pub fn semigroups(&self) -> &[Semigroup] {
        &self.semigroups
    }

    /// `R(v)`; negative coordinates impose no condition and are clamped to 0.
    pub fn r(&self, v: &[i64]) -> Result<i64, SemigroupError> {
        Ok(self.r_certified(v)?.0)
    }

    /// `R_i(v_i) = R(0, .., v_i, .., 0)`.
    pub fn r_i(&self, i: usize, vi: i64) -> Result<i64, SemigroupError> {
        let mut v = vec![0; self.n()];
        v[i] = vi;
        self.r(&v)
    }

    pub fn r_certified(&self, v: &[i64]) -> Result<(i64, RankCertificate), SemigroupError> {
        if v.len() != self.n() {
            return Err(SemigroupError::LatticeMismatch(format!(
                "point has {} coordinates, germ has {} branches",
                v.len(),
                self.n()
            )));
        }
        let clamped: Vec<i64> = v.iter().map(|&x| x.max(0)).collect();
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&clamped) {
            return Ok(hit.clone());
        }
        let computed = self.compute(&clamped)?;
        self.cache
            .lock()
            .expect("cache lock")
            .insert(clamped, computed.clone());
        Ok(computed)
    }

    fn compute(&self, v: &[i64]) -> Result<(i64, RankCertificate), SemigroupError> {
        for (i, (b, &vi)) in self.germ.branches().iter().zip(v).enumerate() {
            if vi as usize > b.truncation() {
                return Err(SemigroupError::TruncationTooSmall(format!(
                    "v_{} = {} exceeds the truncation {} of branch {}",
                    i + 1,
                    vi,
                    b.truncation(),
                    i + 1
                )));
            }
        }
        let width: usize = v.iter().sum::<i64>() as usize;
        let cap = width;
        let per_branch: Vec<Vec<Vec<_>>> = self
            .germ
            .branches()
            .iter()
            .zip(v)
            .map(|(b, &vi)| b.jets_by_degree(cap + 2, vi as usize))
            .collect();
        let mut ech = Echelon::new(width);
        let mut ranks = [0usize; 3];
        for d in 0..=cap + 2 {
            for k in 0..=d {
                let mut row = Vec::with_capacity(width);
                for tiers in &per_branch {
                    row.extend(tiers[d][k].iter().cloned());
                }
                if row.iter().any(|c: &BigRational| !c.is_zero()) {
                    ech.insert(row);
                }
            }
            if d >= cap {
                ranks[d - cap] = ech.rank();
            }
        }
        let cert = RankCertificate { degree_cap: cap, ranks };
        if !cert.is_stable() {
            return Err(SemigroupError::TruncationTooSmall(format!(
                "rank not stable at degree caps {}..{}: {:?}",
                cap,
                cap + 2,
                ranks
            )));
        }
        Ok((ranks[0] as i64, cert))
    }

    /// `g_i` (the delta invariants) and the doubled `g̃_i = g_i + ½ Σ_{j≠i} lk_ij`.
    pub fn gtilde(&self) -> (Vec<i64>, ExponentVector) {
        let g: Vec<i64> = self.semigroups.iter().map(|s| s.delta).collect();
        let m = self.germ.intersections();
        let doubled = (0..self.n())
            .map(|i| 2 * g[i] + (0..self.n()).filter(|&j| j != i).map(|j| m[i][j]).sum::<i64>())
            .collect();
        (g, ExponentVector::from_doubled(doubled))
    }

    /// `Σ_{i<j} lk(L_i, L_j)`.
    pub fn total_linking(&self) -> i64 {
        let m = self.germ.intersections();
        (0..self.n()).map(|i| ((i + 1)..self.n()).map(|j| m[i][j]).sum::<i64>()).sum()
    }
}
