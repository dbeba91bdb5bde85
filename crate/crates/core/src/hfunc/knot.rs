use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::laurent::LaurentPoly;

use super::HError;

pub(crate) fn to_i64(x: &BigInt, what: &str) -> Result<i64, HError> {
    x.to_i64()
        .ok_or_else(|| HError::Overflow(format!("{} = {} does not fit in 64 bits", what, x)))
}

/// The H-function of a knot, given by its symmetric Alexander polynomial
/// normalized so that `Δ(1) = 1`.
///
/// `H(v) = 0` for `v ≥ D`, `H(v-1) = H(v) + b_v` with `b_v = Σ_{k≥v} c_k`,
/// and `H(v) = -v` below `-D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotH {
    delta: LaurentPoly,
    top: i64,
    /// `values[k] = H(top - k)` for `k = 0..=2*top`.
    values: Vec<i64>,
}

impl KnotH {
    pub fn new(delta: &LaurentPoly) -> Result<Self, HError> {
        let bad = |reason: String| HError::MalformedKnotPoly(format!("{}: {}", delta, reason));
        if delta.nvars() != 1 {
            return Err(bad(format!("expected one variable, got {}", delta.nvars())));
        }
        if delta.terms().any(|(e, _)| e.get(0) % 2 != 0) {
            return Err(bad("half-integer exponent".to_string()));
        }
        if !delta.is_symmetric() {
            return Err(bad("not symmetric".to_string()));
        }
        let at_one = delta.coefficient_sum();
        if !at_one.is_one() {
            return Err(bad(format!("Δ(1) = {}, expected 1", at_one)));
        }
        let top = delta.max_degree(0).unwrap() / 2;
        let coeff = |k: i64| delta.coeff(&crate::laurent::ExponentVector::from_integers(&[k]));
        let mut values = Vec::with_capacity((2 * top + 1) as usize);
        let mut h = BigInt::zero();
        let mut tail = BigInt::zero();
        values.push(0);
        for v in (-top + 1..=top).rev() {
            tail += coeff(v);
            h += &tail;
            values.push(to_i64(&h, "knot H")?);
        }
        Ok(KnotH {
            delta: delta.clone(),
            top,
            values,
        })
    }

    pub fn delta(&self) -> &LaurentPoly {
        &self.delta
    }

    /// Largest exponent `D` of `Δ`.
    pub fn degree(&self) -> i64 {
        self.top
    }

    pub fn h(&self, v: i64) -> i64 {
        if v >= self.top {
            0
        } else if v < -self.top {
            -v
        } else {
            self.values[(self.top - v) as usize]
        }
    }

    /// `χ(HFL⁻(K, u)) = b_u = Σ_{k ≥ u} c_k`.
    pub fn chi(&self, u: i64) -> BigInt {
        if u > self.top {
            BigInt::zero()
        } else if u <= -self.top {
            BigInt::one()
        } else {
            BigInt::from(self.h(u - 1) - self.h(u))
        }
    }
}
