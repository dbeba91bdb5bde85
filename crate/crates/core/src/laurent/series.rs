use num_bigint::BigInt;

use super::{ExponentVector, LaurentPoly, PolyError};

/// A Laurent series known exactly on the orthant `{v : v ⪰ floor}`.
///
/// Terms with any coordinate below the floor are discarded, and coefficient
/// queries below the floor are refused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    base: LaurentPoly,
    floor: ExponentVector,
}

impl TruncatedSeries {
    pub fn new(base: LaurentPoly, floor: ExponentVector) -> Result<Self, PolyError> {
        if base.nvars() != floor.nvars() {
            return Err(PolyError::VariableCountMismatch {
                left: base.nvars(),
                right: floor.nvars(),
            });
        }
        let base = LaurentPoly::from_terms(
            base.nvars(),
            base.terms()
                .filter(|(e, _)| floor.preceq(e))
                .map(|(e, c)| (e.clone(), c.clone())),
        );
        Ok(TruncatedSeries { base, floor })
    }

    pub fn base(&self) -> &LaurentPoly {
        &self.base
    }

    pub fn floor(&self) -> &ExponentVector {
        &self.floor
    }

    pub fn coeff(&self, v: &ExponentVector) -> Result<BigInt, PolyError> {
        if !self.floor.preceq(v) {
            return Err(PolyError::OutOfRange {
                point: v.to_string(),
                floor: self.floor.to_string(),
            });
        }
        Ok(self.base.coeff(v))
    }

    /// Multiplies by `1 + t_i^{-1} + t_i^{-2} + ...`.
    ///
    /// The coefficient at `v` becomes the tail sum of the old coefficients
    /// over `(v_1, .., k, .., v_n)` with `k ≥ v_i` on the coset of `v_i`.
    pub fn geometric_div(&self, i: usize) -> Result<Self, PolyError> {
        let n = self.base.nvars();
        if i >= n {
            return Err(PolyError::VariableOutOfRange { index: i, nvars: n });
        }
        let f = self.floor.get(i);
        let mut out = Vec::new();
        for (e, c) in self.base.terms() {
            let mut k = e.get(i);
            while k >= f {
                out.push((e.shifted(i, k - e.get(i)), c.clone()));
                k -= 2;
            }
        }
        Ok(TruncatedSeries {
            base: LaurentPoly::from_terms(n, out),
            floor: self.floor.clone(),
        })
    }

    /// Multiplies by the monomial `t^shift`, moving the floor along.
    pub fn shift(&self, shift: &ExponentVector) -> Self {
        TruncatedSeries {
            base: self.base.shift(shift),
            floor: &self.floor + shift,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        let floor = self.floor.join(&other.floor);
        TruncatedSeries::new(self.base.try_add(&other.base)?, floor)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        let floor = self.floor.join(&other.floor);
        TruncatedSeries::new(self.base.try_sub(&other.base)?, floor)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        TruncatedSeries {
            base: self.base.scale(c),
            floor: self.floor.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_is_enforced() {
        let p = LaurentPoly::parse("t + t^{-3}", 1).unwrap();
        let s = TruncatedSeries::new(p, ExponentVector::from_integers(&[-1])).unwrap();
        assert_eq!(s.base().num_terms(), 1);
        assert!(s.coeff(&ExponentVector::from_integers(&[-2])).is_err());
        assert_eq!(s.coeff(&ExponentVector::from_integers(&[1])).unwrap(), BigInt::from(1));
    }

    #[test]
    fn add_takes_max_floor() {
        let a = TruncatedSeries::new(LaurentPoly::parse("t^{-1}", 1).unwrap(), ExponentVector::from_integers(&[-3])).unwrap();
        let b = TruncatedSeries::new(LaurentPoly::parse("1", 1).unwrap(), ExponentVector::from_integers(&[0])).unwrap();
        let s = a.try_add(&b).unwrap();
        assert_eq!(s.floor(), &ExponentVector::from_integers(&[0]));
        assert_eq!(s.base(), &LaurentPoly::one(1));
    }

    #[test]
    fn shift_moves_floor() {
        let a = TruncatedSeries::new(LaurentPoly::one(1), ExponentVector::from_integers(&[0])).unwrap();
        let s = a.shift(&ExponentVector::from_doubled(vec![1]));
        assert_eq!(s.floor(), &ExponentVector::from_doubled(vec![1]));
    }
}
