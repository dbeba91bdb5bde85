//! Sparse Laurent polynomials in several variables with half-integer
//! exponents and arbitrary-precision integer coefficients.
//!
//! Exponents are stored doubled (see [`ExponentVector`]), so `t^{1/2}` is the
//! exponent `1` and `t^{-1}` is `-2`. Variable indices are 0-based in the API
//! and 1-based (`t1`, `t2`, ...) in text.

mod exponent;
mod parse;
mod series;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use exponent::{fmt_half, parse_half, ExponentVector, LatticeBox};
pub use series::TruncatedSeries;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable-count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("NON-DIVISIBLE: {0}")]
    NonDivisible(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("HALF-INTEGER-SUBSTITUTION: t{var} appears with exponent {exponent}")]
    HalfIntegerSubstitution { var: usize, exponent: String },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("OUT-OF-RANGE: {point} lies below the truncation floor {floor}")]
    OutOfRange { point: String, floor: String },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A Laurent polynomial with integer coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(ExponentVector::zeros(nvars), c)
    }

    pub fn monomial(exp: ExponentVector, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(exp.nvars());
        p.add_term(exp, c.into());
        p
    }

    /// `t_i^{doubled/2}` in `nvars` variables.
    pub fn variable_power(nvars: usize, i: usize, doubled: i64) -> Self {
        Self::monomial(ExponentVector::zeros(nvars).shifted(i, doubled), 1)
    }

    /// Builds a polynomial from (doubled exponent, coefficient) pairs, summing repeats.
    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.nvars(), nvars, "exponent length mismatch");
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of encoded exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExponentVector) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn check_var(&self, i: usize) -> Result<(), PolyError> {
        if i >= self.nvars {
            Err(PolyError::VariableOutOfRange {
                index: i,
                nvars: self.nvars,
            })
        } else {
            Ok(())
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            Err(PolyError::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        } else {
            Ok(())
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same(other)?;
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `t^shift`.
    pub fn shift(&self, shift: &ExponentVector) -> Self {
        assert_eq!(shift.nvars(), self.nvars, "shift length mismatch");
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// `p(t^{-1})`.
    pub fn invert_variables(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.invert_variables() == *self
    }

    /// First term violating `p(t^{-1}) = sign * p(t)`, if any.
    pub fn symmetry_witness(&self, sign: i64) -> Option<(ExponentVector, BigInt)> {
        self.terms
            .iter()
            .find(|(e, c)| self.coeff(&-*e) != *c * sign)
            .map(|(e, c)| (e.clone(), c.clone()))
    }

    /// Largest doubled exponent of variable `i`, or `None` for the zero polynomial.
    pub fn max_degree(&self, i: usize) -> Option<i64> {
        self.terms.keys().map(|e| e.get(i)).max()
    }

    pub fn min_degree(&self, i: usize) -> Option<i64> {
        self.terms.keys().map(|e| e.get(i)).min()
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Division proceeds by lexicographic leading terms. Every quotient
    /// exponent must lie in the box `[min(p) - min(q), max(p) - max(q)]`
    /// (taken per variable), since degrees in a single variable are additive.
    /// A step that leaves this box, or a leading coefficient that does not
    /// divide, proves that no exact quotient exists.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.check_same(divisor)?;
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let n = self.nvars;
        let mut quotient = Self::zero(n);
        if self.is_zero() {
            return Ok(quotient);
        }
        let mut lo = Vec::with_capacity(n);
        let mut hi = Vec::with_capacity(n);
        for i in 0..n {
            let l = self.min_degree(i).unwrap() - divisor.min_degree(i).unwrap();
            let h = self.max_degree(i).unwrap() - divisor.max_degree(i).unwrap();
            if l > h {
                return Err(PolyError::NonDivisible(format!(
                    "t{} degree span of the divisor exceeds that of the dividend",
                    i + 1
                )));
            }
            lo.push(l);
            hi.push(h);
        }
        let qbox = LatticeBox::new(ExponentVector::from_doubled(lo), ExponentVector::from_doubled(hi));
        let (dlead_e, dlead_c) = divisor.leading_term().unwrap();
        let mut rem = self.clone();
        while let Some((re, rc)) = rem.leading_term() {
            let qe = re - dlead_e;
            let (qc, r) = rc.div_rem(dlead_c);
            if !r.is_zero() {
                return Err(PolyError::NonDivisible(format!(
                    "leading coefficient {} is not divisible by {}",
                    rc, dlead_c
                )));
            }
            if !qbox.contains(&qe) {
                return Err(PolyError::NonDivisible(format!(
                    "quotient exponent {} leaves the admissible box {}",
                    qe, qbox
                )));
            }
            let step = Self::monomial(qe, qc.clone());
            rem = rem.try_sub(&step.multiply(divisor)?)?;
            quotient.add_term(step.terms.into_iter().next().unwrap().0, qc);
        }
        Ok(quotient)
    }

    /// `self * (1 + t_i^{-1} + t_i^{-2} + ...)`, keeping only exponents `⪰ floor`.
    pub fn geometric_div(&self, i: usize, floor: &ExponentVector) -> Result<TruncatedSeries, PolyError> {
        self.check_var(i)?;
        TruncatedSeries::new(self.clone(), floor.clone())?.geometric_div(i)
    }

    /// Sets `t_i = 1`, which requires integral `t_i`-exponents.
    pub fn evaluate_at_one(&self, i: usize) -> Result<Self, PolyError> {
        self.check_var(i)?;
        if let Some(e) = self.terms.keys().find(|e| e.get(i) % 2 != 0) {
            return Err(PolyError::HalfIntegerSubstitution {
                var: i + 1,
                exponent: fmt_half(e.get(i)),
            });
        }
        Ok(self.evaluate_at_one_principal(i))
    }

    /// Sets `t_i^{1/2} = 1`, i.e. deletes variable `i` from every exponent.
    ///
    /// On integral `t_i`-exponents this coincides with [`Self::evaluate_at_one`].
    pub fn evaluate_at_one_principal(&self, i: usize) -> Self {
        assert!(i < self.nvars, "variable index out of range");
        let mut out = Self::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            out.add_term(e.remove(i), c.clone());
        }
        out
    }

    /// Value at `t^{1/2} = (1, ..., 1)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Replaces `t_i` by `t_i^k`.
    pub fn substitute_power(&self, i: usize, k: i64) -> Self {
        assert!(i < self.nvars, "variable index out of range");
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.set(i, e.get(i) * k);
                    (e, c.clone())
                })
                .collect::<Vec<_>>()
                .into_iter()
                .fold(BTreeMap::new(), |mut acc, (e, c)| {
                    *acc.entry(e).or_insert_with(BigInt::zero) += c;
                    acc
                }),
        }
        .pruned()
    }

    fn pruned(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    /// Reinterprets the polynomial in `nvars` variables, sending variable `k`
    /// to variable `positions[k]`.
    pub fn embed(&self, nvars: usize, positions: &[usize]) -> Self {
        assert_eq!(positions.len(), self.nvars, "embedding length mismatch");
        LaurentPoly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = ExponentVector::zeros(nvars);
                    for (k, &p) in positions.iter().enumerate() {
                        f.set(p, e.get(k));
                    }
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Largest absolute coefficient, zero for the zero polynomial.
    pub fn height(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Renders with custom variable names.
    pub fn to_string_with_names(&self, names: &[&str]) -> String {
        parse::render(self, names)
    }

    /// Parses text using the default names `t1, t2, ...` (and `t` when `nvars == 1`).
    pub fn parse(s: &str, nvars: usize) -> Result<Self, PolyError> {
        let names = default_names(nvars);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut p = parse::parse_with_names(s, &refs);
        if nvars == 1 && p.is_err() {
            p = parse::parse_with_names(s, &["t"]);
        }
        p
    }

    pub fn parse_with_names(s: &str, names: &[&str]) -> Result<Self, PolyError> {
        parse::parse_with_names(s, names)
    }
}

pub(crate) fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("t{}", i)).collect()
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&parse::render(self, &refs))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("variable-count mismatch in addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("variable-count mismatch in subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.multiply(rhs).expect("variable-count mismatch in multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&BigInt::from(-1))
    }
}

/// The binomial `m - m^{-1}` for the monomial `m = t^e`.
pub fn monomial_difference(e: &ExponentVector) -> LaurentPoly {
    let half = e;
    &LaurentPoly::monomial(half.clone(), 1) - &LaurentPoly::monomial(-half, 1)
}
