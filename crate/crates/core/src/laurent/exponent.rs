use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::PolyError;

/// Formats a doubled integer `k` as the rational number `k/2`.
pub fn fmt_half(doubled: i64) -> String {
    if doubled % 2 == 0 {
        format!("{}", doubled / 2)
    } else {
        format!("{}/2", doubled)
    }
}

/// Parses an integer or a fraction with denominator dividing 2 into its doubled value.
pub fn parse_half(s: &str) -> Result<i64, PolyError> {
    let s = s.trim();
    let err = |reason: &str| PolyError::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    match s.split_once('/') {
        None => s
            .parse::<i64>()
            .map(|v| 2 * v)
            .map_err(|_| err("expected an integer")),
        Some((num, den)) => {
            let num: i64 = num.trim().parse().map_err(|_| err("bad numerator"))?;
            let den: i64 = den.trim().parse().map_err(|_| err("bad denominator"))?;
            if den == 0 {
                return Err(err("zero denominator"));
            }
            if (2 * num) % den != 0 {
                return Err(err("only integers and half-integers are allowed"));
            }
            Ok(2 * num / den)
        }
    }
}

/// A point of an affine lattice `Z^n + l` with `l` half-integral.
///
/// Coordinates are stored doubled: the stored value `k` encodes `k/2`.
/// The derived `Ord` is lexicographic on the encoded values and is the term
/// order used for polynomial storage; the lattice order is [`Self::preceq`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn from_doubled(coords: Vec<i64>) -> Self {
        ExponentVector(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        ExponentVector(coords.iter().map(|c| 2 * c).collect())
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.0
    }

    /// Doubled value of coordinate `i`.
    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, doubled: i64) {
        self.0[i] = doubled;
    }

    /// Coordinatewise `self <= other`.
    pub fn preceq(&self, other: &Self) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c % 2 == 0)
    }

    /// Integer coordinates, if every coordinate is an integer.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.is_integral()
            .then(|| self.0.iter().map(|c| c / 2).collect())
    }

    /// Whether `self - other` lies in `Z^n`.
    pub fn same_coset(&self, other: &Self) -> bool {
        self.0.len() == other.0.len()
            && self.0.iter().zip(&other.0).all(|(a, b)| (a - b) % 2 == 0)
    }

    pub fn join(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn meet(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Doubled value of the coordinate sum `|v|`.
    pub fn doubled_sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Keeps the coordinates listed in `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> Self {
        ExponentVector(indices.iter().map(|&i| self.0[i]).collect())
    }

    pub fn remove(&self, i: usize) -> Self {
        let mut c = self.0.clone();
        c.remove(i);
        ExponentVector(c)
    }

    /// Shifts coordinate `i` by `doubled_delta`.
    pub fn shifted(&self, i: usize, doubled_delta: i64) -> Self {
        let mut c = self.0.clone();
        c[i] += doubled_delta;
        ExponentVector(c)
    }

    /// Parses a comma-separated list of integers or half-integers.
    pub fn parse(s: &str) -> Result<Self, PolyError> {
        let coords = s
            .split(',')
            .map(parse_half)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ExponentVector(coords))
    }

    /// Comma-joined coordinates without parentheses, e.g. `1/2,-3`.
    pub fn to_plain_string(&self) -> String {
        self.0
            .iter()
            .map(|&c| fmt_half(c))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_plain_string())
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        assert_eq!(self.0.len(), rhs.0.len(), "exponent length mismatch");
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        assert_eq!(self.0.len(), rhs.0.len(), "exponent length mismatch");
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }
}

/// A closed axis-parallel box `[lo, hi]` in `R^n`, with doubled bounds.
///
/// Lattice points are enumerated per coset: [`LatticeBox::points`] returns the
/// points congruent to a given offset modulo `Z^n`, in row-major order (the
/// last coordinate varies fastest).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBox {
    pub lo: ExponentVector,
    pub hi: ExponentVector,
}

impl LatticeBox {
    pub fn new(lo: ExponentVector, hi: ExponentVector) -> Self {
        assert_eq!(lo.nvars(), hi.nvars(), "box corner length mismatch");
        LatticeBox { lo, hi }
    }

    /// Box with integer corners.
    pub fn integral(lo: &[i64], hi: &[i64]) -> Self {
        LatticeBox::new(ExponentVector::from_integers(lo), ExponentVector::from_integers(hi))
    }

    /// The cube `[lo, hi]^n`.
    pub fn cube(n: usize, lo: i64, hi: i64) -> Self {
        LatticeBox::integral(&vec![lo; n], &vec![hi; n])
    }

    pub fn nvars(&self) -> usize {
        self.lo.nvars()
    }

    /// Parses `lo1,lo2,..:hi1,hi2,..`.
    pub fn parse(s: &str) -> Result<Self, PolyError> {
        let (lo, hi) = s.split_once(':').ok_or_else(|| PolyError::Parse {
            input: s.to_string(),
            reason: "expected lo1,..:hi1,..".to_string(),
        })?;
        let lo = ExponentVector::parse(lo)?;
        let hi = ExponentVector::parse(hi)?;
        if lo.nvars() != hi.nvars() {
            return Err(PolyError::Parse {
                input: s.to_string(),
                reason: "corners have different lengths".to_string(),
            });
        }
        Ok(LatticeBox { lo, hi })
    }

    pub fn contains(&self, v: &ExponentVector) -> bool {
        self.lo.preceq(v) && v.preceq(&self.hi)
    }

    /// Grows the box by `k` (an integer) on every side.
    pub fn expanded(&self, k: i64) -> Self {
        let d = ExponentVector::from_doubled(vec![2 * k; self.nvars()]);
        LatticeBox::new(&self.lo - &d, &self.hi + &d)
    }

    /// Lattice points of `offset + Z^n` inside the box, row-major.
    pub fn points(&self, offset: &ExponentVector) -> Vec<ExponentVector> {
        let n = self.nvars();
        assert_eq!(offset.nvars(), n, "offset length mismatch");
        let mut ranges = Vec::with_capacity(n);
        for i in 0..n {
            let parity = offset.get(i).rem_euclid(2);
            let mut start = self.lo.get(i);
            if (start - parity).rem_euclid(2) != 0 {
                start += 1;
            }
            let end = self.hi.get(i);
            if start > end {
                return Vec::new();
            }
            ranges.push((start, end));
        }
        let mut out = Vec::new();
        let mut cur: Vec<i64> = ranges.iter().map(|r| r.0).collect();
        if n == 0 {
            return vec![ExponentVector::zeros(0)];
        }
        loop {
            out.push(ExponentVector::from_doubled(cur.clone()));
            let mut k = n;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] + 2 <= ranges[k].1 {
                    cur[k] += 2;
                    for (j, r) in ranges.iter().enumerate().skip(k + 1) {
                        cur[j] = r.0;
                    }
                    break;
                }
            }
        }
    }

    /// Integer points, as plain integer vectors.
    pub fn integer_points(&self) -> Vec<Vec<i64>> {
        self.points(&ExponentVector::zeros(self.nvars()))
            .into_iter()
            .map(|p| p.to_integers().expect("integral coset"))
            .collect()
    }

    /// Whether the lattice point `v` (of the coset being enumerated) sits on
    /// the outer layer of the box for that coset.
    pub fn on_boundary(&self, v: &ExponentVector) -> bool {
        (0..self.nvars()).any(|i| v.get(i) - 2 < self.lo.get(i) || v.get(i) + 2 > self.hi.get(i))
    }
}

impl fmt::Display for LatticeBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo.to_plain_string(), self.hi.to_plain_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_roundtrip() {
        for k in -7..=7 {
            assert_eq!(parse_half(&fmt_half(k)).unwrap(), k);
        }
        assert_eq!(parse_half("-3/2").unwrap(), -3);
        assert_eq!(parse_half("4/2").unwrap(), 4);
        assert!(parse_half("1/3").is_err());
    }

    #[test]
    fn box_points_row_major() {
        let b = LatticeBox::cube(2, -1, 1);
        let pts = b.integer_points();
        assert_eq!(pts.len(), 9);
        assert_eq!(pts[0], vec![-1, -1]);
        assert_eq!(pts[1], vec![-1, 0]);
        assert_eq!(pts[8], vec![1, 1]);
    }

    #[test]
    fn box_points_half_coset() {
        let b = LatticeBox::cube(1, -3, 3);
        let pts = b.points(&ExponentVector::from_doubled(vec![1]));
        let got: Vec<i64> = pts.iter().map(|p| p.get(0)).collect();
        assert_eq!(got, vec![-5, -3, -1, 1, 3, 5]);
        assert!(b.on_boundary(&pts[0]));
        assert!(!b.on_boundary(&pts[2]));
    }

    #[test]
    fn box_parse() {
        let b = LatticeBox::parse("-4,-4:4,4").unwrap();
        assert_eq!(b, LatticeBox::cube(2, -4, 4));
        assert_eq!(b.to_string(), "-4,-4:4,4");
    }
}
