use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;

use super::linalg::Echelon;
use super::SemigroupError;

/// Power series in `t` known modulo `t^len`, as a dense coefficient list.
pub type Series = Vec<BigRational>;

pub(crate) fn order(s: &[BigRational]) -> Option<usize> {
    s.iter().position(|c| !c.is_zero())
}

/// `a * b mod t^len`, skipping the zero coefficients of `a`.
pub(crate) fn mul_trunc(a: &[BigRational], b: &[BigRational], len: usize) -> Series {
    let mut out = vec![BigRational::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

fn one_series(len: usize) -> Series {
    let mut s = vec![BigRational::zero(); len];
    if len > 0 {
        s[0] = BigRational::one();
    }
    s
}

/// A parametrized branch `t ↦ (x(t), y(t))`, known modulo `t^T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchParam {
    x: Series,
    y: Series,
    truncation: usize,
    implicit: Option<LaurentPoly>,
}

impl BranchParam {
    /// Builds a branch from sparse `(power, coefficient)` lists.
    pub fn new(
        x: &[(usize, BigRational)],
        y: &[(usize, BigRational)],
        truncation: usize,
        implicit: Option<LaurentPoly>,
    ) -> Result<Self, SemigroupError> {
        if truncation == 0 {
            return Err(SemigroupError::NotAGerm("truncation order must be positive".into()));
        }
        let dense = |terms: &[(usize, BigRational)]| {
            let mut s = vec![BigRational::zero(); truncation];
            for (k, c) in terms {
                if *k < truncation {
                    s[*k] += c;
                }
            }
            s
        };
        let b = BranchParam {
            x: dense(x),
            y: dense(y),
            truncation,
            implicit,
        };
        if !b.x[0].is_zero() || !b.y[0].is_zero() {
            return Err(SemigroupError::NotAGerm("the branch does not pass through the origin".into()));
        }
        if order(&b.x).is_none() && order(&b.y).is_none() {
            return Err(SemigroupError::NotAGerm("the parametrization is constant".into()));
        }
        if let Some(f) = &b.implicit {
            if f.nvars() != 2 || f.terms().any(|(e, _)| e.doubled().iter().any(|&d| d < 0 || d % 2 != 0)) {
                return Err(SemigroupError::NotAGerm(format!(
                    "implicit equation {} must be a polynomial in x, y",
                    f
                )));
            }
            if let Some(k) = order(&b.evaluate(f, truncation)) {
                return Err(SemigroupError::NotAGerm(format!(
                    "implicit equation does not vanish on the branch: order {} < {}",
                    k, truncation
                )));
            }
        }
        Ok(b)
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_ints(x: &[(usize, i64)], y: &[(usize, i64)], truncation: usize, implicit: Option<&str>) -> Result<Self, SemigroupError> {
        let conv = |v: &[(usize, i64)]| -> Vec<(usize, BigRational)> {
            v.iter()
                .map(|&(k, c)| (k, BigRational::from_integer(BigInt::from(c))))
                .collect()
        };
        let implicit = implicit.map(parse_implicit).transpose()?;
        BranchParam::new(&conv(x), &conv(y), truncation, implicit)
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn implicit(&self) -> Option<&LaurentPoly> {
        self.implicit.as_ref()
    }

    pub fn x(&self) -> &[BigRational] {
        &self.x
    }

    pub fn y(&self) -> &[BigRational] {
        &self.y
    }

    /// `f(x(t), y(t)) mod t^len` for a polynomial `f` in `x, y`.
    pub fn evaluate(&self, f: &LaurentPoly, len: usize) -> Series {
        let len = len.min(self.truncation);
        let mut out = vec![BigRational::zero(); len];
        for (e, c) in f.terms() {
            let (a, b) = ((e.get(0) / 2) as usize, (e.get(1) / 2) as usize);
            let m = self.monomial(a, b, len);
            let c = BigRational::from_integer(c.clone());
            for (o, v) in out.iter_mut().zip(m) {
                *o += &c * v;
            }
        }
        out
    }

    /// `x(t)^a y(t)^b mod t^len`.
    pub fn monomial(&self, a: usize, b: usize, len: usize) -> Series {
        let mut s = one_series(len);
        for _ in 0..a {
            s = mul_trunc(&self.x, &s, len);
        }
        for _ in 0..b {
            s = mul_trunc(&self.y, &s, len);
        }
        s
    }

    /// Jets `x^a y^b mod t^len` of all monomials of degree at most `degree`,
    /// grouped by degree.
    pub(crate) fn jets_by_degree(&self, degree: usize, len: usize) -> Vec<Vec<Series>> {
        let mut tiers: Vec<Vec<Series>> = vec![vec![one_series(len)]];
        for d in 1..=degree {
            let prev = &tiers[d - 1];
            let mut tier: Vec<Series> = prev.iter().map(|s| mul_trunc(&self.x, s, len)).collect();
            tier.push(mul_trunc(&self.y, &prev[prev.len() - 1], len));
            tiers.push(tier);
        }
        tiers
    }
}

pub(crate) fn parse_implicit(s: &str) -> Result<LaurentPoly, SemigroupError> {
    Ok(LaurentPoly::parse_with_names(s, &["x", "y"])?)
}

/// The value semigroup of a branch below a bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semigroup {
    /// Elements in `[0, bound)`, increasing.
    pub elements: Vec<i64>,
    pub bound: i64,
    pub multiplicity: i64,
    pub conductor: i64,
    pub delta: i64,
}

impl Semigroup {
    pub fn contains(&self, s: i64) -> bool {
        s >= self.conductor || self.elements.binary_search(&s).is_ok()
    }

    /// Number of elements in `[0, v)`.
    pub fn count_below(&self, v: i64) -> i64 {
        if v <= 0 {
            0
        } else if v <= self.conductor {
            self.elements.iter().filter(|&&s| s < v).count() as i64
        } else {
            v - self.delta
        }
    }

    /// Minimal generators.
    pub fn generators(&self) -> Vec<i64> {
        let mut gens: Vec<i64> = Vec::new();
        let top = self.conductor + self.multiplicity;
        for &s in self.elements.iter().filter(|&&s| s > 0 && s < top) {
            if !self.is_sum_of(&gens, s) {
                gens.push(s);
            }
        }
        gens
    }

    fn is_sum_of(&self, gens: &[i64], s: i64) -> bool {
        let mut reach = vec![false; s as usize + 1];
        reach[0] = true;
        for k in 1..=s as usize {
            reach[k] = gens.iter().any(|&g| g as usize <= k && reach[k - g as usize]);
        }
        reach[s as usize]
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        write!(
            f,
            "<{}> delta {} conductor {} multiplicity {}",
            gens.join(","),
            self.delta,
            self.conductor,
            self.multiplicity
        )
    }
}

/// The semigroup `{ord_t f(γ(t))}` below `bound`, read off as the pivot
/// columns of the jet matrix of all monomials of degree below `bound`.
///
/// The conductor `c` is certified once `[c, c + multiplicity)` lies in the
/// semigroup below `bound`.
pub fn branch_semigroup(b: &BranchParam, bound: usize) -> Result<Semigroup, SemigroupError> {
    if bound > b.truncation {
        return Err(SemigroupError::TruncationTooSmall(format!(
            "bound {} exceeds truncation {}",
            bound, b.truncation
        )));
    }
    let mut ech = Echelon::new(bound);
    for tier in b.jets_by_degree(bound.saturating_sub(1), bound) {
        for jet in tier {
            ech.insert(jet);
        }
    }
    let elements: Vec<i64> = ech.pivots().map(|p| p as i64).collect();
    let bound = bound as i64;
    let multiplicity = match elements.iter().find(|&&s| s > 0) {
        Some(&m) => m,
        None => {
            return Err(SemigroupError::TruncationTooSmall(format!(
                "no positive value below {}",
                bound
            )))
        }
    };
    let gcd = elements.iter().fold(0i64, |g, &s| g.gcd(&s));
    let mut c = bound;
    while c > 0 && elements.binary_search(&(c - 1)).is_ok() {
        c -= 1;
    }
    if bound - c < multiplicity {
        if gcd > 1 {
            return Err(SemigroupError::NotReduced(format!(
                "all values below {} are divisible by {}",
                bound, gcd
            )));
        }
        return Err(SemigroupError::TruncationTooSmall(format!(
            "conductor not certified below {} (multiplicity {})",
            bound, multiplicity
        )));
    }
    let delta = c - elements.iter().filter(|&&s| s < c).count() as i64;
    Ok(Semigroup {
        elements,
        bound,
        multiplicity,
        conductor: c,
        delta,
    })
}

/// `ord_t g(γ_i(t))` where `g` is the implicit equation of the other branch.
pub fn intersection_multiplicity(bi: &BranchParam, bj: &BranchParam) -> Result<i64, SemigroupError> {
    let g = bj.implicit().ok_or(SemigroupError::MissingImplicit)?;
    let s = bi.evaluate(g, bi.truncation);
    order(&s).map(|k| k as i64).ok_or_else(|| {
        SemigroupError::TruncationTooSmall(format!(
            "implicit equation vanishes to order {} or more",
            bi.truncation
        ))
    })
}

/// A plane curve germ given by its branches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveGerm {
    pub name: String,
    branches: Vec<BranchParam>,
    intersections: Vec<Vec<i64>>,
}

impl CurveGerm {
    /// Builds a germ, computing pairwise intersection multiplicities from
    /// implicit equations unless a matrix is supplied.
    pub fn new(name: impl Into<String>, branches: Vec<BranchParam>, pairwise: Option<Vec<Vec<i64>>>) -> Result<Self, SemigroupError> {
        let n = branches.len();
        if n == 0 {
            return Err(SemigroupError::NotAGerm("no branches".into()));
        }
        let intersections = match pairwise {
            Some(m) => {
                let square = m.len() == n && m.iter().all(|r| r.len() == n);
                let ok = square && (0..n).all(|i| m[i][i] == 0 && (0..n).all(|j| m[i][j] == m[j][i]));
                if !ok {
                    return Err(SemigroupError::NotAGerm(
                        "intersection matrix must be symmetric with zero diagonal".into(),
                    ));
                }
                m
            }
            None => {
                let mut m = vec![vec![0i64; n]; n];
                for i in 0..n {
                    for j in (i + 1)..n {
                        let k = intersection_multiplicity(&branches[i], &branches[j])?;
                        m[i][j] = k;
                        m[j][i] = k;
                    }
                }
                m
            }
        };
        Ok(CurveGerm {
            name: name.into(),
            branches,
            intersections,
        })
    }

    pub fn n(&self) -> usize {
        self.branches.len()
    }

    pub fn branches(&self) -> &[BranchParam] {
        &self.branches
    }

    pub fn intersections(&self) -> &[Vec<i64>] {
        &self.intersections
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct BranchFile {
    x: Vec<(usize, i64, i64)>,
    y: Vec<(usize, i64, i64)>,
    truncation: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    implicit: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct GermFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    branches: Vec<BranchFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    intersections: Option<Vec<Vec<i64>>>,
}

pub fn germ_from_json(text: &str, default_name: &str) -> Result<CurveGerm, SemigroupError> {
    let file: GermFile = serde_json::from_str(text).map_err(|e| SemigroupError::Parse(e.to_string()))?;
    let mut branches = Vec::new();
    for b in &file.branches {
        let conv = |v: &[(usize, i64, i64)]| -> Result<Vec<(usize, BigRational)>, SemigroupError> {
            v.iter()
                .map(|&(k, num, den)| {
                    if den == 0 {
                        Err(SemigroupError::Parse("zero denominator".into()))
                    } else {
                        Ok((k, BigRational::new(num.into(), den.into())))
                    }
                })
                .collect()
        };
        let implicit = b.implicit.as_deref().map(parse_implicit).transpose()?;
        branches.push(BranchParam::new(&conv(&b.x)?, &conv(&b.y)?, b.truncation, implicit)?);
    }
    CurveGerm::new(file.name.unwrap_or_else(|| default_name.to_string()), branches, file.intersections)
}

pub fn load_germ(path: impl AsRef<Path>) -> Result<CurveGerm, SemigroupError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| SemigroupError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("germ");
    germ_from_json(&text, stem)
}

pub struct GermEntry {
    pub name: &'static str,
    pub params: &'static str,
    pub summary: &'static str,
}

pub fn germ_catalog_entries() -> &'static [GermEntry] {
    &[
        GermEntry { name: "smooth", params: "", summary: "smooth branch (t, t^3)" },
        GermEntry { name: "cusp", params: "", summary: "ordinary cusp (t^2, t^3)" },
        GermEntry { name: "branch_4_6_13", params: "", summary: "branch (t^4, t^6 + t^7)" },
        GermEntry { name: "lines", params: "", summary: "two transverse lines x^2 = y^2" },
        GermEntry { name: "a2n", params: "n", summary: "x^2 = y^(2n), two smooth branches meeting with multiplicity n" },
        GermEntry { name: "lines3", params: "", summary: "three pairwise transverse lines" },
    ]
}

const CATALOG_TRUNCATION: usize = 40;

pub fn germ_catalog(name: &str, params: &[i64]) -> Result<CurveGerm, SemigroupError> {
    let t = CATALOG_TRUNCATION;
    let expect = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(SemigroupError::Parse(format!("germ {} takes {} parameter(s)", name, k)))
        }
    };
    let germ = match name {
        "smooth" => {
            expect(0)?;
            CurveGerm::new(name, vec![BranchParam::from_ints(&[(1, 1)], &[(3, 1)], t, Some("y - x^3"))?], None)?
        }
        "cusp" => {
            expect(0)?;
            CurveGerm::new(name, vec![BranchParam::from_ints(&[(2, 1)], &[(3, 1)], t, Some("y^2 - x^3"))?], None)?
        }
        "branch_4_6_13" => {
            expect(0)?;
            CurveGerm::new(name, vec![BranchParam::from_ints(&[(4, 1)], &[(6, 1), (7, 1)], t, None)?], None)?
        }
        "lines" => {
            expect(0)?;
            CurveGerm::new(
                name,
                vec![
                    BranchParam::from_ints(&[(1, 1)], &[(1, 1)], t, Some("x - y"))?,
                    BranchParam::from_ints(&[(1, -1)], &[(1, 1)], t, Some("x + y"))?,
                ],
                None,
            )?
        }
        "a2n" => {
            expect(1)?;
            let n = params[0];
            if n < 1 || n as usize >= t {
                return Err(SemigroupError::Parse(format!("a2n needs 1 <= n < {}", t)));
            }
            let k = n as usize;
            CurveGerm::new(
                format!("a2n_{}", n),
                vec![
                    BranchParam::from_ints(&[(k, 1)], &[(1, 1)], t, Some(&format!("x - y^{{{}}}", n)))?,
                    BranchParam::from_ints(&[(k, -1)], &[(1, 1)], t, Some(&format!("x + y^{{{}}}", n)))?,
                ],
                None,
            )?
        }
        "lines3" => {
            expect(0)?;
            CurveGerm::new(
                name,
                vec![
                    BranchParam::from_ints(&[], &[(1, 1)], t, Some("x"))?,
                    BranchParam::from_ints(&[(1, 1)], &[], t, Some("y"))?,
                    BranchParam::from_ints(&[(1, 1)], &[(1, 1)], t, Some("x - y"))?,
                ],
                None,
            )?
        }
        _ => return Err(SemigroupError::UnknownGerm(name.to_string())),
    };
    Ok(germ)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn branch(x: &[(usize, i64)], y: &[(usize, i64)]) -> BranchParam {
        BranchParam::from_ints(x, y, 40, None).unwrap()
    }

    #[test]
    fn smooth_and_cusp() {
        let s = branch_semigroup(&branch(&[(1, 1)], &[(3, 1)]), 10).unwrap();
        assert_eq!((s.delta, s.conductor, s.multiplicity), (0, 0, 1));
        let c = branch_semigroup(&branch(&[(2, 1)], &[(3, 1)]), 10).unwrap();
        assert_eq!((s.elements.len(), c.delta, c.conductor), (10, 1, 2));
        assert_eq!(c.generators(), vec![2, 3]);
        assert_eq!(c.count_below(4), 3);
    }

    #[test]
    fn branch_4_6_13() {
        let s = branch_semigroup(&branch(&[(4, 1)], &[(6, 1), (7, 1)]), 30).unwrap();
        assert_eq!(s.generators(), vec![4, 6, 13]);
        assert_eq!(s.delta, 8);
        assert_eq!(s.conductor, 16);
        assert_eq!(s.conductor, 2 * s.delta);
    }

    #[test]
    fn uncertified_and_non_reduced() {
        let b = branch(&[(4, 1)], &[(6, 1), (7, 1)]);
        assert!(matches!(branch_semigroup(&b, 18), Err(SemigroupError::TruncationTooSmall(_))));
        let d = branch(&[(2, 1)], &[(4, 1)]);
        assert!(matches!(branch_semigroup(&d, 20), Err(SemigroupError::NotReduced(_))));
    }

    #[test]
    fn intersections() {
        assert_eq!(germ_catalog("lines", &[]).unwrap().intersections()[0][1], 1);
        assert_eq!(germ_catalog("a2n", &[3]).unwrap().intersections()[0][1], 3);
        let cusp = branch(&[(2, 1)], &[(3, 1)]);
        let axis = BranchParam::from_ints(&[], &[(1, 1)], 40, Some("x")).unwrap();
        assert_eq!(intersection_multiplicity(&cusp, &axis).unwrap(), 2);
        assert!(matches!(
            intersection_multiplicity(&axis, &cusp),
            Err(SemigroupError::MissingImplicit)
        ));
    }

    #[test]
    fn implicit_must_vanish() {
        let e = BranchParam::from_ints(&[(2, 1)], &[(3, 1)], 20, Some("y^2 - x^3 + x^5")).unwrap_err();
        assert!(matches!(e, SemigroupError::NotAGerm(_)));
    }

    #[test]
    fn json_roundtrip() {
        let text = r#"{"name":"cusp","branches":[{"x":[[2,1,1]],"y":[[3,1,1]],"truncation":20,"implicit":"y^2 - x^3"}]}"#;
        let g = germ_from_json(text, "x").unwrap();
        assert_eq!(g.name, "cusp");
        assert_eq!(g.n(), 1);
        let half = r#"{"branches":[{"x":[[1,1,2]],"y":[[3,3,1]],"truncation":10}]}"#;
        assert_eq!(germ_from_json(half, "h").unwrap().name, "h");
    }
}
