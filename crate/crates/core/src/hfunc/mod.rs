//! H-, J- and wtJ-functions of L-space links computed from Alexander data.
//!
//! The H-function is evaluated by inclusion-exclusion over sublinks: each
//! sublink with at least two components contributes a finite tail sum of the
//! coefficients of `Δ̃ = (∏t)^{1/2} Δ`, and each component contributes its
//! knot H-function.

mod generating;
mod knot;
mod sign;
mod table;
mod validate;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::laurent::{monomial_difference, ExponentVector, LatticeBox, LaurentPoly, PolyError};
use crate::linkdata::{ComponentSet, LinkDescriptor, LinkError};

pub use generating::{generating_crosscheck, h_generating_series};
pub use knot::KnotH;
pub use sign::normalize_sign;
pub use table::{HTable, JView};
pub use validate::validate_lspace;

use knot::to_i64;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum HError {
    #[error("MALFORMED-KNOT-POLY: {0}")]
    MalformedKnotPoly(String),
    #[error("lattice mismatch: {0}")]
    LatticeMismatch(String),
    #[error("OUT-OF-RANGE: {0}")]
    OutOfRange(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("WIDEN-BOX: wtJ{point} = {value} on the boundary of {bbox}")]
    WidenBox { point: String, value: i64, bbox: String },
    #[error("CROSSCHECK-FAILED: {0}")]
    CrosscheckFailed(String),
    #[error("AMBIGUOUS-SIGN: {0}")]
    AmbiguousSign(String),
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Euler characteristics of `HFL⁻` for every sublink.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiEntry {
    /// A component, with its knot H-function and tail rule.
    Knot(KnotH),
    /// A sublink with at least two components: the polynomial `Δ̃`.
    Multi(LaurentPoly),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiTable {
    entries: BTreeMap<ComponentSet, ChiEntry>,
    notes: Vec<String>,
}

impl ChiTable {
    pub fn entry(&self, set: ComponentSet) -> &ChiEntry {
        &self.entries[&set]
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// `χ(HFL⁻(L_I, u))` for `u ∈ ℍ(L_I)`, with doubled coordinates.
    pub fn chi(&self, set: ComponentSet, u: &ExponentVector) -> BigInt {
        match self.entry(set) {
            ChiEntry::Knot(k) => k.chi(u.get(0) / 2),
            ChiEntry::Multi(p) => p.coeff(u),
        }
    }
}

/// Builds the χ data of every sublink. Knot polynomials with `Δ(1) = -1`
/// are negated (and noted); any other value of `Δ(1)` is malformed.
pub fn chi_table(link: &LinkDescriptor) -> Result<ChiTable, HError> {
    let mut entries = BTreeMap::new();
    let mut notes = Vec::new();
    for set in ComponentSet::all_nonempty(link.n()) {
        let delta = link
            .alexander(set)
            .ok_or_else(|| LinkError::UnderivableSublink(set.to_string()))?;
        let entry = if set.len() == 1 {
            let at_one = delta.coefficient_sum();
            let d = if at_one == -BigInt::one() {
                notes.push(format!("negated Δ of component {} so that Δ(1) = 1", set));
                -delta
            } else {
                delta.clone()
            };
            ChiEntry::Knot(KnotH::new(&d)?)
        } else {
            ChiEntry::Multi(delta.shift(&ExponentVector::from_doubled(vec![1; set.len()])))
        };
        entries.insert(set, entry);
    }
    Ok(ChiTable { entries, notes })
}

#[derive(Clone, Debug)]
struct SublinkTerm {
    set: ComponentSet,
    idx: Vec<usize>,
    sub_ell: ExponentVector,
    negative: bool,
}

/// Evaluator for `H`, `J` and `wtJ` of one link.
#[derive(Clone, Debug)]
pub struct HFunction {
    link: LinkDescriptor,
    chi: ChiTable,
    ell: ExponentVector,
    subs: Vec<SublinkTerm>,
}

impl HFunction {
    pub fn new(link: &LinkDescriptor) -> Result<Self, HError> {
        let chi = chi_table(link)?;
        let subs = ComponentSet::all_nonempty(link.n())
            .into_iter()
            .map(|set| SublinkTerm {
                set,
                idx: set.indices(),
                sub_ell: link.sublink_linking_vector(set),
                negative: set.len() % 2 == 0,
            })
            .collect();
        Ok(HFunction {
            link: link.clone(),
            chi,
            ell: link.linking_vector(),
            subs,
        })
    }

    pub fn link(&self) -> &LinkDescriptor {
        &self.link
    }

    pub fn chi_table(&self) -> &ChiTable {
        &self.chi
    }

    pub fn n(&self) -> usize {
        self.link.n()
    }

    /// Doubled linking vector.
    pub fn ell(&self) -> &ExponentVector {
        &self.ell
    }

    fn knot(&self, i: usize) -> &KnotH {
        match self.chi.entry(ComponentSet::singleton(i)) {
            ChiEntry::Knot(k) => k,
            ChiEntry::Multi(_) => unreachable!("singleton entries are knots"),
        }
    }

    /// `H_{L_i}(v)`.
    pub fn component_h(&self, i: usize, v: i64) -> i64 {
        self.knot(i).h(v)
    }

    /// `H(v)` for `v ∈ ℍ(L)`, doubled coordinates.
    pub fn h(&self, v: &ExponentVector) -> Result<i64, HError> {
        if !self.link.in_lattice(v) {
            return Err(HError::LatticeMismatch(format!(
                "{} is not in Z^{} + ({})",
                v,
                self.n(),
                self.ell.to_plain_string()
            )));
        }
        let mut total = BigInt::zero();
        for sub in &self.subs {
            let term = match self.chi.entry(sub.set) {
                ChiEntry::Knot(k) => {
                    let j = sub.idx[0];
                    BigInt::from(k.h((v.get(j) - self.ell.get(j)) / 2))
                }
                ChiEntry::Multi(p) => {
                    let w = ExponentVector::from_doubled(
                        sub.idx
                            .iter()
                            .enumerate()
                            .map(|(k, &j)| v.get(j) + 2 - self.ell.get(j) + sub.sub_ell.get(k))
                            .collect(),
                    );
                    p.terms().filter(|(u, _)| w.preceq(u)).map(|(_, c)| c).sum()
                }
            };
            if sub.negative {
                total -= term;
            } else {
                total += term;
            }
        }
        to_i64(&total, "H")
    }

    /// `H` at the integer point `v` (requires an integral linking vector).
    pub fn h_int(&self, v: &[i64]) -> Result<i64, HError> {
        self.h(&ExponentVector::from_integers(v))
    }

    /// `J(m) = H(m + ℓ)`.
    pub fn j(&self, m: &[i64]) -> Result<i64, HError> {
        self.h(&(&ExponentVector::from_integers(m) + &self.ell))
    }

    /// `wtJ(m) = J(m) - Σ_i J_{L_i}(m_i)`.
    pub fn wtj(&self, m: &[i64]) -> Result<i64, HError> {
        let components: i64 = m.iter().enumerate().map(|(i, &mi)| self.component_h(i, mi)).sum();
        Ok(self.j(m)? - components)
    }
}

/// `H(v)` for a single lattice point.
pub fn h_value(link: &LinkDescriptor, v: &ExponentVector) -> Result<i64, HError> {
    HFunction::new(link)?.h(v)
}

pub fn j_value(link: &LinkDescriptor, m: &[i64]) -> Result<i64, HError> {
    HFunction::new(link)?.j(m)
}

pub fn wtj_value(link: &LinkDescriptor, m: &[i64]) -> Result<i64, HError> {
    HFunction::new(link)?.wtj(m)
}

/// Outcome of comparing the box polynomial with the two-component closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedFormCheck {
    Agreed,
    /// The closed form is not a Laurent polynomial, so there is nothing to compare.
    NotPolynomial,
    NotTwoComponent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WtjPolynomial {
    pub poly: LaurentPoly,
    pub check: ClosedFormCheck,
}

/// The two-component closed form `-(t1 t2)^{-lk/2} Δ / ((t1^{1/2}-t1^{-1/2})(t2^{1/2}-t2^{-1/2}))`.
pub fn two_component_closed_form(link: &LinkDescriptor) -> Result<LaurentPoly, PolyError> {
    let lk = link.lk(0, 1);
    let shifted = link.full_alexander().shift(&ExponentVector::from_doubled(vec![-lk, -lk]));
    let den = &monomial_difference(&ExponentVector::from_doubled(vec![1, 0]))
        * &monomial_difference(&ExponentVector::from_doubled(vec![0, 1]));
    Ok(-&shifted.exact_divide(&den)?)
}

/// All `(m, wtJ(m))` over the integer box, row-major.
pub fn wtj_grid(hf: &HFunction, mbox: &LatticeBox) -> Result<Vec<(Vec<i64>, i64)>, HError> {
    mbox.integer_points()
        .into_iter()
        .map(|m| {
            let w = hf.wtj(&m)?;
            Ok((m, w))
        })
        .collect()
}

/// The generating polynomial `Σ wtJ(m) t^m` over an integer box whose
/// boundary carries no nonzero value.
pub fn wtj_polynomial(link: &LinkDescriptor, mbox: &LatticeBox) -> Result<WtjPolynomial, HError> {
    let hf = HFunction::new(link)?;
    let grid = wtj_grid(&hf, mbox)?;
    for (m, w) in &grid {
        if *w != 0 && mbox.on_boundary(&ExponentVector::from_integers(m)) {
            return Err(HError::WidenBox {
                point: ExponentVector::from_integers(m).to_string(),
                value: *w,
                bbox: mbox.to_string(),
            });
        }
    }
    let poly = LaurentPoly::from_terms(
        link.n(),
        grid.into_iter().map(|(m, w)| (ExponentVector::from_integers(&m), w)),
    );
    let check = if link.n() != 2 {
        ClosedFormCheck::NotTwoComponent
    } else {
        match two_component_closed_form(link) {
            Ok(closed) if closed == poly => ClosedFormCheck::Agreed,
            Ok(closed) => {
                return Err(HError::CrosscheckFailed(format!(
                    "box polynomial {} differs from closed form {}",
                    poly, closed
                )))
            }
            Err(PolyError::NonDivisible(_)) => ClosedFormCheck::NotPolynomial,
            Err(e) => return Err(e.into()),
        }
    };
    Ok(WtjPolynomial { poly, check })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdata::catalog_link;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::from_integers(v)
    }

    #[test]
    fn whitehead_chi_and_h() {
        let w = catalog_link("whitehead", &[]).unwrap();
        let chi = chi_table(&w).unwrap();
        let full = ComponentSet::full(2);
        assert_eq!(chi.chi(full, &ev(&[0, 0])), BigInt::from(-1));
        assert_eq!(chi.chi(full, &ev(&[1, 0])), BigInt::from(1));
        assert_eq!(chi.chi(full, &ev(&[0, 1])), BigInt::from(1));
        assert_eq!(chi.chi(full, &ev(&[1, 1])), BigInt::from(-1));
        let hf = HFunction::new(&w).unwrap();
        assert_eq!(hf.h(&ev(&[0, 0])).unwrap(), 1);
        assert_eq!(hf.h(&ev(&[1, 0])).unwrap(), 0);
        assert_eq!(hf.h(&ev(&[-2, 3])).unwrap(), 2);
        assert_eq!(hf.wtj(&[0, 0]).unwrap(), 1);
    }

    #[test]
    fn borromean_origin() {
        let b = catalog_link("borromean", &[]).unwrap();
        assert_eq!(h_value(&b, &ev(&[0, 0, 0])).unwrap(), 1);
        assert_eq!(h_value(&b, &ev(&[-1, 0, 0])).unwrap(), 1);
    }

    #[test]
    fn lattice_mismatch() {
        let t = catalog_link("torus2", &[1]).unwrap();
        assert!(matches!(h_value(&t, &ev(&[0, 0])), Err(HError::LatticeMismatch(_))));
        assert_eq!(h_value(&t, &ExponentVector::from_doubled(vec![1, 1])).unwrap(), 0);
        assert_eq!(h_value(&t, &ExponentVector::from_doubled(vec![-1, -1])).unwrap(), 1);
    }

    #[test]
    fn b85_j_values() {
        let b = catalog_link("b85", &[]).unwrap();
        let hf = HFunction::new(&b).unwrap();
        assert_eq!(hf.j(&[1, 0]).unwrap(), 1);
        assert_eq!(hf.j(&[0, 0]).unwrap(), 1);
        assert_eq!(hf.wtj(&[-1, 0]).unwrap(), 1);
        assert_eq!(hf.wtj(&[1, 1]).unwrap(), 0);
    }

    #[test]
    fn wtj_polynomials() {
        let b = catalog_link("b85", &[]).unwrap();
        let w = wtj_polynomial(&b, &LatticeBox::cube(2, -4, 4)).unwrap();
        assert_eq!(w.poly, LaurentPoly::parse("t1 + t2 + 1 + t1^{-1} + t2^{-1}", 2).unwrap());
        assert_eq!(w.check, ClosedFormCheck::Agreed);
        let u = catalog_link("unlink", &[2]).unwrap();
        assert!(wtj_polynomial(&u, &LatticeBox::cube(2, -3, 3)).unwrap().poly.is_zero());
        let e = wtj_polynomial(&b, &LatticeBox::cube(2, -1, 1)).unwrap_err();
        assert!(matches!(e, HError::WidenBox { .. }));
    }

    #[test]
    fn knot_sign_flip_in_chi_table() {
        let mut a = std::collections::BTreeMap::new();
        a.insert(ComponentSet::full(1), LaurentPoly::parse("-t + 1 - t^{-1}", 1).unwrap());
        let k = LinkDescriptor::new("k", vec!["K".into()], vec![vec![0]], vec![1], a).unwrap();
        let chi = chi_table(&k).unwrap();
        assert_eq!(chi.notes().len(), 1);
        let hf = HFunction::new(&k).unwrap();
        assert_eq!(hf.h_int(&[0]).unwrap(), 1);
    }
}
