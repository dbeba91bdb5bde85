//! Link descriptors: linking matrix, component genera and the Alexander
//! polynomial of every sublink, together with the derivations (Torres,
//! cabling) and the built-in catalog.

mod cable;
mod catalog;
mod io;
mod surgery;
mod torres;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::laurent::{fmt_half, ExponentVector, LatticeBox, LaurentPoly, PolyError};

pub use cable::cable_alexander;
pub use catalog::{catalog_entries, catalog_link, CatalogEntry};
pub use io::{link_from_json, link_to_json, load_link};
pub use surgery::{framing_matrix, is_positive_definite, surgery_bound, SurgeryBound};
pub use torres::torres_sublink;

/// Largest supported component count.
pub const MAX_COMPONENTS: usize = 16;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LinkError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error on {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("invariant violation in {field}: {witness}")]
    Invalid { field: String, witness: String },
    #[error("UNDERIVABLE-SUBLINK: no Alexander polynomial for sublink {0} and none can be derived")]
    UnderivableSublink(String),
    #[error("TORRES-DEGENERATE: two-component link with linking number 0")]
    TorresDegenerate,
    #[error("TORRES-DEGENERATE-CONSISTENT: both sides of the Torres formula vanish")]
    TorresDegenerateConsistent,
    #[error("HYPOTHESIS-UNMET: {0}")]
    HypothesisUnmet(String),
    #[error("cable parameters ({p},{q}) are not admissible: {reason}")]
    BadCable { p: i64, q: i64, reason: String },
    #[error("unknown catalog link {0:?}")]
    UnknownCatalog(String),
    #[error("bad parameters for {name}: {reason}")]
    BadParams { name: String, reason: String },
    #[error("lattice mismatch: {0}")]
    LatticeMismatch(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A nonempty subset of components, as a bitmask over 0-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentSet(u32);

impl ComponentSet {
    pub fn from_bits(bits: u32) -> Self {
        ComponentSet(bits)
    }

    pub fn full(n: usize) -> Self {
        ComponentSet(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Self {
        ComponentSet(1 << i)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        ComponentSet(indices.iter().fold(0, |acc, &i| acc | (1 << i)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(self, i: usize) -> Self {
        ComponentSet(self.0 | (1 << i))
    }

    pub fn remove(self, i: usize) -> Self {
        ComponentSet(self.0 & !(1 << i))
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Member indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|&i| self.contains(i)).collect()
    }

    /// All nonempty subsets of `{0, .., n-1}`, ordered by size and then by bits.
    pub fn all_nonempty(n: usize) -> Vec<ComponentSet> {
        let mut v: Vec<ComponentSet> = (1..(1u32 << n)).map(ComponentSet).collect();
        v.sort_by_key(|s| (s.len(), s.0));
        v
    }

    /// Parses a comma-separated list of 1-based indices.
    pub fn parse_one_based(s: &str, n: usize) -> Result<Self, LinkError> {
        let mut set = ComponentSet(0);
        for part in s.split(',') {
            let i: usize = part
                .trim()
                .parse()
                .map_err(|_| LinkError::Parse(format!("bad component index {:?} in {:?}", part, s)))?;
            if i == 0 || i > n {
                return Err(LinkError::Parse(format!("component index {} out of range 1..={}", i, n)));
            }
            set = set.insert(i - 1);
        }
        Ok(set)
    }
}

impl fmt::Display for ComponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A link together with all the Alexander data the H-function needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDescriptor {
    name: String,
    names: Vec<String>,
    linking: Vec<Vec<i64>>,
    genus: Vec<i64>,
    alexander: BTreeMap<ComponentSet, LaurentPoly>,
    notes: Vec<String>,
}

impl LinkDescriptor {
    /// Validates the data and derives missing sublink polynomials.
    pub fn new(
        name: impl Into<String>,
        names: Vec<String>,
        linking: Vec<Vec<i64>>,
        genus: Vec<i64>,
        alexander: BTreeMap<ComponentSet, LaurentPoly>,
    ) -> Result<Self, LinkError> {
        let mut link = Self::new_unchecked(name, names, linking, genus, alexander);
        link.validate_shape()?;
        for (set, p) in &link.alexander {
            link.validate_polynomial(*set, p)?;
        }
        link.derive_missing()?;
        Ok(link)
    }

    /// Builds a descriptor without any validation or derivation.
    pub fn new_unchecked(
        name: impl Into<String>,
        names: Vec<String>,
        linking: Vec<Vec<i64>>,
        genus: Vec<i64>,
        alexander: BTreeMap<ComponentSet, LaurentPoly>,
    ) -> Self {
        LinkDescriptor {
            name: name.into(),
            names,
            linking,
            genus,
            alexander,
            notes: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn n(&self) -> usize {
        self.linking.len()
    }

    pub fn component_names(&self) -> &[String] {
        &self.names
    }

    pub fn linking(&self) -> &[Vec<i64>] {
        &self.linking
    }

    pub fn lk(&self, i: usize, j: usize) -> i64 {
        self.linking[i][j]
    }

    pub fn genus(&self) -> &[i64] {
        &self.genus
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn add_note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn alexander(&self, set: ComponentSet) -> Option<&LaurentPoly> {
        self.alexander.get(&set)
    }

    pub fn alexander_map(&self) -> &BTreeMap<ComponentSet, LaurentPoly> {
        &self.alexander
    }

    pub fn full_alexander(&self) -> &LaurentPoly {
        &self.alexander[&ComponentSet::full(self.n())]
    }

    /// Replaces the polynomial of one sublink without revalidation.
    pub fn set_alexander(&mut self, set: ComponentSet, p: LaurentPoly) {
        self.alexander.insert(set, p);
    }

    /// Compares the mathematical content, ignoring names and notes.
    pub fn same_data(&self, other: &Self) -> bool {
        self.linking == other.linking && self.genus == other.genus && self.alexander == other.alexander
    }

    /// Doubled linking vector: entry `i` is `Σ_j lk(L_i, L_j)`, i.e. `2ℓ_i`.
    pub fn linking_vector(&self) -> ExponentVector {
        ExponentVector::from_doubled(self.linking.iter().map(|row| row.iter().sum()).collect())
    }

    /// Doubled linking vector of the sublink on `set`, in the order of `set.indices()`.
    pub fn sublink_linking_vector(&self, set: ComponentSet) -> ExponentVector {
        let idx = set.indices();
        ExponentVector::from_doubled(
            idx.iter()
                .map(|&i| idx.iter().map(|&j| self.linking[i][j]).sum())
                .collect(),
        )
    }

    /// Whether `v` lies in `Z^n + ℓ`.
    pub fn in_lattice(&self, v: &ExponentVector) -> bool {
        v.nvars() == self.n() && v.same_coset(&self.linking_vector())
    }

    /// `π_I(v)_j = v_j - ℓ_j + ℓ(L_I)_j` for `j ∈ I`.
    pub fn project_lattice_point(&self, v: &ExponentVector, set: ComponentSet) -> Result<ExponentVector, LinkError> {
        if !self.in_lattice(v) {
            return Err(LinkError::LatticeMismatch(format!(
                "{} is not in Z^{} + ({})",
                v,
                self.n(),
                self.linking_vector().to_plain_string()
            )));
        }
        Ok(self.project_unchecked(v, set))
    }

    pub(crate) fn project_unchecked(&self, v: &ExponentVector, set: ComponentSet) -> ExponentVector {
        let ell = self.linking_vector();
        let idx = set.indices();
        let sub_ell = self.sublink_linking_vector(set);
        ExponentVector::from_doubled(
            idx.iter()
                .enumerate()
                .map(|(k, &j)| v.get(j) - ell.get(j) + sub_ell.get(k))
                .collect(),
        )
    }

    /// The sublink on `set`, with components renumbered in increasing order.
    pub fn sublink(&self, set: ComponentSet) -> LinkDescriptor {
        let idx = set.indices();
        let pos = |i: usize| idx.iter().position(|&j| j == i).unwrap();
        let mut alexander = BTreeMap::new();
        for (s, p) in &self.alexander {
            if s.is_subset_of(set) {
                let mapped = ComponentSet::from_indices(&s.indices().iter().map(|&i| pos(i)).collect::<Vec<_>>());
                alexander.insert(mapped, p.clone());
            }
        }
        LinkDescriptor {
            name: format!("{}[{}]", self.name, set),
            names: idx.iter().map(|&i| self.names[i].clone()).collect(),
            linking: idx.iter().map(|&i| idx.iter().map(|&j| self.linking[i][j]).collect()).collect(),
            genus: idx.iter().map(|&i| self.genus[i]).collect(),
            alexander,
            notes: Vec::new(),
        }
    }

    /// Doubled maximal degrees of the full polynomial, `None` when it is zero.
    pub fn degree_vector(&self) -> Option<ExponentVector> {
        let p = self.full_alexander();
        if p.is_zero() {
            return None;
        }
        Some(ExponentVector::from_doubled(
            (0..self.n()).map(|i| p.max_degree(i).unwrap()).collect(),
        ))
    }

    /// Per component, the largest `⌈deg⌉` of that variable over all sublink
    /// polynomials containing it (at least 0).
    pub fn probe_radius(&self) -> Vec<i64> {
        let mut r = vec![0i64; self.n()];
        for (set, p) in &self.alexander {
            for (k, i) in set.indices().into_iter().enumerate() {
                if let Some(d) = p.max_degree(k) {
                    r[i] = r[i].max((d + 1).div_euclid(2));
                }
            }
        }
        r
    }

    /// Integer box `[-(r+2), r+2]` around the probe radius.
    pub fn probe_box(&self) -> LatticeBox {
        let r = self.probe_radius();
        let hi: Vec<i64> = r.iter().map(|x| x + 2).collect();
        let lo: Vec<i64> = hi.iter().map(|x| -x).collect();
        LatticeBox::integral(&lo, &hi)
    }

    fn validate_shape(&self) -> Result<(), LinkError> {
        let n = self.n();
        let invalid = |field: &str, witness: String| LinkError::Invalid {
            field: field.to_string(),
            witness,
        };
        if n == 0 || n > MAX_COMPONENTS {
            return Err(invalid("linking_matrix", format!("component count {} outside 1..={}", n, MAX_COMPONENTS)));
        }
        if self.names.len() != n {
            return Err(invalid("components", format!("{} names for {} components", self.names.len(), n)));
        }
        if self.genus.len() != n {
            return Err(invalid("components", format!("{} genera for {} components", self.genus.len(), n)));
        }
        if let Some(i) = self.genus.iter().position(|&g| g < 0) {
            return Err(invalid("components", format!("negative genus {} on component {}", self.genus[i], i + 1)));
        }
        for i in 0..n {
            if self.linking[i].len() != n {
                return Err(invalid("linking_matrix", format!("row {} has length {}", i + 1, self.linking[i].len())));
            }
            if self.linking[i][i] != 0 {
                return Err(invalid("linking_matrix", format!("nonzero diagonal entry at ({0},{0})", i + 1)));
            }
            for j in 0..i {
                if self.linking[i][j] != self.linking[j][i] {
                    return Err(invalid(
                        "linking_matrix",
                        format!("entries ({},{}) and ({},{}) differ", i + 1, j + 1, j + 1, i + 1),
                    ));
                }
            }
        }
        if !self.alexander.contains_key(&ComponentSet::full(n)) {
            return Err(invalid("alexander", format!("missing the full-link key {}", ComponentSet::full(n))));
        }
        Ok(())
    }

    fn validate_polynomial(&self, set: ComponentSet, p: &LaurentPoly) -> Result<(), LinkError> {
        let field = format!("alexander[{}]", set);
        let invalid = |witness: String| LinkError::Invalid {
            field: field.clone(),
            witness,
        };
        if set.is_empty() || !set.is_subset_of(ComponentSet::full(self.n())) {
            return Err(invalid("subset out of range".to_string()));
        }
        if p.nvars() != set.len() {
            return Err(invalid(format!("{} variables for a {}-component sublink", p.nvars(), set.len())));
        }
        let sign = if set.len() >= 2 && set.len() % 2 == 1 { -1 } else { 1 };
        if let Some((e, c)) = p.symmetry_witness(sign) {
            return Err(invalid(format!(
                "Δ(t^-1) ≠ {}Δ(t): coefficient {} at {} but {} at {}",
                if sign < 0 { "-" } else { "" },
                c,
                e,
                p.coeff(&-&e),
                -&e
            )));
        }
        let idx = set.indices();
        for (e, _) in p.terms() {
            for (k, &j) in idx.iter().enumerate() {
                let ok = if idx.len() == 1 {
                    e.get(k) % 2 == 0
                } else {
                    let lk_rest: i64 = idx.iter().map(|&i| self.linking[j][i]).sum();
                    (e.get(k) + 1 - lk_rest) % 2 == 0
                };
                if !ok {
                    return Err(invalid(format!(
                        "exponent {} of t{} in term {} has the wrong parity",
                        fmt_half(e.get(k)),
                        k + 1,
                        e
                    )));
                }
            }
        }
        Ok(())
    }

    fn derive_missing(&mut self) -> Result<(), LinkError> {
        let n = self.n();
        let mut sets = ComponentSet::all_nonempty(n);
        sets.reverse();
        for set in sets {
            if self.alexander.contains_key(&set) {
                continue;
            }
            let mut derived = None;
            for k in 0..n {
                if set.contains(k) {
                    continue;
                }
                let sup = set.insert(k);
                if !self.alexander.contains_key(&sup) {
                    continue;
                }
                let drop = sup.indices().iter().position(|&i| i == k).unwrap();
                if let Ok(p) = torres_sublink(&self.sublink(sup), drop) {
                    derived = Some((sup, p));
                    break;
                }
            }
            let (sup, mut p) = derived.ok_or_else(|| LinkError::UnderivableSublink(set.to_string()))?;
            if set.len() == 1 && p.coefficient_sum() == -BigInt::one() {
                p = -&p;
            }
            self.validate_polynomial(set, &p)?;
            self.notes.push(format!("derived Alexander polynomial of sublink {} from {} via Torres", set, sup));
            self.alexander.insert(set, p);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn component_set_basics() {
        let s = ComponentSet::from_indices(&[0, 2]);
        assert_eq!(s.to_string(), "1,3");
        assert_eq!(s.len(), 2);
        assert_eq!(ComponentSet::parse_one_based("3,1", 3).unwrap(), s);
        assert!(ComponentSet::parse_one_based("4", 3).is_err());
        assert_eq!(ComponentSet::all_nonempty(3).len(), 7);
        assert_eq!(ComponentSet::all_nonempty(3)[6], ComponentSet::full(3));
    }

    #[test]
    fn linking_vectors() {
        let w = catalog_link("whitehead", &[]).unwrap();
        assert_eq!(w.linking_vector(), ExponentVector::from_integers(&[0, 0]));
        let t = catalog_link("torus2", &[3]).unwrap();
        assert_eq!(t.linking_vector(), ExponentVector::from_doubled(vec![3, 3]));
        let u = catalog_link("unlink", &[3]).unwrap();
        assert_eq!(u.linking_vector(), ExponentVector::zeros(3));
    }

    #[test]
    fn projection_examples() {
        let w = catalog_link("whitehead", &[]).unwrap();
        let p = w
            .project_lattice_point(&ExponentVector::from_integers(&[3, 5]), ComponentSet::singleton(0))
            .unwrap();
        assert_eq!(p, ExponentVector::from_integers(&[3]));
        let t = catalog_link("torus2", &[2]).unwrap();
        let v = ExponentVector::from_integers(&[2, 2]);
        let p = t.project_lattice_point(&v, ComponentSet::singleton(0)).unwrap();
        assert_eq!(p, ExponentVector::from_integers(&[1]));
        assert_eq!(t.project_lattice_point(&v, ComponentSet::full(2)).unwrap(), v);
        let bad = ExponentVector::from_doubled(vec![1, 0]);
        assert!(t.project_lattice_point(&bad, ComponentSet::full(2)).is_err());
    }

    #[test]
    fn asymmetric_polynomial_rejected() {
        let mut a = BTreeMap::new();
        a.insert(ComponentSet::full(1), LaurentPoly::parse("t - 1", 1).unwrap());
        let err = LinkDescriptor::new("bad", vec!["K".into()], vec![vec![0]], vec![0], a).unwrap_err();
        assert!(matches!(err, LinkError::Invalid { .. }));
    }

    #[test]
    fn parity_rejected() {
        let mut a = BTreeMap::new();
        a.insert(ComponentSet::full(2), LaurentPoly::one(2));
        a.insert(ComponentSet::singleton(0), LaurentPoly::one(1));
        a.insert(ComponentSet::singleton(1), LaurentPoly::one(1));
        let err = LinkDescriptor::new(
            "bad",
            vec!["a".into(), "b".into()],
            vec![vec![0, 0], vec![0, 0]],
            vec![0, 0],
            a,
        )
        .unwrap_err();
        assert!(matches!(err, LinkError::Invalid { .. }));
    }

    #[test]
    fn missing_knot_derived_by_torres() {
        let full = catalog_link("torus2", &[2]).unwrap();
        let mut a = BTreeMap::new();
        a.insert(ComponentSet::full(2), full.full_alexander().clone());
        let l = LinkDescriptor::new("t", vec!["a".into(), "b".into()], full.linking().to_vec(), vec![0, 0], a).unwrap();
        assert_eq!(l.alexander(ComponentSet::singleton(0)).unwrap(), &LaurentPoly::one(1));
        assert_eq!(l.notes().len(), 2);
    }

    #[test]
    fn missing_knot_underivable_when_lk_zero() {
        let w = catalog_link("whitehead", &[]).unwrap();
        let mut a = BTreeMap::new();
        a.insert(ComponentSet::full(2), w.full_alexander().clone());
        let err = LinkDescriptor::new("w", vec!["a".into(), "b".into()], w.linking().to_vec(), vec![0, 0], a).unwrap_err();
        assert!(matches!(err, LinkError::UnderivableSublink(_)));
    }

    #[test]
    fn sublink_renumbers() {
        let b = catalog_link("borromean", &[]).unwrap();
        let s = b.sublink(ComponentSet::from_indices(&[0, 2]));
        assert_eq!(s.n(), 2);
        assert!(s.full_alexander().is_zero());
        assert_eq!(s.alexander(ComponentSet::singleton(1)).unwrap(), &LaurentPoly::one(1));
    }

    #[test]
    fn probe_radius_of_whitehead() {
        let w = catalog_link("whitehead", &[]).unwrap();
        assert_eq!(w.probe_radius(), vec![1, 1]);
        assert_eq!(w.probe_box(), LatticeBox::cube(2, -3, 3));
    }
}
