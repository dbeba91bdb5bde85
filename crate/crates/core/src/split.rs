//! Lower bounds for splitting numbers and checkers for the crossing-change
//! inequalities between J-functions.

use std::fmt;

use thiserror::Error;

use crate::hfunc::{wtj_grid, wtj_polynomial, HError, HFunction, JView};
use crate::laurent::{ExponentVector, LatticeBox};
use crate::linkdata::LinkDescriptor;
use crate::violation::Violation;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SplitError {
    #[error("NOT-TWO-COMPONENT: {0} has {1} components")]
    NotTwoComponent(String, usize),
    #[error("box mismatch: {0}")]
    BoxMismatch(String),
    #[error("no vanishing level found up to {0}")]
    SearchExhausted(i64),
    #[error(transparent)]
    H(#[from] HError),
}

/// A value supporting one of the constraints in a [`BoundReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub rule: String,
    pub point: Vec<i64>,
    pub value: i64,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {} = {}",
            self.rule,
            ExponentVector::from_integers(&self.point),
            self.value
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extrema {
    pub max: i64,
    pub min: i64,
    pub argmax: Vec<i64>,
    pub argmin: Vec<i64>,
}

/// Largest and smallest wtJ over an integer box on whose boundary wtJ vanishes.
pub fn wtj_extrema(link: &LinkDescriptor, mbox: &LatticeBox) -> Result<Extrema, SplitError> {
    wtj_polynomial(link, mbox)?;
    box_extrema(&HFunction::new(link)?, mbox)
}

/// Extrema of wtJ over the box (and 0), without the boundary check. Every
/// value found constrains the crossing changes, so the resulting bound is
/// sound even when wtJ has infinite support.
fn box_extrema(hf: &HFunction, mbox: &LatticeBox) -> Result<Extrema, SplitError> {
    let origin = vec![0; hf.n()];
    let mut ext = Extrema {
        max: 0,
        min: 0,
        argmax: origin.clone(),
        argmin: origin,
    };
    for (m, w) in wtj_grid(hf, mbox)? {
        if w > ext.max {
            ext.max = w;
            ext.argmax = m.clone();
        }
        if w < ext.min {
            ext.min = w;
            ext.argmin = m;
        }
    }
    Ok(ext)
}

/// Result of [`vanishing_threshold`]: the level and a point on the previous
/// level where `J` does not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Threshold {
    pub level: i64,
    pub witness: Option<(Vec<i64>, i64)>,
}

/// Smallest `a ≥ 0` with `J = 0` on the region `{m ⪰ g, m_1 + m_2 ≥ |g| + a}`.
///
/// `J` is nonincreasing in each coordinate, so only the diagonal corners
/// `(g_1 + i, g_2 + a - i)` need to be checked.
pub fn vanishing_threshold(link: &LinkDescriptor) -> Result<Threshold, SplitError> {
    if link.n() != 2 {
        return Err(SplitError::NotTwoComponent(link.name().to_string(), link.n()));
    }
    let hf = HFunction::new(link)?;
    vanishing_threshold_with(&hf)
}

fn vanishing_threshold_with(hf: &HFunction) -> Result<Threshold, SplitError> {
    let link = hf.link();
    let g = link.genus();
    let r = link.probe_radius();
    let limit = 2 * (r[0] + r[1]) + link.lk(0, 1).abs() + 4;
    let mut witness = None;
    for a in 0..=limit {
        let mut nonzero = None;
        for i in 0..=a {
            let m = vec![g[0] + i, g[1] + a - i];
            let j = hf.j(&m)?;
            if j != 0 {
                nonzero = Some((m, j));
                break;
            }
        }
        match nonzero {
            None => return Ok(Threshold { level: a, witness }),
            Some(w) => witness = Some(w),
        }
    }
    Err(SplitError::SearchExhausted(limit))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    /// Lower bound on positive crossing changes from the individual rules.
    pub t_plus_min: i64,
    /// Lower bound on negative crossing changes from the individual rules.
    pub t_minus_min: i64,
    /// `t₋ - t₊`, forced to equal the linking number for two components.
    pub linking_constraint: Option<i64>,
    /// The cheapest feasible pair.
    pub t_plus: i64,
    pub t_minus: i64,
    pub bound: i64,
    pub witnesses: Vec<Witness>,
    /// Rules that attain the bound.
    pub binding: Vec<String>,
}

/// Splitting-number lower bound over the probe box of the link.
pub fn splitting_lower_bound(link: &LinkDescriptor) -> Result<BoundReport, SplitError> {
    splitting_lower_bound_in(link, &link.probe_box())
}

pub fn splitting_lower_bound_in(link: &LinkDescriptor, mbox: &LatticeBox) -> Result<BoundReport, SplitError> {
    let hf = HFunction::new(link)?;
    let ext = box_extrema(&hf, mbox)?;
    let mut witnesses = vec![
        Witness {
            rule: "wtj-max".into(),
            point: ext.argmax.clone(),
            value: ext.max,
        },
        Witness {
            rule: "wtj-min".into(),
            point: ext.argmin.clone(),
            value: ext.min,
        },
    ];
    let mut plus_rules = vec![("wtj-max", ext.max.max(0))];
    let minus_rules = [("wtj-min", (-ext.min).max(0))];

    let mut linking_constraint = None;
    if link.n() == 2 {
        let th = vanishing_threshold_with(&hf)?;
        if let Some((point, value)) = &th.witness {
            witnesses.push(Witness {
                rule: "vanishing".into(),
                point: point.clone(),
                value: *value,
            });
        }
        plus_rules.push(("vanishing", th.level));
        linking_constraint = Some(link.lk(0, 1));
    }

    let t_plus_min = plus_rules.iter().map(|r| r.1).max().unwrap_or(0);
    let t_minus_min = minus_rules.iter().map(|r| r.1).max().unwrap_or(0);
    let (t_plus, t_minus) = match linking_constraint {
        Some(lk) => {
            let tp = t_plus_min.max(t_minus_min - lk);
            (tp, tp + lk)
        }
        None => (t_plus_min, t_minus_min),
    };

    let mut binding = Vec::new();
    for (name, v) in &plus_rules {
        if *v == t_plus && t_plus > 0 {
            binding.push(name.to_string());
        }
    }
    for (name, v) in &minus_rules {
        if *v == t_minus && t_minus > 0 {
            binding.push(name.to_string());
        }
    }
    if let Some(lk) = linking_constraint {
        if lk != 0 && (t_plus > t_plus_min || t_minus > t_minus_min) {
            binding.push("linking".to_string());
        }
    }

    Ok(BoundReport {
        t_plus_min,
        t_minus_min,
        linking_constraint,
        t_plus,
        t_minus,
        bound: t_plus + t_minus,
        witnesses,
        binding,
    })
}

/// Which strands a single positive crossing change involves (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossingKind {
    SameComponent(usize),
    Between(usize, usize),
}

fn check_dims(n1: usize, n2: usize, mbox: &LatticeBox) -> Result<(), SplitError> {
    if n1 != n2 || mbox.nvars() != n1 {
        return Err(SplitError::BoxMismatch(format!(
            "links have {} and {} components, box has {} coordinates",
            n1,
            n2,
            mbox.nvars()
        )));
    }
    Ok(())
}

fn shifted(m: &[i64], i: usize, d: i64) -> Vec<i64> {
    let mut out = m.to_vec();
    out[i] += d;
    out
}

fn sandwich(
    out: &mut Vec<Violation>,
    rule: &str,
    m: &[i64],
    lower: i64,
    middle: i64,
    upper: i64,
) {
    if !(lower <= middle && middle <= upper) {
        out.push(Violation::new(
            rule,
            ExponentVector::from_integers(m).to_string(),
            format!("expected {} <= {} <= {}", lower, middle, upper),
        ));
    }
}

/// Checks the sandwich inequalities for links `L₁`, `L₂` where `L₂` arises
/// from `L₁` by one positive crossing change of the given kind.
pub fn check_crossing_inequality(
    j1: &JView,
    j2: &JView,
    kind: CrossingKind,
    mbox: &LatticeBox,
) -> Result<Vec<Violation>, SplitError> {
    let n = j1.n();
    check_dims(n, j2.n(), mbox)?;
    let in_range = |i: usize| {
        if i < n {
            Ok(())
        } else {
            Err(SplitError::BoxMismatch(format!("component {} out of range", i + 1)))
        }
    };
    let mut out = Vec::new();
    match kind {
        CrossingKind::SameComponent(i) => {
            in_range(i)?;
            for m in mbox.integer_points() {
                let lo = j2.j(&shifted(&m, i, 1))?;
                sandwich(&mut out, "crossing-same", &m, lo, j1.j(&m)?, j2.j(&m)?);
            }
        }
        CrossingKind::Between(i, k) => {
            in_range(i)?;
            in_range(k)?;
            for m in mbox.integer_points() {
                let lo = j2.j(&m)?;
                let mid = j1.j(&m)?;
                sandwich(&mut out, "crossing-between", &m, lo, mid, j2.j(&shifted(&m, i, -1))?);
                sandwich(&mut out, "crossing-between", &m, lo, mid, j2.j(&shifted(&m, k, -1))?);
            }
        }
    }
    Ok(out)
}

/// Checks `J₁(m + k) ≤ J₂(m) ≤ J₁(m - r)` on the box.
pub fn check_concordance_inequality(
    j1: &JView,
    j2: &JView,
    r: &[i64],
    k: &[i64],
    mbox: &LatticeBox,
) -> Result<Vec<Violation>, SplitError> {
    let n = j1.n();
    check_dims(n, j2.n(), mbox)?;
    if r.len() != n || k.len() != n {
        return Err(SplitError::BoxMismatch(format!(
            "r and k need {} entries, got {} and {}",
            n,
            r.len(),
            k.len()
        )));
    }
    let mut out = Vec::new();
    for m in mbox.integer_points() {
        let plus: Vec<i64> = m.iter().zip(k).map(|(a, b)| a + b).collect();
        let minus: Vec<i64> = m.iter().zip(r).map(|(a, b)| a - b).collect();
        sandwich(&mut out, "concordance", &m, j1.j(&plus)?, j2.j(&m)?, j1.j(&minus)?);
    }
    Ok(out)
}

/// Two-component form: `changed` arises from `original` by `a₁ + a₂`
/// positive and `b₁ + b₂` negative multicolored crossing changes, and
/// `J'(m + b) ≤ J(m) ≤ J'(m - a)` is checked.
pub fn check_two_component_inequality(
    original: &JView,
    changed: &JView,
    a: [i64; 2],
    b: [i64; 2],
    mbox: &LatticeBox,
) -> Result<Vec<Violation>, SplitError> {
    if original.n() != 2 {
        return Err(SplitError::NotTwoComponent("link".into(), original.n()));
    }
    check_concordance_inequality(changed, original, &a, &b, mbox)
}
