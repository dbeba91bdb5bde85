use crate::laurent::{ExponentVector, LatticeBox};
use crate::linkdata::{ComponentSet, LinkDescriptor};
use crate::violation::Violation;

use super::{HError, HFunction};

/// Checks necessary conditions for `H` to come from an L-space link on the
/// lattice points of `bbox`:
///
/// * `nonneg`: `H(v) ≥ 0`
/// * `unit-step`: `H(v - e_i) - H(v) ∈ {0, 1}`
/// * `duality`: `H(-v) = H(v) + Σ v_i`
/// * `projection`: `J(m) = J_{L_I}(m_I)` once the coordinates off `I` are large
/// * `stabilization`: `H(v) = H(min(v, D*))` when every linking number is nonzero
/// * `dual-projection`: the mirror of `projection` for very negative coordinates
///
/// An empty result does not prove the link is an L-space link.
pub fn validate_lspace(link: &LinkDescriptor, bbox: &LatticeBox) -> Result<Vec<Violation>, HError> {
    let hf = HFunction::new(link)?;
    let n = link.n();
    let ell = hf.ell().clone();
    let points = bbox.points(&ell);
    let mut out = Vec::new();

    for v in &points {
        let h = hf.h(v)?;
        if h < 0 {
            out.push(Violation::new("nonneg", v.to_string(), format!("H = {}", h)));
        }
        for i in 0..n {
            let below = v.shifted(i, -2);
            let step = hf.h(&below)? - h;
            if step != 0 && step != 1 {
                out.push(Violation::new(
                    "unit-step",
                    v.to_string(),
                    format!("H(v - e{}) - H(v) = {}", i + 1, step),
                ));
            }
        }
        let mirrored = hf.h(&-v)?;
        let expected = h + v.doubled_sum() / 2;
        if mirrored != expected {
            out.push(Violation::new(
                "duality",
                v.to_string(),
                format!("H(-v) = {}, H(v) + |v| = {}", mirrored, expected),
            ));
        }
    }

    let radius = link.probe_radius();
    let far: Vec<i64> = (0..n)
        .map(|j| radius[j] + (0..n).map(|k| link.lk(j, k).abs()).sum::<i64>() + 10)
        .collect();
    let mbox_lo = (&bbox.lo - &ell).doubled().to_vec();
    let mbox_hi = (&bbox.hi - &ell).doubled().to_vec();

    for set in ComponentSet::all_nonempty(n) {
        if set.len() == n {
            continue;
        }
        let idx = set.indices();
        let sub = link.sublink(set);
        let sub_hf = HFunction::new(&sub)?;
        let sub_ell = sub_hf.ell().clone();
        let sub_box = LatticeBox::new(
            ExponentVector::from_doubled(idx.iter().map(|&j| mbox_lo[j]).collect()),
            ExponentVector::from_doubled(idx.iter().map(|&j| mbox_hi[j]).collect()),
        );
        for m_sub in sub_box.integer_points() {
            let mut m = far.clone();
            for (k, &j) in idx.iter().enumerate() {
                m[j] = m_sub[k];
            }
            let whole = hf.j(&m)?;
            let part = sub_hf.j(&m_sub)?;
            if whole != part {
                out.push(Violation::new(
                    "projection",
                    ExponentVector::from_integers(&m).to_string(),
                    format!("J = {}, J of sublink {{{}}} = {}", whole, set, part),
                ));
            }

            let mut v = ExponentVector::from_integers(&m);
            for (j, f) in far.iter().enumerate() {
                if !set.contains(j) {
                    v.set(j, ell.get(j) - 2 * f);
                }
            }
            for (k, &j) in idx.iter().enumerate() {
                v.set(j, ell.get(j) + 2 * m_sub[k]);
            }
            let w = ExponentVector::from_doubled(
                idx.iter()
                    .enumerate()
                    .map(|(k, &j)| v.get(j) + ell.get(j) - sub_ell.get(k))
                    .collect(),
            );
            let off: i64 = (0..n).filter(|&j| !set.contains(j)).map(|j| v.get(j)).sum();
            let gap: i64 = idx.iter().enumerate().map(|(k, &j)| ell.get(j) - sub_ell.get(k)).sum();
            let expected = sub_hf.h(&w)? + (gap - off) / 2;
            let actual = hf.h(&v)?;
            if actual != expected {
                out.push(Violation::new(
                    "dual-projection",
                    v.to_string(),
                    format!("H = {}, dual projection gives {}", actual, expected),
                ));
            }
        }
    }

    if let Some(cap) = stabilization_cap(link, &hf) {
        for v in &points {
            let clipped = v.meet(&cap);
            if clipped != *v {
                let a = hf.h(v)?;
                let b = hf.h(&clipped)?;
                if a != b {
                    out.push(Violation::new(
                        "stabilization",
                        v.to_string(),
                        format!("H = {}, H{} = {}", a, clipped, b),
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// The point `D*` beyond which `H` is constant in each coordinate, when the
/// stabilization hypothesis holds: the degree vector moved onto the lattice.
fn stabilization_cap(link: &LinkDescriptor, hf: &HFunction) -> Option<ExponentVector> {
    let n = link.n();
    if n == 1 {
        let d = hf.knot(0).degree();
        return Some(ExponentVector::from_integers(&[d]));
    }
    let all_linked = (0..n).all(|i| (0..n).all(|j| i == j || link.lk(i, j) != 0));
    if !all_linked {
        return None;
    }
    let d = link.degree_vector()?;
    Some(ExponentVector::from_doubled(d.doubled().iter().map(|x| x + 1).collect()))
}
