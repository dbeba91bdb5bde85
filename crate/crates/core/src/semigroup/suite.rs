use crate::hfunc::HFunction;
use crate::laurent::{ExponentVector, LatticeBox};
use crate::linkdata::LinkDescriptor;
use crate::violation::Violation;

use super::hilbert::HilbertOracle;
use super::SemigroupError;

fn pt(v: &[i64]) -> String {
    ExponentVector::from_integers(v).to_string()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Compares the link's H- and J-functions with the Hilbert function of the
/// germ: `H(v) = R(g̃ - v)` at the lattice points of `bbox`, and
/// `J(m) = R(g - m)` at its integer points.
pub fn bridge_check(o: &HilbertOracle, link: &LinkDescriptor, bbox: &LatticeBox) -> Result<Vec<Violation>, SemigroupError> {
    if link.n() != o.n() || bbox.nvars() != o.n() {
        return Err(SemigroupError::LatticeMismatch(format!(
            "germ has {} branches, link has {} components, box has {} coordinates",
            o.n(),
            link.n(),
            bbox.nvars()
        )));
    }
    let hf = HFunction::new(link)?;
    let (g, gt) = o.gtilde();
    if !gt.same_coset(hf.ell()) {
        return Err(SemigroupError::LatticeMismatch(format!(
            "g̃ = {} is not in the lattice of {} (offset {})",
            gt,
            link.name(),
            hf.ell()
        )));
    }
    let mut out = Vec::new();
    for v in bbox.points(hf.ell()) {
        let h = hf.h(&v)?;
        let arg = (&gt - &v).to_integers().expect("same coset");
        let r = o.r(&arg)?;
        if h != r {
            out.push(Violation::new(
                "bridge-h",
                v.to_string(),
                format!("H = {}, R{} = {}", h, pt(&arg), r),
            ));
        }
    }
    for m in bbox.integer_points() {
        let j = hf.j(&m)?;
        let arg = sub(&g, &m);
        let r = o.r(&arg)?;
        if j != r {
            out.push(Violation::new(
                "bridge-j",
                pt(&m),
                format!("J = {}, R{} = {}", j, pt(&arg), r),
            ));
        }
    }
    Ok(out)
}

/// Violations of the Hilbert-function properties, plus witnesses that the
/// two bounds on `R(v) - Σ R_i(v_i)` are attained.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropertyReport {
    pub violations: Vec<Violation>,
    /// A point with `R(v) = Σ R_i(v_i)`.
    pub upper_witness: Option<Vec<i64>>,
    /// A point with `R(v) - Σ R_i(v_i) = -Σ_{i<j} lk_ij`.
    pub lower_witness: Option<Vec<i64>>,
}

/// Checks on the integer points of `bbox`:
///
/// * `symmetry`: `R(2g̃ - v) = R(v) + |g̃| - |v|`
/// * `hilb-upper`, `hilb-lower`: `0 ≥ R(v) - Σ R_i(v_i) ≥ -Σ_{i<j} lk_ij`
/// * `submodular`: `R(u) + R(v) ≥ R(min(u, v)) + R(max(u, v))`
/// * `cube`: `R(v) - R(u) ≤ Σ (R_i(v_i) - R_i(u_i))` for `0 ⪯ u ⪯ v`
/// * `unit-step`: `R(v + e_i) - R(v) ∈ {0, 1}`
pub fn hilbert_property_suite(o: &HilbertOracle, bbox: &LatticeBox) -> Result<PropertyReport, SemigroupError> {
    let n = o.n();
    if bbox.nvars() != n {
        return Err(SemigroupError::LatticeMismatch(format!(
            "box has {} coordinates, germ has {} branches",
            bbox.nvars(),
            n
        )));
    }
    let points = bbox.integer_points();
    let (_, gt) = o.gtilde();
    let gt_sum = gt.doubled_sum() / 2;
    let lk = o.total_linking();
    let mut report = PropertyReport::default();
    let out = &mut report.violations;

    let mut values = std::collections::BTreeMap::new();
    for v in &points {
        values.insert(v.clone(), o.r(v)?);
    }
    let r = |v: &Vec<i64>| -> Result<i64, SemigroupError> {
        match values.get(v) {
            Some(&x) => Ok(x),
            None => o.r(v),
        }
    };
    let components = |v: &[i64]| -> Result<i64, SemigroupError> {
        let mut s = 0;
        for (i, &vi) in v.iter().enumerate() {
            s += o.r_i(i, vi)?;
        }
        Ok(s)
    };

    for v in &points {
        let rv = r(v)?;
        let mirror: Vec<i64> = gt.doubled().iter().zip(v).map(|(d, x)| d - x).collect();
        let rm = r(&mirror)?;
        let expected = rv + gt_sum - v.iter().sum::<i64>();
        if rm != expected {
            out.push(Violation::new(
                "symmetry",
                pt(v),
                format!("R(2g̃ - v) = {}, R(v) + |g̃| - |v| = {}", rm, expected),
            ));
        }

        let diff = rv - components(v)?;
        if diff > 0 {
            out.push(Violation::new("hilb-upper", pt(v), format!("R(v) - Σ R_i(v_i) = {}", diff)));
        }
        if diff < -lk {
            out.push(Violation::new(
                "hilb-lower",
                pt(v),
                format!("R(v) - Σ R_i(v_i) = {} < -{}", diff, lk),
            ));
        }
        if diff == 0 && report.upper_witness.is_none() {
            report.upper_witness = Some(v.clone());
        }
        if diff == -lk && report.lower_witness.is_none() {
            report.lower_witness = Some(v.clone());
        }

        for i in 0..n {
            let mut up = v.clone();
            up[i] += 1;
            let step = r(&up)? - rv;
            if step != 0 && step != 1 {
                out.push(Violation::new("unit-step", pt(v), format!("R(v + e{}) - R(v) = {}", i + 1, step)));
            }
        }
    }

    for u in &points {
        for v in &points {
            if u >= v {
                continue;
            }
            let lo: Vec<i64> = u.iter().zip(v).map(|(a, b)| *a.min(b)).collect();
            let hi: Vec<i64> = u.iter().zip(v).map(|(a, b)| *a.max(b)).collect();
            let (ru, rv) = (r(u)?, r(v)?);
            let (rlo, rhi) = (r(&lo)?, r(&hi)?);
            if ru + rv < rlo + rhi {
                out.push(Violation::new(
                    "submodular",
                    format!("{} {}", pt(u), pt(v)),
                    format!("R(u) + R(v) = {} < R(min) + R(max) = {}", ru + rv, rlo + rhi),
                ));
            }
            if lo == *u && u.iter().all(|&x| x >= 0) {
                let lhs = rv - ru;
                let rhs = components(v)? - components(u)?;
                if lhs > rhs {
                    out.push(Violation::new(
                        "cube",
                        format!("{} {}", pt(u), pt(v)),
                        format!("R(v) - R(u) = {} > {}", lhs, rhs),
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// Pointwise comparison `R_t(m) ≥ R_0(m)` of a deformation's general and
/// special fibre on the integer points of `bbox`.
pub fn semicontinuity_check(rt: &HilbertOracle, r0: &HilbertOracle, bbox: &LatticeBox) -> Result<Vec<Violation>, SemigroupError> {
    if rt.n() != r0.n() || bbox.nvars() != rt.n() {
        return Err(SemigroupError::LatticeMismatch(format!(
            "germs have {} and {} branches, box has {} coordinates",
            rt.n(),
            r0.n(),
            bbox.nvars()
        )));
    }
    let mut out = Vec::new();
    for m in bbox.integer_points() {
        let (a, b) = (rt.r(&m)?, r0.r(&m)?);
        if a < b {
            out.push(Violation::new("semicontinuity", pt(&m), format!("R_t = {} < R_0 = {}", a, b)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdata::catalog_link;
    use crate::semigroup::germ_catalog;

    fn oracle(name: &str, params: &[i64]) -> HilbertOracle {
        HilbertOracle::new(germ_catalog(name, params).unwrap()).unwrap()
    }

    #[test]
    fn bridges() {
        let cases = [
            ("lines", vec![], "torus2", vec![1]),
            ("a2n", vec![2], "torus2", vec![2]),
            ("cusp", vec![], "torus_knot", vec![2, 3]),
        ];
        for (germ, gp, link, lp) in cases {
            let o = oracle(germ, &gp);
            let l = catalog_link(link, &lp).unwrap();
            let bbox = LatticeBox::cube(o.n(), -3, 3);
            assert!(bridge_check(&o, &l, &bbox).unwrap().is_empty(), "{}", germ);
        }
    }

    #[test]
    fn mismatched_bridge_reports() {
        let o = oracle("a2n", &[2]);
        let w = catalog_link("whitehead", &[]).unwrap();
        let v = bridge_check(&o, &w, &LatticeBox::cube(2, -3, 3)).unwrap();
        assert!(!v.is_empty());
        let hopf = catalog_link("torus2", &[1]).unwrap();
        assert!(matches!(
            bridge_check(&o, &hopf, &LatticeBox::cube(2, -3, 3)),
            Err(SemigroupError::LatticeMismatch(_))
        ));
    }

    #[test]
    fn properties_of_a2n() {
        let o = oracle("a2n", &[2]);
        let rep = hilbert_property_suite(&o, &LatticeBox::cube(2, 0, 6)).unwrap();
        assert!(rep.violations.is_empty(), "{:?}", rep.violations);
        assert!(rep.upper_witness.is_some());
        assert!(rep.lower_witness.is_some());
    }

    #[test]
    fn semicontinuity_on_equal_tables() {
        let c = oracle("cusp", &[]);
        assert!(semicontinuity_check(&c, &c, &LatticeBox::cube(1, 0, 8)).unwrap().is_empty());
        let s = oracle("smooth", &[]);
        assert!(!semicontinuity_check(&c, &s, &LatticeBox::cube(1, 0, 8)).unwrap().is_empty());
    }
}
