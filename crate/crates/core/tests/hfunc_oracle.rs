mod common;

use lspace::hfunc::{generating_crosscheck, h_value, normalize_sign, HFunction};
use lspace::laurent::{ExponentVector, LatticeBox};
use proptest::prelude::*;

use common::{hfunc, link, unknot_h};

/// `H(v)` of the torus knot `T(p,q)`: the number of semigroup elements of
/// `<p,q>` below `δ - v`.
fn torus_knot_h(p: i64, q: i64, v: i64) -> i64 {
    let delta = (p - 1) * (q - 1) / 2;
    let limit = delta - v;
    let mut count = 0;
    for s in 0..limit.max(0) {
        if (0..=s / p).any(|a| (s - a * p) % q == 0) {
            count += 1;
        }
    }
    count
}

#[test]
fn torus_knots_match_semigroup_counts() {
    for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5), (2, 7), (4, 5)] {
        let hf = hfunc("torus_knot", &[p, q]);
        for v in -15..=15 {
            assert_eq!(hf.h_int(&[v]).unwrap(), torus_knot_h(p, q, v), "T({},{}) at {}", p, q, v);
        }
    }
}

#[test]
fn whitehead_closed_form_on_a_wide_box() {
    let hf = hfunc("whitehead", &[]);
    for v in LatticeBox::cube(2, -8, 8).integer_points() {
        let expected = unknot_h(v[0]) + unknot_h(v[1]) + i64::from(v == [0, 0]);
        assert_eq!(hf.h_int(&v).unwrap(), expected, "{:?}", v);
    }
}

#[test]
fn unlinks_are_additive() {
    for n in 1..=3 {
        let hf = hfunc("unlink", &[n as i64]);
        for v in LatticeBox::cube(n, -3, 3).integer_points() {
            let expected: i64 = v.iter().map(|&x| unknot_h(x)).sum();
            assert_eq!(hf.h_int(&v).unwrap(), expected);
            assert_eq!(hf.wtj(&v).unwrap(), 0);
        }
    }
}

#[test]
fn hopf_link_values() {
    let hopf = link("torus2", &[1]);
    let hf = HFunction::new(&hopf).unwrap();
    let half = ExponentVector::parse("1/2,1/2").unwrap();
    assert_eq!(hf.h(&half).unwrap(), 0);
    let low = ExponentVector::parse("-1/2,-1/2").unwrap();
    assert_eq!(hf.h(&low).unwrap(), 1);
    assert_eq!(h_value(&hopf, &ExponentVector::parse("-3/2,1/2").unwrap()).unwrap(), 2);
}

#[test]
fn generating_series_agrees_on_catalog_links() {
    for (name, params) in [
        ("whitehead", vec![]),
        ("borromean", vec![]),
        ("b85", vec![]),
        ("twobridge_Ln", vec![2]),
        ("torus2", vec![2]),
        ("whitehead_cable", vec![2, 3]),
    ] {
        let l = link(name, &params);
        let checked = generating_crosscheck(&l, &l.probe_box()).unwrap();
        assert!(checked > 0, "{}: nothing compared", name);
    }
}

#[test]
fn duality_on_catalog_links() {
    for (name, params) in [("whitehead", vec![]), ("b85", vec![]), ("torus2", vec![3]), ("twobridge_Ln", vec![3])] {
        let l = normalize_sign(&link(name, &params)).unwrap();
        let hf = HFunction::new(&l).unwrap();
        for v in l.probe_box().points(hf.ell()) {
            let neg = ExponentVector::from_doubled(v.doubled().iter().map(|x| -x).collect());
            let size = v.doubled_sum() / 2;
            assert_eq!(hf.h(&neg).unwrap(), hf.h(&v).unwrap() + size, "{} at {}", name, v);
        }
    }
}

fn catalog_case() -> impl Strategy<Value = (&'static str, Vec<i64>)> {
    prop_oneof![
        Just(("whitehead", vec![])),
        Just(("b85", vec![])),
        Just(("borromean", vec![])),
        (1i64..=3).prop_map(|n| ("twobridge_Ln", vec![n])),
        (1i64..=3).prop_map(|n| ("torus2", vec![n])),
        Just(("whitehead_cable", vec![2, 3])),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn j_steps_down_by_zero_or_one((name, params) in catalog_case(), seed in prop::collection::vec(-6i64..=6, 3), i in 0usize..3) {
        let hf = hfunc(name, &params);
        let n = hf.n();
        let m = &seed[..n];
        let i = i % n;
        let mut up = m.to_vec();
        up[i] += 1;
        let step = hf.j(m).unwrap() - hf.j(&up).unwrap();
        prop_assert!(step == 0 || step == 1, "{} at {:?}: step {}", name, m, step);
        prop_assert!(hf.j(m).unwrap() >= 0);
    }

    #[test]
    fn far_corner_values((name, params) in catalog_case(), k in 8i64..=12) {
        let hf = hfunc(name, &params);
        let n = hf.n();
        prop_assert_eq!(hf.j(&vec![k; n]).unwrap(), 0);
        let ell_sum = hf.ell().doubled_sum() / 2;
        prop_assert_eq!(hf.j(&vec![-k; n]).unwrap(), k * n as i64 - ell_sum);
    }
}
