mod common;

use lspace::laurent::LatticeBox;
use lspace::split::{
    check_crossing_inequality, check_two_component_inequality, splitting_lower_bound, splitting_lower_bound_in,
    vanishing_threshold, wtj_extrema, CrossingKind, SplitError,
};
use proptest::prelude::*;

use common::{hfunc, jview, link};

#[test]
fn two_bridge_bounds_increase() {
    let bounds: Vec<i64> = (1..=4).map(|n| splitting_lower_bound(&link("twobridge_Ln", &[n])).unwrap().bound).collect();
    assert_eq!(bounds, vec![2, 4, 6, 8]);
}

#[test]
fn torus_links_are_bounded_by_linking() {
    for n in 1..=4 {
        let r = splitting_lower_bound(&link("torus2", &[n])).unwrap();
        assert!(r.bound >= n, "T(2,{}): {}", 2 * n, r.bound);
        assert_eq!(r.bound, n);
        assert_eq!(r.t_minus - r.t_plus, n);
    }
}

#[test]
fn split_links_need_no_changes() {
    let r = splitting_lower_bound(&link("unlink", &[2])).unwrap();
    assert_eq!((r.bound, r.t_plus, r.t_minus), (0, 0, 0));
}

#[test]
fn vanishing_threshold_matches_full_scan() {
    for (name, params) in [("whitehead", vec![]), ("b85", vec![]), ("twobridge_Ln", vec![3]), ("torus2", vec![2])] {
        let l = link(name, &params);
        let hf = hfunc(name, &params);
        let th = vanishing_threshold(&l).unwrap();
        // smallest a >= 0 with J = 0 on the whole region {m ⪰ g, m1 + m2 >= |g| + a}
        let g = l.genus();
        let region = LatticeBox::integral(g, &[g[0] + 20, g[1] + 20]).integer_points();
        let full = (0..=20)
            .find(|&a| {
                region
                    .iter()
                    .filter(|m| m[0] + m[1] >= g[0] + g[1] + a)
                    .all(|m| hf.j(m).unwrap() == 0)
            })
            .unwrap();
        assert_eq!(th.level, full, "{}", name);
    }
}

#[test]
fn three_components_use_only_the_extrema() {
    let b = link("borromean", &[]);
    assert!(matches!(vanishing_threshold(&b), Err(SplitError::NotTwoComponent(..))));
    let r = splitting_lower_bound(&b).unwrap();
    assert_eq!(r.linking_constraint, None);
    assert!(r.witnesses.iter().all(|w| w.rule.starts_with("wtj-")));
    assert_eq!(r.bound, r.t_plus + r.t_minus);
}

#[test]
fn extrema_refuse_boxes_that_cut_support() {
    let l = link("twobridge_Ln", &[3]);
    assert!(wtj_extrema(&l, &LatticeBox::cube(2, 0, 1)).is_err());
    assert!(wtj_extrema(&l, &l.probe_box()).is_ok());
}

#[test]
fn bound_does_not_depend_on_a_larger_box() {
    for (name, params) in [("b85", vec![]), ("twobridge_Ln", vec![2]), ("whitehead_cable", vec![2, 3])] {
        let l = link(name, &params);
        let small = splitting_lower_bound(&l).unwrap().bound;
        let big = splitting_lower_bound_in(&l, &l.probe_box().expanded(3)).unwrap().bound;
        assert_eq!(small, big, "{}", name);
    }
}

#[test]
fn two_component_form_matches_whitehead_to_unlink() {
    let b = LatticeBox::cube(2, -4, 4);
    let w = jview(&link("whitehead", &[]), &b);
    let u = jview(&link("unlink", &[2]), &b);
    assert!(check_two_component_inequality(&w, &u, [1, 0], [0, 0], &b).unwrap().is_empty()
        || check_two_component_inequality(&w, &u, [0, 0], [1, 0], &b).unwrap().is_empty());
}

fn two_component() -> impl Strategy<Value = (&'static str, Vec<i64>)> {
    prop_oneof![
        Just(("whitehead", vec![])),
        Just(("b85", vec![])),
        Just(("unlink", vec![2])),
        (1i64..=4).prop_map(|n| ("twobridge_Ln", vec![n])),
        (1i64..=3).prop_map(|n| ("torus2", vec![n])),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn bound_at_least_linking((name, params) in two_component()) {
        let l = link(name, &params);
        let r = splitting_lower_bound(&l).unwrap();
        prop_assert!(r.bound >= l.lk(0, 1).abs());
        prop_assert_eq!(r.bound, r.t_plus + r.t_minus);
        prop_assert!(r.t_plus >= r.t_plus_min && r.t_minus >= r.t_minus_min);
    }

    #[test]
    fn identical_views_satisfy_the_between_inequality((name, params) in two_component()) {
        let b = LatticeBox::cube(2, -3, 3);
        let j = jview(&link(name, &params), &b);
        prop_assert!(check_crossing_inequality(&j, &j, CrossingKind::Between(0, 1), &b).unwrap().is_empty());
    }
}
