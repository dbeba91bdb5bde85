mod common;

use lspace::laurent::LatticeBox;
use lspace::semigroup::{branch_semigroup, germ_catalog, BranchParam, CurveGerm, HilbertOracle, SemigroupError};
use proptest::prelude::*;

use common::{branch_r, germ_r, Branch, Terms};

/// Elements below `bound` of the numerical semigroup generated by `gens`.
fn generated(gens: &[i64], bound: i64) -> Vec<i64> {
    let mut member = vec![false; bound as usize];
    member[0] = true;
    for s in 1..bound {
        member[s as usize] = gens.iter().any(|&g| g <= s && member[(s - g) as usize]);
    }
    (0..bound).filter(|&s| member[s as usize]).collect()
}

#[test]
fn monomial_branches_generate_their_semigroups() {
    let cases: [(Terms, Terms, &[i64]); 5] = [
        (&[(2, 1)], &[(3, 1)], &[2, 3]),
        (&[(2, 1)], &[(5, 1)], &[2, 5]),
        (&[(3, 1)], &[(4, 1)], &[3, 4]),
        (&[(3, 1)], &[(5, 1)], &[3, 5]),
        (&[(4, 1)], &[(6, 1), (7, 1)], &[4, 6, 13]),
    ];
    for (x, y, gens) in cases {
        let b = BranchParam::from_ints(x, y, 40, None).unwrap();
        let s = branch_semigroup(&b, 40).unwrap();
        assert_eq!(s.elements, generated(gens, 40), "{:?}", gens);
        assert_eq!(s.generators(), gens.to_vec());
        let gaps = (0..s.conductor).filter(|&k| !s.contains(k)).count() as i64;
        assert_eq!(s.delta, gaps);
    }
}

#[test]
fn single_branch_r_counts_semigroup_elements() {
    for name in ["smooth", "cusp", "branch_4_6_13"] {
        let germ = germ_catalog(name, &[]).unwrap();
        let s = branch_semigroup(&germ.branches()[0], 40).unwrap();
        let o = HilbertOracle::new(germ).unwrap();
        for v in 0..30 {
            assert_eq!(o.r(&[v]).unwrap(), s.count_below(v), "{} at {}", name, v);
        }
    }
}

#[test]
fn multi_branch_r_matches_brute_force_ranks() {
    let lines: [Branch; 2] = [(&[(1, 1)], &[(1, 1)]), (&[(1, -1)], &[(1, 1)])];
    let a2n: [Branch; 2] = [(&[(2, 1)], &[(1, 1)]), (&[(2, -1)], &[(1, 1)])];
    let lines3: [Branch; 3] = [(&[(1, 1)], &[(1, 1)]), (&[(1, -1)], &[(1, 1)]), (&[], &[(1, 1)])];
    let cases: [(&str, Vec<i64>, &[Branch], i64); 3] =
        [("lines", vec![], &lines, 4), ("a2n", vec![2], &a2n, 4), ("lines3", vec![], &lines3, 3)];
    for (name, params, branches, top) in cases {
        let o = HilbertOracle::new(germ_catalog(name, &params).unwrap()).unwrap();
        for v in LatticeBox::cube(o.n(), 0, top).integer_points() {
            let vu: Vec<usize> = v.iter().map(|&x| x as usize).collect();
            let cap = 2 * vu.iter().sum::<usize>();
            assert_eq!(o.r(&v).unwrap() as usize, germ_r(branches, &vu, cap), "{} at {:?}", name, v);
        }
    }
}

#[test]
fn germ_files_load() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let g = lspace::semigroup::load_germ(format!("{}/branch_4_6_13.json", dir)).unwrap();
    let s = branch_semigroup(&g.branches()[0], 40).unwrap();
    assert_eq!((s.delta, s.conductor), (8, 16));
    let pair = lspace::semigroup::load_germ(format!("{}/x2_y4.json", dir)).unwrap();
    assert_eq!(pair.intersections()[0][1], 2);
}

#[test]
fn non_reduced_parametrization_is_rejected() {
    let b = BranchParam::from_ints(&[(2, 1)], &[(4, 1)], 40, None).unwrap();
    assert!(matches!(branch_semigroup(&b, 40), Err(SemigroupError::NotReduced(_))));
    let g = CurveGerm::new("double", vec![b], None);
    assert!(g.is_err() || HilbertOracle::new(g.unwrap()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_branches_agree_with_brute_force(a in 2usize..=4, b in 3usize..=7, d in 1usize..=4, c in -2i64..=2) {
        prop_assume!(a != b);
        let x = [(a, 1)];
        let y = [(b, 1), (b + d, c)];
        let param = BranchParam::from_ints(&x, &y, 40, None).unwrap();
        match branch_semigroup(&param, 40) {
            Ok(s) => {
                let o = HilbertOracle::new(CurveGerm::new("random", vec![param], None).unwrap()).unwrap();
                for v in 0..16 {
                    let brute = branch_r(&x, &y, v, 2 * v);
                    prop_assert_eq!(o.r(&[v as i64]).unwrap() as usize, brute);
                    prop_assert_eq!(s.count_below(v as i64) as usize, brute);
                }
            }
            Err(SemigroupError::NotReduced(_)) => {
                let g = num_integer::gcd(a, b);
                prop_assert!(g > 1 && (c == 0 || num_integer::gcd(g, b + d) > 1));
            }
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}
