use std::collections::BTreeMap;

use crate::laurent::{monomial_difference, ExponentVector, LaurentPoly};

use super::{cable_alexander, ComponentSet, LinkDescriptor, LinkError};

/// A catalog name with its parameter signature.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: &'static str,
    pub summary: &'static str,
}

pub fn catalog_entries() -> &'static [CatalogEntry] {
    &[
        CatalogEntry { name: "whitehead", params: "", summary: "Whitehead link" },
        CatalogEntry { name: "borromean", params: "", summary: "Borromean rings" },
        CatalogEntry { name: "torus2", params: "n", summary: "T(2,2n) torus link, the link of x^2 = y^(2n)" },
        CatalogEntry { name: "twobridge_Ln", params: "n", summary: "two-bridge link b(4n^2+4n, -2n-1)" },
        CatalogEntry { name: "whitehead_cable", params: "p,q", summary: "(p,q) cable on one Whitehead component" },
        CatalogEntry { name: "b85", params: "", summary: "two-bridge link b(8,-5), normalized sign" },
        CatalogEntry { name: "b85_snappy", params: "", summary: "b(8,-5) with the opposite sign of the Alexander polynomial" },
        CatalogEntry { name: "unlink", params: "n", summary: "n-component unlink" },
        CatalogEntry { name: "unknot", params: "", summary: "the unknot" },
        CatalogEntry { name: "torus_knot", params: "p,q", summary: "T(p,q) torus knot" },
    ]
}

fn binomial(nvars: usize, i: usize) -> LaurentPoly {
    monomial_difference(&ExponentVector::zeros(nvars).shifted(i, 1))
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("L{}", i)).collect()
}

fn with_unknots(n: usize, full: LaurentPoly) -> BTreeMap<ComponentSet, LaurentPoly> {
    let mut a = BTreeMap::new();
    for i in 0..n {
        a.insert(ComponentSet::singleton(i), LaurentPoly::one(1));
    }
    a.insert(ComponentSet::full(n), full);
    a
}

fn two_component(name: &str, lk: i64, full: LaurentPoly) -> Result<LinkDescriptor, LinkError> {
    LinkDescriptor::new(name, names(2), vec![vec![0, lk], vec![lk, 0]], vec![0, 0], with_unknots(2, full))
}

fn whitehead_poly() -> LaurentPoly {
    -&(&binomial(2, 0) * &binomial(2, 1))
}

fn b85_poly() -> LaurentPoly {
    let five = LaurentPoly::parse("t1 + t2 + 1 + t1^{-1} + t2^{-1}", 2).expect("literal polynomial");
    &five * &whitehead_poly()
}

fn torus2_poly(n: i64) -> LaurentPoly {
    LaurentPoly::from_terms(
        2,
        (0..n).map(|k| {
            let s = n - 1 - 2 * k;
            (ExponentVector::from_doubled(vec![s, s]), 1)
        }),
    )
}

fn twobridge_poly(n: i64) -> LaurentPoly {
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let mut terms = Vec::new();
    for i in -n - 1..=n {
        for j in -n - 1..=n {
            if (2 * i + 1).abs() + (2 * j + 1).abs() <= 2 * n {
                let s = if (i + j).rem_euclid(2) == 0 { sign } else { -sign };
                terms.push((ExponentVector::from_doubled(vec![2 * i + 1, 2 * j + 1]), s));
            }
        }
    }
    LaurentPoly::from_terms(2, terms)
}

fn expect_params(name: &str, params: &[i64], count: usize) -> Result<(), LinkError> {
    if params.len() != count {
        return Err(LinkError::BadParams {
            name: name.to_string(),
            reason: format!("expected {} parameter(s), got {}", count, params.len()),
        });
    }
    Ok(())
}

fn positive(name: &str, v: i64) -> Result<i64, LinkError> {
    if v < 1 {
        return Err(LinkError::BadParams {
            name: name.to_string(),
            reason: format!("parameter must be positive, got {}", v),
        });
    }
    Ok(v)
}

/// Builds a link from the built-in catalog.
pub fn catalog_link(name: &str, params: &[i64]) -> Result<LinkDescriptor, LinkError> {
    match name {
        "whitehead" => {
            expect_params(name, params, 0)?;
            two_component("whitehead", 0, whitehead_poly())
        }
        "borromean" => {
            expect_params(name, params, 0)?;
            let full = &(&binomial(3, 0) * &binomial(3, 1)) * &binomial(3, 2);
            let mut a = with_unknots(3, full);
            for pair in [[0, 1], [0, 2], [1, 2]] {
                a.insert(ComponentSet::from_indices(&pair), LaurentPoly::zero(2));
            }
            LinkDescriptor::new("borromean", names(3), vec![vec![0; 3]; 3], vec![0; 3], a)
        }
        "torus2" => {
            expect_params(name, params, 1)?;
            let n = positive(name, params[0])?;
            two_component(&format!("torus2_{}", n), n, torus2_poly(n))
        }
        "twobridge_Ln" => {
            expect_params(name, params, 1)?;
            let n = positive(name, params[0])?;
            two_component(&format!("twobridge_L{}", n), 0, twobridge_poly(n))
        }
        "whitehead_cable" => {
            expect_params(name, params, 2)?;
            let mut c = cable_alexander(&catalog_link("whitehead", &[])?, params[0], params[1])?;
            c.set_name(format!("whitehead_cable_{}_{}", params[0], params[1]));
            Ok(c)
        }
        "b85" => {
            expect_params(name, params, 0)?;
            two_component("b85", 0, b85_poly())
        }
        "b85_snappy" => {
            expect_params(name, params, 0)?;
            two_component("b85_snappy", 0, -&b85_poly())
        }
        "unlink" => {
            expect_params(name, params, 1)?;
            let n = positive(name, params[0])?;
            if n as usize > super::MAX_COMPONENTS {
                return Err(LinkError::BadParams {
                    name: name.to_string(),
                    reason: "too many components".to_string(),
                });
            }
            let n = n as usize;
            let mut a = BTreeMap::new();
            for set in ComponentSet::all_nonempty(n) {
                let p = if set.len() == 1 {
                    LaurentPoly::one(1)
                } else {
                    LaurentPoly::zero(set.len())
                };
                a.insert(set, p);
            }
            LinkDescriptor::new(format!("unlink_{}", n), names(n), vec![vec![0; n]; n], vec![0; n], a)
        }
        "unknot" => {
            expect_params(name, params, 0)?;
            LinkDescriptor::new("unknot", names(1), vec![vec![0]], vec![0], with_unknots(1, LaurentPoly::one(1)))
        }
        "torus_knot" => {
            expect_params(name, params, 2)?;
            let (p, q) = (positive(name, params[0])?, params[1]);
            let unknot = catalog_link("unknot", &[])?;
            let mut k = cable_alexander(&unknot, p, q)?;
            k.set_name(format!("torus_knot_{}_{}", p, q));
            Ok(k)
        }
        _ => Err(LinkError::UnknownCatalog(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds() {
        for e in catalog_entries() {
            let params: Vec<i64> = match e.params {
                "" => vec![],
                "n" => vec![2],
                _ => vec![2, 3],
            };
            catalog_link(e.name, &params).unwrap_or_else(|err| panic!("{}: {}", e.name, err));
        }
    }

    #[test]
    fn l1_is_whitehead() {
        let l1 = catalog_link("twobridge_Ln", &[1]).unwrap();
        let w = catalog_link("whitehead", &[]).unwrap();
        assert!(l1.same_data(&w));
    }

    #[test]
    fn l2_diamond() {
        let l2 = catalog_link("twobridge_Ln", &[2]).unwrap();
        let p = l2.full_alexander();
        assert_eq!(p.num_terms(), 12);
        assert!(p.terms().all(|(e, c)| {
            c.magnitude() == &1u32.into() && e.get(0).abs() + e.get(1).abs() <= 4
        }));
    }

    #[test]
    fn borromean_sublinks() {
        let b = catalog_link("borromean", &[]).unwrap();
        for set in ComponentSet::all_nonempty(3) {
            let p = b.alexander(set).unwrap();
            match set.len() {
                1 => assert_eq!(p, &LaurentPoly::one(1)),
                2 => assert!(p.is_zero()),
                _ => assert_eq!(p.num_terms(), 8),
            }
        }
    }

    #[test]
    fn torus_knot_genus() {
        let k = catalog_link("torus_knot", &[3, 4]).unwrap();
        assert_eq!(k.genus(), &[3]);
        assert_eq!(k.full_alexander().max_degree(0), Some(6));
    }

    #[test]
    fn unknown_and_bad() {
        assert!(matches!(catalog_link("nope", &[]), Err(LinkError::UnknownCatalog(_))));
        assert!(matches!(catalog_link("torus2", &[]), Err(LinkError::BadParams { .. })));
        assert!(matches!(catalog_link("torus2", &[0]), Err(LinkError::BadParams { .. })));
    }
}
