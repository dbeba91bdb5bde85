use num_bigint::BigInt;

use crate::linkdata::{ComponentSet, LinkDescriptor};

use super::{HError, HFunction};

/// First lattice point of the probe box with a negative H-value, if any.
fn first_negative(link: &LinkDescriptor) -> Result<Option<String>, HError> {
    let hf = HFunction::new(link)?;
    for v in link.probe_box().points(hf.ell()) {
        let h = hf.h(&v)?;
        if h < 0 {
            return Ok(Some(format!("H{} = {}", v, h)));
        }
    }
    Ok(None)
}

/// Fixes the overall sign of the top Alexander polynomial.
///
/// The sign is flipped (and a note recorded) exactly when the stored sign
/// produces a negative H-value on the probe box and the flipped sign does
/// not. A knot is flipped when `Δ(1) = -1`.
pub fn normalize_sign(link: &LinkDescriptor) -> Result<LinkDescriptor, HError> {
    let full = ComponentSet::full(link.n());
    let delta = link.full_alexander().clone();
    let mut flipped = link.clone();
    flipped.set_alexander(full, -&delta);
    flipped.add_note("flipped the sign of the Alexander polynomial of the whole link");
    if link.n() == 1 {
        return Ok(if delta.coefficient_sum() == -BigInt::from(1) {
            flipped
        } else {
            link.clone()
        });
    }
    if delta.is_zero() {
        return Ok(link.clone());
    }
    let stored = first_negative(link)?;
    let other = first_negative(&flipped)?;
    match (stored, other) {
        (None, _) => Ok(link.clone()),
        (Some(_), None) => Ok(flipped),
        (Some(a), Some(b)) => Err(HError::AmbiguousSign(format!(
            "{}: negative H with either sign ({}; flipped: {})",
            link.name(),
            a,
            b
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use crate::linkdata::catalog_link;

    #[test]
    fn b85_snappy_is_flipped() {
        let snappy = catalog_link("b85_snappy", &[]).unwrap();
        let fixed = normalize_sign(&snappy).unwrap();
        assert!(fixed.same_data(&catalog_link("b85", &[]).unwrap()));
        assert!(!fixed.notes().is_empty());
    }

    #[test]
    fn whitehead_unchanged() {
        let w = catalog_link("whitehead", &[]).unwrap();
        assert!(normalize_sign(&w).unwrap().same_data(&w));
    }

    #[test]
    fn zero_polynomial_unchanged() {
        let u = catalog_link("unlink", &[2]).unwrap();
        assert!(normalize_sign(&u).unwrap().same_data(&u));
    }

    #[test]
    fn knot_with_negative_value_at_one() {
        let mut a = std::collections::BTreeMap::new();
        a.insert(ComponentSet::full(1), LaurentPoly::parse("t - 3 + t^{-1}", 1).unwrap());
        let k = LinkDescriptor::new_unchecked("fig8", vec!["K".into()], vec![vec![0]], vec![1], a);
        let fixed = normalize_sign(&k).unwrap();
        assert_eq!(
            fixed.full_alexander(),
            &LaurentPoly::parse("-t + 3 - t^{-1}", 1).unwrap()
        );
    }
}
