use std::collections::BTreeMap;

use num_integer::Integer;

use crate::laurent::{monomial_difference, ExponentVector, LaurentPoly};

use super::{ComponentSet, LinkDescriptor, LinkError};

/// Alexander polynomial of the `(p,q)` torus knot, `p, q` coprime.
pub fn torus_knot_alexander(p: i64, q: i64) -> Result<LaurentPoly, LinkError> {
    let bin = |d: i64| monomial_difference(&ExponentVector::from_doubled(vec![d]));
    let num = &bin(p * q) * &bin(1);
    let den = &bin(p) * &bin(q);
    Ok(num.exact_divide(&den)?)
}

/// `Σ_{k=0}^{p-1} T^{(p-1)/2 - k}`, which equals `(T^{p/2}-T^{-p/2})/(T^{1/2}-T^{-1/2})`.
fn cable_factor(t_exponent: &ExponentVector, p: i64) -> LaurentPoly {
    let n = t_exponent.nvars();
    LaurentPoly::from_terms(
        n,
        (0..p).map(|k| {
            let s = p - 1 - 2 * k;
            let e: Vec<i64> = t_exponent.doubled().iter().map(|x| x * s / 2).collect();
            (ExponentVector::from_doubled(e), 1)
        }),
    )
}

/// The link obtained by replacing component 1 with its `(p,q)` cable.
///
/// Sublinks containing component 1 get Turaev's formula with
/// `T = t_1^q ∏ t_j^{lk(L_1,L_j)}`; the cabled knot itself gets
/// `Δ_K(t^p) Δ_{T(p,q)}(t)`. The genus of the cable is
/// `(p-1)(|q|-1)/2 + p g_1`.
pub fn cable_alexander(link: &LinkDescriptor, p: i64, q: i64) -> Result<LinkDescriptor, LinkError> {
    let bad = |reason: &str| LinkError::BadCable {
        p,
        q,
        reason: reason.to_string(),
    };
    if p <= 0 {
        return Err(bad("p must be positive"));
    }
    if q == 0 {
        return Err(bad("q must be nonzero"));
    }
    if p.gcd(&q) != 1 {
        return Err(bad("p and q must be coprime"));
    }
    let n = link.n();
    let mut alexander = BTreeMap::new();
    for (set, poly) in link.alexander_map() {
        if !set.contains(0) {
            alexander.insert(*set, poly.clone());
            continue;
        }
        let stretched = poly.substitute_power(0, p);
        let new = if set.len() == 1 {
            &stretched * &torus_knot_alexander(p, q)?
        } else {
            let idx = set.indices();
            let t_exp: Vec<i64> = idx
                .iter()
                .map(|&j| if j == 0 { 2 * q } else { 2 * link.lk(0, j) })
                .collect();
            &stretched * &cable_factor(&ExponentVector::from_doubled(t_exp), p)
        };
        alexander.insert(*set, new);
    }
    let mut linking = link.linking().to_vec();
    for row in linking.iter_mut() {
        row[0] *= p;
    }
    for x in linking[0].iter_mut() {
        *x *= p;
    }
    let mut genus = link.genus().to_vec();
    genus[0] = (p - 1) * (q.abs() - 1) / 2 + p * genus[0];
    let mut names = link.component_names().to_vec();
    names[0] = format!("{}_({},{})", names[0], p, q);
    debug_assert!(alexander.contains_key(&ComponentSet::full(n)));
    LinkDescriptor::new(format!("{}_cable_{}_{}", link.name(), p, q), names, linking, genus, alexander)
}
