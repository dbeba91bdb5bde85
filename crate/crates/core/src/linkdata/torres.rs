use crate::laurent::{monomial_difference, ExponentVector, LaurentPoly, PolyError};

use super::{LinkDescriptor, LinkError};

/// Recovers the Alexander polynomial of the sublink obtained by deleting
/// component `drop` (0-based) from the full polynomial.
///
/// The variable of the deleted component is specialised by `t^{1/2} = 1`,
/// which agrees with `t = 1` whenever that substitution is defined.
pub fn torres_sublink(link: &LinkDescriptor, drop: usize) -> Result<LaurentPoly, LinkError> {
    let n = link.n();
    if n < 2 {
        return Err(LinkError::BadParams {
            name: "torres".to_string(),
            reason: "needs at least two components".to_string(),
        });
    }
    if drop >= n {
        return Err(PolyError::VariableOutOfRange { index: drop, nvars: n }.into());
    }
    let at_one = link.full_alexander().evaluate_at_one_principal(drop);
    let rest: Vec<usize> = (0..n).filter(|&i| i != drop).collect();

    if n == 2 {
        let lk = link.lk(rest[0], drop);
        if lk == 0 {
            return Err(LinkError::TorresDegenerate);
        }
        let unit = monomial_difference(&ExponentVector::from_doubled(vec![1]));
        let factor = monomial_difference(&ExponentVector::from_doubled(vec![lk]));
        return Ok((&at_one * &unit).exact_divide(&factor)?);
    }

    let half = ExponentVector::from_doubled(rest.iter().map(|&i| link.lk(i, drop)).collect());
    let factor = monomial_difference(&half);
    if factor.is_zero() {
        return if at_one.is_zero() {
            Err(LinkError::TorresDegenerateConsistent)
        } else {
            Err(PolyError::NonDivisible(
                "the Torres factor vanishes but the specialised polynomial does not".to_string(),
            )
            .into())
        };
    }
    Ok(at_one.exact_divide(&factor)?)
}
