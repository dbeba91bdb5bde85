use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{LinkDescriptor, LinkError};

/// Framing vector `m = 2D + 2` and the positivity of its framing matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryBound {
    pub m: Vec<i64>,
    pub matrix: Vec<Vec<i64>>,
    pub positive_definite: bool,
}

/// `Λ(m)`: linking numbers off the diagonal and `m` on it.
pub fn framing_matrix(linking: &[Vec<i64>], m: &[i64]) -> Vec<Vec<i64>> {
    let mut out = linking.to_vec();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = m[i];
    }
    out
}

/// Sylvester's criterion, with every leading principal minor computed
/// exactly by fraction-free (Bareiss) elimination.
pub fn is_positive_definite(matrix: &[Vec<i64>]) -> bool {
    let n = matrix.len();
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::from(1);
    for k in 0..n {
        // After k elimination steps a[k][k] is the (k+1)-th leading minor.
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    true
}

pub fn surgery_bound(link: &LinkDescriptor) -> Result<SurgeryBound, LinkError> {
    let n = link.n();
    if n < 2 {
        return Err(LinkError::HypothesisUnmet("needs at least two components".to_string()));
    }
    for i in 0..n {
        for j in i + 1..n {
            if link.lk(i, j) == 0 {
                return Err(LinkError::HypothesisUnmet(format!(
                    "lk(L{}, L{}) = 0",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let d = link
        .degree_vector()
        .ok_or_else(|| LinkError::HypothesisUnmet("the Alexander polynomial is zero".to_string()))?;
    let m: Vec<i64> = d.doubled().iter().map(|x| x + 2).collect();
    let matrix = framing_matrix(link.linking(), &m);
    let positive_definite = is_positive_definite(&matrix);
    Ok(SurgeryBound {
        m,
        matrix,
        positive_definite,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdata::catalog_link;

    #[test]
    fn torus_links() {
        for q in [3, 5] {
            let l = catalog_link("torus2", &[q]).unwrap();
            let b = surgery_bound(&l).unwrap();
            assert_eq!(b.m, vec![q + 1, q + 1]);
            assert!(b.positive_definite);
        }
    }

    #[test]
    fn whitehead_hypothesis() {
        let w = catalog_link("whitehead", &[]).unwrap();
        assert!(matches!(surgery_bound(&w), Err(LinkError::HypothesisUnmet(_))));
    }

    #[test]
    fn small_matrices() {
        assert!(!is_positive_definite(&[vec![1, 5], vec![5, 1]]));
        assert!(is_positive_definite(&[vec![2, 1], vec![1, 2]]));
        assert!(!is_positive_definite(&[vec![0, 0], vec![0, 1]]));
        assert!(is_positive_definite(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]));
        assert!(!is_positive_definite(&[vec![1, 1, 1], vec![1, 1, 1], vec![1, 1, 1]]));
    }

    fn grid_check(m: &[Vec<i64>]) -> bool {
        let n = m.len();
        let mut x = vec![-3i64; n];
        loop {
            if x.iter().any(|&c| c != 0) {
                let q: i64 = (0..n).map(|i| (0..n).map(|j| x[i] * m[i][j] * x[j]).sum::<i64>()).sum();
                if q <= 0 {
                    return false;
                }
            }
            let mut k = 0;
            while k < n && x[k] == 3 {
                x[k] = -3;
                k += 1;
            }
            if k == n {
                return true;
            }
            x[k] += 1;
        }
    }

    #[test]
    fn sylvester_agrees_with_grid_on_small_matrices() {
        let mut count = 0;
        for a in -2..=3 {
            for b in -3..=3 {
                for c in -2..=3 {
                    let m = vec![vec![a, b], vec![b, c]];
                    let pd = is_positive_definite(&m);
                    assert_eq!(pd, grid_check(&m), "{:?}", m);
                    count += pd as usize;
                }
            }
        }
        assert!(count > 0);
    }
}
