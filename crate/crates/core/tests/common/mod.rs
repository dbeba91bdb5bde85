#![allow(dead_code)]

use std::sync::Arc;

use lspace::hfunc::{HFunction, HTable, JView};
use lspace::laurent::LatticeBox;
use lspace::linkdata::{catalog_link, LinkDescriptor};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn link(name: &str, params: &[i64]) -> LinkDescriptor {
    catalog_link(name, params).unwrap_or_else(|e| panic!("{} {:?}: {}", name, params, e))
}

pub fn hfunc(name: &str, params: &[i64]) -> HFunction {
    HFunction::new(&link(name, params)).unwrap()
}

/// J-view of `l` covering the integer box `mbox`.
pub fn jview(l: &LinkDescriptor, mbox: &LatticeBox) -> JView {
    let hf = Arc::new(HFunction::new(l).unwrap());
    let lattice = LatticeBox::new(&mbox.lo + hf.ell(), &mbox.hi + hf.ell());
    JView::new(Arc::new(HTable::new(hf, lattice).unwrap()))
}

/// H of the unknot: `max(-v, 0)`.
pub fn unknot_h(v: i64) -> i64 {
    (-v).max(0)
}

/// Power series with integer coefficients, truncated at `len` terms.
pub fn series(terms: &[(usize, i64)], len: usize) -> Vec<BigInt> {
    let mut s = vec![BigInt::zero(); len];
    for &(k, c) in terms {
        if k < len {
            s[k] += c;
        }
    }
    s
}

pub fn series_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let len = a.len();
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().take(len - i).enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Rank over Q by plain Gaussian elimination.
pub fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][c].clone();
        for i in rank + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone() * &inv;
            let (top, rest) = m.split_at_mut(i);
            for (x, p) in rest[0][c..].iter_mut().zip(&top[rank][c..]) {
                *x -= p.clone() * &f;
            }
        }
        rank += 1;
    }
    rank
}

/// Sparse integer series as (exponent, coefficient) pairs.
pub type Terms<'a> = &'a [(usize, i64)];

pub type Branch<'a> = (Terms<'a>, Terms<'a>);

/// `R(v)` of the germ with branches `(x_i(t), y_i(t))`: rank of the jets of
/// all monomials `x^a y^b` with `a + b <= cap`, truncated below `v_i` on
/// branch `i`.
pub fn germ_r(branches: &[Branch], v: &[usize], cap: usize) -> usize {
    let mut per_branch: Vec<Vec<Vec<BigInt>>> = Vec::new();
    for (&(x, y), &vi) in branches.iter().zip(v) {
        let xs = series(x, vi);
        let ys = series(y, vi);
        let mut rows = Vec::new();
        let mut xa = series(&[(0, 1)], vi);
        for a in 0..=cap {
            let mut m = xa.clone();
            for _ in 0..=cap - a {
                rows.push(m.clone());
                m = series_mul(&m, &ys);
            }
            xa = series_mul(&xa, &xs);
        }
        per_branch.push(rows);
    }
    let count = per_branch.first().map_or(0, |r| r.len());
    let rows: Vec<Vec<BigInt>> = (0..count)
        .map(|k| per_branch.iter().flat_map(|b| b[k].iter().cloned()).collect::<Vec<_>>())
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .collect();
    rational_rank(&rows)
}

/// `R(v)` of a single branch.
pub fn branch_r(x: &[(usize, i64)], y: &[(usize, i64)], v: usize, cap: usize) -> usize {
    germ_r(&[(x, y)], &[v], cap)
}
