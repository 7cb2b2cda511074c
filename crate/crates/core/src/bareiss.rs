//! Fraction-free (Bareiss) determinants over integral domains with exact
//! division, applied block by block.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::MultiPoly;

pub(crate) trait ExactDomain: Clone + Zero + One {
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `self / rhs`, where the caller guarantees divisibility.
    fn div_exact(&self, rhs: &Self) -> Self;
    fn is_one_fast(&self) -> bool;
}

impl ExactDomain for BigInt {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn div_exact(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        debug_assert!(r.is_zero(), "inexact Bareiss division");
        q
    }

    fn is_one_fast(&self) -> bool {
        self.is_one()
    }
}

impl ExactDomain for MultiPoly {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn div_exact(&self, rhs: &Self) -> Self {
        self.exact_divide(rhs)
            .expect("Bareiss pivots divide the updated entries exactly")
    }

    fn is_one_fast(&self) -> bool {
        self.is_one()
    }
}

/// Bareiss elimination with row pivoting. Zero entries are skipped, which
/// keeps banded matrices (such as irreducible pencils) cheap.
pub(crate) fn determinant<R: ExactDomain>(mut a: Vec<Vec<R>>) -> R {
    let n = a.len();
    if n == 0 {
        return R::one();
    }
    let mut prev = R::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = core::mem::replace(&mut row[k], R::zero());
            for j in k + 1..n {
                let updated = match (lead.is_zero(), row[j].is_zero()) {
                    (true, true) => continue,
                    (true, false) => pivot.mul_ref(&row[j]),
                    (false, true) => {
                        if pivot_row[j].is_zero() {
                            continue;
                        }
                        lead.mul_ref(&pivot_row[j]).neg_ref()
                    }
                    (false, false) => pivot.mul_ref(&row[j]).sub_ref(&lead.mul_ref(&pivot_row[j])),
                };
                row[j] = if prev.is_one_fast() {
                    updated
                } else {
                    updated.div_exact(&prev)
                };
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        det.neg_ref()
    } else {
        det
    }
}

/// Index sets of the connected components of the graph with an edge `i - j`
/// whenever entry `(i, j)` or `(j, i)` may be nonzero. A simultaneous row and
/// column permutation brings the matrix to block-diagonal form, so the
/// determinant is the product of the block determinants.
pub(crate) fn components<F>(n: usize, nonzero: F) -> Vec<Vec<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    let mut label = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![start];
        label[start] = id;
        let mut cursor = 0;
        while cursor < members.len() {
            let i = members[cursor];
            cursor += 1;
            for j in 0..n {
                if label[j] == usize::MAX && (nonzero(i, j) || nonzero(j, i)) {
                    label[j] = id;
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Determinant of `entry(i, j)`, split along the sparsity components.
pub(crate) fn blockwise_determinant<R, F>(n: usize, entry: F) -> R
where
    R: ExactDomain,
    F: Fn(usize, usize) -> R,
{
    let blocks = components(n, |i, j| !entry(i, j).is_zero());
    let mut det = R::one();
    for block in blocks {
        let sub: Vec<Vec<R>> = block
            .iter()
            .map(|&i| block.iter().map(|&j| entry(i, j)).collect())
            .collect();
        det = det.mul_ref(&determinant(sub));
        if det.is_zero() {
            break;
        }
    }
    det
}
