//! sl(n, C) in its canonical basis, its adjoint action, and the restriction
//! of the adjoint representation to the sl(2, C)-triple
//! `(h_i, e_{i,i+1}, e_{i+1,i})` of a simple root.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::charpoly::charpoly_of_rep;
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::poly::CanonicalCP;
use crate::rep::RepTriple;

/// Ordered basis `h_1, ..., h_{n-1}` (`h_i = e_ii - e_{i+1,i+1}`), followed by
/// the `e_ij`, `i ≠ j`, in lexicographic order. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlnBasis {
    n: usize,
}

impl SlnBasis {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadInput(alloc::format!(
                "sl(n) needs n >= 2, got {}",
                n
            )));
        }
        Ok(SlnBasis { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n² - 1`.
    pub fn len(&self) -> usize {
        self.n * self.n - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn unit(&self, i: usize, j: usize) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.n, self.n);
        m.set(i - 1, j - 1, BigRational::one());
        m
    }

    /// `h_i = e_ii - e_{i+1,i+1}`.
    pub fn h(&self, i: usize) -> RationalMatrix {
        &self.unit(i, i) - &self.unit(i + 1, i + 1)
    }

    /// `e_ij`.
    pub fn e(&self, i: usize, j: usize) -> RationalMatrix {
        self.unit(i, j)
    }

    /// Position of `e_ij` in the ordered basis.
    pub fn root_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i != j);
        let off = (i - 1) * (self.n - 1) + (j - 1) - usize::from(j > i);
        (self.n - 1) + off
    }

    /// Basis elements, in order.
    pub fn elements(&self) -> Vec<RationalMatrix> {
        let mut out: Vec<RationalMatrix> = (1..self.n).map(|i| self.h(i)).collect();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i != j {
                    out.push(self.e(i, j));
                }
            }
        }
        out
    }

    /// Coordinates of a trace-zero `n × n` matrix in the ordered basis.
    pub fn coordinates(&self, x: &RationalMatrix) -> Result<Vec<BigRational>> {
        if x.rows() != self.n || x.cols() != self.n {
            return Err(Error::NotInAlgebra(alloc::format!(
                "{}x{} matrix in sl({})",
                x.rows(),
                x.cols(),
                self.n
            )));
        }
        if !x.trace().is_zero() {
            return Err(Error::NotInAlgebra(alloc::format!("trace {}", x.trace())));
        }
        let mut coords = Vec::with_capacity(self.len());
        // diag(x) = Σ c_k h_k gives c_k = x_11 + ... + x_kk
        let mut running = BigRational::zero();
        for k in 1..self.n {
            running += x.get(k - 1, k - 1);
            coords.push(running.clone());
        }
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i != j {
                    coords.push(x.get(i - 1, j - 1).clone());
                }
            }
        }
        Ok(coords)
    }
}

/// Matrix of `Y ↦ XY - YX` in the ordered basis; column `k` holds the
/// coordinates of `[X, Y_k]`.
pub fn ad_matrix(basis: &SlnBasis, x: &RationalMatrix) -> Result<RationalMatrix> {
    basis.coordinates(x)?;
    let columns: Vec<Vec<BigRational>> = basis
        .elements()
        .iter()
        .map(|y| basis.coordinates(&x.commutator(y)))
        .collect::<Result<_>>()?;
    let size = basis.len();
    Ok(RationalMatrix::from_fn(size, size, |r, c| {
        columns[c][r].clone()
    }))
}

/// `(ad h_i, ad e_{i,i+1}, ad e_{i+1,i})` on sl(n), of dimension `n² - 1`.
pub fn ad_restriction_rep(n: usize, i: usize) -> Result<RepTriple> {
    let basis = SlnBasis::new(n)?;
    if i < 1 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: n - 1,
        });
    }
    RepTriple::from_matrices(
        ad_matrix(&basis, &basis.h(i))?,
        ad_matrix(&basis, &basis.e(i, i + 1))?,
        ad_matrix(&basis, &basis.e(i + 1, i))?,
    )
}

/// Characteristic polynomial of [`ad_restriction_rep`].
pub fn adjoint_charpoly(n: usize, i: usize) -> Result<CanonicalCP> {
    charpoly_of_rep(&ad_restriction_rep(n, i)?)
}

/// Whether every simple root gives the same characteristic polynomial.
pub fn simple_root_equivalence(n: usize) -> Result<bool> {
    let first = adjoint_charpoly(n, 1)?;
    for i in 2..n {
        if adjoint_charpoly(n, i)? != first {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Comparison of the computed `z0` exponent with the closed-form value
/// `n² - 5n + 6` that is often quoted for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointReport {
    pub n: usize,
    pub quoted_z0_exponent: i64,
    pub computed_z0_exponent: u64,
    pub matches: bool,
}

/// `n² - 5n + 6`.
pub fn quoted_z0_exponent(n: usize) -> i64 {
    let n = n as i64;
    n * n - 5 * n + 6
}

pub fn adjoint_report(n: usize) -> Result<AdjointReport> {
    let cp = adjoint_charpoly(n, 1)?;
    let quoted = quoted_z0_exponent(n);
    let computed = cp.d0();
    Ok(AdjointReport {
        n,
        quoted_z0_exponent: quoted,
        computed_z0_exponent: computed,
        matches: quoted == computed as i64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }
    use crate::rep::h_weights;
    use crate::weights::WeightVector;

    fn wv(pairs: &[(u64, u64)]) -> WeightVector {
        WeightVector::from_multiplicities(pairs.iter().copied())
    }

    #[test]
    fn basis_layout() {
        let b = SlnBasis::new(3).unwrap();
        let els = b.elements();
        assert_eq!(els.len(), 8);
        for (k, x) in els.iter().enumerate() {
            assert!(x.trace().is_zero());
            let coords = b.coordinates(x).unwrap();
            for (j, c) in coords.iter().enumerate() {
                assert_eq!(c.is_one(), j == k);
                assert!(j == k || c.is_zero());
            }
        }
        assert_eq!(els[b.root_index(2, 1)], b.e(2, 1));
        assert_eq!(els[b.root_index(3, 2)], b.e(3, 2));
        assert!(SlnBasis::new(1).is_err());
    }

    #[test]
    fn ad_matrix_examples() {
        let b = SlnBasis::new(2).unwrap();
        let ad = ad_matrix(&b, &b.h(1)).unwrap();
        assert!(ad.is_diagonal());
        assert_eq!(ad.diagonal(), vec![int(0), int(2), int(-2)]);

        let b = SlnBasis::new(3).unwrap();
        let ad = ad_matrix(&b, &b.h(1)).unwrap();
        assert!(ad.is_diagonal());
        // h1, h2, e12, e13, e21, e23, e31, e32
        let expected: Vec<BigRational> = [0, 0, 2, 1, -2, -1, -1, 1].into_iter().map(int).collect();
        assert_eq!(ad.diagonal(), expected);

        // ad X kills X
        let x = &(&b.h(2).scale(&int(3)) + &b.e(1, 3)) - &b.e(3, 2).scale(&int(5));
        let ad = ad_matrix(&b, &x).unwrap();
        let coords = b.coordinates(&x).unwrap();
        for r in 0..b.len() {
            let s = (0..b.len()).fold(BigRational::zero(), |acc, c| {
                acc + ad.get(r, c) * &coords[c]
            });
            assert!(s.is_zero());
        }

        assert_eq!(
            ad_matrix(&b, &RationalMatrix::identity(3))
                .unwrap_err()
                .kind(),
            crate::ErrorKind::NotInAlgebra
        );
        assert_eq!(
            ad_matrix(&b, &RationalMatrix::zeros(2, 2))
                .unwrap_err()
                .kind(),
            crate::ErrorKind::NotInAlgebra
        );
    }

    // Weight of e_ij under ad h_i directly from the diagonal of h_i.
    fn root_count_weights(n: usize, i: usize) -> WeightVector {
        let b = SlnBasis::new(n).unwrap();
        let h = b.h(i);
        let mut spectrum = vec![0i64; n - 1];
        for a in 0..n {
            for c in 0..n {
                if a != c {
                    let w = h.get(a, a) - h.get(c, c);
                    spectrum.push(w.to_integer().try_into().unwrap());
                }
            }
        }
        WeightVector::from_spectrum(spectrum).unwrap()
    }

    #[test]
    fn restrictions_are_representations() {
        for n in 2..=6 {
            for i in 1..n {
                let t = ad_restriction_rep(n, i).unwrap();
                assert_eq!(t.dim(), n * n - 1);
                assert!(t.check_brackets(), "n = {}, i = {}", n, i);
                let w = h_weights(&t).unwrap();
                assert_eq!(w, root_count_weights(n, i));
                let n = n as u64;
                let expected = if n == 2 {
                    wv(&[(0, 1), (2, 1)])
                } else {
                    wv(&[(0, (n - 1) + (n - 2) * (n - 3)), (1, 2 * n - 4), (2, 1)])
                };
                assert_eq!(w, expected);
                assert_eq!(w.get(0), (n * n - 1) - 2 - 2 * (2 * n - 4));
            }
        }
    }

    #[test]
    fn adjoint_charpoly_examples() {
        assert_eq!(
            adjoint_charpoly(2, 1).unwrap(),
            CanonicalCP::from_pairs(1, [(2, 1)])
        );
        assert_eq!(
            adjoint_charpoly(3, 1).unwrap(),
            CanonicalCP::from_pairs(2, [(1, 2), (2, 1)])
        );
        assert_eq!(
            adjoint_charpoly(3, 2).unwrap(),
            adjoint_charpoly(3, 1).unwrap()
        );
        assert_eq!(
            adjoint_charpoly(4, 1).unwrap(),
            CanonicalCP::from_pairs(5, [(1, 4), (2, 1)])
        );
        for n in 2..=6 {
            assert!(simple_root_equivalence(n).unwrap());
            assert_eq!(adjoint_charpoly(n, 1).unwrap().degree(), (n * n - 1) as u64);
        }
        assert_eq!(
            ad_restriction_rep(3, 3),
            Err(Error::IndexOutOfRange { index: 3, bound: 2 })
        );
        assert!(ad_restriction_rep(3, 0).is_err());
    }

    #[test]
    fn quoted_exponent_disagrees_with_dimension_count() {
        for n in 2..=6 {
            let r = adjoint_report(n).unwrap();
            assert!(!r.matches);
            assert_eq!(
                r.computed_z0_exponent as i64 - r.quoted_z0_exponent,
                n as i64 - 1
            );
        }
    }
}
