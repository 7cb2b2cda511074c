//! Dense matrices of exact rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> BigRational,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RationalMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from row vectors, which must all have the same length.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::BadInput("ragged matrix rows".into()));
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer matrix from row slices. Panics on ragged input.
    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        assert!(rows.iter().all(|r| r.as_ref().len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| {
            BigRational::from_integer(BigInt::from(rows[i].as_ref()[j]))
        })
    }

    pub fn diagonal_from<I>(diag: I) -> Self
    where
        I: IntoIterator<Item = BigRational>,
    {
        let diag: Vec<BigRational> = diag.into_iter().collect();
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in diag.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(BigRational::is_integer)
    }

    pub fn diagonal(&self) -> Vec<BigRational> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn trace(&self) -> BigRational {
        self.diagonal()
            .into_iter()
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    /// `self · other - other · self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Kronecker product, indexed so that `(i, j)` pairs run row-major.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (other.rows, other.cols);
        Self::from_fn(self.rows * r, self.cols * c, |i, j| {
            self.get(i / r, j / c) * other.get(i % r, j % c)
        })
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn block_diag(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Reduced row echelon form and the pivot columns.
    fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, col).recip();
            for j in 0..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, col).is_zero() {
                    let factor = m.get(i, col).clone();
                    for j in 0..m.cols {
                        let x = m.get(i, j) - &factor * m.get(r, j);
                        m.set(i, j, x);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Basis of the right kernel `{x : self · x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![BigRational::zero(); self.cols];
                x[f] = BigRational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    x[p] = -m.get(r, f).clone();
                }
                x
            })
            .collect()
    }

    pub fn determinant(&self) -> BigRational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = BigRational::one();
        for col in 0..m.cols {
            let Some(p) = (col..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                return BigRational::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for i in col + 1..m.rows {
                if !m.get(i, col).is_zero() {
                    let factor = m.get(i, col) / &pivot;
                    for j in col..m.cols {
                        let x = m.get(i, j) - &factor * m.get(col, j);
                        m.set(i, j, x);
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let augmented = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        });
        let (r, pivots) = augmented.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// `p · self · p⁻¹`, or `None` if `p` is singular.
    pub fn conjugate_by(&self, p: &Self) -> Option<Self> {
        let inv = p.inverse()?;
        Some(&(p * self) * &inv)
    }

    /// Least common multiple of all entry denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.entries
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }
}

impl<'a> Mul<&'a RationalMatrix> for &'a RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let x = out.get(i, j) + a * b;
                        out.set(i, j, x);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a RationalMatrix> for &'a RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a RationalMatrix> for &'a RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;

    fn neg(self) -> RationalMatrix {
        self.scale(&-BigRational::one())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn products_and_kron() {
        let a = RationalMatrix::from_integers(&[[1, 2], [3, 4]]);
        let b = RationalMatrix::from_integers(&[[0, 1], [1, 0]]);
        assert_eq!(&a * &b, RationalMatrix::from_integers(&[[2, 1], [4, 3]]));
        assert_eq!(a.commutator(&a), RationalMatrix::zeros(2, 2));
        let k = RationalMatrix::identity(2).kron(&b);
        assert_eq!(
            k,
            RationalMatrix::from_integers(&[
                [0, 1, 0, 0],
                [1, 0, 0, 0],
                [0, 0, 0, 1],
                [0, 0, 1, 0]
            ])
        );
        assert_eq!(a.block_diag(&RationalMatrix::identity(1)).rows(), 3);
    }

    #[test]
    fn determinant_inverse_kernel() {
        let a = RationalMatrix::from_integers(&[[2, 1, 0], [1, 3, 1], [0, 1, 4]]);
        assert_eq!(a.determinant(), q(18, 1));
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, RationalMatrix::identity(3));
        let singular = RationalMatrix::from_integers(&[[1, 2], [2, 4]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.determinant(), q(0, 1));
        assert_eq!(singular.kernel(), vec![vec![q(-2, 1), q(1, 1)]]);
        assert!(a.kernel().is_empty());
        let swap = RationalMatrix::from_integers(&[[0, 1], [1, 0]]);
        assert_eq!(swap.determinant(), q(-1, 1));
    }

    #[test]
    fn conjugation_and_denominators() {
        let h = RationalMatrix::from_integers(&[[1, 0], [0, -1]]);
        let p = RationalMatrix::from_integers(&[[1, 1], [1, -1]]);
        let c = h.conjugate_by(&p).unwrap();
        assert_eq!(c, RationalMatrix::from_integers(&[[0, 1], [1, 0]]));
        let half = RationalMatrix::from_rows(vec![vec![q(1, 2), q(1, 3)]]).unwrap();
        assert_eq!(half.denominator_lcm(), BigInt::from(6));
        assert!(RationalMatrix::from_rows(vec![vec![q(1, 1)], vec![]]).is_err());
    }
}
