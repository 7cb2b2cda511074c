//! Matrix realizations `(φ(h), φ(e1), φ(e2))` of sl(2, C) representations.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::ops::Deref;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::weights::WeightVector;

/// Three square matrices of equal size standing for the images of `h`, `e1`
/// and `e2`. Nothing beyond the shapes is assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixTriple {
    pub h: RationalMatrix,
    pub e: RationalMatrix,
    pub f: RationalMatrix,
}

impl MatrixTriple {
    pub fn new(h: RationalMatrix, e: RationalMatrix, f: RationalMatrix) -> Result<Self> {
        let n = h.rows();
        for (name, m) in [("H", &h), ("E", &e), ("F", &f)] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::BadInput(alloc::format!(
                    "{} is {}x{}, expected {}x{}",
                    name,
                    m.rows(),
                    m.cols(),
                    n,
                    n
                )));
            }
        }
        Ok(MatrixTriple { h, e, f })
    }

    /// The canonical basis of sl(2, C) itself.
    pub fn standard() -> Self {
        MatrixTriple {
            h: RationalMatrix::from_integers(&[[1, 0], [0, -1]]),
            e: RationalMatrix::from_integers(&[[0, 1], [0, 0]]),
            f: RationalMatrix::from_integers(&[[0, 0], [1, 0]]),
        }
    }

    pub fn dim(&self) -> usize {
        self.h.rows()
    }

    /// `[E, F] = H`, `[H, E] = 2E` and `[H, F] = -2F`, exactly.
    pub fn check_brackets(&self) -> bool {
        let two = BigRational::from_integer(BigInt::from(2));
        self.e.commutator(&self.f) == self.h
            && self.h.commutator(&self.e) == self.e.scale(&two)
            && self.h.commutator(&self.f) == self.f.scale(&-two)
    }

    /// Applies `X ↦ P X P⁻¹` to all three matrices.
    pub fn conjugate_by(&self, p: &RationalMatrix) -> Option<Self> {
        Some(MatrixTriple {
            h: self.h.conjugate_by(p)?,
            e: self.e.conjugate_by(p)?,
            f: self.f.conjugate_by(p)?,
        })
    }
}

/// A [`MatrixTriple`] whose `H` is diagonal with integer entries. Every
/// constructor in this crate produces one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepTriple(MatrixTriple);

impl RepTriple {
    pub fn new(triple: MatrixTriple) -> Result<Self> {
        if !triple.h.is_diagonal() || !triple.h.is_integral() {
            return Err(Error::BadInput(
                "H must be diagonal with integer entries".to_string(),
            ));
        }
        Ok(RepTriple(triple))
    }

    pub fn from_matrices(h: RationalMatrix, e: RationalMatrix, f: RationalMatrix) -> Result<Self> {
        Self::new(MatrixTriple::new(h, e, f)?)
    }

    pub fn as_triple(&self) -> &MatrixTriple {
        &self.0
    }

    pub fn into_triple(self) -> MatrixTriple {
        self.0
    }

    /// Diagonal of `H` as integers.
    pub fn h_diagonal(&self) -> Vec<i64> {
        self.0
            .h
            .diagonal()
            .iter()
            .map(|x| x.to_integer().to_i64().expect("weights fit in i64"))
            .collect()
    }
}

impl Deref for RepTriple {
    type Target = MatrixTriple;

    fn deref(&self) -> &MatrixTriple {
        &self.0
    }
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// The irreducible representation of highest weight `m` on `v_0..v_m`, with
/// `H v_i = (m - 2i) v_i`, `E v_i = (m - i + 1) v_{i-1}` and
/// `F v_i = (i + 1) v_{i+1}`.
pub fn irrep_matrices(m: u64) -> RepTriple {
    let n = m as usize + 1;
    let m = m as i64;
    let h = RationalMatrix::diagonal_from((0..n as i64).map(|i| int(m - 2 * i)));
    let mut e = RationalMatrix::zeros(n, n);
    let mut f = RationalMatrix::zeros(n, n);
    for i in 1..n {
        e.set(i - 1, i, int(m - i as i64 + 1));
        f.set(i, i - 1, int(i as i64));
    }
    RepTriple(MatrixTriple { h, e, f })
}

/// Block-diagonal sum.
pub fn direct_sum(a: &RepTriple, b: &RepTriple) -> RepTriple {
    RepTriple(MatrixTriple {
        h: a.h.block_diag(&b.h),
        e: a.e.block_diag(&b.e),
        f: a.f.block_diag(&b.f),
    })
}

/// `X ↦ X_a ⊗ I + I ⊗ X_b` for each generator.
pub fn tensor(a: &RepTriple, b: &RepTriple) -> RepTriple {
    let ia = RationalMatrix::identity(a.dim());
    let ib = RationalMatrix::identity(b.dim());
    let act = |x: &RationalMatrix, y: &RationalMatrix| &x.kron(&ib) + &ia.kron(y);
    RepTriple(MatrixTriple {
        h: act(&a.h, &b.h),
        e: act(&a.e, &b.e),
        f: act(&a.f, &b.f),
    })
}

pub fn check_brackets(t: &MatrixTriple) -> bool {
    t.check_brackets()
}

/// Weight multiplicities read off the diagonal of `H`.
pub fn h_weights(t: &RepTriple) -> Result<WeightVector> {
    WeightVector::from_spectrum(t.h_diagonal())
}

/// For `hp` with trace 0 and determinant -1, an invertible `A` with
/// `A h A⁻¹ = hp`, together with the conjugated triple `(hp, A e1 A⁻¹, A e2 A⁻¹)`.
///
/// The columns of `A` are eigenvectors of `hp` for `+1` and `-1`, each scaled
/// so that its first nonzero coordinate is `1`.
pub fn conjugate_basis(hp: &RationalMatrix) -> Result<(RationalMatrix, MatrixTriple)> {
    if hp.rows() != 2 || hp.cols() != 2 {
        return Err(Error::BadInput("expected a 2x2 matrix".to_string()));
    }
    if !hp.trace().is_zero() {
        return Err(Error::BadInput(alloc::format!(
            "trace is {}, expected 0",
            hp.trace()
        )));
    }
    let det = hp.determinant();
    if det != -BigRational::one() {
        return Err(Error::BadInput(alloc::format!(
            "determinant is {}, expected -1",
            det
        )));
    }
    let eigenvector = |lambda: i64| -> Vec<BigRational> {
        let shifted = hp - &RationalMatrix::identity(2).scale(&int(lambda));
        let mut v = shifted
            .kernel()
            .into_iter()
            .next()
            .expect("±1 are eigenvalues when trace = 0 and det = -1");
        let lead = v
            .iter()
            .find(|x| !x.is_zero())
            .cloned()
            .expect("kernel vectors are nonzero");
        for x in v.iter_mut() {
            *x = &*x / &lead;
        }
        v
    };
    let plus = eigenvector(1);
    let minus = eigenvector(-1);
    let a = RationalMatrix::from_fn(2, 2, |i, j| {
        if j == 0 {
            plus[i].clone()
        } else {
            minus[i].clone()
        }
    });
    let triple = MatrixTriple::standard()
        .conjugate_by(&a)
        .expect("eigenvectors for distinct eigenvalues are independent");
    Ok((a, triple))
}
