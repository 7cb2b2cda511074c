//! Exact computation of the four-variable characteristic polynomial
//! `det(z0 I + z1 φ(h) + z2 φ(e1) + z3 φ(e2))` of finite-dimensional
//! representations φ of sl(2, C).
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact:
//! polynomials carry arbitrary-precision integer coefficients and matrices
//! carry reduced rationals.
//!
//! The pieces, bottom-up:
//!
//! * [`weights`]: weight multiplicities of `φ(h)` and module decompositions.
//! * [`poly`]: sparse polynomials in `z0..z3`, the factored canonical form
//!   and recognition of characteristic polynomials.
//! * [`matrix`] and [`rep`]: matrix realizations of representations.
//! * [`charpoly`]: closed form, determinant oracles and decomposition.
//! * [`monoid`]: the product of characteristic polynomials induced by the
//!   tensor product.
//! * [`sln`]: the adjoint representation of sl(n, C) restricted to the
//!   sl(2, C)-triple at a simple root.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod bareiss;
pub mod charpoly;
mod error;
pub mod matrix;
pub mod monoid;
pub mod poly;
pub mod rep;
pub mod sln;
pub mod weights;

pub use charpoly::{
    charpoly_of_rep, decompose_charpoly, hu_zhang_check, pencil_det_exact,
    pencil_det_exact_with_cap, pencil_verify_randomized, symmetry_identity_check, VerificationMode,
    VerificationReport, DEFAULT_EXACT_CAP, DEFAULT_TRIALS, SAMPLE_BOUND,
};
pub use error::{Error, ErrorKind};
pub use matrix::RationalMatrix;
pub use monoid::{clebsch_gordan, resolution_product, verify_monoid_laws, MonoidElement};
pub use poly::{CanonicalCP, MultiPoly, UPoly};
pub use rep::{conjugate_basis, irrep_matrices, MatrixTriple, RepTriple};
pub use weights::{Decomposition, WeightVector};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
