//! The characteristic polynomial `det(z0 I + z1 H + z2 E + z3 F)`: the closed
//! form read from the weights of `H`, an exact symbolic determinant, and a
//! seeded randomized identity test that scales past the symbolic size cap.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bareiss;
use crate::error::{Error, Result};
use crate::poly::{CanonicalCP, MultiPoly};
use crate::rep::{h_weights, irrep_matrices, MatrixTriple, RepTriple};
use crate::weights::{self, Decomposition};

/// Largest dimension for which [`pencil_det_exact`] expands symbolically.
pub const DEFAULT_EXACT_CAP: usize = 16;
/// Default number of evaluation points for [`pencil_verify_randomized`].
pub const DEFAULT_TRIALS: u32 = 20;
/// Sample coordinates are drawn from `[-SAMPLE_BOUND, SAMPLE_BOUND]`.
pub const SAMPLE_BOUND: i64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerificationMode {
    Exact,
    Randomized,
}

impl VerificationMode {
    pub fn as_str(self) -> &'static str {
        match self {
            VerificationMode::Exact => "exact",
            VerificationMode::Randomized => "randomized",
        }
    }
}

/// Outcome of comparing a pencil determinant with a candidate polynomial.
/// A disagreement always carries a point where the two differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub mode: VerificationMode,
    pub trials: u32,
    pub agreed: bool,
    pub witness: Option<[BigInt; 4]>,
}

/// The closed form `z0^{d_0} Π (z0² - n² u)^{d_n}` with `d_n` read from `H`.
pub fn charpoly_of_rep(t: &RepTriple) -> Result<CanonicalCP> {
    let w = h_weights(t)?;
    if let Some(weight) = weights::first_inadmissible(&w) {
        return Err(Error::NotAdmissible { weight });
    }
    Ok(CanonicalCP::from_weights(&w))
}

/// `t` scaled by the least common denominator `D` of its entries.
fn integral_scaling(t: &MatrixTriple) -> (BigInt, [Vec<BigInt>; 3]) {
    use num_integer::Integer;
    let d =
        t.h.denominator_lcm()
            .lcm(&t.e.denominator_lcm())
            .lcm(&t.f.denominator_lcm());
    let scaled = |m: &crate::matrix::RationalMatrix| -> Vec<BigInt> {
        m.entries()
            .iter()
            .map(|x| (x * BigRational::from_integer(d.clone())).to_integer())
            .collect()
    };
    (d.clone(), [scaled(&t.h), scaled(&t.e), scaled(&t.f)])
}

/// Exact expanded determinant of the pencil with the default size cap.
pub fn pencil_det_exact(t: &MatrixTriple) -> Result<MultiPoly> {
    pencil_det_exact_with_cap(t, DEFAULT_EXACT_CAP)
}

/// Exact expanded determinant of `z0 I + z1 H + z2 E + z3 F`, by fraction-free
/// elimination over the integer polynomial ring. Rational entries are cleared
/// by a common denominator `D` and `D^dim` is divided out at the end.
pub fn pencil_det_exact_with_cap(t: &MatrixTriple, cap: usize) -> Result<MultiPoly> {
    let n = t.dim();
    if n > cap {
        return Err(Error::SizeCapExceeded { dim: n, cap });
    }
    let (d, [h, e, f]) = integral_scaling(t);
    let entry = |i: usize, j: usize| -> MultiPoly {
        let k = i * n + j;
        let mut terms = Vec::with_capacity(4);
        if i == j {
            terms.push((d.clone(), [1, 0, 0, 0]));
        }
        terms.push((h[k].clone(), [0, 1, 0, 0]));
        terms.push((e[k].clone(), [0, 0, 1, 0]));
        terms.push((f[k].clone(), [0, 0, 0, 1]));
        MultiPoly::from_terms(terms)
    };
    let det = bareiss::blockwise_determinant(n, entry);
    if d.is_one() {
        return Ok(det);
    }
    det.exact_divide(&MultiPoly::constant(Pow::pow(&d, n as u32)))
        .map_err(|_| Error::BadInput("determinant scaling is not exact".to_string()))
}

/// Exact value of `det(z0 I + z1 H + z2 E + z3 F)` at an integer point.
pub fn pencil_det_at(t: &MatrixTriple, point: &[BigInt; 4]) -> BigRational {
    let n = t.dim();
    let (d, [h, e, f]) = integral_scaling(t);
    let [z0, z1, z2, z3] = point;
    let z0d = z0 * &d;
    let entry = |i: usize, j: usize| -> BigInt {
        let k = i * n + j;
        let mut x = z1 * &h[k] + z2 * &e[k] + z3 * &f[k];
        if i == j {
            x += &z0d;
        }
        x
    };
    let det = bareiss::blockwise_determinant(n, entry);
    BigRational::new(det, Pow::pow(&d, n as u32))
}

/// Seeded uniform points in `[-SAMPLE_BOUND, SAMPLE_BOUND]^4`.
pub fn sample_points(seed: u64, count: u32) -> Vec<[BigInt; 4]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            core::array::from_fn(|_| BigInt::from(rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND)))
        })
        .collect()
}

/// Randomized identity test of `det(pencil) = expand(candidate)`: both sides are
/// evaluated exactly at `trials` seeded points. Stops at the first
/// disagreement, which becomes the witness.
pub fn pencil_verify_randomized(
    t: &MatrixTriple,
    candidate: &CanonicalCP,
    trials: u32,
    seed: u64,
) -> VerificationReport {
    let mut performed = 0;
    for point in sample_points(seed, trials) {
        performed += 1;
        let expected = BigRational::from_integer(candidate.evaluate(&point));
        if pencil_det_at(t, &point) != expected {
            return VerificationReport {
                mode: VerificationMode::Randomized,
                trials: performed,
                agreed: false,
                witness: Some(point),
            };
        }
    }
    VerificationReport {
        mode: VerificationMode::Randomized,
        trials: performed,
        agreed: true,
        witness: None,
    }
}

/// Exact comparison of the expanded determinant with the candidate. On
/// disagreement the witness is the first seeded point where the difference
/// does not vanish.
pub fn pencil_verify_exact(
    t: &MatrixTriple,
    candidate: &CanonicalCP,
    cap: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let diff = &pencil_det_exact_with_cap(t, cap)? - &candidate.expand();
    let agreed = diff.is_zero();
    let witness = if agreed {
        None
    } else {
        // A nonzero polynomial of degree <= dim vanishes on a random point
        // with probability at most dim / (2 SAMPLE_BOUND + 1); retry until it
        // does not.
        let mut round = 0u64;
        loop {
            let hit = sample_points(seed.wrapping_add(round), 8)
                .into_iter()
                .find(|p| !diff.evaluate(p).is_zero());
            if hit.is_some() {
                break hit;
            }
            round += 1;
        }
    };
    Ok(VerificationReport {
        mode: VerificationMode::Exact,
        trials: 0,
        agreed,
        witness,
    })
}

/// Module structure from the characteristic polynomial: `l_m = d_m - d_{m+2}`.
pub fn decompose_charpoly(c: &CanonicalCP) -> Result<Decomposition> {
    weights::decomposition_of_weights(&c.weights())
}

/// Specialization `f(z0, z1, 1, 1)`, kept in the first two variables.
pub fn specialize_e_ones(p: &MultiPoly) -> MultiPoly {
    p.substitute(|[a0, a1, _, _]| Some([a0, a1, 0, 0]))
}

/// Specialization `f(z0, 1, z1, z1)`, kept in the first two variables.
pub fn specialize_h_one(p: &MultiPoly) -> MultiPoly {
    p.substitute(|[a0, _, a2, a3]| Some([a0, a2 + a3, 0, 0]))
}

/// `z0^{[m even]} Π (z0² - k² (1 + z1²))` over `k = m, m - 2, ... > 0`.
pub fn hu_zhang_product(m: u64) -> MultiPoly {
    let z0 = MultiPoly::var(0);
    let w = MultiPoly::from_terms([(BigInt::one(), [0, 0, 0, 0]), (BigInt::one(), [0, 2, 0, 0])]);
    let z0sq = &z0 * &z0;
    let factor = |k: u64| &z0sq - &w.scale(&BigInt::from(k * k));
    if m.is_multiple_of(2) {
        (1..=m / 2).fold(z0.clone(), |acc, l| &acc * &factor(2 * l))
    } else {
        (0..=(m - 1) / 2).fold(MultiPoly::one(), |acc, l| &acc * &factor(2 * l + 1))
    }
}

/// Whether the exact pencil determinant of the irreducible module of highest
/// weight `m`, at `z2 = z3 = 1`, equals [`hu_zhang_product`].
pub fn hu_zhang_check(m: u64, cap: usize) -> Result<bool> {
    let det = pencil_det_exact_with_cap(&irrep_matrices(m), cap)?;
    Ok(specialize_e_ones(&det) == hu_zhang_product(m))
}

/// Whether `f(z0, z1, 1, 1) = f(z0, 1, z1, z1)` for the exact determinant of `t`.
pub fn symmetry_identity_check(t: &MatrixTriple, cap: usize) -> Result<bool> {
    let det = pencil_det_exact_with_cap(t, cap)?;
    Ok(specialize_e_ones(&det) == specialize_h_one(&det))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::recognize;
    use crate::rep::{direct_sum, tensor};

    fn z(i: usize) -> MultiPoly {
        MultiPoly::var(i)
    }

    fn c(x: i64) -> MultiPoly {
        MultiPoly::constant(BigInt::from(x))
    }

    // Cofactor expansion along the first row, over the polynomial ring.
    fn cofactor_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
        if m.is_empty() {
            return MultiPoly::one();
        }
        let n = m.len();
        let mut total = MultiPoly::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<MultiPoly>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * &cofactor_det(&minor);
            total = if j % 2 == 0 {
                &total + &term
            } else {
                &total - &term
            };
        }
        total
    }

    fn pencil_entries(t: &MatrixTriple) -> Vec<Vec<MultiPoly>> {
        let n = t.dim();
        let lin = |x: &BigRational, v: usize| {
            assert!(x.is_integer());
            &MultiPoly::constant(x.to_integer()) * &z(v)
        };
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut p = &(&lin(t.h.get(i, j), 1) + &lin(t.e.get(i, j), 2))
                            + &lin(t.f.get(i, j), 3);
                        if i == j {
                            p = &p + &z(0);
                        }
                        p
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            charpoly_of_rep(&irrep_matrices(2)).unwrap(),
            CanonicalCP::from_pairs(1, [(2, 1)])
        );
        assert_eq!(
            charpoly_of_rep(&irrep_matrices(0)).unwrap(),
            CanonicalCP::unit()
        );
        let t = tensor(&irrep_matrices(1), &irrep_matrices(1));
        assert_eq!(
            charpoly_of_rep(&t).unwrap(),
            CanonicalCP::from_pairs(2, [(2, 1)])
        );
    }

    #[test]
    fn exact_determinant_examples() {
        let q1 = &(&z(0) * &z(0)) - &(&(&z(1) * &z(1)) + &(&z(2) * &z(3)));
        assert_eq!(pencil_det_exact(&irrep_matrices(1)).unwrap(), q1);
        assert_eq!(pencil_det_exact(&irrep_matrices(0)).unwrap(), z(0));
        let expected = MultiPoly::from_terms([
            (BigInt::from(1), [3, 0, 0, 0]),
            (BigInt::from(-4), [1, 2, 0, 0]),
            (BigInt::from(-4), [1, 0, 1, 1]),
        ]);
        let t = irrep_matrices(2);
        assert_eq!(cofactor_det(&pencil_entries(&t)), expected);
        assert_eq!(pencil_det_exact(&t).unwrap(), expected);
        assert_eq!(
            pencil_det_exact_with_cap(&irrep_matrices(5), 4),
            Err(Error::SizeCapExceeded { dim: 6, cap: 4 })
        );
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let cases = [
            irrep_matrices(4),
            direct_sum(&irrep_matrices(1), &irrep_matrices(2)),
            tensor(&irrep_matrices(1), &irrep_matrices(2)),
        ];
        for t in cases {
            assert_eq!(
                pencil_det_exact(&t).unwrap(),
                cofactor_det(&pencil_entries(&t))
            );
        }
    }

    #[test]
    fn closed_form_matches_determinant() {
        for m in 0..=8 {
            let t = irrep_matrices(m);
            let det = pencil_det_exact(&t).unwrap();
            assert_eq!(det, charpoly_of_rep(&t).unwrap().expand(), "m = {}", m);
            assert_eq!(recognize(&det).unwrap(), charpoly_of_rep(&t).unwrap());
        }
        let t = tensor(&irrep_matrices(2), &irrep_matrices(3));
        assert_eq!(
            pencil_det_exact(&t).unwrap(),
            charpoly_of_rep(&t).unwrap().expand()
        );
    }

    #[test]
    fn rational_entries_are_cleared() {
        let (_, t) =
            crate::rep::conjugate_basis(&crate::RationalMatrix::from_integers(&[[0, 1], [1, 0]]))
                .unwrap();
        let q1 = &(&z(0) * &z(0)) - &(&(&z(1) * &z(1)) + &(&z(2) * &z(3)));
        assert_eq!(pencil_det_exact(&t).unwrap(), q1);
    }

    #[test]
    fn randomized_examples() {
        let t = irrep_matrices(5);
        let report = pencil_verify_randomized(&t, &charpoly_of_rep(&t).unwrap(), 20, 1);
        assert!(report.agreed);
        assert_eq!(report.trials, 20);
        assert_eq!(report.witness, None);

        let report =
            pencil_verify_randomized(&irrep_matrices(2), &CanonicalCP::from_pairs(3, []), 20, 1);
        assert!(!report.agreed);
        let w = report.witness.unwrap();
        assert_ne!(
            pencil_det_at(&irrep_matrices(2), &w),
            BigRational::from_integer(CanonicalCP::from_pairs(3, []).evaluate(&w))
        );

        for seed in [0, 7, 12345] {
            assert!(
                pencil_verify_randomized(&irrep_matrices(0), &CanonicalCP::unit(), 1, seed).agreed
            );
        }
        assert_eq!(sample_points(3, 5), sample_points(3, 5));
        assert!(sample_points(3, 50)
            .iter()
            .flatten()
            .all(|x| x <= &BigInt::from(SAMPLE_BOUND) && x >= &BigInt::from(-SAMPLE_BOUND)));
    }

    #[test]
    fn exact_verification_reports_witness() {
        let t = irrep_matrices(3);
        let good =
            pencil_verify_exact(&t, &charpoly_of_rep(&t).unwrap(), DEFAULT_EXACT_CAP, 0).unwrap();
        assert!(good.agreed && good.witness.is_none());
        let bad = pencil_verify_exact(
            &t,
            &CanonicalCP::from_pairs(0, [(1, 2)]),
            DEFAULT_EXACT_CAP,
            0,
        )
        .unwrap();
        assert!(!bad.agreed);
        assert!(bad.witness.is_some());
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(
            decompose_charpoly(&CanonicalCP::from_pairs(3, [(1, 1), (2, 2)])).unwrap(),
            Decomposition::from_multiplicities([(0, 1), (1, 1), (2, 2)])
        );
        assert_eq!(
            decompose_charpoly(&CanonicalCP::unit()).unwrap(),
            Decomposition::irreducible(0)
        );
        assert_eq!(
            decompose_charpoly(&CanonicalCP::from_pairs(0, [(2, 1)])),
            Err(Error::NotAdmissible { weight: 0 })
        );
    }

    #[test]
    fn hu_zhang_examples() {
        let w = &c(1) + &(&z(1) * &z(1));
        assert_eq!(hu_zhang_product(1), &(&z(0) * &z(0)) - &w);
        assert_eq!(hu_zhang_product(0), z(0));
        let f4 = &(&z(0) * &(&(&z(0) * &z(0)) - &w.scale(&BigInt::from(4))))
            * &(&(&z(0) * &z(0)) - &w.scale(&BigInt::from(16)));
        assert_eq!(hu_zhang_product(4), f4);
        for m in 0..=6 {
            assert!(hu_zhang_check(m, DEFAULT_EXACT_CAP).unwrap(), "m = {}", m);
        }
        assert!(hu_zhang_check(20, DEFAULT_EXACT_CAP).is_err());
    }

    #[test]
    fn symmetry_examples() {
        for m in 0..=6 {
            assert!(symmetry_identity_check(&irrep_matrices(m), DEFAULT_EXACT_CAP).unwrap());
        }
        let s = direct_sum(&irrep_matrices(1), &irrep_matrices(2));
        assert!(symmetry_identity_check(&s, DEFAULT_EXACT_CAP).unwrap());
        // a triple that is not a representation breaks the identity
        let std = MatrixTriple::standard();
        let bad = MatrixTriple::new(std.h.clone(), std.e.clone(), std.e.clone()).unwrap();
        assert!(!symmetry_identity_check(&bad, DEFAULT_EXACT_CAP).unwrap());
    }
}
