//! The resolution product on characteristic polynomials: the polynomial of a
//! tensor product, computed from the two factors alone.
//!
//! The product pairs up the `φ(h)`-eigenvalues `α_i`, `β_j` of the two
//! factors into `α_i + β_j`. On canonical forms this is convolution of the
//! symmetric weight sequences, so no square root of `z1² + z2 z3` is ever
//! formed.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::CanonicalCP;
use crate::weights::{self, Decomposition};

/// An admissible characteristic polynomial, i.e. one that belongs to some
/// finite-dimensional representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonoidElement(CanonicalCP);

impl MonoidElement {
    pub fn new(cp: CanonicalCP) -> Result<Self> {
        match weights::first_inadmissible(&cp.weights()) {
            Some(weight) => Err(Error::NotAdmissible { weight }),
            None => Ok(MonoidElement(cp)),
        }
    }

    /// `z0`.
    pub fn unit() -> Self {
        MonoidElement(CanonicalCP::unit())
    }

    /// Characteristic polynomial of the irreducible module of highest weight `m`.
    pub fn irreducible(m: u64) -> Self {
        Self::of_decomposition(&Decomposition::irreducible(m))
    }

    pub fn of_decomposition(d: &Decomposition) -> Self {
        MonoidElement(CanonicalCP::from_weights(
            &weights::weights_of_decomposition(d),
        ))
    }

    pub fn cp(&self) -> &CanonicalCP {
        &self.0
    }

    pub fn into_cp(self) -> CanonicalCP {
        self.0
    }

    pub fn dim(&self) -> u64 {
        self.0.degree()
    }
}

/// `f_φ * f_ψ = f_{φ ⊗ ψ}`.
pub fn resolution_product(a: &MonoidElement, b: &MonoidElement) -> MonoidElement {
    let w = weights::convolve(&a.0.weights(), &b.0.weights());
    MonoidElement(CanonicalCP::from_weights(&w))
}

/// `φ_m ⊗ φ_n ≅ ⊕_{k=0}^{n} φ_{m-n+2k}` for `n <= m`; the arguments are
/// swapped otherwise.
pub fn clebsch_gordan(m: u64, n: u64) -> Decomposition {
    let (m, n) = if n <= m { (m, n) } else { (n, m) };
    let d = Decomposition::from_multiplicities((0..=n).map(|k| (m - n + 2 * k, 1)));
    debug_assert_eq!(Ok(&d), clebsch_gordan_by_convolution(m, n).as_ref());
    d
}

/// The same decomposition obtained by convolving the two weight vectors and
/// reading off `l_m = d_m - d_{m+2}`.
pub fn clebsch_gordan_by_convolution(m: u64, n: u64) -> Result<Decomposition> {
    let w = weights::convolve(
        &weights::weights_of_decomposition(&Decomposition::irreducible(m)),
        &weights::weights_of_decomposition(&Decomposition::irreducible(n)),
    );
    weights::decomposition_of_weights(&w)
}

/// A failed monoid law, referring to sample indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawViolation {
    Closure { a: usize, b: usize },
    Commutativity { a: usize, b: usize },
    Associativity { a: usize, b: usize, c: usize },
    Unit { a: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidLawReport {
    pub samples: usize,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    /// Whether every ordered triple was checked for associativity.
    pub exhaustive: bool,
    pub violations: Vec<LawViolation>,
}

impl MonoidLawReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Above this many ordered triples, associativity is checked on a seeded
/// sample of this many triples instead.
pub const MAX_ASSOCIATIVITY_TRIPLES: usize = 1 << 18;

/// Checks closure, commutativity and the unit law on every pair of samples,
/// and associativity on every ordered triple (or on
/// [`MAX_ASSOCIATIVITY_TRIPLES`] seeded triples when there are more).
pub fn verify_monoid_laws(samples: &[MonoidElement], seed: u64) -> MonoidLawReport {
    let n = samples.len();
    let unit = MonoidElement::unit();
    let mut violations = Vec::new();

    let mut products = Vec::with_capacity(n * n);
    for (i, a) in samples.iter().enumerate() {
        if resolution_product(a, &unit) != *a || resolution_product(&unit, a) != *a {
            violations.push(LawViolation::Unit { a: i });
        }
        for (j, b) in samples.iter().enumerate() {
            let ab = resolution_product(a, b);
            if !ab.0.is_admissible() {
                violations.push(LawViolation::Closure { a: i, b: j });
            }
            if j > i && ab != resolution_product(b, a) {
                violations.push(LawViolation::Commutativity { a: i, b: j });
            }
            products.push(ab);
        }
    }

    let check = |i: usize, j: usize, k: usize, violations: &mut Vec<LawViolation>| {
        let left = resolution_product(&products[i * n + j], &samples[k]);
        let right = resolution_product(&samples[i], &products[j * n + k]);
        if left != right {
            violations.push(LawViolation::Associativity { a: i, b: j, c: k });
        }
    };
    let total = n * n * n;
    let exhaustive = total <= MAX_ASSOCIATIVITY_TRIPLES;
    let triples_checked = if exhaustive {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    check(i, j, k, &mut violations);
                }
            }
        }
        total
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..MAX_ASSOCIATIVITY_TRIPLES {
            let (i, j, k) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            check(i, j, k, &mut violations);
        }
        MAX_ASSOCIATIVITY_TRIPLES
    };

    MonoidLawReport {
        samples: n,
        pairs_checked: n * n,
        triples_checked,
        exhaustive,
        violations,
    }
}

/// Seeded random admissible elements with dimension in `1..=max_dim`.
pub fn random_elements(count: usize, max_dim: u64, seed: u64) -> Vec<MonoidElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| MonoidElement::of_decomposition(&random_decomposition(&mut rng, max_dim)))
        .collect()
}

/// A random nonzero module of dimension at most `max_dim` (`max_dim >= 1`):
/// irreducible summands are drawn until the remaining room runs out.
pub fn random_decomposition<R: Rng>(rng: &mut R, max_dim: u64) -> Decomposition {
    let target = rng.gen_range(1..=max_dim);
    let mut left = target;
    let mut pairs = Vec::new();
    while left > 0 {
        let m = rng.gen_range(0..left);
        pairs.push((m, 1));
        left -= m + 1;
    }
    Decomposition::from_multiplicities(pairs)
}
