//! Weight multiplicities of `φ(h)` and the decompositions they encode.
//!
//! A finite-dimensional module is determined up to isomorphism by how often
//! each integer `n` occurs as an eigenvalue of `φ(h)`. The spectrum is
//! symmetric (`d_{-n} = d_n`), so only `n >= 0` is stored.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Multiplicities `d_n` of the eigenvalues `n >= 0` of `φ(h)`.
///
/// Zero multiplicities are never stored, so two vectors describing the same
/// spectrum compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeightVector {
    d: BTreeMap<u64, u64>,
    dim: u64,
}

impl WeightVector {
    /// The spectrum `{0}` of the trivial representation.
    pub fn trivial() -> Self {
        Self::from_multiplicities([(0, 1)])
    }

    /// Builds a vector from `(weight, multiplicity)` pairs. Repeated weights
    /// accumulate and zero multiplicities are dropped.
    pub fn from_multiplicities<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut d = BTreeMap::new();
        for (n, k) in pairs {
            if k > 0 {
                *d.entry(n).or_insert(0) += k;
            }
        }
        let dim = dim_of(&d);
        WeightVector { d, dim }
    }

    /// Validating constructor for externally supplied data: rejects stored
    /// zeros and a `dim` that disagrees with `d_0 + 2 Σ_{n≥1} d_n`.
    pub fn new(d: BTreeMap<u64, u64>, dim: u64) -> Result<Self> {
        if let Some((n, _)) = d.iter().find(|(_, &k)| k == 0) {
            return Err(Error::BadInput(alloc::format!(
                "explicit zero multiplicity for weight {}",
                n
            )));
        }
        let expected = dim_of(&d);
        if expected != dim {
            return Err(Error::BadInput(alloc::format!(
                "dim {} does not match multiplicities (expected {})",
                dim,
                expected
            )));
        }
        Ok(WeightVector { d, dim })
    }

    /// Counts the eigenvalues of a full (signed) spectrum.
    pub fn from_spectrum<I>(eigenvalues: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
        for x in eigenvalues {
            *counts.entry(x).or_insert(0) += 1;
        }
        for (&x, &k) in &counts {
            if x > 0 && counts.get(&-x).copied().unwrap_or(0) != k {
                return Err(Error::AsymmetricSpectrum { weight: x });
            }
            if x < 0 && !counts.contains_key(&-x) {
                return Err(Error::AsymmetricSpectrum { weight: -x });
            }
        }
        Ok(Self::from_multiplicities(
            counts
                .into_iter()
                .filter(|&(x, _)| x >= 0)
                .map(|(x, k)| (x as u64, k)),
        ))
    }

    /// `d_n`, zero when absent.
    pub fn get(&self, n: u64) -> u64 {
        self.d.get(&n).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    pub fn multiplicities(&self) -> &BTreeMap<u64, u64> {
        &self.d
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.d.iter().map(|(&n, &k)| (n, k))
    }

    pub fn max_weight(&self) -> Option<u64> {
        self.d.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    /// Entrywise sum, the spectrum of a direct sum.
    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector::from_multiplicities(self.iter().chain(other.iter()))
    }

    /// The signed multiplicity sequence `c(k)`, `-N <= k <= N`, stored with
    /// offset `N`.
    fn signed_sequence(&self) -> (Vec<u64>, usize) {
        let top = self.max_weight().unwrap_or(0) as usize;
        let mut seq = vec![0u64; 2 * top + 1];
        for (n, k) in self.iter() {
            let n = n as usize;
            seq[top + n] = k;
            seq[top - n] = k;
        }
        (seq, top)
    }
}

fn dim_of(d: &BTreeMap<u64, u64>) -> u64 {
    d.iter()
        .map(|(&n, &k)| if n == 0 { k } else { 2 * k })
        .sum()
}

/// Multiplicities `l_m` of the irreducible modules of highest weight `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Decomposition {
    l: BTreeMap<u64, u64>,
}

impl Decomposition {
    pub fn from_multiplicities<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut l = BTreeMap::new();
        for (m, k) in pairs {
            if k > 0 {
                *l.entry(m).or_insert(0) += k;
            }
        }
        Decomposition { l }
    }

    /// A single irreducible summand of highest weight `m`.
    pub fn irreducible(m: u64) -> Self {
        Self::from_multiplicities([(m, 1)])
    }

    /// Validating constructor: stored multiplicities must be positive.
    pub fn new(l: BTreeMap<u64, u64>) -> Result<Self> {
        match l.iter().find(|(_, &k)| k == 0) {
            Some((m, _)) => Err(Error::BadInput(alloc::format!(
                "explicit zero multiplicity for highest weight {}",
                m
            ))),
            None => Ok(Decomposition { l }),
        }
    }

    pub fn get(&self, m: u64) -> u64 {
        self.l.get(&m).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &BTreeMap<u64, u64> {
        &self.l
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.l.iter().map(|(&m, &k)| (m, k))
    }

    /// `Σ_m l_m (m + 1)`.
    pub fn dim(&self) -> u64 {
        self.iter().map(|(m, k)| k * (m + 1)).sum()
    }

    /// Highest weights with multiplicity, in increasing order.
    pub fn summands(&self) -> impl Iterator<Item = u64> + '_ {
        self.iter()
            .flat_map(|(m, k)| core::iter::repeat_n(m, k as usize))
    }
}

/// `d_n = Σ_{m ≥ n, m ≡ n (mod 2)} l_m`.
pub fn weights_of_decomposition(dec: &Decomposition) -> WeightVector {
    let mut d = BTreeMap::new();
    for (m, k) in dec.iter() {
        for n in (m % 2..=m).step_by(2) {
            *d.entry(n).or_insert(0) += k;
        }
    }
    WeightVector::from_multiplicities(d)
}

/// The first `n` with `d_n < d_{n+2}`, if any.
pub fn first_inadmissible(w: &WeightVector) -> Option<u64> {
    let top = w.max_weight()?;
    (0..=top).find(|&n| w.get(n) < w.get(n + 2))
}

/// True iff `d_n >= d_{n+2}` for every `n >= 0`, i.e. some module has this
/// spectrum.
pub fn is_admissible(w: &WeightVector) -> bool {
    first_inadmissible(w).is_none()
}

/// Inverts [`weights_of_decomposition`] through `l_m = d_m - d_{m+2}`.
pub fn decomposition_of_weights(w: &WeightVector) -> Result<Decomposition> {
    if let Some(weight) = first_inadmissible(w) {
        return Err(Error::NotAdmissible { weight });
    }
    Ok(Decomposition::from_multiplicities(
        w.iter().map(|(m, k)| (m, k - w.get(m + 2))),
    ))
}

/// Multiset of pairwise sums of two symmetric spectra, i.e. the spectrum of
/// `φ(h) ⊗ I + I ⊗ ψ(h)`.
pub fn convolve(a: &WeightVector, b: &WeightVector) -> WeightVector {
    if a.is_empty() || b.is_empty() {
        return WeightVector::default();
    }
    let (sa, ta) = a.signed_sequence();
    let (sb, tb) = b.signed_sequence();
    let top = ta + tb;
    let mut out = vec![0u64; top + 1];
    for (i, &x) in sa.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in sb.iter().enumerate() {
            // index i + j - top is the weight (i - ta) + (j - tb)
            if y != 0 && i + j >= top {
                out[i + j - top] += x * y;
            }
        }
    }
    WeightVector::from_multiplicities(out.into_iter().enumerate().map(|(n, k)| (n as u64, k)))
}
