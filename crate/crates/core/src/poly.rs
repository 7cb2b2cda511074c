//! Sparse polynomials with arbitrary-precision integer coefficients, and the
//! factored form `z0^{d0} · Π_{n≥1} (z0² - n² u)^{d_n}` with `u = z1² + z2 z3`
//! that every characteristic polynomial takes.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::weights::{self, WeightVector};

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then lexicographic on the exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial<const N: usize>(pub [u32; N]);

impl<const N: usize> Monomial<N> {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial(e))
    }
}

impl<const N: usize> Ord for Monomial<N> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl<const N: usize> PartialOrd for Monomial<N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `N` variables over the integers. No zero coefficient is ever
/// stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<const N: usize> {
    terms: BTreeMap<Monomial<N>, BigInt>,
}

/// Polynomial in `z0, z1, z2, z3`.
pub type MultiPoly = Poly<4>;

/// Polynomial in `(z0, u)`, where `u` stands for `z1² + z2 z3`.
pub type UPoly = Poly<2>;

impl<const N: usize> Default for Poly<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize> Poly<N> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, [0; N])
    }

    pub fn monomial(c: BigInt, exponents: [u32; N]) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial(exponents), c);
        p
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Self::monomial(BigInt::one(), e)
    }

    /// Collects terms, summing repeated exponents.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, [u32; N])>,
    {
        let mut p = Self::zero();
        for (c, e) in terms {
            p.add_term(Monomial(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial<N>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn sub_term(&mut self, m: Monomial<N>, c: &BigInt) {
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(-c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() -= c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial([0; N]))
                .is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing graded-lexicographic order (leading term first).
    pub fn terms(&self) -> impl Iterator<Item = (&[u32; N], &BigInt)> + '_ {
        self.terms.iter().rev().map(|(m, c)| (&m.0, c))
    }

    pub fn coefficient(&self, exponents: [u32; N]) -> BigInt {
        self.terms
            .get(&Monomial(exponents))
            .cloned()
            .unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<([u32; N], &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (m.0, c))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    /// Smallest exponent of variable `i` over all terms.
    pub fn min_exponent(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i]).min()
    }

    /// Largest exponent of variable `i` over all terms.
    pub fn max_exponent(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The quotient `r` with `self = q · r`, or `NotDivisible`.
    pub fn exact_divide(&self, q: &Self) -> Result<Self> {
        let (lead_m, lead_c) = match q.terms.iter().next_back() {
            Some((m, c)) => (*m, c.clone()),
            None => {
                return Err(Error::BadInput(
                    "division by the zero polynomial".to_string(),
                ))
            }
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((m, c)) = rem.terms.iter().next_back() {
            let shift = m.checked_div(&lead_m).ok_or(Error::NotDivisible)?;
            let (factor, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (qm, qc) in &q.terms {
                rem.sub_term(qm.mul(&shift), &(qc * &factor));
            }
            quot.add_term(shift, factor);
        }
        Ok(quot)
    }

    pub fn evaluate(&self, point: &[BigInt; N]) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(m.0.iter()) {
                if e > 0 {
                    term *= Pow::pow(x, e);
                }
            }
            total += term;
        }
        total
    }

    /// Monomial substitution: every term `c·x^e` becomes `c·y^{f(e)}`, and is
    /// dropped when `f` returns `None` (a variable sent to zero).
    pub fn substitute<const M: usize, F>(&self, f: F) -> Poly<M>
    where
        F: Fn([u32; N]) -> Option<[u32; M]>,
    {
        let mut out = Poly::<M>::zero();
        for (m, c) in &self.terms {
            if let Some(e) = f(m.0) {
                out.add_term(Monomial(e), c.clone());
            }
        }
        out
    }
}

impl<const N: usize> Zero for Poly<N> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

impl<const N: usize> One for Poly<N> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<'a, const N: usize> Add<&'a Poly<N>> for &'a Poly<N> {
    type Output = Poly<N>;

    fn add(self, rhs: &Poly<N>) -> Poly<N> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a, const N: usize> Sub<&'a Poly<N>> for &'a Poly<N> {
    type Output = Poly<N>;

    fn sub(self, rhs: &Poly<N>) -> Poly<N> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.sub_term(*m, c);
        }
        out
    }
}

impl<'a, const N: usize> Mul<&'a Poly<N>> for &'a Poly<N> {
    type Output = Poly<N>;

    fn mul(self, rhs: &Poly<N>) -> Poly<N> {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl<const N: usize> Neg for &Poly<N> {
    type Output = Poly<N>;

    fn neg(self) -> Poly<N> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl<const N: usize> Add for Poly<N> {
    type Output = Poly<N>;

    fn add(self, rhs: Poly<N>) -> Poly<N> {
        &self + &rhs
    }
}

impl<const N: usize> Sub for Poly<N> {
    type Output = Poly<N>;

    fn sub(self, rhs: Poly<N>) -> Poly<N> {
        &self - &rhs
    }
}

impl<const N: usize> Mul for Poly<N> {
    type Output = Poly<N>;

    fn mul(self, rhs: Poly<N>) -> Poly<N> {
        &self * &rhs
    }
}

impl<const N: usize> Neg for Poly<N> {
    type Output = Poly<N>;

    fn neg(self) -> Poly<N> {
        -&self
    }
}

/// Writes terms as `c*z0^a0*z1^a1*...` in decreasing graded-lex order,
/// omitting zero exponents and joining terms with ` + `. For `N = 2` the
/// variables are named `z0` and `u`.
impl<const N: usize> fmt::Display for Poly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}", c)?;
            for (i, &a) in e.iter().enumerate() {
                if a > 0 {
                    if N == 2 && i == 1 {
                        write!(f, "*u^{}", a)?;
                    } else {
                        write!(f, "*z{}^{}", i, a)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<const N: usize> fmt::Debug for Poly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `z1² + z2 z3`.
pub fn u_poly() -> MultiPoly {
    MultiPoly::from_terms([(BigInt::one(), [0, 2, 0, 0]), (BigInt::one(), [0, 0, 1, 1])])
}

/// Image under `z1 = 0, z2 = 1, z3 = u`. On polynomials that depend on
/// `z1, z2, z3` only through `z1² + z2 z3` this reads off the `(z0, u)` form.
pub fn to_uform(p: &MultiPoly) -> UPoly {
    p.substitute(|[a0, a1, _, a3]| if a1 == 0 { Some([a0, a3]) } else { None })
}

/// Replaces `u` by `z1² + z2 z3`.
pub fn from_uform(p: &UPoly) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (&[a0, k], c) in p.terms() {
        // u^k = Σ_j C(k, j) z1^{2(k-j)} (z2 z3)^j
        let mut binom = BigInt::one();
        for j in 0..=k {
            out.add_term(Monomial([a0, 2 * (k - j), j, j]), c * &binom);
            binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
        }
    }
    out
}

/// `z0^{d0} · Π_{n≥1} (z0² - n² u)^{d_n}`, stored as exponents only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalCP {
    d0: u64,
    factors: BTreeMap<u64, u64>,
}

impl CanonicalCP {
    /// `z0`, the characteristic polynomial of the trivial representation.
    pub fn unit() -> Self {
        CanonicalCP {
            d0: 1,
            factors: BTreeMap::new(),
        }
    }

    /// Validating constructor: factor indices must be `>= 1` and exponents
    /// positive.
    pub fn new(d0: u64, factors: BTreeMap<u64, u64>) -> Result<Self> {
        if factors.contains_key(&0) {
            return Err(Error::BadInput("factor index 0 belongs in d0".to_string()));
        }
        if let Some((n, _)) = factors.iter().find(|(_, &k)| k == 0) {
            return Err(Error::BadInput(alloc::format!(
                "explicit zero exponent for factor {}",
                n
            )));
        }
        Ok(CanonicalCP { d0, factors })
    }

    pub fn from_pairs<I>(d0: u64, factors: I) -> Self
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let w = WeightVector::from_multiplicities(
            core::iter::once((0, d0)).chain(factors.into_iter().filter(|&(n, _)| n > 0)),
        );
        Self::from_weights(&w)
    }

    pub fn from_weights(w: &WeightVector) -> Self {
        CanonicalCP {
            d0: w.get(0),
            factors: w.iter().filter(|&(n, _)| n > 0).collect(),
        }
    }

    pub fn weights(&self) -> WeightVector {
        WeightVector::from_multiplicities(
            core::iter::once((0, self.d0)).chain(self.factors.iter().map(|(&n, &k)| (n, k))),
        )
    }

    pub fn d0(&self) -> u64 {
        self.d0
    }

    pub fn factors(&self) -> &BTreeMap<u64, u64> {
        &self.factors
    }

    /// Degree in `z0`, which is also the total degree and the dimension.
    pub fn degree(&self) -> u64 {
        self.d0 + 2 * self.factors.values().sum::<u64>()
    }

    pub fn is_admissible(&self) -> bool {
        weights::is_admissible(&self.weights())
    }

    /// The factored form read in `(z0, u)`.
    pub fn expand_uform(&self) -> UPoly {
        let mut p = UPoly::monomial(BigInt::one(), [self.d0 as u32, 0]);
        for (&n, &k) in &self.factors {
            let n2 = BigInt::from(n) * BigInt::from(n);
            let factor = UPoly::from_terms([(BigInt::one(), [2, 0]), (-n2, [0, 1])]);
            p = &p * &factor.pow(k as u32);
        }
        p
    }

    /// Fully expanded polynomial in `z0..z3`.
    pub fn expand(&self) -> MultiPoly {
        from_uform(&self.expand_uform())
    }

    /// Exact value at a point, computed from the factored form.
    pub fn evaluate(&self, point: &[BigInt; 4]) -> BigInt {
        let [z0, z1, z2, z3] = point;
        let u = z1 * z1 + z2 * z3;
        let z0sq = z0 * z0;
        let mut value = Pow::pow(z0, self.d0 as u32);
        for (&n, &k) in &self.factors {
            let n = BigInt::from(n);
            let factor = &z0sq - &n * &n * &u;
            value *= Pow::pow(factor, k as u32);
        }
        value
    }
}

/// `z0^{d0} * (z0^2 - 1 u)^{d1} * (z0^2 - 4 u)^{d2} * ...`, listing only the
/// factors that occur.
impl fmt::Display for CanonicalCP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.d0 > 0 {
            parts.push(alloc::format!("z0^{}", self.d0));
        }
        for (&n, &k) in &self.factors {
            parts.push(alloc::format!("(z0^2 - {} u)^{}", n * n, k));
        }
        if parts.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&parts.join(" * "))
    }
}

/// Expands the canonical form.
pub fn expand_canonical(c: &CanonicalCP) -> MultiPoly {
    c.expand()
}

/// Reads a polynomial back into canonical factored form.
///
/// The polynomial is first read in `(z0, u)`; the power of `z0` and the
/// factors `z0² - n² u` are divided out in turn, the residual must be `1`, and
/// the re-expansion must reproduce the input exactly.
pub fn recognize(p: &MultiPoly) -> Result<CanonicalCP> {
    if p.is_zero() {
        return Err(Error::NotCharPoly("zero polynomial".to_string()));
    }
    let up = to_uform(p);
    let d0 = up
        .min_exponent(0)
        .ok_or_else(|| Error::NotCharPoly("vanishes at z1 = 0, z2 = 1".to_string()))?;
    let mut rest = up.substitute(|[a0, a]| Some([a0 - d0, a]));

    // Every factor has weight 2 when z0 has weight 1 and u has weight 2.
    let mut weight = None;
    for (&[a0, a], _) in rest.terms() {
        let w = a0 + 2 * a;
        if *weight.get_or_insert(w) != w {
            return Err(Error::NotCharPoly(
                "not weighted-homogeneous in (z0, u)".to_string(),
            ));
        }
    }
    let weight = weight.unwrap_or(0);
    if weight % 2 == 1 {
        return Err(Error::NotCharPoly(
            "odd degree after removing z0".to_string(),
        ));
    }
    if !rest.coefficient([weight, 0]).is_one() {
        return Err(Error::NotCharPoly("not monic in z0".to_string()));
    }

    let mut factors = BTreeMap::new();
    let mut n: u64 = 1;
    while !rest.is_constant() {
        let top = rest.max_exponent(0).unwrap_or(0);
        // Σ d_n n² is minus the coefficient of z0^{2K-2} u; it bounds every n².
        let power_sum = match top.checked_sub(2) {
            Some(e) => -rest.coefficient([e, 1]),
            None => BigInt::zero(),
        };
        if BigInt::from(n) * BigInt::from(n) > power_sum {
            return Err(Error::NotCharPoly(
                "residual has no factor of the form z0^2 - n^2 u".to_string(),
            ));
        }
        let n2 = BigInt::from(n) * BigInt::from(n);
        let factor = UPoly::from_terms([(BigInt::one(), [2, 0]), (-n2, [0, 1])]);
        let mut count = 0u64;
        while let Ok(q) = rest.exact_divide(&factor) {
            rest = q;
            count += 1;
        }
        if count > 0 {
            factors.insert(n, count);
        }
        n += 1;
    }
    if !rest.is_one() {
        return Err(Error::NotCharPoly(alloc::format!(
            "residual constant {} is not 1",
            rest
        )));
    }

    let cp = CanonicalCP {
        d0: d0 as u64,
        factors,
    };
    if &cp.expand() != p {
        return Err(Error::NotCharPoly(
            "depends on z1, z2, z3 other than through z1^2 + z2 z3".to_string(),
        ));
    }
    if let Some(weight) = weights::first_inadmissible(&cp.weights()) {
        return Err(Error::NotAdmissible { weight });
    }
    Ok(cp)
}

/// Exact evaluation of `p` at an integer point.
pub fn evaluate(p: &MultiPoly, point: &[BigInt; 4]) -> BigInt {
    p.evaluate(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use proptest::test_runner::{Config, RngSeed};

    fn z(i: usize) -> MultiPoly {
        MultiPoly::var(i)
    }

    fn c(x: i64) -> MultiPoly {
        MultiPoly::constant(BigInt::from(x))
    }

    fn big(xs: [i64; 4]) -> [BigInt; 4] {
        xs.map(BigInt::from)
    }

    // z0^2 - z1^2 - z2 z3
    fn q1() -> MultiPoly {
        &(&z(0) * &z(0)) - &(&(&z(1) * &z(1)) + &(&z(2) * &z(3)))
    }

    // Schoolbook product over explicit term lists, independent of Poly::mul.
    fn naive_mul(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        let mut acc: Vec<(BigInt, [u32; 4])> = Vec::new();
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                match acc.iter_mut().find(|(_, f)| *f == e) {
                    Some(slot) => slot.0 += ca * cb,
                    None => acc.push((ca * cb, e)),
                }
            }
        }
        MultiPoly::from_terms(acc)
    }

    #[test]
    fn ring_examples() {
        assert!((&z(0) + &(-&z(0))).is_zero());
        let expected = MultiPoly::from_terms([
            (BigInt::from(1), [3, 0, 0, 0]),
            (BigInt::from(-1), [1, 2, 0, 0]),
            (BigInt::from(-1), [1, 0, 1, 1]),
        ]);
        assert_eq!(&q1() * &z(0), expected);

        let sq = q1().pow(2);
        assert_eq!(sq, naive_mul(&q1(), &q1()));
        let expected = MultiPoly::from_terms([
            (BigInt::from(1), [4, 0, 0, 0]),
            (BigInt::from(-2), [2, 2, 0, 0]),
            (BigInt::from(-2), [2, 0, 1, 1]),
            (BigInt::from(1), [0, 4, 0, 0]),
            (BigInt::from(2), [0, 2, 1, 1]),
            (BigInt::from(1), [0, 0, 2, 2]),
        ]);
        assert_eq!(sq, expected);
        // leading term first
        let order: Vec<[u32; 4]> = sq.terms().map(|(e, _)| *e).collect();
        assert_eq!(
            order,
            vec![
                [4, 0, 0, 0],
                [2, 2, 0, 0],
                [2, 0, 1, 1],
                [0, 4, 0, 0],
                [0, 2, 1, 1],
                [0, 0, 2, 2]
            ]
        );
        assert_eq!(q1().pow(0), MultiPoly::one());
    }

    #[test]
    fn display_format() {
        assert_eq!(q1().to_string(), "1*z0^2 + -1*z1^2 + -1*z2^1*z3^1");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(c(-7).to_string(), "-7");
        assert_eq!(
            CanonicalCP::from_pairs(3, [(1, 1), (2, 2)]).to_string(),
            "z0^3 * (z0^2 - 1 u)^1 * (z0^2 - 4 u)^2"
        );
        assert_eq!(CanonicalCP::from_pairs(0, []).to_string(), "1");
    }

    #[test]
    fn division() {
        let p = MultiPoly::from_terms([
            (BigInt::from(1), [3, 0, 0, 0]),
            (BigInt::from(-4), [1, 2, 0, 0]),
            (BigInt::from(-4), [1, 0, 1, 1]),
        ]);
        let q = p.exact_divide(&z(0)).unwrap();
        assert_eq!(
            q,
            MultiPoly::from_terms([
                (BigInt::from(1), [2, 0, 0, 0]),
                (BigInt::from(-4), [0, 2, 0, 0]),
                (BigInt::from(-4), [0, 0, 1, 1]),
            ])
        );
        assert_eq!(&q * &z(0), p);
        assert_eq!(p.exact_divide(&p).unwrap(), MultiPoly::one());
        let p = &(&z(0) * &z(0)) + &c(1);
        assert_eq!(p.exact_divide(&z(0)), Err(Error::NotDivisible));
        assert_eq!(c(3).exact_divide(&c(2)), Err(Error::NotDivisible));
        assert_eq!(c(6).exact_divide(&c(-2)).unwrap(), c(-3));
        assert!(p.exact_divide(&MultiPoly::zero()).is_err());
    }

    #[test]
    fn canonical_expansion_examples() {
        assert_eq!(CanonicalCP::unit().expand(), z(0));
        assert_eq!(CanonicalCP::from_pairs(0, [(1, 1)]).expand(), q1());
        let p = CanonicalCP::from_pairs(1, [(2, 1)]).expand();
        // z0 (z0^2 - 4 z1^2 - 4 z2 z3), multiplied out by hand
        let by_hand =
            &z(0) * &(&(&z(0) * &z(0)) - &(&c(4) * &(&(&z(1) * &z(1)) + &(&z(2) * &z(3)))));
        assert_eq!(p, by_hand);
    }

    #[test]
    fn uform_examples() {
        let u = UPoly::var(1);
        let z0 = UPoly::var(0);
        assert_eq!(to_uform(&q1()), &(&z0 * &z0) - &u);
        assert_eq!(to_uform(&z(0)), z0.clone());
        let p = CanonicalCP::from_pairs(1, [(2, 1)]).expand();
        let expected = &z0.pow(3) - &(&UPoly::constant(BigInt::from(4)) * &(&z0 * &u));
        assert_eq!(to_uform(&p), expected);
    }

    #[test]
    fn recognize_examples() {
        let p = CanonicalCP::from_pairs(1, [(2, 1)]).expand();
        assert_eq!(recognize(&p).unwrap(), CanonicalCP::from_pairs(1, [(2, 1)]));

        let wrong_sign = &(&(&z(0) * &z(0)) + &(&z(1) * &z(1))) + &(&z(2) * &z(3));
        assert_eq!(
            recognize(&wrong_sign).unwrap_err().kind(),
            crate::ErrorKind::NotCharPoly
        );

        // (z0^2 - 4u)^2: factors fine but d0 = 0 < d2
        let p = CanonicalCP::from_pairs(0, [(2, 2)]).expand();
        assert_eq!(recognize(&p), Err(Error::NotAdmissible { weight: 0 }));

        // a lone high factor is reported as inadmissible, not unrecognized
        let p = CanonicalCP::from_pairs(0, [(10, 1)]).expand();
        assert_eq!(recognize(&p), Err(Error::NotAdmissible { weight: 8 }));

        assert!(recognize(&MultiPoly::zero()).is_err());
        assert!(recognize(&-&z(0)).is_err());
        assert!(recognize(&c(2)).is_err());
        assert_eq!(
            recognize(&MultiPoly::one()).unwrap(),
            CanonicalCP::from_pairs(0, [])
        );
        // right u-form but wrong z1 dependence: z0^2 - z1^2 - z2 z3 + z1 z0
        let skew = &q1() + &(&z(0) * &z(1));
        assert_eq!(
            recognize(&skew).unwrap_err().kind(),
            crate::ErrorKind::NotCharPoly
        );
        // z0^2 - 2u has no integral factor
        let p = &(&z(0) * &z(0)) - &(&c(2) * &u_poly());
        assert_eq!(
            recognize(&p).unwrap_err().kind(),
            crate::ErrorKind::NotCharPoly
        );
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(q1().evaluate(&big([3, 1, 2, 2])), BigInt::from(4));
        let p = &q1().pow(3) + &c(11);
        assert_eq!(p.evaluate(&big([0, 0, 0, 0])), BigInt::from(11));
        assert_eq!(z(0).evaluate(&big([7, 5, -3, 2])), BigInt::from(7));
    }

    #[test]
    fn binomial_substitution_matches_direct_product() {
        for (d0, pairs) in [
            (1u64, vec![(2u64, 1u64)]),
            (2, vec![(1, 3), (2, 1)]),
            (0, vec![(3, 2), (1, 2)]),
        ] {
            let cp = CanonicalCP::from_pairs(d0, pairs.clone());
            let mut direct = z(0).pow(d0 as u32);
            for (n, k) in pairs {
                let n2 = c((n * n) as i64);
                let factor = &(&z(0) * &z(0)) - &(&n2 * &u_poly());
                direct = naive_mul(&direct, &factor.pow(k as u32));
            }
            assert_eq!(cp.expand(), direct);
        }
    }

    // Every admissible canonical form with z0-degree <= max_deg.
    fn admissible_forms(max_deg: u64) -> Vec<CanonicalCP> {
        let mut out = Vec::new();
        let mut stack = vec![(0u64, max_deg, Vec::<(u64, u64)>::new())];
        while let Some((m, left, acc)) = stack.pop() {
            if m + 1 > left {
                let d = crate::weights::Decomposition::from_multiplicities(acc);
                out.push(CanonicalCP::from_weights(
                    &crate::weights::weights_of_decomposition(&d),
                ));
                continue;
            }
            for k in 0..=left / (m + 1) {
                let mut next = acc.clone();
                next.push((m, k));
                stack.push((m + 1, left - k * (m + 1), next));
            }
        }
        out
    }

    #[test]
    fn recognize_inverts_expand_up_to_degree_20() {
        let forms = admissible_forms(20);
        assert_eq!(forms.len(), 2714); // Σ_{k<=20} p(k)
        for cp in forms {
            let p = cp.expand();
            assert!(p.is_homogeneous());
            assert_eq!(p.total_degree(), Some(cp.degree() as u32));
            assert_eq!(recognize(&p).as_ref(), Ok(&cp));
        }
    }

    fn poly_strategy() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec((-20i64..20, proptest::array::uniform4(0u32..3)), 0..6)
            .prop_map(|ts| MultiPoly::from_terms(ts.into_iter().map(|(c, e)| (BigInt::from(c), e))))
    }

    fn point_strategy() -> impl Strategy<Value = [BigInt; 4]> {
        proptest::array::uniform4(-1000i64..1000).prop_map(|a| a.map(BigInt::from))
    }

    fn cp_strategy() -> impl Strategy<Value = CanonicalCP> {
        (
            0u64..4,
            proptest::collection::btree_map(1u64..6, 1u64..3, 0..3),
        )
            .prop_map(|(d0, f)| CanonicalCP::new(d0, f).unwrap())
    }

    fn seeded(cases: u32) -> Config {
        Config {
            cases,
            rng_seed: RngSeed::Fixed(0x5eed_0002),
            failure_persistence: None,
            ..Config::default()
        }
    }

    proptest! {
        #![proptest_config(seeded(64))]

        #[test]
        fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, naive_mul(&a, &b));
            prop_assert!((&(&a - &b) + &(&b - &a)).is_zero());
        }

        #[test]
        fn division_inverts_multiplication(a in poly_strategy(), b in poly_strategy()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in poly_strategy(), b in poly_strategy(), x in point_strategy()) {
            prop_assert_eq!((&a * &b).evaluate(&x), a.evaluate(&x) * b.evaluate(&x));
            prop_assert_eq!((&a + &b).evaluate(&x), a.evaluate(&x) + b.evaluate(&x));
        }

        #[test]
        fn canonical_forms_depend_only_on_u(cp in cp_strategy(), z0 in -50i64..50, z1 in -50i64..50, z2 in 1i64..50, t in -50i64..50) {
            // (z1, z2, z3) and (z1', z2', z3') = (t, z2, z3 + (z1² - t²)/z2) have equal u
            // when z2 divides z1² - t²; use z2' = 1 to make that always hold.
            let p = cp.expand();
            let u = z1 * z1 + z2 * 3;
            let a = big([z0, z1, z2, 3]);
            let b = big([z0, t, 1, u - t * t]);
            prop_assert_eq!(p.evaluate(&a), p.evaluate(&b));
            prop_assert_eq!(p.evaluate(&a), cp.evaluate(&a));
            prop_assert_eq!(recognize(&p).is_ok(), cp.is_admissible());
        }
    }
}
