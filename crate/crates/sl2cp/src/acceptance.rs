//! The acceptance suite: nine numbered criteria, each exact (zero tolerance)
//! and each with a wall-clock budget.

use std::time::Duration;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use sl2cp_core::charpoly::{pencil_det_at, pencil_verify_exact};
use sl2cp_core::monoid::{clebsch_gordan, random_decomposition, random_elements};
use sl2cp_core::poly::{evaluate, expand_canonical, recognize};
use sl2cp_core::rep::{direct_sum, h_weights, irrep_matrices, tensor};
use sl2cp_core::sln::{ad_restriction_rep, adjoint_charpoly, adjoint_report};
use sl2cp_core::weights::{
    convolve, decomposition_of_weights, is_admissible, weights_of_decomposition,
};
use sl2cp_core::{
    charpoly_of_rep, conjugate_basis, decompose_charpoly, hu_zhang_check, pencil_det_exact,
    pencil_verify_randomized, resolution_product, symmetry_identity_check, verify_monoid_laws,
    CanonicalCP, Decomposition, Error, MatrixTriple, MonoidElement, MultiPoly, RationalMatrix,
    RepTriple, WeightVector,
};

use crate::expr::RepExpr;
use crate::json;

/// Polynomial and rational comparisons are exact.
pub const TOLERANCE: f64 = 0.0;

/// Minimum number of cases the property harness must run.
pub const MIN_PROPERTY_CASES: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub budget: Duration,
}

pub const CRITERIA: [Criterion; 9] = [
    Criterion {
        id: 1,
        name: "irreducible formula",
        budget: Duration::from_secs(30),
    },
    Criterion {
        id: 2,
        name: "specialized product identity",
        budget: Duration::from_secs(30),
    },
    Criterion {
        id: 3,
        name: "bijection",
        budget: Duration::from_secs(10),
    },
    Criterion {
        id: 4,
        name: "tensor three-way identity",
        budget: Duration::from_secs(10),
    },
    Criterion {
        id: 5,
        name: "monoid laws",
        budget: Duration::from_secs(10),
    },
    Criterion {
        id: 6,
        name: "symmetry identity",
        budget: Duration::from_secs(10),
    },
    Criterion {
        id: 7,
        name: "conjugation construction",
        budget: Duration::from_secs(5),
    },
    Criterion {
        id: 8,
        name: "adjoint restriction",
        budget: Duration::from_secs(60),
    },
    Criterion {
        id: 9,
        name: "property suites",
        budget: Duration::from_secs(120),
    },
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    pub trials: u32,
    pub exact_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            trials: sl2cp_core::DEFAULT_TRIALS,
            exact_cap: sl2cp_core::DEFAULT_EXACT_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "name": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
        })
    }
}

/// Collects named checks; errors count as failures.
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn check_result(&mut self, r: Result<bool, Error>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: {}", what(), e));
            }
        }
    }

    fn finish(self, c: &Criterion) -> Outcome {
        Outcome {
            id: c.id,
            name: c.name,
            passed: self.failures.is_empty() && self.checks > 0,
            checks: self.checks,
            failures: self.failures,
        }
    }
}

pub fn run_criterion(id: u8, cfg: &Config) -> Outcome {
    let c = CRITERIA
        .iter()
        .find(|c| c.id == id)
        .unwrap_or_else(|| panic!("no criterion {}", id));
    let mut t = Tally::new();
    match id {
        1 => irreducible_formula(&mut t),
        2 => specialized_product(&mut t, cfg),
        3 => bijection(&mut t, cfg),
        4 => three_way(&mut t, cfg),
        5 => monoid_laws(&mut t, cfg),
        6 => symmetry(&mut t, cfg),
        7 => conjugation(&mut t, cfg),
        8 => adjoint(&mut t, cfg),
        _ => properties(&mut t, cfg),
    }
    t.finish(c)
}

pub fn run_all(cfg: &Config) -> Vec<Outcome> {
    CRITERIA.iter().map(|c| run_criterion(c.id, cfg)).collect()
}

fn rng_for(cfg: &Config, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    rng
}

fn build(d: &Decomposition) -> RepTriple {
    let mut parts = d
        .summands()
        .map(irrep_matrices)
        .collect::<Vec<_>>()
        .into_iter();
    let first = parts.next().unwrap_or_else(|| irrep_matrices(0));
    parts.fold(first, |acc, x| direct_sum(&acc, &x))
}

fn u_poly(scale: i64) -> MultiPoly {
    let z = |i| MultiPoly::var(i);
    let u = &(&z(1) * &z(1)) + &(&z(2) * &z(3));
    &(&z(0) * &z(0)) - &u.scale(&BigInt::from(scale))
}

/// `z0 ∏_{l=1}^{m/2} (z0² - 4l² u)` for even `m`, `∏_{l=0}^{(m-1)/2} (z0² - (2l+1)² u)` for odd `m`.
fn irreducible_form(m: u64) -> (CanonicalCP, MultiPoly) {
    let m_i = m as i64;
    if m.is_multiple_of(2) {
        let cp = CanonicalCP::from_pairs(1, (1..=m / 2).map(|l| (2 * l, 1)));
        let direct = (1..=m_i / 2).fold(MultiPoly::var(0), |acc, l| &acc * &u_poly(4 * l * l));
        (cp, direct)
    } else {
        let cp = CanonicalCP::from_pairs(0, (0..=(m - 1) / 2).map(|l| (2 * l + 1, 1)));
        let direct = (0..=(m_i - 1) / 2).fold(MultiPoly::one(), |acc, l| {
            &acc * &u_poly((2 * l + 1).pow(2))
        });
        (cp, direct)
    }
}

fn irreducible_formula(t: &mut Tally) {
    for m in 0..=8 {
        let (cp, direct) = irreducible_form(m);
        let expanded = expand_canonical(&cp);
        t.check(expanded == direct, || {
            format!("m={}: canonical form expands wrongly", m)
        });
        let det = pencil_det_exact(&irrep_matrices(m));
        t.check_result(det.map(|d| d == expanded), || {
            format!("m={}: determinant differs", m)
        });
    }
}

fn specialized_product(t: &mut Tally, cfg: &Config) {
    for m in 0..=8 {
        t.check_result(hu_zhang_check(m, cfg.exact_cap.max(9)), || {
            format!("m={}: specialized determinant differs from product", m)
        });
    }
}

fn bijection(t: &mut Tally, cfg: &Config) {
    let mut rng = rng_for(cfg, 3);
    for k in 0..200 {
        let d = random_decomposition(&mut rng, 30);
        let back = charpoly_of_rep(&build(&d)).and_then(|cp| decompose_charpoly(&cp));
        t.check_result(back.map(|b| b == d), || {
            format!("sample {}: {:?} not recovered", k, d)
        });
    }
}

fn three_way(t: &mut Tally, cfg: &Config) {
    for m in 0..=4u64 {
        for n in 0..=m {
            let rep = tensor(&irrep_matrices(m), &irrep_matrices(n));
            let from_matrices = charpoly_of_rep(&rep);
            let product = resolution_product(
                &MonoidElement::irreducible(m),
                &MonoidElement::irreducible(n),
            );
            let from_irreps = (0..=n).fold(MultiPoly::one(), |acc, k| {
                &acc * &irreducible_form(m - n + 2 * k).1
            });
            let ctx = || format!("m={}, n={}", m, n);
            match from_matrices {
                Ok(cp) => {
                    t.check(&cp == product.cp(), || {
                        format!("{}: matrices vs resolution product", ctx())
                    });
                    t.check(cp.expand() == from_irreps, || {
                        format!("{}: matrices vs irreducible product", ctx())
                    });
                    let report = pencil_verify_randomized(&rep, &cp, cfg.trials, cfg.seed);
                    t.check(report.agreed, || {
                        format!("{}: pencil disagrees with formula", ctx())
                    });
                }
                Err(e) => t.check(false, || format!("{}: {}", ctx(), e)),
            }
            t.check_result(
                decompose_charpoly(product.cp()).map(|d| d == clebsch_gordan(m, n)),
                || format!("{}: decomposition is not Clebsch-Gordan", ctx()),
            );
        }
    }
}

fn monoid_laws(t: &mut Tally, cfg: &Config) {
    let mut family: Vec<MonoidElement> = (0..=5).map(MonoidElement::irreducible).collect();
    family.extend(random_elements(50, 12, cfg.seed));
    let report = verify_monoid_laws(&family, cfg.seed);
    t.check(report.exhaustive, || {
        "triples were sampled, not exhaustive".into()
    });
    t.check(report.passed(), || {
        format!("violations: {:?}", report.violations)
    });
}

fn symmetry(t: &mut Tally, cfg: &Config) {
    let cap = cfg.exact_cap.max(12);
    for m in 0..=6 {
        t.check_result(symmetry_identity_check(&irrep_matrices(m), cap), || {
            format!("irrep {}", m)
        });
    }
    let mut rng = rng_for(cfg, 6);
    for k in 0..20 {
        let d = random_decomposition(&mut rng, 12);
        t.check_result(symmetry_identity_check(&build(&d), cap), || {
            format!("sum {}: {:?}", k, d)
        });
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn random_rational<R: Rng>(rng: &mut R, nonzero: bool) -> BigRational {
    loop {
        let x = rat(rng.gen_range(-30..=30), rng.gen_range(1..=12));
        if !nonzero || !x.is_zero() {
            return x;
        }
    }
}

/// A random rational 2x2 matrix with trace 0 and determinant -1.
fn random_involution<R: Rng>(rng: &mut R) -> RationalMatrix {
    let one = BigRational::one();
    let (a, b, c) = if rng.gen_ratio(1, 5) {
        let s = if rng.gen_bool(0.5) { one } else { -one };
        (s, BigRational::zero(), random_rational(rng, false))
    } else {
        let a = random_rational(rng, false);
        let b = random_rational(rng, true);
        let c = (&one - &a * &a) / &b;
        (a, b, c)
    };
    let na = -a.clone();
    RationalMatrix::from_rows(vec![vec![a, b], vec![c, na]]).expect("2x2")
}

fn conjugation_holds(hp: &RationalMatrix) -> Result<bool, Error> {
    let (a, triple) = conjugate_basis(hp)?;
    let std = MatrixTriple::standard();
    let image = std.conjugate_by(&a);
    Ok(triple.check_brackets()
        && triple.h == *hp
        && image.as_ref() == Some(&triple)
        && std.h.conjugate_by(&a).as_ref() == Some(hp))
}

fn conjugation(t: &mut Tally, cfg: &Config) {
    let mut rng = rng_for(cfg, 7);
    for k in 0..100 {
        let hp = random_involution(&mut rng);
        t.check_result(conjugation_holds(&hp), || format!("sample {}: {:?}", k, hp));
    }
    let half = |n| rat(n, 2);
    let hp = RationalMatrix::from_integers(&[[0, 1], [1, 0]]);
    let e1 = RationalMatrix::from_rows(vec![vec![half(1), half(-1)], vec![half(1), half(-1)]])
        .expect("2x2");
    let e2 = RationalMatrix::from_rows(vec![vec![half(1), half(1)], vec![half(-1), half(-1)]])
        .expect("2x2");
    let explicit = MatrixTriple::new(hp.clone(), e1, e2).expect("shapes");
    t.check(explicit.check_brackets(), || {
        "explicit triple for h' = e1 + e2 fails".into()
    });
    t.check_result(conjugation_holds(&hp), || {
        "construction for h' = e1 + e2".into()
    });
}

fn adjoint(t: &mut Tally, cfg: &Config) {
    for n in 2..=5usize {
        let dim = (n * n - 1) as u64;
        let expected_d0 = dim - 2 - 2 * (2 * n as u64 - 4);
        let mut forms = Vec::new();
        for i in 1..n {
            let ctx = || format!("n={}, i={}", n, i);
            let rep = match ad_restriction_rep(n, i) {
                Ok(r) => r,
                Err(e) => {
                    t.check(false, || format!("{}: {}", ctx(), e));
                    continue;
                }
            };
            t.check(rep.check_brackets(), || format!("{}: brackets fail", ctx()));
            match adjoint_charpoly(n, i) {
                Ok(cp) => {
                    let report = pencil_verify_randomized(&rep, &cp, cfg.trials, cfg.seed);
                    t.check(report.agreed, || {
                        format!("{}: randomized check disagrees", ctx())
                    });
                    t.check(cp.d0() == expected_d0, || {
                        format!("{}: z0 exponent {} != {}", ctx(), cp.d0(), expected_d0)
                    });
                    t.check(cp.degree() == dim, || {
                        format!("{}: degree {}", ctx(), cp.degree())
                    });
                    forms.push(cp);
                }
                Err(e) => t.check(false, || format!("{}: {}", ctx(), e)),
            }
        }
        t.check(forms.windows(2).all(|w| w[0] == w[1]), || {
            format!("n={}: forms differ across simple roots", n)
        });
        match adjoint_report(n) {
            Ok(r) => t.check(
                !r.matches
                    && r.computed_z0_exponent == expected_d0
                    && r.quoted_z0_exponent == (n * n) as i64 - 5 * n as i64 + 6,
                || format!("n={}: comparison report {:?}", n, r),
            ),
            Err(e) => t.check(false, || format!("n={}: {}", n, e)),
        }
    }
}

fn random_poly<R: Rng>(rng: &mut R) -> MultiPoly {
    let terms = rng.gen_range(0..=5);
    MultiPoly::from_terms((0..terms).map(|_| {
        (
            BigInt::from(rng.gen_range(-20..=20)),
            [0; 4].map(|_: u32| rng.gen_range(0..=3)),
        )
    }))
}

fn random_point<R: Rng>(rng: &mut R) -> [BigInt; 4] {
    [0; 4].map(|_: u8| BigInt::from(rng.gen_range(-1000..=1000)))
}

fn random_expr<R: Rng>(rng: &mut R, max_dim: u64) -> RepExpr {
    if max_dim < 2 || rng.gen_bool(0.4) {
        return RepExpr::Irrep(rng.gen_range(0..max_dim.min(7)));
    }
    if rng.gen_bool(0.5) {
        let a = random_expr(rng, max_dim - 1);
        let b = random_expr(rng, max_dim - a.dim());
        RepExpr::Sum(vec![a, b])
    } else {
        let a = random_expr(rng, max_dim / 2);
        let b = random_expr(rng, max_dim / a.dim());
        RepExpr::Tensor(vec![a, b])
    }
}

fn random_canonical<R: Rng>(rng: &mut R, max_dim: u64) -> CanonicalCP {
    CanonicalCP::from_weights(&weights_of_decomposition(&random_decomposition(
        rng, max_dim,
    )))
}

fn random_invertible_2x2<R: Rng>(rng: &mut R) -> RationalMatrix {
    loop {
        let m = RationalMatrix::from_fn(2, 2, |_, _| random_rational(rng, false));
        if !m.determinant().is_zero() {
            return m;
        }
    }
}

/// Every admissible canonical form of degree at most `degree`, one per
/// partition of the dimension into irreducible summands.
fn all_admissible_up_to(degree: u64) -> Vec<CanonicalCP> {
    fn go(largest: u64, left: u64, parts: &mut Vec<(u64, u64)>, out: &mut Vec<CanonicalCP>) {
        let d = Decomposition::from_multiplicities(parts.iter().copied());
        out.push(CanonicalCP::from_weights(&weights_of_decomposition(&d)));
        for size in 1..=largest.min(left) {
            parts.push((size - 1, 1));
            go(size, left - size, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    go(degree, degree, &mut Vec::new(), &mut out);
    out
}

/// The seeded property harness: every module invariant, sampled or exhaustive.
fn properties(t: &mut Tally, cfg: &Config) {
    let mut rng = rng_for(cfg, 9);

    // weights
    for _ in 0..60 {
        let d = random_decomposition(&mut rng, 30);
        let w = weights_of_decomposition(&d);
        t.check(is_admissible(&w), || {
            format!("weights of {:?} not admissible", d)
        });
        t.check(decomposition_of_weights(&w).as_ref() == Ok(&d), || {
            format!("round trip {:?}", d)
        });
    }
    let unit = WeightVector::trivial();
    for _ in 0..60 {
        let [a, b, c] =
            [0; 3].map(|_| weights_of_decomposition(&random_decomposition(&mut rng, 12)));
        let ab = convolve(&a, &b);
        t.check(ab == convolve(&b, &a), || "convolve not commutative".into());
        t.check(convolve(&ab, &c) == convolve(&a, &convolve(&b, &c)), || {
            "convolve not associative".into()
        });
        t.check(convolve(&a, &unit) == a && convolve(&unit, &a) == a, || {
            "trivial is not a unit".into()
        });
        t.check(is_admissible(&ab) && ab.dim() == a.dim() * b.dim(), || {
            "admissibility or dimension".into()
        });
    }

    // polynomial
    for _ in 0..40 {
        let [p, q, r] = [0; 3].map(|_| random_poly(&mut rng));
        t.check(&(&p * &q) * &r == &p * &(&q * &r), || {
            "product not associative".into()
        });
        t.check(&p * &(&q + &r) == &(&p * &q) + &(&p * &r), || {
            "not distributive".into()
        });
        t.check(&(&p + &q) + &r == &p + &(&q + &r), || {
            "sum not associative".into()
        });
        let x = random_point(&mut rng);
        t.check(
            evaluate(&(&p * &q), &x) == evaluate(&p, &x) * evaluate(&q, &x),
            || "evaluation not multiplicative".into(),
        );
    }
    let forms = all_admissible_up_to(20);
    t.check(forms.len() == 2714, || {
        format!("{} admissible forms of degree <= 20", forms.len())
    });
    for c in &forms {
        let p = expand_canonical(c);
        let homogeneous = p
            .terms()
            .all(|(e, _)| u64::from(e.iter().sum::<u32>()) == c.degree());
        t.check(homogeneous && recognize(&p).as_ref() == Ok(c), || {
            format!("homogeneity or recognition fails on {}", c)
        });
    }
    for _ in 0..40 {
        let c = random_canonical(&mut rng, 20);
        let p = expand_canonical(&c);
        let z: [i64; 4] = [0; 4].map(|_: u8| rng.gen_range(-50..=50));
        let u = z[1] * z[1] + z[2] * z[3];
        let z1p: i64 = rng.gen_range(-50..=50);
        let rest = u - z1p * z1p;
        let (z2p, z3p) = if rng.gen_bool(0.5) {
            (rest, 1)
        } else {
            (-1, -rest)
        };
        let a = z.map(BigInt::from);
        let b = [z[0], z1p, z2p, z3p].map(BigInt::from);
        t.check(evaluate(&p, &a) == evaluate(&p, &b), || {
            format!("{} depends on more than u", c)
        });
    }

    // repmatrix
    for m in 0..=8 {
        t.check(irrep_matrices(m).check_brackets(), || {
            format!("irrep {} brackets", m)
        });
    }
    for _ in 0..30 {
        let e = random_expr(&mut rng, 30);
        let rep = e.build();
        t.check_result(rep.map(|r| r.check_brackets()), || {
            format!("brackets on {:?}", e)
        });
        let a = random_expr(&mut rng, 6).build().expect("small");
        let b = random_expr(&mut rng, 5).build().expect("small");
        let (wa, wb) = (h_weights(&a).expect("diag"), h_weights(&b).expect("diag"));
        t.check(
            h_weights(&tensor(&a, &b)).as_ref() == Ok(&convolve(&wa, &wb)),
            || "tensor weights are not the convolution".into(),
        );
        t.check(
            h_weights(&direct_sum(&a, &b)).as_ref() == Ok(&wa.add(&wb)),
            || "direct sum weights are not the sum".into(),
        );
        let hp = random_involution(&mut rng);
        t.check_result(conjugation_holds(&hp), || {
            format!("conjugate basis of {:?}", hp)
        });
    }

    // charpoly
    for _ in 0..30 {
        let e = random_expr(&mut rng, 16);
        let rep = e.build().expect("small");
        let agree = charpoly_of_rep(&rep)
            .and_then(|cp| Ok(pencil_det_exact_capped(&rep, cfg)? == cp.expand()));
        t.check_result(agree, || format!("formula vs determinant on {:?}", e));
        let d = random_decomposition(&mut rng, 30);
        let back = charpoly_of_rep(&build(&d)).and_then(|cp| decompose_charpoly(&cp));
        t.check(back.as_ref() == Ok(&d), || format!("bijection on {:?}", d));
    }
    for _ in 0..20 {
        let a = random_expr(&mut rng, 8).build().expect("small");
        let b = random_expr(&mut rng, 8).build().expect("small");
        let mult = (|| -> Result<bool, Error> {
            Ok(pencil_det_exact_capped(&direct_sum(&a, &b), cfg)?
                == &pencil_det_exact_capped(&a, cfg)? * &pencil_det_exact_capped(&b, cfg)?)
        })();
        t.check_result(mult, || "determinant not multiplicative".into());

        let block = random_invertible_2x2(&mut rng);
        let invariant = if a.dim() >= 2 {
            let p = RationalMatrix::identity(a.dim() - 2).block_diag(&block);
            let moved = a.conjugate_by(&p).expect("invertible");
            (|| -> Result<bool, Error> {
                Ok(pencil_det_exact_capped(&moved, cfg)? == pencil_det_exact_capped(&a, cfg)?)
            })()
        } else {
            Ok(true)
        };
        t.check_result(invariant, || "determinant changed under conjugation".into());

        let cp = charpoly_of_rep(&a).expect("admissible");
        let wrong = random_canonical(&mut rng, a.dim() as u64);
        for candidate in [&cp, &wrong] {
            let fast = pencil_verify_randomized(&a, candidate, cfg.trials, cfg.seed);
            let slow = pencil_verify_exact(&a, candidate, cfg.exact_cap.max(16), cfg.seed);
            t.check(
                slow.map(|s| s.agreed == fast.agreed).unwrap_or(false),
                || "exact and randomized modes disagree".into(),
            );
        }
    }

    // monoid
    for m in 0..=4u64 {
        for n in 0..=4u64 {
            let prod = resolution_product(
                &MonoidElement::irreducible(m),
                &MonoidElement::irreducible(n),
            );
            let rep = tensor(&irrep_matrices(m), &irrep_matrices(n));
            let (hi, lo) = (m.max(n), m.min(n));
            let from_irreps = (0..=lo).fold(MultiPoly::one(), |acc, k| {
                &acc * &irreducible_form(hi - lo + 2 * k).1
            });
            t.check(
                charpoly_of_rep(&rep).as_ref() == Ok(prod.cp())
                    && prod.cp().expand() == from_irreps,
                || format!("three-way identity at ({}, {})", m, n),
            );
            t.check(
                decompose_charpoly(prod.cp()).as_ref() == Ok(&clebsch_gordan(m, n)),
                || format!("Clebsch-Gordan at ({}, {})", m, n),
            );
        }
    }
    let small: Vec<MonoidElement> = all_admissible_up_to(6)
        .into_iter()
        .filter(|c| c.degree() >= 1)
        .map(|c| MonoidElement::new(c).expect("admissible"))
        .collect();
    let report = verify_monoid_laws(&small, cfg.seed);
    t.check(
        report.exhaustive && report.passed() && small.len() == 29,
        || format!("laws on dimension <= 6: {:?}", report.violations),
    );
    let wide = random_elements(40, 24, cfg.seed ^ 0x9);
    let report = verify_monoid_laws(&wide, cfg.seed);
    t.check(report.passed(), || {
        format!("laws on random elements: {:?}", report.violations)
    });
    let unit = MonoidElement::unit();
    for a in &wide {
        t.check(
            &resolution_product(a, &unit) == a && &resolution_product(&unit, a) == a,
            || format!("unit law on {}", a.cp()),
        );
    }

    // sln
    for n in 2..=6usize {
        for i in 1..n {
            let k = n as i64;
            let expected = WeightVector::from_multiplicities([
                (0, ((k - 1) + (k - 2) * (k - 3)) as u64),
                (1, 2 * n as u64 - 4),
                (2, 1),
            ]);
            let ok = ad_restriction_rep(n, i).and_then(|r| {
                let cp = adjoint_charpoly(n, i)?;
                let mut ok = r.check_brackets()
                    && h_weights(&r)? == expected
                    && cp.degree() == (n * n - 1) as u64;
                if n <= 5 {
                    ok &= pencil_verify_randomized(&r, &cp, cfg.trials, cfg.seed).agreed;
                }
                Ok(ok)
            });
            t.check_result(ok, || format!("adjoint restriction n={}, i={}", n, i));
        }
    }

    // formats
    for _ in 0..40 {
        let d = random_decomposition(&mut rng, 30);
        let w = weights_of_decomposition(&d);
        let c = CanonicalCP::from_weights(&w);
        let p = random_poly(&mut rng);
        let rep = random_expr(&mut rng, 10).build().expect("small");
        let reparse = |v: Value| serde_json::from_str::<Value>(&v.to_string()).expect("valid json");
        t.check(
            json::decomposition_from_json(&reparse(json::decomposition_to_json(&d))).as_ref()
                == Ok(&d)
                && json::weights_from_json(&reparse(json::weights_to_json(&w))).as_ref() == Ok(&w)
                && json::canonical_from_json(&reparse(json::canonical_to_json(&c))).as_ref()
                    == Ok(&c)
                && json::poly_from_json(&reparse(json::poly_to_json(&p))).as_ref() == Ok(&p)
                && crate::text::parse_poly(&p.to_string()).map_or(p.is_zero(), |q| q == p)
                && crate::text::parse_canonical(&c.to_string()).as_ref() == Ok(&c)
                && json::rep_from_json(&reparse(json::triple_to_json(&rep))).as_ref() == Ok(&rep),
            || "format round trip".into(),
        );
    }

    // The pencil evaluated at a point matches the expanded determinant there.
    for _ in 0..10 {
        let rep = random_expr(&mut rng, 10).build().expect("small");
        let x = random_point(&mut rng);
        let ok = pencil_det_exact(&rep)
            .map(|p| BigRational::from_integer(evaluate(&p, &x)) == pencil_det_at(&rep, &x));
        t.check_result(ok, || "pointwise determinant".into());
    }

    if t.checks < MIN_PROPERTY_CASES {
        t.failures.push(format!(
            "only {} cases, need {}",
            t.checks, MIN_PROPERTY_CASES
        ));
    }
}

fn pencil_det_exact_capped(t: &MatrixTriple, cfg: &Config) -> Result<MultiPoly, Error> {
    sl2cp_core::pencil_det_exact_with_cap(t, cfg.exact_cap.max(16))
}
