//! Command-line front end.
//!
//! Success prints the payload on standard output and exits 0. Domain errors
//! print `{"status":"error","error_kind":..,"message":..}` and exit 1. Usage
//! errors print a diagnostic on standard error and exit 2. Any argument that
//! takes JSON or a polynomial may be given as `@path` to read it from a file.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sl2cp_core::charpoly::hu_zhang_product;
use sl2cp_core::charpoly::{pencil_verify_exact, specialize_e_ones};
use sl2cp_core::monoid::random_elements;
use sl2cp_core::poly::recognize;
use sl2cp_core::rep::{h_weights, irrep_matrices};
use sl2cp_core::sln::{ad_restriction_rep, adjoint_charpoly, adjoint_report};
use sl2cp_core::weights::weights_of_decomposition;
use sl2cp_core::{
    charpoly_of_rep, clebsch_gordan, conjugate_basis, decompose_charpoly,
    pencil_det_exact_with_cap, pencil_verify_randomized, resolution_product,
    symmetry_identity_check, verify_monoid_laws, CanonicalCP, Decomposition, Error, ErrorKind,
    MatrixTriple, MonoidElement, MultiPoly, RationalMatrix, RepTriple, WeightVector,
};

use crate::acceptance;
use crate::expr::rep_from_value;
use crate::json;
use crate::text;

type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    Exact,
    Randomized,
}

#[derive(Debug, Parser)]
#[command(
    name = "sl2cp",
    version,
    about = "Characteristic polynomials of sl(2) representations"
)]
pub struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Sample points for randomized identity tests.
    #[arg(long, global = true, default_value_t = sl2cp_core::DEFAULT_TRIALS)]
    pub trials: u32,
    /// Largest dimension for symbolic determinants.
    #[arg(long = "exact-cap", global = true, default_value_t = sl2cp_core::DEFAULT_EXACT_CAP)]
    pub exact_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Matrices of the irreducible representation of highest weight m.
    Irrep {
        #[arg(long)]
        m: u64,
    },
    /// Builds a representation from {"irrep":m} / {"sum":[..]} / {"tensor":[..]}.
    RepBuild {
        #[arg(long)]
        expr: String,
    },
    /// Characteristic polynomial of an irrep or a representation.
    #[command(group(ArgGroup::new("input").required(true).args(["m", "rep"])))]
    Charpoly {
        #[arg(long)]
        m: Option<u64>,
        /// Expression or full triple JSON.
        #[arg(long)]
        rep: Option<String>,
        /// Print the expanded polynomial instead of the factored form.
        #[arg(long)]
        expand: bool,
        /// Also check the formula against the pencil determinant.
        #[arg(long, value_enum)]
        oracle: Option<Oracle>,
    },
    /// Decomposition into irreducibles from a characteristic polynomial.
    Decompose {
        #[arg(long)]
        cp: String,
    },
    /// Canonical factored form of an expanded polynomial.
    Recognize {
        #[arg(long)]
        poly: String,
    },
    /// Product of two characteristic polynomials (the tensor product).
    Product {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Decomposition of irrep(m) ⊗ irrep(n).
    ClebschGordan {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Closure, commutativity, associativity and unit on a family of elements.
    MonoidCheck {
        /// JSON array of characteristic polynomials (JSON or text).
        #[arg(long)]
        elements: Option<String>,
        /// Include irreducibles 0..=k.
        #[arg(long, default_value_t = 5)]
        irreducible_max: u64,
        /// Number of seeded random elements.
        #[arg(long, default_value_t = 50)]
        random: usize,
        /// Largest dimension of the random elements.
        #[arg(long, default_value_t = 12)]
        max_dim: u64,
    },
    /// det at z2 = z3 = 1 against the closed product, for irrep(m).
    HuZhang {
        #[arg(long)]
        m: u64,
    },
    /// Symmetry identity of the pencil determinant.
    #[command(group(ArgGroup::new("input").required(true).args(["m", "rep"])))]
    SymmetryCheck {
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        rep: Option<String>,
    },
    /// Restriction of the adjoint representation of sl(n) to a simple root.
    Adjoint {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        i: usize,
        /// Compare the zero-weight multiplicity with n² - 5n + 6.
        #[arg(long)]
        report: bool,
    },
    /// Weight multiplicities of a decomposition or a representation.
    #[command(group(ArgGroup::new("input").required(true).args(["dec", "rep"])))]
    Weights {
        #[arg(long)]
        dec: Option<String>,
        #[arg(long)]
        rep: Option<String>,
    },
    /// Change of basis taking the standard triple to one with the given H.
    ConjugateBasis {
        /// 2x2 matrix JSON with trace 0 and determinant -1.
        #[arg(long)]
        hp: String,
    },
    /// Runs the full acceptance suite.
    VerifyAll,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub error_kind: Option<ErrorKind>,
}

impl CommandResult {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Error => 1,
        }
    }
}

/// Process-level result of [`run`].
#[derive(Debug, Clone, PartialEq)]
pub struct Execution {
    pub result: Option<CommandResult>,
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Rendered {
    json: Value,
    text: String,
}

impl Rendered {
    fn new(json: Value, text: impl Into<String>) -> Self {
        Rendered {
            json,
            text: text.into(),
        }
    }

    fn generic(json: Value) -> Self {
        let text = text_lines(&json);
        Rendered { json, text }
    }
}

pub fn run<I, T>(argv: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (rendered, String::new())
            } else {
                (String::new(), rendered)
            };
            return Execution {
                result: None,
                stdout,
                stderr,
                code,
            };
        }
    };
    let format = cli.format;
    let (result, mut stdout) = match execute(&cli) {
        Ok(r) => {
            let out = match format {
                Format::Json => r.json.to_string(),
                Format::Text => r.text,
            };
            (
                CommandResult {
                    status: Status::Ok,
                    payload: r.json,
                    error_kind: None,
                },
                out,
            )
        }
        Err(e) => {
            let envelope = json!({
                "status": "error",
                "error_kind": e.kind().as_str(),
                "message": e.to_string(),
            });
            let out = match format {
                Format::Json => envelope.to_string(),
                Format::Text => format!("error [{}]: {}", e.kind(), e),
            };
            (
                CommandResult {
                    status: Status::Error,
                    payload: envelope,
                    error_kind: Some(e.kind()),
                },
                out,
            )
        }
    };
    stdout.push('\n');
    let code = result.exit_code();
    Execution {
        result: Some(result),
        stdout,
        stderr: String::new(),
        code,
    }
}

fn read_arg(s: &str) -> Result<String> {
    match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::BadInput(format!("cannot read {}: {}", path, e))),
        None => Ok(s.to_string()),
    }
}

fn parse_json(s: &str) -> Result<Value> {
    serde_json::from_str(&read_arg(s)?).map_err(|e| Error::BadInput(format!("invalid JSON: {}", e)))
}

fn poly_from_value(v: &Value) -> Result<MultiPoly> {
    match v {
        Value::String(s) => text::parse_poly(s)
            .or_else(|e| text::parse_canonical(s).map(|c| c.expand()).map_err(|_| e)),
        Value::Object(o) if o.contains_key("terms") => json::poly_from_json(v),
        Value::Object(o) if o.contains_key("d0") => Ok(json::canonical_from_json(v)?.expand()),
        _ => Err(Error::BadInput("expected a polynomial".into())),
    }
}

fn cp_from_value(v: &Value) -> Result<CanonicalCP> {
    match v {
        Value::Object(o) if o.contains_key("d0") => json::canonical_from_json(v),
        Value::String(s) => text::parse_canonical(s).or_else(|_| recognize(&poly_from_value(v)?)),
        _ => recognize(&poly_from_value(v)?),
    }
}

/// A polynomial argument: JSON (canonical or expanded) or text.
fn arg_value(s: &str) -> Result<Value> {
    let raw = read_arg(s)?;
    let trimmed = raw.trim();
    if trimmed.starts_with('{') || trimmed.starts_with('[') || trimmed.starts_with('"') {
        serde_json::from_str(trimmed).map_err(|e| Error::BadInput(format!("invalid JSON: {}", e)))
    } else {
        Ok(Value::String(trimmed.to_string()))
    }
}

fn parse_cp(s: &str) -> Result<CanonicalCP> {
    cp_from_value(&arg_value(s)?)
}

fn parse_rep(s: &str) -> Result<RepTriple> {
    rep_from_value(&parse_json(s)?)
}

fn rep_or_irrep(m: Option<u64>, rep: Option<&str>) -> Result<RepTriple> {
    match (m, rep) {
        (Some(m), _) => {
            if m >= crate::expr::MAX_BUILD_DIM {
                return Err(Error::SizeCapExceeded {
                    dim: m as usize + 1,
                    cap: crate::expr::MAX_BUILD_DIM as usize,
                });
            }
            Ok(irrep_matrices(m))
        }
        (None, Some(r)) => parse_rep(r),
        (None, None) => Err(Error::BadInput("missing representation".into())),
    }
}

fn matrix_text(m: &RationalMatrix) -> String {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn triple_text(t: &MatrixTriple) -> String {
    format!(
        "H:\n{}\nE:\n{}\nF:\n{}",
        matrix_text(&t.h),
        matrix_text(&t.e),
        matrix_text(&t.f)
    )
}

fn pairs_text<'a>(it: impl Iterator<Item = (u64, u64)> + 'a) -> String {
    it.map(|(k, v)| format!("{}:{}", k, v))
        .collect::<Vec<_>>()
        .join(" ")
}

fn decomposition_rendered(d: &Decomposition) -> Rendered {
    Rendered::new(json::decomposition_to_json(d), pairs_text(d.iter()))
}

fn weights_rendered(w: &WeightVector) -> Rendered {
    Rendered::new(
        json::weights_to_json(w),
        format!("dim {}: {}", w.dim(), pairs_text(w.iter())),
    )
}

fn cp_rendered(c: &CanonicalCP, expand: bool) -> Rendered {
    if expand {
        let p = c.expand();
        Rendered::new(json::poly_to_json(&p), p.to_string())
    } else {
        Rendered::new(json::canonical_to_json(c), c.to_string())
    }
}

/// `key: value` per line; nested values stay compact JSON.
fn text_lines(v: &Value) -> String {
    match v {
        Value::Object(o) => {
            let mut out = String::new();
            for (k, x) in o {
                let shown = match x {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                let _ = writeln!(out, "{}: {}", k, shown);
            }
            out.pop();
            out
        }
        other => other.to_string(),
    }
}

fn execute(cli: &Cli) -> Result<Rendered> {
    let cap = cli.exact_cap;
    match &cli.command {
        Command::Irrep { m } => {
            let t = rep_or_irrep(Some(*m), None)?;
            Ok(Rendered::new(json::triple_to_json(&t), triple_text(&t)))
        }
        Command::RepBuild { expr } => {
            let t = parse_rep(expr)?;
            Ok(Rendered::new(json::triple_to_json(&t), triple_text(&t)))
        }
        Command::Charpoly {
            m,
            rep,
            expand,
            oracle,
        } => {
            let t = rep_or_irrep(*m, rep.as_deref())?;
            let cp = charpoly_of_rep(&t)?;
            let shown = cp_rendered(&cp, *expand);
            match oracle {
                None => Ok(shown),
                Some(Oracle::Exact) => {
                    let det = pencil_det_exact_with_cap(&t, cap)?;
                    let report = pencil_verify_exact(&t, &cp, cap, cli.seed)?;
                    Ok(Rendered::generic(json!({
                        "charpoly": shown.json,
                        "determinant": json::poly_to_json(&det),
                        "verification": json::report_to_json(&report),
                    })))
                }
                Some(Oracle::Randomized) => {
                    let report = pencil_verify_randomized(&t, &cp, cli.trials, cli.seed);
                    Ok(Rendered::generic(json!({
                        "charpoly": shown.json,
                        "verification": json::report_to_json(&report),
                    })))
                }
            }
        }
        Command::Decompose { cp } => {
            Ok(decomposition_rendered(&decompose_charpoly(&parse_cp(cp)?)?))
        }
        Command::Recognize { poly } => {
            let p = poly_from_value(&arg_value(poly)?)?;
            Ok(cp_rendered(&recognize(&p)?, false))
        }
        Command::Product { a, b } => {
            let a = MonoidElement::new(parse_cp(a)?)?;
            let b = MonoidElement::new(parse_cp(b)?)?;
            Ok(cp_rendered(resolution_product(&a, &b).cp(), false))
        }
        Command::ClebschGordan { m, n } => Ok(decomposition_rendered(&clebsch_gordan(*m, *n))),
        Command::MonoidCheck {
            elements,
            irreducible_max,
            random,
            max_dim,
        } => {
            let mut family: Vec<MonoidElement> = (0..=*irreducible_max)
                .map(MonoidElement::irreducible)
                .collect();
            if let Some(list) = elements {
                let v = parse_json(list)?;
                let items = v
                    .as_array()
                    .ok_or_else(|| Error::BadInput("--elements takes a JSON array".into()))?;
                for item in items {
                    family.push(MonoidElement::new(cp_from_value(item)?)?);
                }
            }
            if *random > 0 {
                if *max_dim == 0 {
                    return Err(Error::BadInput("--max-dim must be positive".into()));
                }
                family.extend(random_elements(*random, *max_dim, cli.seed));
            }
            Ok(Rendered::generic(json::monoid_report_to_json(
                &verify_monoid_laws(&family, cli.seed),
            )))
        }
        Command::HuZhang { m } => {
            let t = rep_or_irrep(Some(*m), None)?;
            let specialized = specialize_e_ones(&pencil_det_exact_with_cap(&t, cap)?);
            let product = hu_zhang_product(*m);
            Ok(Rendered::generic(json!({
                "m": m,
                "holds": specialized == product,
                "specialized": json::poly_to_json(&specialized),
                "product": json::poly_to_json(&product),
            })))
        }
        Command::SymmetryCheck { m, rep } => {
            let t = rep_or_irrep(*m, rep.as_deref())?;
            let holds = symmetry_identity_check(&t, cap)?;
            Ok(Rendered::generic(json!({ "dim": t.dim(), "holds": holds })))
        }
        Command::Adjoint { n, i, report } => {
            if *report {
                return Ok(Rendered::generic(json::adjoint_report_to_json(
                    &adjoint_report(*n)?,
                )));
            }
            let t = ad_restriction_rep(*n, *i)?;
            let cp = adjoint_charpoly(*n, *i)?;
            let check = pencil_verify_randomized(&t, &cp, cli.trials, cli.seed);
            Ok(Rendered::generic(json!({
                "n": n,
                "i": i,
                "dim": t.dim(),
                "brackets": t.check_brackets(),
                "weights": json::weights_to_json(&h_weights(&t)?),
                "charpoly": json::canonical_to_json(&cp),
                "verification": json::report_to_json(&check),
            })))
        }
        Command::Weights { dec, rep } => {
            let w = match (dec, rep) {
                (Some(d), _) => {
                    weights_of_decomposition(&json::decomposition_from_json(&parse_json(d)?)?)
                }
                (None, Some(r)) => h_weights(&parse_rep(r)?)?,
                (None, None) => return Err(Error::BadInput("missing input".into())),
            };
            Ok(weights_rendered(&w))
        }
        Command::ConjugateBasis { hp } => {
            let hp = json::matrix_from_json(&parse_json(hp)?)?;
            let (a, triple) = conjugate_basis(&hp)?;
            Ok(Rendered::new(
                json!({ "A": json::matrix_to_json(&a), "triple": json::triple_to_json(&triple) }),
                format!("A:\n{}\n{}", matrix_text(&a), triple_text(&triple)),
            ))
        }
        Command::VerifyAll => {
            let cfg = acceptance::Config {
                seed: cli.seed,
                trials: cli.trials,
                exact_cap: cap,
            };
            let outcomes = acceptance::run_all(&cfg);
            let all = outcomes.iter().all(|o| o.passed);
            let text = outcomes
                .iter()
                .map(|o| {
                    format!(
                        "{} {} {} ({} checks)",
                        if o.passed { "PASS" } else { "FAIL" },
                        o.id,
                        o.name,
                        o.checks
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Rendered::new(
                json!({
                    "all_passed": all,
                    "criteria": outcomes.iter().map(acceptance::Outcome::to_json).collect::<Vec<_>>(),
                }),
                text,
            ))
        }
    }
}
