//! Command-line front end. Reports are JSON (keys sorted, `"schema": 1`) or
//! plain `key: value` text. Exit codes: 0 pass, 1 semantic failure, 2 input
//! error.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error as ThisError;

use crate::curv::{
    never_integrable_witness, decompose, duality_verdict, matrix_strings, operator_at, sectional_constant_check,
    theorem_verdict, twistor_mixed_nijenhuis, MetricId,
};
use crate::error::Error;
use crate::exact::{fmt_rational, int, parse_ratfunc, rat, Point};
use crate::gpx::{gen_metric, validate_gen_metric, validate_gen_para, Component, GenVector};
use crate::linalg::Matrix;
use crate::para::{paired_orthogonal_basis, validate_para};
use crate::patch::{integrability_report, BiVectorField, KForm, PatchExample};
use crate::report::ValidationReport;
use crate::{FMatrix, SMatrix};

pub const SCHEMA: u32 = 1;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "genpara", version, about = "Exact checks for generalized paracomplex structures")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct PointArgs {
    /// Single point, comma-separated rationals; may repeat.
    #[arg(long = "point", allow_hyphen_values = true)]
    pub point: Vec<String>,
    /// Points separated by `;`.
    #[arg(long, allow_hyphen_values = true)]
    pub points: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the defining invariants of a structure descriptor.
    Validate {
        descriptor: PathBuf,
        #[command(flatten)]
        at: PointArgs,
    },
    /// Decide integrability of a structure example.
    Integrability {
        descriptor: PathBuf,
        #[command(flatten)]
        at: PointArgs,
    },
    /// Curvature operator and its decomposition at a point.
    Curvature {
        metric: String,
        #[command(flatten)]
        at: PointArgs,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        orientation: String,
    },
    /// Integrability verdict for a component of the generalized reflector space.
    Theorem {
        metric: String,
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        #[arg(long, default_value = "++", allow_hyphen_values = true)]
        component: String,
        #[command(flatten)]
        at: PointArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        epsilon: u8,
        /// Number of (Jklr) spot checks.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parse arguments and run; never exits the process.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return Outcome { stdout: String::new(), stderr: e.render().to_string(), code };
        }
    };
    let format = cli.format;
    match execute(cli.command) {
        Ok((mut v, code)) => {
            v["schema"] = json!(SCHEMA);
            Outcome { stdout: render(&v, format), stderr: String::new(), code }
        }
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 },
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")),
        Format::Text => {
            let mut out = String::new();
            if let Value::Object(m) = v {
                for (k, val) in m {
                    let s = match val {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    out.push_str(&format!("{k}: {s}\n"));
                }
            }
            out
        }
    }
}

fn execute(cmd: Command) -> Result<(Value, i32), CliError> {
    match cmd {
        Command::Validate { descriptor, at } => cmd_validate(&descriptor, &at),
        Command::Integrability { descriptor, at } => cmd_integrability(&descriptor, &at),
        Command::Curvature { metric, at, orientation } => cmd_curvature(&metric, &at, &orientation),
        Command::Theorem { metric, theta, component, at, seed, epsilon, samples } => {
            cmd_theorem(&metric, theta.as_deref(), &component, &at, seed, epsilon, samples)
        }
    }
}

// descriptors

/// Matrix of rational-function strings, or a form expression `c*dxi^dxj + …`
/// (for bivectors `dxi` stands for `∂ᵢ`).
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum FieldInput {
    Terms(String),
    Matrix(Vec<Vec<String>>),
}

fn four() -> usize {
    4
}

/// Structure descriptor file.
#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "structure", rename_all = "snake_case", deny_unknown_fields)]
pub enum Descriptor {
    Trivial {
        dim: usize,
    },
    Omega {
        #[serde(default = "four")]
        dim: usize,
        omega: FieldInput,
    },
    Pi {
        #[serde(default = "four")]
        dim: usize,
        pi: FieldInput,
    },
    Product {
        p: Vec<Vec<String>>,
    },
    Para {
        g: Vec<Vec<String>>,
        k: Vec<Vec<String>>,
    },
    Generalized {
        k: Vec<Vec<String>>,
    },
    Metric {
        g: Vec<Vec<String>>,
        #[serde(default)]
        theta: Option<FieldInput>,
    },
}

fn parse_matrix(rows: &[Vec<String>]) -> Result<FMatrix, CliError> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Usage("matrix must be square and nonempty".into()));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|c| parse_ratfunc(c)).collect::<crate::Result<Vec<_>>>())
        .collect::<crate::Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(parsed))
}

fn two_form(dim: usize, f: &FieldInput) -> Result<FMatrix, CliError> {
    match f {
        FieldInput::Terms(s) => {
            let w = KForm::parse(dim, s)?;
            if w.degree() != 2 {
                return Err(CliError::Usage("expected a 2-form expression".into()));
            }
            Ok(w.to_matrix())
        }
        FieldInput::Matrix(m) => {
            let a = parse_matrix(m)?;
            if a.rows() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: a.rows() }.into());
            }
            if !a.is_antisymmetric() {
                return Err(CliError::Usage("matrix must be antisymmetric".into()));
            }
            Ok(a)
        }
    }
}

pub fn load_descriptor(path: &Path) -> Result<Descriptor, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn descriptor_dim(d: &Descriptor) -> usize {
    match d {
        Descriptor::Trivial { dim } | Descriptor::Omega { dim, .. } | Descriptor::Pi { dim, .. } => *dim,
        Descriptor::Product { p } => p.len(),
        Descriptor::Para { g, .. } | Descriptor::Metric { g, .. } => g.len(),
        Descriptor::Generalized { k } => k.len() / 2,
    }
}

fn to_example(d: &Descriptor) -> Result<Option<PatchExample>, CliError> {
    Ok(match d {
        Descriptor::Trivial { dim } => Some(PatchExample::Trivial(*dim)),
        Descriptor::Omega { dim, omega } => Some(PatchExample::Omega(KForm::from_matrix(&two_form(*dim, omega)?))),
        Descriptor::Pi { dim, pi } => Some(PatchExample::Pi(BiVectorField::from_matrix(two_form(*dim, pi)?)?)),
        Descriptor::Product { p } => Some(PatchExample::Product(parse_matrix(p)?)),
        _ => None,
    })
}

/// Five fixed rational points in dimension `n`, the origin first.
pub fn default_points(n: usize) -> Vec<Point> {
    const SEEDS: [(i64, i64); 5] = [(0, 1), (3, 4), (-4, 3), (5, 12), (12, 5)];
    SEEDS
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| Point::new((0..n).map(|i| rat(a * (1 + ((i + k) % 3) as i64), b) - rat((i % 2) as i64 * k as i64, 2)).collect()))
        .collect()
}

fn points(at: &PointArgs, fallback: Vec<Point>) -> Result<Vec<Point>, CliError> {
    let mut out = Vec::new();
    for p in &at.point {
        out.push(Point::parse(p)?);
    }
    if let Some(list) = &at.points {
        for s in list.split(';').filter(|s| !s.trim().is_empty()) {
            out.push(Point::parse(s)?);
        }
    }
    Ok(if out.is_empty() { fallback } else { out })
}

fn point_json(p: &Point) -> Value {
    json!(p.coords().iter().map(fmt_rational).collect::<Vec<_>>())
}

fn report_json(r: &ValidationReport) -> Value {
    serde_json::to_value(r).expect("serializable")
}

// commands

fn cmd_validate(path: &Path, at: &PointArgs) -> Result<(Value, i32), CliError> {
    let d = load_descriptor(path)?;
    let dim = descriptor_dim(&d);
    let pts = points(at, default_points(dim))?;
    for p in &pts {
        p.check_dim(dim)?;
    }
    let mut structural = ValidationReport::new();
    let field: Option<FMatrix> = match &d {
        Descriptor::Product { p } => {
            let p = parse_matrix(p)?;
            let id = Matrix::identity(p.rows());
            structural.push("product_square_identity", &p * &p == id);
            structural.push("product_nontrivial", p != id && p != -id.clone());
            let z = Matrix::zeros(p.rows(), p.rows());
            Some(Matrix::from_blocks(&p, &z, &z, &-p.transpose()))
        }
        Descriptor::Omega { .. } => {
            let ex = to_example(&d)?.expect("example");
            match ex.structure() {
                Ok(k) => {
                    structural.push("omega_nondegenerate", true);
                    Some(k)
                }
                Err(Error::DegenerateOmega) => {
                    structural.push("omega_nondegenerate", false);
                    None
                }
                Err(e) => return Err(e.into()),
            }
        }
        Descriptor::Trivial { .. } | Descriptor::Pi { .. } => Some(to_example(&d)?.expect("example").structure()?),
        Descriptor::Generalized { k } => {
            let k = parse_matrix(k)?;
            if k.rows() % 2 != 0 {
                return Err(CliError::Usage("generalized structure must have even size".into()));
            }
            Some(k)
        }
        Descriptor::Para { .. } | Descriptor::Metric { .. } => None,
    };
    let mut per_point = Vec::new();
    let mut all = structural.all_pass();
    for p in &pts {
        let r = match &d {
            Descriptor::Para { g, k } => {
                let (g, k) = (parse_matrix(g)?.eval(p)?, parse_matrix(k)?.eval(p)?);
                if g.rows() != k.rows() {
                    return Err(Error::DimensionMismatch { expected: g.rows(), found: k.rows() }.into());
                }
                validate_para(&g, &k)
            }
            Descriptor::Metric { g, theta } => {
                let gf = parse_matrix(g)?;
                let th = match theta {
                    Some(t) => two_form(gf.rows(), t)?,
                    None => Matrix::zeros(gf.rows(), gf.rows()),
                };
                let (gp, tp) = (gf.eval(p)?, th.eval(p)?);
                let mut r = ValidationReport::new();
                match gen_metric(&gp, &tp) {
                    Ok(e) => {
                        r.push("neutral_signature", true);
                        r.extend("", validate_gen_metric(&e));
                    }
                    Err(Error::BadSignature) | Err(Error::NotSymmetric) | Err(Error::DegenerateMetric) => {
                        r.push("neutral_signature", false);
                    }
                    Err(e) => return Err(e.into()),
                }
                r
            }
            _ => match &field {
                Some(k) => validate_gen_para(&k.eval(p)?),
                None => ValidationReport::new(),
            },
        };
        all &= r.all_pass();
        per_point.push(json!({ "point": point_json(p), "report": report_json(&r) }));
    }
    let mut failed: Vec<String> = structural.failures().iter().map(|s| s.to_string()).collect();
    for pp in &per_point {
        for c in pp["report"]["checks"].as_array().into_iter().flatten() {
            let name = c["name"].as_str().unwrap_or_default().to_string();
            if c["passed"] == json!(false) && !failed.contains(&name) {
                failed.push(name);
            }
        }
    }
    let v = json!({
        "command": "validate",
        "structure": structure_name(&d),
        "passed": all,
        "failed": failed,
        "structural": report_json(&structural),
        "points": per_point,
    });
    Ok((v, if all { 0 } else { 1 }))
}

fn structure_name(d: &Descriptor) -> &'static str {
    match d {
        Descriptor::Trivial { .. } => "trivial",
        Descriptor::Omega { .. } => "omega",
        Descriptor::Pi { .. } => "pi",
        Descriptor::Product { .. } => "product",
        Descriptor::Para { .. } => "para",
        Descriptor::Generalized { .. } => "generalized",
        Descriptor::Metric { .. } => "metric",
    }
}

fn cmd_integrability(path: &Path, at: &PointArgs) -> Result<(Value, i32), CliError> {
    let d = load_descriptor(path)?;
    let ex = to_example(&d)?
        .ok_or_else(|| CliError::Usage("integrability needs a trivial, omega, pi or product descriptor".into()))?;
    let pts = points(at, default_points(ex.dim()))?;
    let r = integrability_report(&ex, &pts)?;
    let mut v = serde_json::to_value(&r).expect("serializable");
    v["command"] = json!("integrability");
    Ok((v, if r.integrable { 0 } else { 1 }))
}

fn parse_orientation(s: &str) -> Result<i8, CliError> {
    match s {
        "+" | "+1" | "1" => Ok(1),
        "-" | "-1" => Ok(-1),
        _ => Err(CliError::Usage(format!("orientation must be + or -, got `{s}`"))),
    }
}

fn surd_strings(m: &SMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect()
}

fn cmd_curvature(metric: &str, at: &PointArgs, orientation: &str) -> Result<(Value, i32), CliError> {
    let metric_id = MetricId::parse(metric)?;
    let (g, _) = metric_id.load()?;
    let o = parse_orientation(orientation)?;
    let pts = points(at, vec![Point::origin(4)])?;
    if pts.len() != 1 {
        return Err(CliError::Usage("curvature takes a single --point".into()));
    }
    let p = &pts[0];
    p.check_dim(4)?;
    let op = operator_at(&g, p)?;
    let dec = decompose(&op, o)?;
    let dv = duality_verdict(&dec);
    let v = json!({
        "command": "curvature",
        "metric": metric_id.to_string(),
        "point": point_json(p),
        "orientation": if o > 0 { "+" } else { "-" },
        "s": fmt_rational(&op.ricci.s),
        "ricci": matrix_strings(&op.ricci.ricci),
        "operator": matrix_strings(&op.m),
        "b_part": matrix_strings(&dec.b_part),
        "w_part": matrix_strings(&dec.w_part),
        "w_plus": surd_strings(&dec.w_plus),
        "w_minus": surd_strings(&dec.w_minus),
        "duality": dv,
        "sectional_constant": sectional_constant_check(&op).map(|c| fmt_rational(&c)),
    });
    Ok((v, 0))
}

fn gen_json(a: &GenVector<crate::Rational>) -> Value {
    json!({
        "vector": a.x.iter().map(fmt_rational).collect::<Vec<_>>(),
        "covector": a.alpha.iter().map(fmt_rational).collect::<Vec<_>>(),
    })
}

/// `𝒩_ε(Q₁ʰ, U)` at `p` on the never-integrable witness.
fn never_integrable_evidence(g: &FMatrix, theta: &KForm, p: &Point, eps: u8) -> Result<Value, CliError> {
    let gp = g.eval(p)?;
    let tp = theta.to_matrix().eval(p)?;
    let basis = paired_orthogonal_basis(&gp)?;
    let w = never_integrable_witness(&gp, &tp, &basis)?;
    let (a, u, q4) = if eps == 3 { (&w.q1[0], &w.u1, &w.q1[3]) } else { (&w.q2[0], &w.u2, &w.q2[3]) };
    let val = twistor_mixed_nijenhuis(&w.k, &w.e, a, u, eps)?;
    let n2 = gp.form(&basis.col(1), &basis.col(1));
    Ok(json!({
        "point": point_json(p),
        "value": gen_json(&val),
        "expected": gen_json(&q4.scale(&(n2 * int(2)))),
    }))
}

fn cmd_theorem(
    metric: &str,
    theta: Option<&str>,
    component: &str,
    at: &PointArgs,
    seed: u64,
    eps: u8,
    samples: usize,
) -> Result<(Value, i32), CliError> {
    if !(1..=4).contains(&eps) {
        return Err(CliError::Usage(format!("epsilon must be 1..4, got {eps}")));
    }
    let metric_id = MetricId::parse(metric)?;
    let (g, file_theta) = metric_id.load()?;
    let theta = match theta {
        Some(t) => KForm::parse(4, t)?,
        None => file_theta.unwrap_or_else(|| KForm::zero(4, 2)),
    };
    if theta.degree() != 2 {
        return Err(CliError::Usage("theta must be a 2-form".into()));
    }
    let comp = Component::parse(component)?;
    let pts = points(at, metric_id.default_points())?;
    let verdict = theorem_verdict(&g, &theta, comp, &pts, seed, samples)?;
    let mut failed = verdict.failed.clone();
    let mut integrable = verdict.integrable;
    let never_integrable = if eps != 1 {
        integrable = false;
        failed.push("epsilon_never_integrable".into());
        Some(never_integrable_evidence(&g, &theta, &pts[0], eps)?)
    } else {
        None
    };
    let v = json!({
        "command": "theorem",
        "metric": metric_id.to_string(),
        "theta": theta.to_string(),
        "component": comp,
        "epsilon": eps,
        "seed": seed,
        "integrable": integrable,
        "k1_integrable": verdict.integrable,
        "failed": failed,
        "evidence": {
            "points": verdict.points,
            "jklr": verdict.jklr,
            "np_witness": verdict.np_witness,
            "consistent": verdict.consistent,
            "never_integrable": never_integrable,
        },
    });
    Ok((v, if integrable { 0 } else { 1 }))
}
