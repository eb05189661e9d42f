use std::fmt;
use std::path::PathBuf;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact::{int, parse_ratfunc, parse_rational, Point, RatFunc, Rational};
use crate::linalg::{standard_neutral, Matrix};
use crate::patch::KForm;
use crate::FMatrix;

/// Named metric on a 4-dimensional patch.
#[derive(Clone, Debug, PartialEq)]
pub enum MetricId {
    /// `diag(1, 1, −1, −1)`.
    Flat,
    /// `φ⁻² diag(1,1,−1,−1)` with `φ = 1 + (c/4)(x₁² + x₂² − x₃² − x₄²)`.
    ConstCurv(Rational),
    /// `2dx₁dx₃ + 2dx₂dx₄ + f dx₁²`.
    PpWave(String),
    /// JSON file `{"g": [[...]], "theta": "..."}`.
    File(PathBuf),
}

#[derive(Deserialize)]
struct MetricFile {
    g: Vec<Vec<String>>,
    #[serde(default)]
    theta: Option<String>,
}

impl MetricId {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "flat" {
            return Ok(MetricId::Flat);
        }
        match s.split_once(':') {
            Some(("constcurv", c)) => Ok(MetricId::ConstCurv(parse_rational(c.trim())?)),
            Some(("ppwave", f)) => {
                parse_ratfunc(f)?;
                Ok(MetricId::PpWave(f.trim().to_string()))
            }
            Some(("file", p)) => Ok(MetricId::File(PathBuf::from(p))),
            _ => Err(Error::Input(format!("unknown metric `{s}`"))),
        }
    }

    /// Metric field and, for files, an optional 2-form.
    pub fn load(&self) -> Result<(FMatrix, Option<KForm>)> {
        match self {
            MetricId::Flat => Ok((flat_metric(), None)),
            MetricId::ConstCurv(c) => Ok((constcurv_metric(c), None)),
            MetricId::PpWave(f) => Ok((ppwave_metric(&parse_ratfunc(f)?), None)),
            MetricId::File(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| Error::Input(format!("{}: {e}", p.display())))?;
                let mf: MetricFile = serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", p.display())))?;
                let rows = mf
                    .g
                    .iter()
                    .map(|r| r.iter().map(|c| parse_ratfunc(c)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
                    return Err(Error::DimNot4);
                }
                let g = Matrix::from_rows(rows);
                if !g.is_symmetric() {
                    return Err(Error::NotSymmetric);
                }
                let theta = mf.theta.map(|t| KForm::parse(4, &t)).transpose()?;
                Ok((g, theta))
            }
        }
    }

    /// Five fixed rational points that avoid the poles of the catalog metrics
    /// and keep `1 + x₁²` a square.
    pub fn default_points(&self) -> Vec<Point> {
        DEFAULT_POINTS.iter().map(|s| Point::parse(s).expect("valid literal")).collect()
    }
}

impl fmt::Display for MetricId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricId::Flat => write!(f, "flat"),
            MetricId::ConstCurv(c) => write!(f, "constcurv:{}", crate::exact::fmt_rational(c)),
            MetricId::PpWave(s) => write!(f, "ppwave:{s}"),
            MetricId::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

pub const DEFAULT_POINTS: [&str; 5] = ["0,0,0,0", "3/4,1/2,-1/3,1", "4/3,-1,1/2,1/4", "5/12,2,1,-1/2", "12/5,1/3,-2,1/2"];

pub fn flat_metric() -> FMatrix {
    standard_neutral::<Rational>(2).to_ratfunc()
}

pub fn conformal_factor(c: &Rational) -> RatFunc {
    let x = |i| RatFunc::var(i);
    let q = &(&(&(&x(0) * &x(0)) + &(&x(1) * &x(1))) - &(&x(2) * &x(2))) - &(&x(3) * &x(3));
    &RatFunc::from_int(1) + &q.scale(&(c / int(4)))
}

pub fn constcurv_metric(c: &Rational) -> FMatrix {
    let phi = conformal_factor(c);
    let w = phi.pow(2).inv();
    flat_metric().map(|e| e * &w)
}

pub fn ppwave_metric(f: &RatFunc) -> FMatrix {
    let mut g = Matrix::from_i64(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]).to_ratfunc();
    g[(0, 0)] = f.clone();
    g
}

/// `diag(1, 1 + x₁², −1, −1)`.
pub fn perturbed_metric() -> FMatrix {
    let mut g = flat_metric();
    g[(1, 1)] = &RatFunc::from_int(1) + &(&RatFunc::var(0) * &RatFunc::var(0));
    g
}
