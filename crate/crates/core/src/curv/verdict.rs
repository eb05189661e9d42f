use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::connection::levi_civita;
use super::operator::{curvature_operator, decompose, duality_verdict, jklr_residual, sectional_constant_check, CurvOperator};
use super::riemann::riemann_at;
use super::twistor::{np_witness_search, NpContext};
use crate::error::{Error, Result};
use crate::exact::{fmt_rational, int, Point, Rational};
use crate::gpx::Component;
use crate::para::random_para;
use crate::patch::{ext_deriv, KForm};
use crate::{FMatrix, QMatrix};

/// Curvature data at one sample point.
#[derive(Clone, Debug, Serialize)]
pub struct PointEvidence {
    pub point: String,
    pub ricci_zero: bool,
    pub w_plus_zero: bool,
    pub w_minus_zero: bool,
    pub sectional_constant: Option<String>,
}

/// Summary of the `(Jklr)` spot checks.
#[derive(Clone, Debug, Serialize)]
pub struct JklrSummary {
    pub samples: usize,
    pub nonzero: usize,
    pub max_abs: String,
    /// Points where no rational compatible pair was available.
    pub skipped_points: Vec<String>,
}

/// Nonzero horizontal Nijenhuis residual caused by `dΘ ≠ 0`.
#[derive(Clone, Debug, Serialize)]
pub struct NpEvidence {
    pub point: String,
    pub attempt: usize,
    pub residual_vector: Vec<String>,
    pub residual_covector: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremVerdict {
    pub component: Component,
    pub integrable: bool,
    /// Names of failed sub-conditions: `dTheta_nonzero`, `ricci_nonzero`,
    /// `w_plus_nonzero`, `w_minus_nonzero`, `not_constant_curvature`.
    pub failed: Vec<String>,
    pub points: Vec<PointEvidence>,
    pub jklr: JklrSummary,
    pub np_witness: Option<NpEvidence>,
    /// All spot checks vanish when the verdict is integrable.
    pub consistent: bool,
}

/// Curvature operator of the Levi-Civita connection of `g` at `p`.
pub fn operator_at(g: &FMatrix, p: &Point) -> Result<CurvOperator> {
    let c = levi_civita(g)?;
    let r = riemann_at(&c, p)?;
    curvature_operator(&r, &g.eval(p)?)
}

fn point_str(p: &Point) -> String {
    p.coords().iter().map(fmt_rational).collect::<Vec<_>>().join(",")
}

fn small_vec<R: Rng>(rng: &mut R) -> Vec<Rational> {
    (0..4).map(|_| int(rng.gen_range(-3i64..=3))).collect()
}

/// Residuals of `(Jklr)` for random `(K₁, K₂)` on the component, random
/// `j, l, r ∈ {1,2}` and random vectors.
pub fn jklr_samples<R: Rng>(
    op: &CurvOperator,
    comp: Component,
    count: usize,
    rng: &mut R,
) -> Result<Vec<Rational>> {
    let (o1, o2) = comp.signs();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let k1 = random_para(&op.g, o1, rng)?;
        let k2 = random_para(&op.g, o2, rng)?;
        let (j, l, r) = (rng.gen_range(1u8..=2), rng.gen_range(1u8..=2), rng.gen_range(1u8..=2));
        let (x, y, z, u) = (small_vec(rng), small_vec(rng), small_vec(rng), small_vec(rng));
        out.push(jklr_residual(op, &k1, &k2, j, l, r, &x, &y, &z, &u));
    }
    Ok(out)
}

fn abs(q: &Rational) -> Rational {
    if q < &int(0) {
        -q.clone()
    } else {
        q.clone()
    }
}

/// Integrability of `𝒦₁` on a component: `dΘ = 0` and
/// `++`: `𝓦₊ = 0`, Ricci `= 0`; `−−`: `𝓦₋ = 0`, Ricci `= 0`;
/// mixed: `𝓡 = (s/12)Id`, checked at each sample point.
pub fn theorem_verdict(
    g: &FMatrix,
    theta: &KForm,
    comp: Component,
    points: &[Point],
    seed: u64,
    jklr_count: usize,
) -> Result<TheoremVerdict> {
    if g.rows() != 4 {
        return Err(Error::DimNot4);
    }
    if points.is_empty() {
        return Err(Error::Input("no sample points".into()));
    }
    for p in points {
        p.check_dim(4)?;
    }
    let conn = levi_civita(g)?;
    let per_point: Vec<(CurvOperator, PointEvidence)> = points
        .par_iter()
        .map(|p| {
            let r = riemann_at(&conn, p)?;
            let op = curvature_operator(&r, &g.eval(p)?)?;
            let dec = decompose(&op, 1)?;
            let dv = duality_verdict(&dec);
            let ev = PointEvidence {
                point: point_str(p),
                ricci_zero: op.is_ricci_flat(),
                w_plus_zero: dv.anti_self_dual,
                w_minus_zero: dv.self_dual,
                sectional_constant: sectional_constant_check(&op).map(|c| fmt_rational(&c)),
            };
            Ok((op, ev))
        })
        .collect::<Result<_>>()?;

    let dtheta = ext_deriv(theta);
    let mut failed = Vec::new();
    if !dtheta.is_zero() {
        failed.push("dTheta_nonzero".to_string());
    }
    let evs: Vec<&PointEvidence> = per_point.iter().map(|(_, e)| e).collect();
    let mut need = |name: &str, ok: bool| {
        if !ok {
            failed.push(name.to_string());
        }
    };
    match comp {
        Component::PlusPlus | Component::MinusMinus => {
            need("ricci_nonzero", evs.iter().all(|e| e.ricci_zero));
            if comp == Component::PlusPlus {
                need("w_plus_nonzero", evs.iter().all(|e| e.w_plus_zero));
            } else {
                need("w_minus_nonzero", evs.iter().all(|e| e.w_minus_zero));
            }
        }
        Component::PlusMinus | Component::MinusPlus => {
            need("not_constant_curvature", evs.iter().all(|e| e.sectional_constant.is_some()));
        }
    }
    let integrable = failed.is_empty();

    // spot checks, split evenly over the points with a fixed per-point seed
    let per = jklr_count.div_ceil(points.len());
    let spots: Vec<Result<Vec<Rational>>> = per_point
        .par_iter()
        .enumerate()
        .map(|(i, (op, _))| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            jklr_samples(op, comp, per, &mut rng)
        })
        .collect();
    let mut residuals = Vec::new();
    let mut skipped = Vec::new();
    for (s, p) in spots.into_iter().zip(points) {
        match s {
            Ok(v) => residuals.extend(v),
            Err(_) => skipped.push(point_str(p)),
        }
    }
    residuals.truncate(jklr_count);
    let nonzero = residuals.iter().filter(|r| **r != int(0)).count();
    let max_abs = residuals.iter().map(abs).max().unwrap_or_else(|| int(0));
    let jklr = JklrSummary { samples: residuals.len(), nonzero, max_abs: fmt_rational(&max_abs), skipped_points: skipped };

    let mut np_witness = None;
    if !dtheta.is_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for p in points {
            let ctx = NpContext::new(g, theta, p)?;
            if ctx.dtheta.is_zero() {
                continue;
            }
            if let Ok(Some(w)) = np_witness_search(&ctx, comp, &mut rng, 50) {
                np_witness = Some(NpEvidence {
                    point: point_str(p),
                    attempt: w.attempt,
                    residual_vector: w.residual.x.iter().map(fmt_rational).collect(),
                    residual_covector: w.residual.alpha.iter().map(fmt_rational).collect(),
                });
                break;
            }
        }
    }
    let consistent = !integrable || nonzero == 0;
    Ok(TheoremVerdict {
        component: comp,
        integrable,
        failed,
        points: per_point.into_iter().map(|(_, e)| e).collect(),
        jklr,
        np_witness,
        consistent,
    })
}

/// Matrix entries as strings.
pub fn matrix_strings(m: &QMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(fmt_rational).collect()).collect()
}
