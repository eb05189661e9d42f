use num_traits::{One, Zero};

use super::riemann::RiemannAt;
use crate::error::{Error, Result};
use crate::exact::{Field, Rational, Surd};
use crate::linalg::{hodge_surd, lambda2_gram, pairs, selfdual_projectors, TwoVector};
use crate::{QMatrix, SMatrix};

/// `ρ`, `Ricci` and `s` at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct RicciData {
    /// `g(ρX, Y) = Ricci(X, Y)`.
    pub rho: QMatrix,
    pub ricci: QMatrix,
    pub s: Rational,
}

/// `Ricci(Y, Z) = tr(X ↦ R(Y, X)Z)`.
pub fn ricci_scalar(r: &RiemannAt, g: &QMatrix) -> Result<RicciData> {
    let n = r.dim();
    let ricci = QMatrix::from_fn(n, n, |j, k| (0..n).fold(Rational::zero(), |acc, i| acc + r.get(i, j, i, k)));
    let rho = &g.inverse().map_err(|_| Error::DegenerateMetric)? * &ricci;
    let s = rho.trace();
    Ok(RicciData { rho, ricci, s })
}

/// `𝓡` on `Λ²` at a point, as a matrix on the basis `eᵢ∧eⱼ` (`i < j`).
#[derive(Clone, Debug, PartialEq)]
pub struct CurvOperator {
    pub m: QMatrix,
    pub g: QMatrix,
    pub ricci: RicciData,
}

/// `g(𝓡(X∧Y), Z∧U) = g(R(X,Y)Z, U)`.
pub fn curvature_operator(r: &RiemannAt, g: &QMatrix) -> Result<CurvOperator> {
    let n = r.dim();
    if n != 4 || g.rows() != 4 {
        return Err(Error::DimNot4);
    }
    let ps = pairs(n);
    let b = QMatrix::from_fn(ps.len(), ps.len(), |a, c| {
        let (i, j) = ps[a];
        let (k, l) = ps[c];
        (0..n).fold(Rational::zero(), |acc, m| acc + r.get(m, i, j, k) * &g[(m, l)])
    });
    let lam = lambda2_gram(g);
    let m = &lam.inverse().map_err(|_| Error::DegenerateMetric)? * &b.transpose();
    Ok(CurvOperator { m, g: g.clone(), ricci: ricci_scalar(r, g)? })
}

impl CurvOperator {
    /// Operator with the given matrix and Ricci data (no consistency check).
    pub fn from_parts(m: QMatrix, g: QMatrix, ricci: RicciData) -> Self {
        CurvOperator { m, g, ricci }
    }

    pub fn lambda_gram(&self) -> QMatrix {
        lambda2_gram(&self.g)
    }

    /// `g(𝓡a, b)`.
    pub fn pair(&self, a: &TwoVector<Rational>, b: &TwoVector<Rational>) -> Rational {
        let ma = self.m.apply(a.comps());
        self.lambda_gram().form(&ma, b.comps())
    }

    pub fn is_self_adjoint(&self) -> bool {
        let lm = &self.lambda_gram() * &self.m;
        lm.is_symmetric()
    }

    pub fn s(&self) -> &Rational {
        &self.ricci.s
    }

    pub fn is_ricci_flat(&self) -> bool {
        self.ricci.ricci.is_zero()
    }

    /// `g(𝓡(X∧Y), X∧Y) / g(X∧Y, X∧Y)`; `None` on degenerate planes.
    pub fn sectional_curvature(&self, x: &[Rational], y: &[Rational]) -> Option<Rational> {
        let a = TwoVector::wedge(x, y);
        let den = self.lambda_gram().form(a.comps(), a.comps());
        if den.is_zero() {
            return None;
        }
        Some(self.pair(&a, &a) / den)
    }
}

/// `𝓡 = (s/12)Id + 𝓑 + 𝓦`, with `𝓦 = 𝓦₊ + 𝓦₋` for the chosen orientation.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub s: Rational,
    pub s_part: QMatrix,
    pub b_part: QMatrix,
    pub w_part: QMatrix,
    pub w_plus: SMatrix,
    pub w_minus: SMatrix,
    pub orientation: i8,
}

impl Decomposition {
    pub fn resum(&self) -> QMatrix {
        &(&self.s_part + &self.b_part) + &self.w_part
    }

    pub fn w_sum(&self) -> SMatrix {
        &self.w_plus + &self.w_minus
    }
}

/// `𝓑(X∧Y) = ½(ρX∧Y + X∧ρY − (s/2)X∧Y)`, as a matrix on `Λ²`.
pub fn b_operator(rho: &QMatrix, s: &Rational) -> QMatrix {
    let n = rho.rows();
    let ps = pairs(n);
    let h = Rational::half();
    let s2 = s * &h;
    let mut out = QMatrix::zeros(ps.len(), ps.len());
    for (col, &(i, j)) in ps.iter().enumerate() {
        let ei: Vec<Rational> = (0..n).map(|t| if t == i { Rational::one() } else { Rational::zero() }).collect();
        let ej: Vec<Rational> = (0..n).map(|t| if t == j { Rational::one() } else { Rational::zero() }).collect();
        let v = &(&TwoVector::wedge(&rho.apply(&ei), &ej) + &TwoVector::wedge(&ei, &rho.apply(&ej)))
            - &TwoVector::basis(n, i, j).scale(&s2);
        for (row, c) in v.comps().iter().enumerate() {
            out[(row, col)] = c * &h;
        }
    }
    out
}

pub fn decompose(op: &CurvOperator, orientation: i8) -> Result<Decomposition> {
    if op.g.rows() != 4 {
        return Err(Error::DimNot4);
    }
    let s = op.ricci.s.clone();
    let s_part = QMatrix::identity(6).scale(&(&s / Rational::from_i64(12)));
    let b_part = b_operator(&op.ricci.rho, &s);
    let w_part = &(&op.m - &s_part) - &b_part;
    let star = hodge_surd(&op.g, orientation)?;
    let (pp, pm) = selfdual_projectors(&star);
    let w: SMatrix = w_part.map(|q| Surd::from(q.clone()));
    Ok(Decomposition { s, s_part, b_part, w_part, w_plus: &w * &pp, w_minus: &w * &pm, orientation })
}

/// Self-duality flags: self-dual iff `𝓦₋ = 0`, anti-self-dual iff `𝓦₊ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DualityVerdict {
    pub self_dual: bool,
    pub anti_self_dual: bool,
    pub conformally_flat: bool,
}

pub fn duality_verdict(d: &Decomposition) -> DualityVerdict {
    DualityVerdict {
        self_dual: d.w_minus.is_zero(),
        anti_self_dual: d.w_plus.is_zero(),
        conformally_flat: d.w_part.is_zero(),
    }
}

/// `Some(c)` when `𝓡 = c·Id`, i.e. constant sectional curvature `c = s/12`.
pub fn sectional_constant_check(op: &CurvOperator) -> Option<Rational> {
    let c = op.m[(0, 0)].clone();
    if op.m == QMatrix::identity(op.m.rows()).scale(&c) {
        Some(c)
    } else {
        None
    }
}

fn pick<'a>(k1: &'a QMatrix, k2: &'a QMatrix, i: u8) -> &'a QMatrix {
    if i == 1 {
        k1
    } else {
        k2
    }
}

/// `g(𝓡(X∧Y + KⱼX∧KₗY), Z∧U + KᵣZ∧KᵣU) + g(𝓡(KⱼX∧Y + X∧KₗY), KᵣZ∧U + Z∧KᵣU)`.
#[allow(clippy::too_many_arguments)]
pub fn jklr_residual(
    op: &CurvOperator,
    k1: &QMatrix,
    k2: &QMatrix,
    j: u8,
    l: u8,
    r: u8,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
    u: &[Rational],
) -> Rational {
    let (kj, kl, kr) = (pick(k1, k2, j), pick(k1, k2, l), pick(k1, k2, r));
    let w = TwoVector::wedge;
    let (jx, ly, rz, ru) = (kj.apply(x), kl.apply(y), kr.apply(z), kr.apply(u));
    let a = &w(x, y) + &w(&jx, &ly);
    let b = &w(z, u) + &w(&rz, &ru);
    let c = &w(&jx, y) + &w(x, &ly);
    let d = &w(&rz, u) + &w(z, &ru);
    op.pair(&a, &b) + op.pair(&c, &d)
}

/// Is every block of `m` mapping `Λ²±` into `Λ²∓`? Used for `𝓑`.
pub fn swaps_duality(m: &QMatrix, g: &QMatrix, orientation: i8) -> Result<bool> {
    let star = hodge_surd(g, orientation)?;
    let (pp, pm) = selfdual_projectors(&star);
    let ms: SMatrix = m.map(|q| Surd::from(q.clone()));
    Ok((&(&pp * &ms) * &pp).is_zero() && (&(&pm * &ms) * &pm).is_zero())
}
