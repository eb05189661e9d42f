use num_traits::{Signed, Zero};
use rand::Rng;

use super::connection::{hitchin_connection, TorsionAt};
use super::riemann::RiemannAt;
use crate::error::{Error, Result};
use crate::exact::{int, Point, Rational};
use crate::gpx::{assemble, extract_pair, gen_pairing, p_epsilon_pair, Component, GenVector, GeneralizedMetric, VerticalPair};
use crate::para::random_para;
use crate::patch::{ext_deriv, KForm};
use crate::{FMatrix, QMatrix};

fn check_eps(eps: u8) -> Result<()> {
    if (1..=4).contains(&eps) {
        Ok(())
    } else {
        Err(Error::Input(format!("epsilon must be 1..4, got {eps}")))
    }
}

fn check_index(i: u8) -> Result<()> {
    if i == 1 || i == 2 {
        Ok(())
    } else {
        Err(Error::Input(format!("index must be 1 or 2, got {i}")))
    }
}

/// Vertical part of the reflector-space Nijenhuis tensor on horizontal lifts:
/// `R(X,Y)Q + R(QX,QY)Q − 𝒦ⁱR(QX,Y)Q − 𝒦ⁱR(X,QY)Q` with `𝒦ⁱV = (−1)^{i+1}QV`.
pub fn reflector_nijenhuis(r: &RiemannAt, q: &QMatrix, x: &[Rational], y: &[Rational], i: u8) -> Result<QMatrix> {
    check_index(i)?;
    let (qx, qy) = (q.apply(x), q.apply(y));
    let head = &r.act(x, y, q) + &r.act(&qx, &qy, q);
    let mixed = q * &(&r.act(&qx, y, q) + &r.act(x, &qy, q));
    Ok(if i == 1 { &head - &mixed } else { &head + &mixed })
}

/// `𝒩ⁱ(Xʰ, V) = [(−1)ⁱ + 1](QVX)ʰ`, as the base vector.
pub fn reflector_mixed(q: &QMatrix, v: &QMatrix, x: &[Rational], i: u8) -> Result<Vec<Rational>> {
    check_index(i)?;
    let qvx = (q * v).apply(x);
    Ok(if i == 1 { vec![Rational::zero(); x.len()] } else { qvx.into_iter().map(|c| c * int(2)).collect() })
}

fn curvature_pair(r: &RiemannAt, x: &[Rational], y: &[Rational], k1: &QMatrix, k2: &QMatrix) -> VerticalPair<Rational> {
    let e = r.endo(x, y);
    VerticalPair::new(e.commutator(k1), e.commutator(k2))
}

/// `𝒫₁W − 𝒫_εW`.
fn p_diff(eps: u8, k1: &QMatrix, k2: &QMatrix, w: &VerticalPair<Rational>) -> VerticalPair<Rational> {
    p_epsilon_pair(1, k1, k2, w).sub(&p_epsilon_pair(eps, k1, k2, w))
}

/// `ω^ε_{A,B}(W) = ⟨(𝒫₁W − 𝒫_εW)(A), B⟩ − ⟨(𝒫₁W − 𝒫_εW)(B), A⟩`.
pub fn omega_eps(
    k: &QMatrix,
    e: &GeneralizedMetric<Rational>,
    eps: u8,
    a: &GenVector<Rational>,
    b: &GenVector<Rational>,
    w: &VerticalPair<Rational>,
) -> Result<Rational> {
    check_eps(eps)?;
    let (k1, k2) = extract_pair(k, e)?;
    if !w.is_vertical(&e.g, &k1, &k2) {
        return Err(Error::NotVertical);
    }
    let d = p_diff(eps, &k1, &k2, w).to_gen_endo(e)?;
    Ok(gen_pairing(&a.apply(&d), b) - gen_pairing(&b.apply(&d), a))
}

/// Vertical part of `𝒩_ε(Aʰ, Bʰ)` together with `ω^ε_{A,B}` evaluated on `basis`.
pub fn twistor_vertical_nijenhuis(
    r: &RiemannAt,
    k: &QMatrix,
    e: &GeneralizedMetric<Rational>,
    a: &GenVector<Rational>,
    b: &GenVector<Rational>,
    eps: u8,
    basis: &[VerticalPair<Rational>],
) -> Result<(VerticalPair<Rational>, Vec<Rational>)> {
    check_eps(eps)?;
    let (k1, k2) = extract_pair(k, e)?;
    let (ka, kb) = (a.apply(k), b.apply(k));
    let (x, y, xh, yh) = (&a.x, &b.x, &ka.x, &kb.x);
    let head = curvature_pair(r, x, y, &k1, &k2).add(&curvature_pair(r, xh, yh, &k1, &k2));
    let tail = curvature_pair(r, xh, y, &k1, &k2).add(&curvature_pair(r, x, yh, &k1, &k2));
    let v = head.sub(&p_epsilon_pair(eps, &k1, &k2, &tail));
    let omega = basis.iter().map(|w| omega_eps(k, e, eps, a, b, w)).collect::<Result<_>>()?;
    Ok((v, omega))
}

/// `𝒩_ε(Aʰ, V) = (−(𝒫_εV)A + (𝒫₁V)A)ʰ`, as a generalized vector at the base point.
pub fn twistor_mixed_nijenhuis(
    k: &QMatrix,
    e: &GeneralizedMetric<Rational>,
    a: &GenVector<Rational>,
    v: &VerticalPair<Rational>,
    eps: u8,
) -> Result<GenVector<Rational>> {
    check_eps(eps)?;
    let (k1, k2) = extract_pair(k, e)?;
    if !v.is_vertical(&e.g, &k1, &k2) {
        return Err(Error::NotVertical);
    }
    Ok(a.apply(&p_diff(eps, &k1, &k2, v).to_gen_endo(e)?))
}

/// Data of the never-integrable witness: orthogonal frames `Q′ₐ`, `Q″ₐ` of
/// `E′`, `E″` with `KQₐ = Q_{a+2}`, and `U = S₁₂ + S₃₄` on each factor.
/// Then `𝒩_ε(Q₁ʰ, U) = 2‖Q₂‖²Q₄ʰ` for `ε ≠ 1`.
#[derive(Clone, Debug)]
pub struct NeverIntegrableWitness {
    pub e: GeneralizedMetric<Rational>,
    pub k: QMatrix,
    pub q1: Vec<GenVector<Rational>>,
    pub q2: Vec<GenVector<Rational>>,
    /// `(S₁₂ + S₃₄, 0)`.
    pub u1: VerticalPair<Rational>,
    /// `(0, S₁₂ + S₃₄)`.
    pub u2: VerticalPair<Rational>,
}

/// `S_{ij}Q_k = δ_{ik}‖Q_j‖²Q_j − δ_{kj}‖Q_i‖²Q_i` on the columns of `onb`.
pub fn s_endo(g: &QMatrix, onb: &QMatrix, i: usize, j: usize) -> Result<QMatrix> {
    let n = onb.rows();
    let norm = |t: usize| g.form(&onb.col(t), &onb.col(t));
    let mut s = QMatrix::zeros(n, n);
    s[(j, i)] = norm(j);
    s[(i, j)] = -norm(i);
    Ok(&(onb * &s) * &onb.inverse()?)
}

/// Build the witness from `(g, Θ)` at a point and an orthogonal basis with
/// norms `(a, b, −a, −b)`, `a, b > 0` (orthonormal when `a = b = 1`).
pub fn never_integrable_witness(g: &QMatrix, theta: &QMatrix, onb: &QMatrix) -> Result<NeverIntegrableWitness> {
    if g.rows() != 4 || onb.rows() != 4 || onb.cols() != 4 {
        return Err(Error::DimNot4);
    }
    let gram = &(&onb.transpose() * g) * onb;
    let (a, b) = (gram[(0, 0)].clone(), gram[(1, 1)].clone());
    if gram != QMatrix::diag(&[a.clone(), b.clone(), -a.clone(), -b.clone()]) || !a.is_positive() || !b.is_positive() {
        return Err(Error::DegenerateInput("basis must be orthogonal with norms (a, b, -a, -b), a, b > 0".into()));
    }
    let e = GeneralizedMetric::new(g, theta)?;
    let swap = QMatrix::from_i64(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let k0 = &(onb * &swap) * &onb.inverse()?;
    let k = assemble(g, theta, &k0, &k0)?;
    let q1 = (0..4).map(|t| e.lift1(&onb.col(t))).collect();
    let q2 = (0..4).map(|t| e.lift2(&onb.col(t))).collect();
    let u = &s_endo(g, onb, 0, 1)? + &s_endo(g, onb, 2, 3)?;
    let z = QMatrix::zeros(4, 4);
    Ok(NeverIntegrableWitness {
        e,
        k,
        q1,
        q2,
        u1: VerticalPair::new(u.clone(), z.clone()),
        u2: VerticalPair::new(z, u),
    })
}

/// `dΘ` at a point as a full antisymmetric array.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreeFormAt {
    dim: usize,
    c: Vec<Rational>,
}

impl ThreeFormAt {
    pub fn zero(dim: usize) -> Self {
        ThreeFormAt { dim, c: vec![Rational::zero(); dim * dim * dim] }
    }

    pub fn from_form(f: &KForm, p: &Point) -> Result<Self> {
        let n = f.dim();
        let mut c = vec![Rational::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    c[(i * n + j) * n + l] = f.get(&[i, j, l]).eval(p.coords())?;
                }
            }
        }
        Ok(ThreeFormAt { dim: n, c })
    }

    pub fn get(&self, i: usize, j: usize, l: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + l]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|v| v.is_zero())
    }

    /// `ι_Y ι_X dΘ = dΘ(X, Y, ·)`.
    pub fn contract2(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        (0..n)
            .map(|l| {
                let mut acc = Rational::zero();
                for i in 0..n {
                    for j in 0..n {
                        if !x[i].is_zero() && !y[j].is_zero() {
                            acc += self.get(i, j, l) * &x[i] * &y[j];
                        }
                    }
                }
                acc
            })
            .collect()
    }
}

/// Pointwise data for the horizontal Nijenhuis tensor of `𝒦₁` with torsion.
#[derive(Clone, Debug)]
pub struct NpContext {
    pub g: QMatrix,
    pub torsion: TorsionAt,
    pub dtheta: ThreeFormAt,
}

fn vadd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(p, q)| p + q).collect()
}

fn vsub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(p, q)| p - q).collect()
}

impl NpContext {
    /// Torsion of the Hitchin connection of `(g, Θ)` and `dΘ`, both at `p`.
    pub fn new(g: &FMatrix, theta: &KForm, p: &Point) -> Result<Self> {
        let (_, t) = hitchin_connection(g, theta)?;
        Ok(NpContext { g: g.eval(p)?, torsion: t.at(p)?, dtheta: ThreeFormAt::from_form(&ext_deriv(theta), p)? })
    }

    /// Covector `Z ↦ α(T(Y, Z))`.
    fn alpha_iota(&self, alpha: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = y.len();
        (0..n)
            .map(|m| {
                let mut ez = vec![Rational::zero(); n];
                ez[m] = int(1);
                let t = self.torsion.apply(y, &ez);
                alpha.iter().zip(&t).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// `N_P(A, B)` in terms of the torsion, `P` assembled from `(g, 0, S₁, S₂)`.
    pub fn np(&self, p: &QMatrix, a: &GenVector<Rational>, b: &GenVector<Rational>) -> GenVector<Rational> {
        let t = &self.torsion;
        let (pa, pb) = (a.apply(p), b.apply(p));
        let (x, al, y, be) = (&a.x, &a.alpha, &b.x, &b.alpha);
        let (xh, alh, yh, beh) = (&pa.x, &pa.alpha, &pb.x, &pb.alpha);
        let vec0 = vsub(&vsub(&vec![Rational::zero(); x.len()], &t.apply(x, y)), &t.apply(xh, yh));
        let mut cov0 = vsub(&self.alpha_iota(be, x), &self.alpha_iota(al, y));
        cov0 = vadd(&cov0, &vsub(&self.alpha_iota(beh, xh), &self.alpha_iota(alh, yh)));
        let inner_v = vadd(&t.apply(xh, y), &t.apply(x, yh));
        let mut inner_c = vsub(&self.alpha_iota(alh, y), &self.alpha_iota(be, xh));
        inner_c = vadd(&inner_c, &vsub(&self.alpha_iota(al, yh), &self.alpha_iota(beh, x)));
        let inner = GenVector::new(inner_v, inner_c).apply(p);
        GenVector::new(vec0, cov0).add(&inner)
    }

    /// `−ι_Yι_XdΘ − ι_Ŷι_X̂dΘ + P(ι_Yι_X̂dΘ + ι_Ŷι_XdΘ)`.
    pub fn cond_rhs(&self, p: &QMatrix, a: &GenVector<Rational>, b: &GenVector<Rational>) -> GenVector<Rational> {
        let d = &self.dtheta;
        let (pa, pb) = (a.apply(p), b.apply(p));
        let (x, y, xh, yh) = (&a.x, &b.x, &pa.x, &pb.x);
        let head = vadd(&d.contract2(x, y), &d.contract2(xh, yh));
        let head = GenVector::covector(head.into_iter().map(|c| -c).collect());
        let tail = GenVector::covector(vadd(&d.contract2(xh, y), &d.contract2(x, yh))).apply(p);
        head.add(&tail)
    }

    /// `N_P(A, B)` minus the right-hand side of the integrability condition.
    pub fn residual(
        &self,
        s1: &QMatrix,
        s2: &QMatrix,
        a: &GenVector<Rational>,
        b: &GenVector<Rational>,
    ) -> Result<GenVector<Rational>> {
        let n = self.g.rows();
        let p = assemble(&self.g, &QMatrix::zeros(n, n), s1, s2)?;
        Ok(self.np(&p, a, b).sub(&self.cond_rhs(&p, a, b)))
    }
}

/// [`NpContext::residual`] from the fields.
#[allow(clippy::too_many_arguments)]
pub fn horizontal_np_residual(
    g: &FMatrix,
    theta: &KForm,
    s1: &QMatrix,
    s2: &QMatrix,
    a: &GenVector<Rational>,
    b: &GenVector<Rational>,
    p: &Point,
) -> Result<GenVector<Rational>> {
    NpContext::new(g, theta, p)?.residual(s1, s2, a, b)
}

/// A nonzero residual found by [`np_witness_search`].
#[derive(Clone, Debug)]
pub struct NpWitness {
    pub attempt: usize,
    pub s1: QMatrix,
    pub s2: QMatrix,
    pub a: GenVector<Rational>,
    pub b: GenVector<Rational>,
    pub residual: GenVector<Rational>,
}

fn small_vec<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| int(rng.gen_range(-2i64..=2))).collect()
}

/// Random compatible `(S₁, S₂)` on the component and random `A`, `B`.
pub fn np_sample<R: Rng>(
    g: &QMatrix,
    comp: Component,
    rng: &mut R,
) -> Result<(QMatrix, QMatrix, GenVector<Rational>, GenVector<Rational>)> {
    let (o1, o2) = comp.signs();
    let s1 = random_para(g, o1, rng)?;
    let s2 = random_para(g, o2, rng)?;
    let n = g.rows();
    let a = GenVector::new(small_vec(rng, n), small_vec(rng, n));
    let b = GenVector::new(small_vec(rng, n), small_vec(rng, n));
    Ok((s1, s2, a, b))
}

/// Seeded search for `(S₁, S₂, A, B)` with a nonzero residual.
pub fn np_witness_search<R: Rng>(ctx: &NpContext, comp: Component, rng: &mut R, max: usize) -> Result<Option<NpWitness>> {
    for attempt in 0..max {
        let (s1, s2, a, b) = np_sample(&ctx.g, comp, rng)?;
        let residual = ctx.residual(&s1, &s2, &a, &b)?;
        if !residual.is_zero() {
            return Ok(Some(NpWitness { attempt, s1, s2, a, b, residual }));
        }
    }
    Ok(None)
}
