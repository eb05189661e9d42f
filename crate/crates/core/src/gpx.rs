//! The double space `T ⊕ T*`: canonical pairing, generalized paracomplex
//! structures, B-transforms and generalized metrics.
//!
//! A generalized vector `X + α` is stacked as the column `(X; α)` and a
//! generalized endomorphism is a `4n × 4n` block matrix
//! `[[T→T, T*→T], [T→T*, T*→T*]]`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Field, Rational};
use crate::linalg::{is_neutral, is_skew_for, Matrix};
use crate::para::{induced_orientation, is_para, is_tangent};
use crate::report::ValidationReport;

/// `X + α`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenVector<T> {
    pub x: Vec<T>,
    pub alpha: Vec<T>,
}

impl<T: Field> GenVector<T> {
    pub fn new(x: Vec<T>, alpha: Vec<T>) -> Self {
        assert_eq!(x.len(), alpha.len(), "vector and covector dimensions differ");
        GenVector { x, alpha }
    }

    pub fn zero(dim: usize) -> Self {
        GenVector { x: vec![T::zero(); dim], alpha: vec![T::zero(); dim] }
    }

    pub fn vector(x: Vec<T>) -> Self {
        let n = x.len();
        GenVector { x, alpha: vec![T::zero(); n] }
    }

    pub fn covector(alpha: Vec<T>) -> Self {
        let n = alpha.len();
        GenVector { x: vec![T::zero(); n], alpha }
    }

    /// The `i`-th element of the frame `e₁..e_{2n}, e₁*..e_{2n}*`.
    pub fn frame(dim: usize, i: usize) -> Self {
        let v: Vec<T> = (0..2 * dim).map(|j| if i == j { T::one() } else { T::zero() }).collect();
        Self::from_stacked(&v)
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    pub fn stacked(&self) -> Vec<T> {
        self.x.iter().chain(&self.alpha).cloned().collect()
    }

    pub fn from_stacked(v: &[T]) -> Self {
        let n = v.len() / 2;
        GenVector { x: v[..n].to_vec(), alpha: v[n..].to_vec() }
    }

    pub fn apply(&self, k: &Matrix<T>) -> Self {
        Self::from_stacked(&k.apply(&self.stacked()))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_stacked(&self.stacked().into_iter().zip(o.stacked()).map(|(a, b)| a + b).collect::<Vec<_>>())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_stacked(&self.stacked().into_iter().zip(o.stacked()).map(|(a, b)| a - b).collect::<Vec<_>>())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_stacked(&self.stacked().into_iter().map(|a| c.clone() * a).collect::<Vec<_>>())
    }

    pub fn is_zero(&self) -> bool {
        self.x.iter().chain(&self.alpha).all(|v| v.is_zero())
    }
}

/// Matrix of `⟨X+α, Y+β⟩ = ½(α(Y) + β(X))`.
pub fn pairing_matrix<T: Field>(dim: usize) -> Matrix<T> {
    Matrix::from_fn(2 * dim, 2 * dim, |i, j| if i.abs_diff(j) == dim { T::half() } else { T::zero() })
}

pub fn gen_pairing<T: Field>(a: &GenVector<T>, b: &GenVector<T>) -> T {
    let dot = |u: &[T], v: &[T]| u.iter().zip(v).fold(T::zero(), |acc, (p, q)| acc + p.clone() * q.clone());
    (dot(&a.alpha, &b.x) + dot(&b.alpha, &a.x)) * T::half()
}

fn check_dim<T: Field>(k: &Matrix<T>, dim: usize) -> Result<()> {
    if k.rows() != 2 * dim || k.cols() != 2 * dim {
        return Err(Error::DimensionMismatch { expected: 2 * dim, found: k.rows() });
    }
    Ok(())
}

/// Blocks of a generalized endomorphism: `(T→T, T*→T, T→T*, T*→T*)`.
pub fn blocks<T: Field>(k: &Matrix<T>) -> (Matrix<T>, Matrix<T>, Matrix<T>, Matrix<T>) {
    let n = k.rows() / 2;
    (k.block(0, 0, n, n), k.block(0, n, n, n), k.block(n, 0, n, n), k.block(n, n, n, n))
}

/// Data of the four standard examples.
#[derive(Clone, Debug)]
pub enum ExampleData<T> {
    /// `X + α ↦ X − α` on a space of the given dimension.
    Trivial(usize),
    /// Nondegenerate 2-form (Gram matrix).
    Omega(Matrix<T>),
    /// 2-vector as its antisymmetric component matrix `πⁱʲ`.
    Pi(Matrix<T>),
    /// Product structure `P`.
    Product(Matrix<T>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExampleKind {
    Trivial,
    Omega,
    Pi,
    Product,
}

impl fmt::Display for ExampleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExampleKind::Trivial => "trivial",
            ExampleKind::Omega => "omega",
            ExampleKind::Pi => "pi",
            ExampleKind::Product => "product",
        };
        write!(f, "{s}")
    }
}

pub fn trivial_structure<T: Field>(dim: usize) -> Matrix<T> {
    let id = Matrix::identity(dim);
    Matrix::from_blocks(&id, &Matrix::zeros(dim, dim), &Matrix::zeros(dim, dim), &-id.clone())
}

/// `K_ω(X + α) = ω⁻¹(α) + ω(X)`.
pub fn omega_structure<T: Field>(omega: &Matrix<T>) -> Result<Matrix<T>> {
    if !omega.is_antisymmetric() {
        return Err(Error::DegenerateOmega);
    }
    let w = omega.transpose();
    let w_inv = w.inverse().map_err(|_| Error::DegenerateOmega)?;
    let n = omega.rows();
    Ok(Matrix::from_blocks(&Matrix::zeros(n, n), &w_inv, &w, &Matrix::zeros(n, n)))
}

/// `K_π(X + α) = X − ι_απ − α` with `β(ι_απ) = (α∧β)(π)`.
pub fn pi_structure<T: Field>(pi: &Matrix<T>) -> Result<Matrix<T>> {
    if !pi.is_antisymmetric() {
        return Err(Error::DegenerateInput("bivector matrix must be antisymmetric".into()));
    }
    let n = pi.rows();
    let id = Matrix::identity(n);
    // ι_απ = πᵀα, so −ι_απ = πα
    Ok(Matrix::from_blocks(&id, pi, &Matrix::zeros(n, n), &-id.clone()))
}

/// `K_P(X + α) = PX − P*α`.
pub fn product_structure<T: Field>(p: &Matrix<T>) -> Result<Matrix<T>> {
    let n = p.rows();
    let id = Matrix::identity(n);
    if (p * p) != id || *p == id || *p == -id.clone() {
        return Err(Error::NotProductStructure);
    }
    Ok(Matrix::from_blocks(p, &Matrix::zeros(n, n), &Matrix::zeros(n, n), &-p.transpose()))
}

pub fn construct_example<T: Field>(data: &ExampleData<T>) -> Result<Matrix<T>> {
    match data {
        ExampleData::Trivial(dim) => Ok(trivial_structure(*dim)),
        ExampleData::Omega(w) => omega_structure(w),
        ExampleData::Pi(p) => pi_structure(p),
        ExampleData::Product(p) => product_structure(p),
    }
}

/// Checks `k² = Id`, skewness for the pairing, and equal eigenranks.
pub fn validate_gen_para<T: Field>(k: &Matrix<T>) -> ValidationReport {
    let mut r = ValidationReport::new();
    let d = k.rows();
    let id = Matrix::identity(d);
    r.push("square_identity", (k * k) == id);
    let q = pairing_matrix::<T>(d / 2);
    r.push("pairing_skew", (&(&k.transpose() * &q) + &(&q * k)).is_zero());
    let h = T::half();
    let plus = (&id + k).scale(&h).rank();
    let minus = (&id - k).scale(&h).rank();
    r.push("eigenrank", plus == d / 2 && minus == d / 2);
    r
}

/// `e^B = [[I, 0], [Bᵀ, I]]`, i.e. `X + α ↦ X + α + ι_X B`.
pub fn b_matrix<T: Field>(b: &Matrix<T>) -> Matrix<T> {
    let n = b.rows();
    let id = Matrix::identity(n);
    Matrix::from_blocks(&id, &Matrix::zeros(n, n), &b.transpose(), &id)
}

pub fn b_transform<T: Field>(b: &Matrix<T>, a: &GenVector<T>) -> GenVector<T> {
    let ix_b = b.transpose().apply(&a.x);
    GenVector { x: a.x.clone(), alpha: a.alpha.iter().zip(ix_b).map(|(p, q)| p.clone() + q).collect() }
}

/// `e^B K e^{−B}`.
pub fn b_conjugate<T: Field>(b: &Matrix<T>, k: &Matrix<T>) -> Matrix<T> {
    &(&b_matrix(b) * k) * &b_matrix(&-b.clone())
}

/// The pair `(g, Θ)` with frames of `E′ = {X + g(X) + Θ(X)}` and
/// `E″ = {X − g(X) + Θ(X)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedMetric<T> {
    pub g: Matrix<T>,
    pub theta: Matrix<T>,
    /// `X ↦ g(X) + Θ(X)` as a matrix, `g − Θ`.
    pub m1: Matrix<T>,
    /// `X ↦ −g(X) + Θ(X)`, `−g − Θ`.
    pub m2: Matrix<T>,
}

impl<T: Field> GeneralizedMetric<T> {
    /// Checks symmetry, antisymmetry and nondegeneracy only.
    pub fn new(g: &Matrix<T>, theta: &Matrix<T>) -> Result<Self> {
        if !g.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if !theta.is_antisymmetric() {
            return Err(Error::DegenerateInput("theta must be antisymmetric".into()));
        }
        if g.det().is_zero() {
            return Err(Error::DegenerateMetric);
        }
        Ok(GeneralizedMetric { g: g.clone(), theta: theta.clone(), m1: g - theta, m2: &-g.clone() - theta })
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    /// Columns `eᵢ + g(eᵢ) + Θ(eᵢ)`.
    pub fn frame1(&self) -> Matrix<T> {
        Matrix::identity(self.dim()).vstack(&self.m1)
    }

    /// Columns `eᵢ − g(eᵢ) + Θ(eᵢ)`.
    pub fn frame2(&self) -> Matrix<T> {
        Matrix::identity(self.dim()).vstack(&self.m2)
    }

    pub fn lift1(&self, x: &[T]) -> GenVector<T> {
        GenVector { x: x.to_vec(), alpha: self.m1.apply(x) }
    }

    pub fn lift2(&self, x: &[T]) -> GenVector<T> {
        GenVector { x: x.to_vec(), alpha: self.m2.apply(x) }
    }

    /// `(A_{E′}, A_{E″})` from the closed formulas
    /// `pr_T A_{E′} = ½(X + g⁻¹(α − Θ(X)))`, `pr_T A_{E″} = ½(X − g⁻¹(α − Θ(X)))`.
    pub fn split(&self, a: &GenVector<T>) -> Result<(GenVector<T>, GenVector<T>)> {
        let g_inv = self.g.inverse()?;
        let theta_x = self.theta.transpose().apply(&a.x);
        let rhs: Vec<T> = a.alpha.iter().zip(theta_x).map(|(p, q)| p.clone() - q).collect();
        let y = g_inv.apply(&rhs);
        let h = T::half();
        let u: Vec<T> = a.x.iter().zip(&y).map(|(p, q)| (p.clone() + q.clone()) * h.clone()).collect();
        let w: Vec<T> = a.x.iter().zip(&y).map(|(p, q)| (p.clone() - q.clone()) * h.clone()).collect();
        Ok((self.lift1(&u), self.lift2(&w)))
    }

    /// Projection of `T ⊕ T*` onto `T` restricted to `E′ ⊕ E″`, as the
    /// matrices `(pr′, pr″)` with `A = F′pr′A + F″pr″A`.
    pub fn projectors(&self) -> Result<(Matrix<T>, Matrix<T>)> {
        let f = self.frame1().hstack(&self.frame2());
        let inv = f.inverse()?;
        let n = self.dim();
        Ok((inv.block(0, 0, n, 2 * n), inv.block(n, 0, n, 2 * n)))
    }
}

/// Generalized metric of a neutral rational metric.
pub fn gen_metric(g: &Matrix<Rational>, theta: &Matrix<Rational>) -> Result<GeneralizedMetric<Rational>> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !is_neutral(g) {
        return Err(Error::BadSignature);
    }
    GeneralizedMetric::new(g, theta)
}

/// `E′ ∩ T* = 0`, `E″ ⟂ E′`, and `⟨·,·⟩|E′ = g`.
pub fn validate_gen_metric<T: Field>(e: &GeneralizedMetric<T>) -> ValidationReport {
    let mut r = ValidationReport::new();
    let f1 = e.frame1();
    let f2 = e.frame2();
    let q = pairing_matrix::<T>(e.dim());
    r.push("restricted_pairing_is_g", &(&f1.transpose() * &q) * &f1 == e.g);
    r.push("complement_orthogonal", (&(&f1.transpose() * &q) * &f2).is_zero());
    let n = e.dim();
    let star: Matrix<T> = Matrix::zeros(n, n).vstack(&Matrix::identity(n));
    r.push("transverse_to_cotangent", f1.hstack(&star).rank() == 2 * n);
    r
}

/// Does `k` map `E′` into itself?
pub fn is_compatible<T: Field>(k: &Matrix<T>, e: &GeneralizedMetric<T>) -> bool {
    let f = e.frame1();
    f.hstack(&(k * &f)).rank() == e.dim()
}

/// `(K₁, K₂)` with `K(X + g(X) + Θ(X)) = K₁X + g(K₁X) + Θ(K₁X)` and likewise
/// on `E″`.
pub fn extract_pair<T: Field>(k: &Matrix<T>, e: &GeneralizedMetric<T>) -> Result<(Matrix<T>, Matrix<T>)> {
    check_dim(k, e.dim())?;
    if !is_compatible(k, e) {
        return Err(Error::NotCompatible);
    }
    let (a, b, _, _) = blocks(k);
    Ok((&a + &(&b * &e.m1), &a + &(&b * &e.m2)))
}

/// Block form of the compatible structure determined by `(g, Θ, K₁, K₂)`:
/// `½ e^Θ [[K₁+K₂, −ω₁⁻¹+ω₂⁻¹], [−ω₁+ω₂, −K₁*−K₂*]] e^{−Θ}` with
/// `ωₛ(X, Y) = g(X, KₛY)`.
pub fn assemble<T: Field>(g: &Matrix<T>, theta: &Matrix<T>, k1: &Matrix<T>, k2: &Matrix<T>) -> Result<Matrix<T>> {
    if !is_para(g, k1) || !is_para(g, k2) {
        return Err(Error::InvalidPair);
    }
    let g_inv = g.inverse()?;
    // ωₛ as a map: X ↦ g(X, Kₛ·) = Kₛᵀ g X = −g Kₛ X
    let w1 = -(g * k1);
    let w2 = -(g * k2);
    let w1_inv = -(k1 * &g_inv);
    let w2_inv = -(k2 * &g_inv);
    let h = T::half();
    let mid = Matrix::from_blocks(
        &(k1 + k2),
        &(&w2_inv - &w1_inv),
        &(&w2 - &w1),
        &-(&k1.transpose() + &k2.transpose()),
    )
    .scale(&h);
    Ok(b_conjugate(theta, &mid))
}

/// Compatible structure built directly on the frames: `F diag(K₁, K₂) F⁻¹`.
pub fn assemble_from_frames<T: Field>(e: &GeneralizedMetric<T>, k1: &Matrix<T>, k2: &Matrix<T>) -> Result<Matrix<T>> {
    let f = e.frame1().hstack(&e.frame2());
    let n = e.dim();
    let d = Matrix::from_blocks(k1, &Matrix::zeros(n, n), &Matrix::zeros(n, n), k2);
    Ok(&(&f * &d) * &f.inverse()?)
}

/// Example with a 2-form: `L = ω⁻¹∘(g + Θ)`; compatible iff `L` is a product
/// structure. Returns the witness `L`.
pub fn check_omega_compat<T: Field>(omega: &Matrix<T>, g: &Matrix<T>, theta: &Matrix<T>) -> Result<Option<Matrix<T>>> {
    if !omega.is_antisymmetric() {
        return Err(Error::DegenerateOmega);
    }
    let w_inv = omega.transpose().inverse().map_err(|_| Error::DegenerateOmega)?;
    let l = &w_inv * &(g - theta);
    let id = Matrix::identity(g.rows());
    if (&l * &l) != id || l == id || l == -id.clone() {
        return Ok(None);
    }
    // g = ½(ω(L·,·) − ω(·,L·)), Θ = ½(ω(L·,·) + ω(·,L·))
    let lw = &l.transpose() * omega;
    let wl = omega * &l;
    let h = T::half();
    if (&lw - &wl).scale(&h) != *g || (&lw + &wl).scale(&h) != *theta {
        return Ok(None);
    }
    Ok(Some(l))
}

/// Example with `π = e₁∧e₂` on a null frame `(e₁, e₂, f₁, f₂)` (columns of
/// `basis`): `Θ(e₁,e₂) = −2`, `Θ(e₁,f₂) = Θ(e₂,f₁) = 0`,
/// `Θ(e₁,f₁) = Θ(e₂,f₂)` and `2Θ(f₁,f₂) = 1 − Θ(e₁,f₁)Θ(e₂,f₂)`.
pub fn check_pi_conditions<T: Field>(g: &Matrix<T>, basis: &Matrix<T>, theta: &Matrix<T>) -> Result<bool> {
    if g.rows() != 4 || basis.rows() != 4 || basis.cols() != 4 {
        return Err(Error::DimNot4);
    }
    if &(&basis.transpose() * g) * basis != crate::linalg::null_frame_metric(2) {
        return Err(Error::WrongMetricFrame);
    }
    let t = &(&basis.transpose() * theta) * basis;
    let (e1, e2, f1, f2) = (0, 1, 2, 3);
    let two = T::from_i64(2);
    Ok(t[(e1, e2)] == -two.clone()
        && t[(e1, f2)].is_zero()
        && t[(e2, f1)].is_zero()
        && t[(e1, f1)] == t[(e2, f2)]
        && two * t[(f1, f2)].clone() == T::one() - t[(e1, f1)].clone() * t[(e2, f2)].clone())
}

/// `π = e₁∧e₂` in coordinates, as an antisymmetric matrix.
pub fn pi_from_frame<T: Field>(basis: &Matrix<T>) -> Matrix<T> {
    let e1 = basis.col(0);
    let e2 = basis.col(1);
    crate::linalg::TwoVector::wedge(&e1, &e2).to_matrix()
}

/// Example with a product structure: `Θ(PX,Y) + Θ(X,PY) = 0`.
pub fn check_product_compat<T: Field>(p: &Matrix<T>, theta: &Matrix<T>) -> bool {
    (&(&p.transpose() * theta) + &(theta * p)).is_zero()
}

/// `ĝ = g ⊕ g*`.
pub fn hat_metric<T: Field>(g: &Matrix<T>) -> Result<Matrix<T>> {
    let n = g.rows();
    Ok(Matrix::from_blocks(g, &Matrix::zeros(n, n), &Matrix::zeros(n, n), &g.inverse()?))
}

/// Skewness of `k` for `ĝ`, which characterizes compatibility with the graph of `g`.
pub fn hat_metric_equiv<T: Field>(k: &Matrix<T>, g: &Matrix<T>) -> Result<bool> {
    Ok(is_skew_for(&hat_metric(g)?, k))
}

/// Pair of fiber endomorphisms `(V₁, V₂)` transported to `E′`, `E″` through `pr_T`.
#[derive(Clone, Debug, PartialEq)]
pub struct VerticalPair<T> {
    pub v1: Matrix<T>,
    pub v2: Matrix<T>,
}

impl<T: Field> VerticalPair<T> {
    pub fn new(v1: Matrix<T>, v2: Matrix<T>) -> Self {
        VerticalPair { v1, v2 }
    }

    pub fn zero(dim: usize) -> Self {
        VerticalPair { v1: Matrix::zeros(dim, dim), v2: Matrix::zeros(dim, dim) }
    }

    pub fn scale(&self, c: &T) -> Self {
        VerticalPair { v1: self.v1.scale(c), v2: self.v2.scale(c) }
    }

    pub fn add(&self, o: &Self) -> Self {
        VerticalPair { v1: &self.v1 + &o.v1, v2: &self.v2 + &o.v2 }
    }

    pub fn sub(&self, o: &Self) -> Self {
        VerticalPair { v1: &self.v1 - &o.v1, v2: &self.v2 - &o.v2 }
    }

    pub fn is_zero(&self) -> bool {
        self.v1.is_zero() && self.v2.is_zero()
    }

    /// The endomorphism of `T ⊕ T*` acting as `V₁` on `E′` and `V₂` on `E″`.
    pub fn to_gen_endo(&self, e: &GeneralizedMetric<T>) -> Result<Matrix<T>> {
        let (p1, p2) = e.projectors()?;
        Ok(&(&(&e.frame1() * &self.v1) * &p1) + &(&(&e.frame2() * &self.v2) * &p2))
    }

    pub fn is_vertical(&self, g: &Matrix<T>, k1: &Matrix<T>, k2: &Matrix<T>) -> bool {
        is_tangent(g, k1, &self.v1) && is_tangent(g, k2, &self.v2)
    }
}

/// `𝒫₁(V′,V″) = (K′V′, K″V″)`, `𝒫₂ = (K′V′, −K″V″)`, `𝒫₃ = −𝒫₂`, `𝒫₄ = −𝒫₁`.
pub fn p_epsilon<T: Field>(
    eps: u8,
    k: &Matrix<T>,
    e: &GeneralizedMetric<T>,
    v: &VerticalPair<T>,
) -> Result<VerticalPair<T>> {
    let (k1, k2) = extract_pair(k, e)?;
    if !v.is_vertical(&e.g, &k1, &k2) {
        return Err(Error::NotVertical);
    }
    Ok(p_epsilon_pair(eps, &k1, &k2, v))
}

/// [`p_epsilon`] with the pair `(K₁, K₂)` already extracted.
pub fn p_epsilon_pair<T: Field>(eps: u8, k1: &Matrix<T>, k2: &Matrix<T>, v: &VerticalPair<T>) -> VerticalPair<T> {
    let a = k1 * &v.v1;
    let b = k2 * &v.v2;
    match eps {
        1 => VerticalPair::new(a, b),
        2 => VerticalPair::new(a, -b),
        3 => VerticalPair::new(-a, b),
        4 => VerticalPair::new(-a, -b),
        _ => panic!("epsilon must be in 1..=4"),
    }
}

/// Connected component of the fiber of compatible structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Component {
    #[serde(rename = "++")]
    PlusPlus,
    #[serde(rename = "+-")]
    PlusMinus,
    #[serde(rename = "-+")]
    MinusPlus,
    #[serde(rename = "--")]
    MinusMinus,
}

impl Component {
    pub const ALL: [Component; 4] = [Component::PlusPlus, Component::PlusMinus, Component::MinusPlus, Component::MinusMinus];

    pub fn from_signs(s1: i8, s2: i8) -> Self {
        match (s1 > 0, s2 > 0) {
            (true, true) => Component::PlusPlus,
            (true, false) => Component::PlusMinus,
            (false, true) => Component::MinusPlus,
            (false, false) => Component::MinusMinus,
        }
    }

    pub fn signs(self) -> (i8, i8) {
        match self {
            Component::PlusPlus => (1, 1),
            Component::PlusMinus => (1, -1),
            Component::MinusPlus => (-1, 1),
            Component::MinusMinus => (-1, -1),
        }
    }

    pub fn is_mixed(self) -> bool {
        matches!(self, Component::PlusMinus | Component::MinusPlus)
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "++" => Ok(Component::PlusPlus),
            "+-" => Ok(Component::PlusMinus),
            "-+" => Ok(Component::MinusPlus),
            "--" => Ok(Component::MinusMinus),
            _ => Err(Error::Input(format!("unknown component `{s}`"))),
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Component::PlusPlus => "++",
            Component::PlusMinus => "+-",
            Component::MinusPlus => "-+",
            Component::MinusMinus => "--",
        };
        write!(f, "{s}")
    }
}

/// Component of a compatible structure, from the orientations induced by
/// `K₁` and `K₂` (relative to the coordinate orientation).
pub fn classify_component(k: &Matrix<Rational>, e: &GeneralizedMetric<Rational>) -> Result<Component> {
    if e.dim() != 4 {
        return Err(Error::DimNot4);
    }
    let (k1, k2) = extract_pair(k, e)?;
    Ok(Component::from_signs(induced_orientation(&e.g, &k1)?, induced_orientation(&e.g, &k2)?))
}
