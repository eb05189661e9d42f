//! Tensor calculus on a coordinate patch with rational-function coefficients:
//! vector fields, forms, bivectors, the Lie and Courant brackets, and the
//! classical and generalized Nijenhuis tensors.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{fmt_rational, parse_ratfunc, Point, RatFunc, Rational};
use crate::gpx::{self, ExampleKind};
use crate::linalg::Matrix;
use crate::report::ValidationReport;

/// Vector field `Σ Xⁱ ∂ᵢ`.
#[derive(Clone, Debug, PartialEq)]
pub struct VField {
    comps: Vec<RatFunc>,
}

impl VField {
    pub fn new(comps: Vec<RatFunc>) -> Self {
        VField { comps }
    }

    pub fn zero(dim: usize) -> Self {
        VField { comps: vec![RatFunc::zero(); dim] }
    }

    /// `∂ᵢ`, zero-based.
    pub fn coord(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.comps[i] = RatFunc::one();
        v
    }

    pub fn parse(comps: &[&str]) -> Result<Self> {
        Ok(VField { comps: comps.iter().map(|s| parse_ratfunc(s)).collect::<Result<_>>()? })
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[RatFunc] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// `X(f) = Σ Xⁱ ∂ᵢf`.
    pub fn derive(&self, f: &RatFunc) -> RatFunc {
        self.comps
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(RatFunc::zero(), |acc, (i, c)| &acc + &(c * &f.partial(i)))
    }

    pub fn scale(&self, f: &RatFunc) -> Self {
        VField { comps: self.comps.iter().map(|c| f * c).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        VField { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        VField { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a - b).collect() }
    }

    /// `P X` for an endomorphism field.
    pub fn apply(&self, p: &Matrix<RatFunc>) -> Self {
        VField { comps: p.apply(&self.comps) }
    }

    pub fn eval(&self, p: &Point) -> Result<Vec<Rational>> {
        self.comps.iter().map(|c| c.eval(p.coords())).collect()
    }
}

fn sort_indices(idx: &[usize]) -> Option<(bool, Vec<usize>)> {
    let mut v = idx.to_vec();
    let mut odd = false;
    // insertion sort tracking transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((odd, v))
}

/// Differential form stored on increasing multi-indices.
#[derive(Clone, Debug, PartialEq)]
pub struct KForm {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, RatFunc>,
}

impl KForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        KForm { dim, degree, terms: BTreeMap::new() }
    }

    pub fn function(dim: usize, f: RatFunc) -> Self {
        let mut w = Self::zero(dim, 0);
        w.add_term(&[], f);
        w
    }

    /// `dxⁱ`, zero-based.
    pub fn dx(dim: usize, i: usize) -> Self {
        let mut w = Self::zero(dim, 1);
        w.add_term(&[i], RatFunc::one());
        w
    }

    pub fn one_form(comps: Vec<RatFunc>) -> Self {
        let mut w = Self::zero(comps.len(), 1);
        for (i, c) in comps.into_iter().enumerate() {
            w.add_term(&[i], c);
        }
        w
    }

    /// `Σ c · dx^{i₁}∧…∧dx^{i_k}`, indices in any order.
    pub fn from_terms(dim: usize, degree: usize, terms: &[(Vec<usize>, RatFunc)]) -> Self {
        let mut w = Self::zero(dim, degree);
        for (idx, c) in terms {
            w.add_term(idx, c.clone());
        }
        w
    }

    /// Two-form with `Θ(∂ᵢ, ∂ⱼ) = m[i][j]`.
    pub fn from_matrix(m: &Matrix<RatFunc>) -> Self {
        let n = m.rows();
        let mut w = Self::zero(n, 2);
        for i in 0..n {
            for j in i + 1..n {
                w.add_term(&[i, j], m[(i, j)].clone());
            }
        }
        w
    }

    pub fn add_term(&mut self, idx: &[usize], c: RatFunc) {
        assert_eq!(idx.len(), self.degree, "form degree");
        assert!(idx.iter().all(|&i| i < self.dim), "index out of range");
        if c.is_zero() {
            return;
        }
        let Some((odd, key)) = sort_indices(idx) else { return };
        let c = if odd { -c } else { c };
        let entry = self.terms.entry(key.clone()).or_insert_with(RatFunc::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &RatFunc)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Component on any index order.
    pub fn get(&self, idx: &[usize]) -> RatFunc {
        match sort_indices(idx) {
            None => RatFunc::zero(),
            Some((odd, key)) => {
                let c = self.terms.get(&key).cloned().unwrap_or_else(RatFunc::zero);
                if odd {
                    -c
                } else {
                    c
                }
            }
        }
    }

    /// Components of a 1-form.
    pub fn comps1(&self) -> Vec<RatFunc> {
        assert_eq!(self.degree, 1);
        (0..self.dim).map(|i| self.get(&[i])).collect()
    }

    /// Matrix `Θ(∂ᵢ, ∂ⱼ)` of a 2-form.
    pub fn to_matrix(&self) -> Matrix<RatFunc> {
        assert_eq!(self.degree, 2);
        Matrix::from_fn(self.dim, self.dim, |i, j| self.get(&[i, j]))
    }

    pub fn scale(&self, f: &RatFunc) -> Self {
        let mut w = Self::zero(self.dim, self.degree);
        for (k, c) in &self.terms {
            w.add_term(k, f * c);
        }
        w
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.degree, o.degree, "form degree");
        let mut w = self.clone();
        for (k, c) in &o.terms {
            w.add_term(k, c.clone());
        }
        w
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-RatFunc::one()))
    }

    pub fn wedge(&self, o: &Self) -> Self {
        let mut w = Self::zero(self.dim, self.degree + o.degree);
        for (a, f) in &self.terms {
            for (b, h) in &o.terms {
                let idx: Vec<usize> = a.iter().chain(b).copied().collect();
                w.add_term(&idx, f * h);
            }
        }
        w
    }

    /// Evaluate all stored components at a point.
    pub fn eval(&self, p: &Point) -> Result<Vec<(Vec<usize>, Rational)>> {
        let mut out = Vec::new();
        for (k, c) in &self.terms {
            let v = c.eval(p.coords())?;
            if !v.is_zero() {
                out.push((k.clone(), v));
            }
        }
        Ok(out)
    }

    /// Parse `c*dxi^dxj + …`; the coefficient is any rational-function
    /// expression and may be omitted.
    pub fn parse(dim: usize, s: &str) -> Result<Self> {
        let mut out: Option<KForm> = None;
        for (offset, sign, term) in split_terms(s)? {
            let mut coef: Vec<&str> = Vec::new();
            let mut diff: Option<Vec<usize>> = None;
            for factor in split_top(term, '*') {
                let f = factor.trim();
                if f.starts_with("dx") {
                    if diff.is_some() {
                        return Err(Error::Parse { offset, message: "two differential factors".into() });
                    }
                    let idx = f
                        .split('^')
                        .map(|d| {
                            d.trim()
                                .strip_prefix("dx")
                                .and_then(|n| n.parse::<usize>().ok())
                                .filter(|&n| n >= 1 && n <= dim)
                                .map(|n| n - 1)
                                .ok_or_else(|| Error::Parse { offset, message: format!("bad differential `{d}`") })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    diff = Some(idx);
                } else {
                    coef.push(f);
                }
            }
            let idx = diff.unwrap_or_default();
            let c = if coef.is_empty() { RatFunc::one() } else { parse_ratfunc(&coef.join("*"))? };
            let c = if sign { -c } else { c };
            let w = out.get_or_insert_with(|| KForm::zero(dim, idx.len()));
            if w.degree != idx.len() {
                return Err(Error::Parse { offset, message: "mixed form degrees".into() });
            }
            w.add_term(&idx, c);
        }
        out.ok_or(Error::Parse { offset: 0, message: "empty form".into() })
    }
}

fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Top-level `+`/`-` split; returns `(offset, negative, term)`.
fn split_terms(s: &str) -> Result<Vec<(usize, bool, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut neg = false;
    let mut prev: Option<char> = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && !matches!(prev, Some('*' | '/' | '^')) => {
                let t = &s[start..i];
                if !t.trim().is_empty() {
                    out.push((start, neg, t));
                    neg = false;
                } else if (!out.is_empty() || prev.is_some())
                    && prev.is_some() && !matches!(prev, Some('+' | '-')) {
                        return Err(Error::Parse { offset: i, message: "dangling operator".into() });
                    }
                if ch == '-' {
                    neg = !neg;
                }
                start = i + 1;
            }
            _ => {}
        }
        if !ch.is_whitespace() {
            prev = Some(ch);
        }
    }
    if depth != 0 {
        return Err(Error::Parse { offset: s.len(), message: "unbalanced parentheses".into() });
    }
    let t = &s[start..];
    if t.trim().is_empty() {
        return Err(Error::Parse { offset: s.len(), message: "expected a term".into() });
    }
    out.push((start, neg, t));
    Ok(out)
}

impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let d: Vec<String> = k.iter().map(|i| format!("dx{}", i + 1)).collect();
            match (c.constant_value(), d.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (Some(v), false) if v.is_one() => write!(f, "{}", d.join("^"))?,
                (Some(v), false) => write!(f, "{}*{}", fmt_rational(&v), d.join("^"))?,
                (None, false) => write!(f, "({c})*{}", d.join("^"))?,
            }
        }
        Ok(())
    }
}

/// `dω` in coordinates.
pub fn ext_deriv(w: &KForm) -> KForm {
    let mut out = KForm::zero(w.dim, w.degree + 1);
    for (k, c) in &w.terms {
        for j in 0..w.dim {
            let dc = c.partial(j);
            if dc.is_zero() {
                continue;
            }
            let mut idx = vec![j];
            idx.extend_from_slice(k);
            out.add_term(&idx, dc);
        }
    }
    out
}

/// `ι_X ω` with `ι_X dxⁱ = Xⁱ`, extended as an antiderivation.
pub fn interior(x: &VField, w: &KForm) -> KForm {
    assert!(w.degree > 0, "interior product of a function");
    let mut out = KForm::zero(w.dim, w.degree - 1);
    for (k, c) in &w.terms {
        for (m, &i) in k.iter().enumerate() {
            if x.comps[i].is_zero() {
                continue;
            }
            let rest: Vec<usize> = k.iter().enumerate().filter(|&(p, _)| p != m).map(|(_, &v)| v).collect();
            let v = &x.comps[i] * c;
            out.add_term(&rest, if m % 2 == 1 { -v } else { v });
        }
    }
    out
}

/// `ℒ_X ω = ι_X dω + d ι_X ω`.
pub fn lie_derivative(x: &VField, w: &KForm) -> KForm {
    if w.degree == 0 {
        return KForm::function(w.dim, x.derive(&w.get(&[])));
    }
    interior(x, &ext_deriv(w)).add(&ext_deriv(&interior(x, w)))
}

pub fn lie_bracket(x: &VField, y: &VField) -> VField {
    VField { comps: (0..x.dim()).map(|i| &x.derive(&y.comps[i]) - &y.derive(&x.comps[i])).collect() }
}

/// Field of 2-vectors stored as its antisymmetric matrix `πⁱʲ`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiVectorField {
    m: Matrix<RatFunc>,
}

impl BiVectorField {
    pub fn from_matrix(m: Matrix<RatFunc>) -> Result<Self> {
        if !m.is_antisymmetric() {
            return Err(Error::DegenerateInput("bivector matrix must be antisymmetric".into()));
        }
        Ok(BiVectorField { m })
    }

    /// `Σ c ∂ᵢ∧∂ⱼ`, zero-based.
    pub fn from_terms(dim: usize, terms: &[(usize, usize, RatFunc)]) -> Self {
        let mut m = Matrix::zeros(dim, dim);
        for (i, j, c) in terms {
            m[(*i, *j)] = &m[(*i, *j)] + c;
            m[(*j, *i)] = &m[(*j, *i)] - c;
        }
        BiVectorField { m }
    }

    pub fn matrix(&self) -> &Matrix<RatFunc> {
        &self.m
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    /// `Σₗ πˡⁱ∂ₗπʲᵏ + πˡʲ∂ₗπᵏⁱ + πˡᵏ∂ₗπⁱʲ`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> RatFunc {
        let m = &self.m;
        let mut acc = RatFunc::zero();
        for l in 0..self.dim() {
            for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                if !m[(l, a)].is_zero() {
                    acc = &acc + &(&m[(l, a)] * &m[(b, c)].partial(l));
                }
            }
        }
        acc
    }

    /// First triple `i < j < k` with nonzero Jacobiator.
    pub fn poisson_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
            .find(|&(i, j, k)| !self.jacobiator(i, j, k).is_zero())
    }
}

pub fn is_poisson(pi: &BiVectorField) -> bool {
    pi.poisson_witness().is_none()
}

/// `[X,Y] + [PX,PY] − P[PX,Y] − P[X,PY]`.
pub fn classical_nijenhuis(p: &Matrix<RatFunc>, x: &VField, y: &VField) -> VField {
    let px = x.apply(p);
    let py = y.apply(p);
    let inner = lie_bracket(&px, y).add(&lie_bracket(x, &py));
    lie_bracket(x, y).add(&lie_bracket(&px, &py)).sub(&inner.apply(p))
}

/// Section `X + α` of `T ⊕ T*` over the patch.
#[derive(Clone, Debug, PartialEq)]
pub struct GenSection {
    pub x: VField,
    pub alpha: KForm,
}

impl GenSection {
    pub fn new(x: VField, alpha: KForm) -> Self {
        assert_eq!(alpha.degree(), 1, "covector part must be a 1-form");
        assert_eq!(x.dim(), alpha.dim(), "patch dimension");
        GenSection { x, alpha }
    }

    pub fn zero(dim: usize) -> Self {
        GenSection { x: VField::zero(dim), alpha: KForm::zero(dim, 1) }
    }

    pub fn vector(x: VField) -> Self {
        let n = x.dim();
        GenSection { x, alpha: KForm::zero(n, 1) }
    }

    pub fn form(alpha: KForm) -> Self {
        GenSection { x: VField::zero(alpha.dim()), alpha }
    }

    pub fn dim(&self) -> usize {
        self.x.dim()
    }

    pub fn stacked(&self) -> Vec<RatFunc> {
        self.x.comps.iter().cloned().chain(self.alpha.comps1()).collect()
    }

    pub fn from_stacked(v: &[RatFunc]) -> Self {
        let n = v.len() / 2;
        GenSection { x: VField::new(v[..n].to_vec()), alpha: KForm::one_form(v[n..].to_vec()) }
    }

    pub fn apply(&self, k: &Matrix<RatFunc>) -> Self {
        Self::from_stacked(&k.apply(&self.stacked()))
    }

    pub fn add(&self, o: &Self) -> Self {
        GenSection { x: self.x.add(&o.x), alpha: self.alpha.add(&o.alpha) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        GenSection { x: self.x.sub(&o.x), alpha: self.alpha.sub(&o.alpha) }
    }

    pub fn scale(&self, f: &RatFunc) -> Self {
        GenSection { x: self.x.scale(f), alpha: self.alpha.scale(f) }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.alpha.is_zero()
    }

    pub fn eval(&self, p: &Point) -> Result<gpx::GenVector<Rational>> {
        let s: Vec<Rational> = self.stacked().iter().map(|c| c.eval(p.coords())).collect::<Result<_>>()?;
        Ok(gpx::GenVector::from_stacked(&s))
    }

    /// `∂ᵢ` for `i < n`, then `dx^{i−n}`.
    pub fn frame(dim: usize, i: usize) -> Self {
        if i < dim {
            Self::vector(VField::coord(dim, i))
        } else {
            Self::form(KForm::dx(dim, i - dim))
        }
    }
}

/// `[X,Y] + ℒ_Xβ − ℒ_Yα − ½d(ι_Xβ − ι_Yα)`.
pub fn courant_bracket(a: &GenSection, b: &GenSection) -> GenSection {
    let half = RatFunc::constant(Rational::new(1.into(), 2.into()));
    let ixb = interior(&a.x, &b.alpha);
    let iya = interior(&b.x, &a.alpha);
    let form = lie_derivative(&a.x, &b.alpha)
        .sub(&lie_derivative(&b.x, &a.alpha))
        .sub(&ext_deriv(&ixb.sub(&iya)).scale(&half));
    GenSection { x: lie_bracket(&a.x, &b.x), alpha: form }
}

/// `[[A,B],C] + [[B,C],A] + [[C,A],B]`.
pub fn courant_jacobiator(a: &GenSection, b: &GenSection, c: &GenSection) -> GenSection {
    let t1 = courant_bracket(&courant_bracket(a, b), c);
    let t2 = courant_bracket(&courant_bracket(b, c), a);
    let t3 = courant_bracket(&courant_bracket(c, a), b);
    t1.add(&t2).add(&t3)
}

/// `[A,B] + [KA,KB] − K[KA,B] − K[A,KB]` with the Courant bracket.
pub fn gen_nijenhuis(k: &Matrix<RatFunc>, a: &GenSection, b: &GenSection) -> GenSection {
    let ka = a.apply(k);
    let kb = b.apply(k);
    let inner = courant_bracket(&ka, b).add(&courant_bracket(a, &kb));
    courant_bracket(a, b).add(&courant_bracket(&ka, &kb)).sub(&inner.apply(k))
}

/// `e^Θ(X + α) = X + α + ι_XΘ`.
pub fn b_transform_section(theta: &KForm, a: &GenSection) -> GenSection {
    GenSection { x: a.x.clone(), alpha: a.alpha.add(&interior(&a.x, theta)) }
}

/// `[e^ΘA, e^ΘB] − (e^Θ[A,B] − ι_Xι_Y dΘ)`.
pub fn b_bracket_residual(theta: &KForm, a: &GenSection, b: &GenSection) -> GenSection {
    let lhs = courant_bracket(&b_transform_section(theta, a), &b_transform_section(theta, b));
    let correction = interior(&a.x, &interior(&b.x, &ext_deriv(theta)));
    let rhs = b_transform_section(theta, &courant_bracket(a, b));
    lhs.sub(&GenSection { x: rhs.x, alpha: rhs.alpha.sub(&correction) })
}

/// Structure data on a patch.
#[derive(Clone, Debug)]
pub enum PatchExample {
    Trivial(usize),
    Omega(KForm),
    Pi(BiVectorField),
    Product(Matrix<RatFunc>),
}

impl PatchExample {
    pub fn kind(&self) -> ExampleKind {
        match self {
            PatchExample::Trivial(_) => ExampleKind::Trivial,
            PatchExample::Omega(_) => ExampleKind::Omega,
            PatchExample::Pi(_) => ExampleKind::Pi,
            PatchExample::Product(_) => ExampleKind::Product,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            PatchExample::Trivial(n) => *n,
            PatchExample::Omega(w) => w.dim(),
            PatchExample::Pi(p) => p.dim(),
            PatchExample::Product(p) => p.rows(),
        }
    }

    /// The generalized structure as a `2n × 2n` block field.
    pub fn structure(&self) -> Result<Matrix<RatFunc>> {
        match self {
            PatchExample::Trivial(n) => Ok(gpx::trivial_structure(*n)),
            PatchExample::Omega(w) => {
                if w.degree() != 2 {
                    return Err(Error::DegenerateOmega);
                }
                gpx::omega_structure(&w.to_matrix())
            }
            PatchExample::Pi(p) => gpx::pi_structure(p.matrix()),
            PatchExample::Product(p) => gpx::product_structure(p),
        }
    }
}

/// Pointwise validity of a structure field.
pub fn validate_at(k: &Matrix<RatFunc>, p: &Point) -> Result<ValidationReport> {
    Ok(gpx::validate_gen_para(&k.eval(p)?))
}

/// Generalized Nijenhuis tensor on all frame pairs `(Eᵢ, Eⱼ)`, `i < j`,
/// of `∂₁..∂ₙ, dx¹..dxⁿ`.
pub fn nijenhuis_on_frames(k: &Matrix<RatFunc>) -> Vec<((usize, usize), GenSection)> {
    let dim = k.rows() / 2;
    let frames: Vec<GenSection> = (0..2 * dim).map(|i| GenSection::frame(dim, i)).collect();
    let pairs: Vec<(usize, usize)> = (0..2 * dim).flat_map(|i| (i + 1..2 * dim).map(move |j| (i, j))).collect();
    pairs.into_par_iter().map(|(i, j)| ((i, j), gen_nijenhuis(k, &frames[i], &frames[j]))).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NijenhuisSample {
    pub point: Vec<String>,
    /// Number of frame pairs with nonzero value at the point.
    pub nonzero_pairs: usize,
    pub max_abs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntegrabilityReport {
    pub kind: ExampleKind,
    pub integrable: bool,
    pub criterion: &'static str,
    /// Human-readable location of the obstruction (1-based indices).
    pub witness: Option<String>,
    pub witness_point: Option<Vec<String>>,
    pub nijenhuis_residual_samples: Vec<NijenhuisSample>,
    /// Does vanishing of the generalized Nijenhuis tensor at the samples agree with the criterion?
    pub nijenhuis_agrees: bool,
}

/// Decide integrability by the classical criterion of each example and
/// cross-check with the generalized Nijenhuis tensor at `points`.
pub fn integrability_report(data: &PatchExample, points: &[Point]) -> Result<IntegrabilityReport> {
    let dim = data.dim();
    for p in points {
        p.check_dim(dim)?;
    }
    let k = data.structure()?;
    let (criterion, witness) = match data {
        PatchExample::Trivial(_) => ("trivial", None),
        PatchExample::Omega(w) => {
            let dw = ext_deriv(w);
            let first = dw.terms().next().map(|(idx, _)| format!("dOmega{}", one_based(idx)));
            ("d_omega_zero", first)
        }
        PatchExample::Pi(p) => {
            ("poisson", p.poisson_witness().map(|(i, j, k)| format!("jacobiator({},{},{})", i + 1, j + 1, k + 1)))
        }
        PatchExample::Product(p) => {
            let w = (0..dim).flat_map(|i| (i + 1..dim).map(move |j| (i, j))).find(|&(i, j)| {
                !classical_nijenhuis(p, &VField::coord(dim, i), &VField::coord(dim, j)).is_zero()
            });
            ("nijenhuis_P_zero", w.map(|(i, j)| format!("N(d{},d{})", i + 1, j + 1)))
        }
    };
    let integrable = witness.is_none();
    let table = nijenhuis_on_frames(&k);
    let mut samples = Vec::new();
    let mut witness_point = None;
    for p in points {
        let mut nonzero = 0;
        let mut max = Rational::zero();
        for (_, n) in &table {
            let v = n.eval(p)?;
            let m = v.stacked().iter().map(num_traits::Signed::abs).max().unwrap_or_else(Rational::zero);
            if !m.is_zero() {
                nonzero += 1;
            }
            if m > max {
                max = m;
            }
        }
        let pt: Vec<String> = p.coords().iter().map(fmt_rational).collect();
        if nonzero > 0 && witness_point.is_none() {
            witness_point = Some(pt.clone());
        }
        samples.push(NijenhuisSample { point: pt, nonzero_pairs: nonzero, max_abs: fmt_rational(&max) });
    }
    let nij_zero = samples.iter().all(|s| s.nonzero_pairs == 0);
    Ok(IntegrabilityReport {
        kind: data.kind(),
        integrable,
        criterion,
        witness,
        witness_point,
        nijenhuis_residual_samples: samples,
        nijenhuis_agrees: nij_zero == integrable,
    })
}

fn one_based(idx: &[usize]) -> String {
    idx.iter().map(|i| (i + 1).to_string()).collect()
}
