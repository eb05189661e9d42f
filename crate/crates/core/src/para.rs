//! Paracomplex structures on a neutral vector space and the fiber `Z(T)` of
//! compatible ones.

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::{rational_sqrt, Field, Rational};
use crate::linalg::{is_skew_for, j_structures, orthogonal_basis, Matrix};
use crate::report::ValidationReport;

/// Checks `k² = Id`, `k ≠ ±Id`, `tr k = 0` and `g`-skewness.
pub fn validate_para<T: Field>(g: &Matrix<T>, k: &Matrix<T>) -> ValidationReport {
    let n = k.rows();
    let id = Matrix::identity(n);
    let mut r = ValidationReport::new();
    r.push("square_identity", (k * k) == id);
    r.push("not_plus_minus_identity", *k != id && *k != -id);
    r.push("trace_zero", k.trace().is_zero());
    r.push("g_skew", is_skew_for(g, k));
    r
}

pub fn is_para<T: Field>(g: &Matrix<T>, k: &Matrix<T>) -> bool {
    validate_para(g, k).all_pass()
}

/// `g`-adjoint `g⁻¹Aᵀg`.
pub fn adjoint<T: Field>(g: &Matrix<T>, a: &Matrix<T>) -> Result<Matrix<T>> {
    Ok(&(&g.inverse()? * &a.transpose()) * g)
}

/// Adapted null basis, returned as columns `a₁..aₙ, a_{n+1}..a_{2n}` with
/// `Kaᵢ = aᵢ`, `Ka_{n+i} = −a_{n+i}` and `g(aᵢ, a_{n+j}) = δᵢⱼ`, all other
/// pairings zero.
pub fn null_basis(g: &Matrix<Rational>, k: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    if !is_para(g, k) {
        return Err(Error::DegenerateInput("(g, K) is not a para-Hermitian pair".into()));
    }
    let dim = g.rows();
    let n = dim / 2;
    let mut span: Vec<Vec<Rational>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    let mut plus = Vec::with_capacity(n);
    let mut minus = Vec::with_capacity(n);
    for _ in 0..n {
        let v = orthogonal_basis(g, &span)?
            .into_iter()
            .find(|(_, c)| c.is_positive())
            .map(|(v, _)| v)
            .ok_or_else(|| Error::DegenerateInput("no positive vector in the complement".into()))?;
        let c = g.form(&v, &v);
        let kv = k.apply(&v);
        let a: Vec<Rational> = v.iter().zip(&kv).map(|(x, y)| x + y).collect();
        let two_c = &c * Rational::from_integer(2.into());
        let b: Vec<Rational> = v.iter().zip(&kv).map(|(x, y)| (x - y) / &two_c).collect();
        span = span
            .iter()
            .map(|x| {
                let xb = g.form(x, &b);
                let xa = g.form(x, &a);
                x.iter()
                    .zip(a.iter().zip(&b))
                    .map(|(xi, (ai, bi))| xi - &xb * ai - &xa * bi)
                    .collect()
            })
            .collect();
        plus.push(a);
        minus.push(b);
    }
    let cols: Vec<Vec<Rational>> = plus.into_iter().chain(minus).collect();
    Ok(Matrix::from_fn(dim, dim, |i, j| cols[j][i].clone()))
}

/// Orientation induced by `K` relative to the coordinate basis: the sign of
/// the transition to `{eᵢ, Keᵢ}` for a `g`-orthonormal `e₁..eₙ` spanning a
/// positive definite subspace.
pub fn induced_orientation(g: &Matrix<Rational>, k: &Matrix<Rational>) -> Result<i8> {
    let nb = null_basis(g, k)?;
    let n = g.rows() / 2;
    // (e, Ke) -> (e + Ke, ½(e − Ke)) has determinant (−1)ⁿ
    let s = if nb.det().is_positive() { 1 } else { -1 };
    Ok(if n.is_multiple_of(2) { s } else { -s })
}

/// `½(A₀ − K A₀ K)` with `A₀` the `g`-skew part of `A`.
pub fn z_tangent_project<T: Field>(g: &Matrix<T>, k: &Matrix<T>, a: &Matrix<T>) -> Result<Matrix<T>> {
    let h = T::half();
    let a0 = (a - &adjoint(g, a)?).scale(&h);
    Ok((&a0 - &(&(k * &a0) * k)).scale(&h))
}

/// Is `v` tangent to `Z(T)` at `k`: `g`-skew and anticommuting with `k`?
pub fn is_tangent<T: Field>(g: &Matrix<T>, k: &Matrix<T>, v: &Matrix<T>) -> bool {
    is_skew_for(g, v) && (&(v * k) + &(k * v)).is_zero()
}

/// `𝒦V = K∘V`.
pub fn fiber_structure<T: Field>(g: &Matrix<T>, k: &Matrix<T>, v: &Matrix<T>) -> Result<Matrix<T>> {
    if !is_tangent(g, k, v) {
        return Err(Error::NotTangent);
    }
    Ok(k * v)
}

/// `G(V, W) = −½ tr(VW)`.
pub fn fiber_metric<T: Field>(v: &Matrix<T>, w: &Matrix<T>) -> T {
    -((v * w).trace() * T::half())
}

/// Basis of the tangent space of `Z(T)` at `k`, solved as the kernel of
/// `V ↦ (Vᵀg + gV, VK + KV)`.
pub fn z_tangent_space<T: Field>(g: &Matrix<T>, k: &Matrix<T>) -> Vec<Matrix<T>> {
    let d = g.rows();
    let unknowns = d * d;
    let mut rows: Vec<Vec<T>> = Vec::new();
    for r in 0..d {
        for c in 0..d {
            // (Vᵀg + gV)[r][c] = Σ_m V[m][r] g[m][c] + g[r][m] V[m][c]
            let mut eq = vec![T::zero(); unknowns];
            let mut ac = vec![T::zero(); unknowns];
            for m in 0..d {
                eq[m * d + r] = eq[m * d + r].clone() + g[(m, c)].clone();
                eq[m * d + c] = eq[m * d + c].clone() + g[(r, m)].clone();
                // (VK + KV)[r][c] = Σ_m V[r][m] K[m][c] + K[r][m] V[m][c]
                ac[r * d + m] = ac[r * d + m].clone() + k[(m, c)].clone();
                ac[m * d + c] = ac[m * d + c].clone() + k[(r, m)].clone();
            }
            rows.push(eq);
            rows.push(ac);
        }
    }
    let sys = Matrix::from_rows(rows);
    sys.nullspace()
        .into_iter()
        .map(|v| Matrix::from_fn(d, d, |i, j| v[i * d + j].clone()))
        .collect()
}

/// `K = y₁J₁ + y₂J₂ + y₃J₃` for a point of `−y₁² + y₂² + y₃² = 1`.
pub fn hyperboloid_structure<T: Field>(g: &Matrix<T>, onb: &Matrix<T>, y: [&T; 3]) -> Result<Matrix<T>> {
    if g.rows() != 4 {
        return Err(Error::DimNot4);
    }
    crate::linalg::check_onb(g, onb)?;
    let [y1, y2, y3] = y;
    let q = -(y1.clone() * y1.clone()) + y2.clone() * y2.clone() + y3.clone() * y3.clone();
    if !(q - T::one()).is_zero() {
        return Err(Error::NotOnHyperboloid);
    }
    let [j1, j2, j3] = j_structures(g, onb);
    Ok(&(&j1.scale(y1) + &j2.scale(y2)) + &j3.scale(y3))
}

/// Coordinates `(y₁, y₂, y₃)` of a structure in the span of `J₁, J₂, J₃`,
/// read back through the fiber metric.
pub fn hyperboloid_coords<T: Field>(g: &Matrix<T>, onb: &Matrix<T>, k: &Matrix<T>) -> [T; 3] {
    let js = j_structures(g, onb);
    let c = |j: &Matrix<T>| fiber_metric(k, j) / fiber_metric(j, j);
    [c(&js[0]), c(&js[1]), c(&js[2])]
}

/// Orthogonal basis `u₁..uₙ, w₁..wₙ` (columns) with `g(uᵢ,uᵢ) = pᵢ > 0` and
/// `g(wᵢ,wᵢ) = −pᵢ`.
/// Falls back to a search for rational null vectors when the diagonal
/// entries do not pair up; fails when `g` is not split over the rationals.
pub fn paired_orthogonal_basis(g: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    let dim = g.rows();
    let ids: Vec<Vec<Rational>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    let diag = orthogonal_basis(g, &ids)?;
    if diag.len() != dim {
        return Err(Error::DegenerateMetric);
    }
    let mut pos: Vec<(Vec<Rational>, Rational)> = diag.iter().filter(|(_, c)| c.is_positive()).cloned().collect();
    let mut neg: Vec<(Vec<Rational>, Rational)> = diag.iter().filter(|(_, c)| c.is_negative()).cloned().collect();
    if pos.len() != neg.len() {
        return Err(Error::BadSignature);
    }
    pos.reverse();
    let mut us = Vec::new();
    let mut ws = Vec::new();
    for (u, p) in pos {
        let Some(idx) = neg.iter().position(|(_, m)| rational_sqrt(&(-(&p / m))).is_some()) else {
            return hyperbolic_basis(g);
        };
        let (w, m) = neg.remove(idx);
        let r = rational_sqrt(&(-(&p / &m))).expect("checked square");
        us.push(u);
        ws.push(w.iter().map(|x| x * &r).collect::<Vec<_>>());
    }
    let cols: Vec<Vec<Rational>> = us.into_iter().chain(ws).collect();
    Ok(Matrix::from_fn(dim, dim, |i, j| cols[j][i].clone()))
}

fn gram_form(g: &Matrix<Rational>, x: &[Rational], y: &[Rational]) -> Rational {
    let gy = g.apply(y);
    x.iter().zip(&gy).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

/// Split `t > 0` as `s·k²` with `s` squarefree.
fn squarefree_part(mut t: u64) -> (u64, u64) {
    let (mut s, mut k) = (1u64, 1u64);
    let mut p = 2u64;
    while p * p <= t {
        while t.is_multiple_of(p * p) {
            t /= p * p;
            k *= p;
        }
        if t.is_multiple_of(p) {
            t /= p;
            s *= p;
        }
        p += 1;
    }
    (s * t, k)
}

fn isqrt_exact(v: i128) -> Option<i128> {
    if v < 0 {
        return None;
    }
    let r = (v as f64).sqrt() as i128;
    (r.saturating_sub(2)..=r + 2).find(|x| x * x == v)
}

/// A null vector of `g` in `span`.
fn isotropic_in(g: &Matrix<Rational>, span: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    const BOUND: i64 = 40;
    let m = span.len();
    let dim = g.rows();
    let combine = |vs: &[Vec<Rational>], c: &[Rational]| -> Vec<Rational> {
        (0..dim).map(|k| vs.iter().zip(c).fold(Rational::zero(), |acc, (s, x)| acc + &s[k] * x)).collect()
    };
    if m == 2 {
        // a x² + 2b xy + c y² = 0 solved exactly
        let (a, b, c) = (gram_form(g, &span[0], &span[0]), gram_form(g, &span[0], &span[1]), gram_form(g, &span[1], &span[1]));
        if a.is_zero() {
            return Some(span[0].clone());
        }
        let r = rational_sqrt(&(&b * &b - &a * &c))?;
        return Some(combine(span, &[(-&b + r) / &a, Rational::one()]));
    }
    if m < 2 {
        return None;
    }
    if let Some(c) = integer_gram(g, span).and_then(|gr| null_by_last_coordinate(&gr, 12)) {
        return Some(combine(span, &c));
    }
    // diagonal form Σ sᵢ yᵢ² with squarefree integer sᵢ
    let diag = orthogonal_basis(g, span).ok()?;
    if diag.len() < m {
        return diag.iter().find(|(_, d)| d.is_zero()).map(|(v, _)| v.clone());
    }
    let mut basis = Vec::with_capacity(m);
    let mut s = Vec::with_capacity(m);
    for (v, d) in &diag {
        let (n, den) = (d.numer(), d.denom());
        let t = (n * den).abs().to_u64().filter(|t| *t < 1 << 40)?;
        let (sf, k) = squarefree_part(t);
        let lambda = Rational::new(den.clone(), k.into());
        basis.push(v.iter().map(|x| x * &lambda).collect::<Vec<_>>());
        s.push(if d.is_negative() { -(sf as i128) } else { sf as i128 });
    }
    let diag_gram: Vec<Vec<i128>> = (0..m).map(|a| (0..m).map(|b| if a == b { s[a] } else { 0 }).collect()).collect();
    if let Some(c) = null_by_last_coordinate(&diag_gram, BOUND) {
        return Some(combine(&basis, &c));
    }
    None
}

/// Gram matrix of `vs` scaled to integers.
fn integer_gram(g: &Matrix<Rational>, vs: &[Vec<Rational>]) -> Option<Vec<Vec<i128>>> {
    let gram: Vec<Vec<Rational>> = vs.iter().map(|a| vs.iter().map(|b| gram_form(g, a, b)).collect()).collect();
    let lcm = gram.iter().flatten().fold(num_bigint::BigInt::one(), |acc, q| num_integer::Integer::lcm(&acc, q.denom()));
    gram.iter()
        .map(|r| {
            r.iter()
                .map(|q| (q.numer() * (&lcm / q.denom())).to_i128().filter(|v| v.abs() < 1 << 40))
                .collect::<Option<Vec<_>>>()
        })
        .collect()
}

/// Integer values for all but the last coordinate in `[−bound, bound]`, the
/// last solved from the quadratic `a y² + 2b y + c = 0`.
fn null_by_last_coordinate(gram: &[Vec<i128>], bound: i64) -> Option<Vec<Rational>> {
    let m = gram.len();
    let a = gram[m - 1][m - 1];
    let width = (2 * bound + 1) as usize;
    for code in 0..width.pow((m - 1) as u32) {
        let mut c = code;
        let ys: Vec<i128> = (0..m - 1)
            .map(|_| {
                let d = (c % width) as i128 - bound as i128;
                c /= width;
                d
            })
            .collect();
        if ys.iter().all(|y| *y == 0) {
            continue;
        }
        let b: i128 = ys.iter().enumerate().map(|(i, y)| y * gram[i][m - 1]).sum();
        let cc: i128 = (0..m - 1).flat_map(|i| (0..m - 1).map(move |j| (i, j))).map(|(i, j)| ys[i] * ys[j] * gram[i][j]).sum();
        let last = if a == 0 {
            if b != 0 {
                Rational::new((-cc).into(), (2 * b).into())
            } else if cc == 0 {
                Rational::zero()
            } else {
                continue;
            }
        } else {
            match isqrt_exact(b * b - a * cc) {
                Some(r) => Rational::new((r - b).into(), a.into()),
                None => continue,
            }
        };
        let mut out: Vec<Rational> = ys.iter().map(|y| Rational::from_integer((*y).into())).collect();
        out.push(last);
        return Some(out);
    }
    None
}

/// Paired orthogonal basis built from hyperbolic planes `(e, f)`, `g(e,f) = 1`,
/// as `u = e + f/2`, `w = e − f/2`.
fn hyperbolic_basis(g: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    let dim = g.rows();
    let no_pairing = || Error::DegenerateInput("no rational null pairing for this metric".into());
    let mut span: Vec<Vec<Rational>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    let half = Rational::new(1.into(), 2.into());
    let (mut us, mut ws) = (Vec::new(), Vec::new());
    while !span.is_empty() {
        let e = isotropic_in(g, &span).ok_or_else(no_pairing)?;
        let s = span.iter().find(|s| !gram_form(g, &e, s).is_zero()).ok_or(Error::DegenerateMetric)?;
        let c = gram_form(g, &e, s);
        let f1: Vec<Rational> = s.iter().map(|x| x / &c).collect();
        let ff = gram_form(g, &f1, &f1) * &half;
        let f: Vec<Rational> = f1.iter().zip(&e).map(|(a, b)| a - &ff * b).collect();
        us.push(e.iter().zip(&f).map(|(a, b)| a + b * &half).collect::<Vec<_>>());
        ws.push(e.iter().zip(&f).map(|(a, b)| a - b * &half).collect::<Vec<_>>());
        // g-orthogonal complement of (e, f) inside span
        let (ge, gf) = (g.apply(&e), g.apply(&f));
        let rows: Vec<Vec<Rational>> = [ge, gf]
            .iter()
            .map(|gv| span.iter().map(|s| s.iter().zip(gv).fold(Rational::zero(), |acc, (a, b)| acc + a * b)).collect())
            .collect();
        let kernel = Matrix::from_rows(rows).nullspace();
        span = kernel
            .iter()
            .map(|c| (0..dim).map(|k| span.iter().zip(c).fold(Rational::zero(), |acc, (s, x)| acc + &s[k] * x)).collect())
            .collect();
    }
    let cols: Vec<Vec<Rational>> = us.into_iter().chain(ws).collect();
    Ok(Matrix::from_fn(dim, dim, |i, j| cols[j][i].clone()))
}

/// A compatible paracomplex structure swapping `uᵢ ↔ wᵢ` of
/// [`paired_orthogonal_basis`].
pub fn reference_para(g: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    let b = paired_orthogonal_basis(g)?;
    let n = g.rows() / 2;
    let swap = Matrix::from_fn(2 * n, 2 * n, |i, j| if i.abs_diff(j) == n { Rational::one() } else { Rational::zero() });
    Ok(&(&b * &swap) * &b.inverse()?)
}

/// Random compatible paracomplex structure inducing the given orientation,
/// by Cayley-conjugating a null-basis model.
pub fn random_para<R: Rng>(g: &Matrix<Rational>, orientation: i8, rng: &mut R) -> Result<Matrix<Rational>> {
    let k0 = reference_para(g)?;
    let nb = null_basis(g, &k0)?;
    let dim = g.rows();
    let n = dim / 2;
    let mut signs: Vec<Rational> = (0..dim).map(|i| if i < n { Rational::one() } else { -Rational::one() }).collect();
    let d = Matrix::diag(&signs);
    let base = &(&nb * &d) * &nb.inverse()?;
    let base = if induced_orientation(g, &base)? == orientation.signum() {
        base
    } else {
        signs.swap(n - 1, dim - 1);
        &(&nb * &Matrix::diag(&signs)) * &nb.inverse()?
    };
    let g_inv = g.inverse()?;
    let id = Matrix::identity(dim);
    loop {
        let s = Matrix::from_fn(dim, dim, |_, _| Rational::zero());
        let mut s = s;
        for i in 0..dim {
            for j in i + 1..dim {
                let v = Rational::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=3).into());
                s[(i, j)] = v.clone();
                s[(j, i)] = -v;
            }
        }
        let a = &g_inv * &s;
        let Ok(inv) = (&id - &a).inverse() else { continue };
        let c = &inv * &(&id + &a);
        let c_inv = c.inverse()?;
        return Ok(&(&c * &base) * &c_inv);
    }
}
