use num_traits::{One, Signed, Zero};

use super::Matrix;
use crate::error::{Error, Result};
use crate::exact::{Field, Rational};

/// Sylvester inertia `(pos, neg, null)` of a symmetric rational form.
pub fn signature(b: &Matrix<Rational>) -> Result<(usize, usize, usize)> {
    let diag = orthogonal_basis(b, &identity_columns(b.rows()))?;
    let pos = diag.iter().filter(|(_, c)| c.is_positive()).count();
    let neg = diag.iter().filter(|(_, c)| c.is_negative()).count();
    Ok((pos, neg, b.rows() - pos - neg))
}

fn identity_columns(n: usize) -> Vec<Vec<Rational>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

/// Diagonalize the restriction of `b` to the span of `vectors` by
/// congruence. Returns mutually `b`-orthogonal vectors with nonzero norms,
/// in order of discovery; a vector already of nonzero norm is kept as is when
/// it comes first.
pub fn orthogonal_basis(b: &Matrix<Rational>, vectors: &[Vec<Rational>]) -> Result<Vec<(Vec<Rational>, Rational)>> {
    if !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut work: Vec<Vec<Rational>> = vectors.to_vec();
    let mut out = Vec::new();
    loop {
        work.retain(|v| v.iter().any(|c| !c.is_zero()));
        if work.is_empty() {
            break;
        }
        let norms: Vec<Rational> = work.iter().map(|v| b.form(v, v)).collect();
        let idx = match norms.iter().position(|c| !c.is_zero()) {
            Some(i) => i,
            None => {
                let pair = (0..work.len())
                    .flat_map(|i| (i + 1..work.len()).map(move |j| (i, j)))
                    .find(|&(i, j)| !b.form(&work[i], &work[j]).is_zero());
                let Some((i, j)) = pair else { break };
                let sum: Vec<Rational> = work[i].iter().zip(&work[j]).map(|(x, y)| x + y).collect();
                work[i] = sum;
                i
            }
        };
        let v = work.remove(idx);
        let nv = b.form(&v, &v);
        for w in work.iter_mut() {
            let f = b.form(w, &v) / &nv;
            if !f.is_zero() {
                for (wc, vc) in w.iter_mut().zip(&v) {
                    *wc -= &f * vc;
                }
            }
        }
        out.push((v, nv));
    }
    Ok(out)
}

pub fn is_neutral(b: &Matrix<Rational>) -> bool {
    let n = b.rows();
    n.is_multiple_of(2) && signature(b).is_ok_and(|s| s == (n / 2, n / 2, 0))
}

/// `B(X, Y)` for column vectors.
pub fn eval_form<T: Field>(b: &Matrix<T>, x: &[T], y: &[T]) -> T {
    b.form(x, y)
}

/// The covector `φ(X) = φ(X, ·)` as a component vector, i.e. `φᵀX`.
pub fn flat<T: Field>(phi: &Matrix<T>, x: &[T]) -> Vec<T> {
    phi.transpose().apply(x)
}

/// Matrix of the map `X ↦ φ(X, ·)`.
pub fn flat_map<T: Field>(phi: &Matrix<T>) -> Matrix<T> {
    phi.transpose()
}

/// Is `k` skew for `g`, i.e. `g(kX, Y) + g(X, kY) = 0`?
pub fn is_skew_for<T: Field>(g: &Matrix<T>, k: &Matrix<T>) -> bool {
    (&(&k.transpose() * g) + &(g * k)).is_zero()
}

/// Antisymmetric matrix with the given upper-triangular entries `(i, j, v)`.
pub fn antisymmetric<T: Field>(n: usize, entries: &[(usize, usize, T)]) -> Matrix<T> {
    let mut m: Matrix<T> = Matrix::zeros(n, n);
    for (i, j, v) in entries {
        m[(*i, *j)] = m[(*i, *j)].clone() + v.clone();
        m[(*j, *i)] = m[(*j, *i)].clone() - v.clone();
    }
    m
}

/// Null-frame metric `g(eᵢ, fⱼ) = δᵢⱼ` on `(e₁..eₙ, f₁..fₙ)`.
pub fn null_frame_metric<T: Field>(n: usize) -> Matrix<T> {
    Matrix::from_fn(2 * n, 2 * n, |i, j| if i.abs_diff(j) == n { T::one() } else { T::zero() })
}

/// `diag(1,…,1,−1,…,−1)`.
pub fn standard_neutral<T: Field>(n: usize) -> Matrix<T> {
    Matrix::from_fn(2 * n, 2 * n, |i, j| match (i == j, i < n) {
        (false, _) => T::zero(),
        (true, true) => T::one(),
        (true, false) => -T::one(),
    })
}

/// Standard paracomplex structure `Keᵢ = e_{n+i}`, `Ke_{n+i} = eᵢ`.
pub fn standard_para<T: Field>(n: usize) -> Matrix<T> {
    Matrix::from_fn(2 * n, 2 * n, |i, j| if i.abs_diff(j) == n { T::one() } else { T::zero() })
}
