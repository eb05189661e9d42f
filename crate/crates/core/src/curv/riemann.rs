use num_traits::Zero;
use rayon::prelude::*;

use super::connection::Connection;
use crate::error::Result;
use crate::exact::{Point, RatFunc, Rational};
use crate::QMatrix;

/// `R(∂ᵢ,∂ⱼ)∂ₖ = Rˡᵢⱼₖ ∂ₗ` with `R(X,Y) = ∇_{[X,Y]} − [∇_X, ∇_Y]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RiemannTensor {
    dim: usize,
    r: Vec<RatFunc>,
}

fn idx(n: usize, l: usize, i: usize, j: usize, k: usize) -> usize {
    ((l * n + i) * n + j) * n + k
}

/// Coordinate curvature of a connection.
pub fn riemann(c: &Connection) -> RiemannTensor {
    let n = c.dim();
    let dgamma: Vec<Vec<RatFunc>> = (0..n)
        .map(|m| (0..n * n * n).map(|t| c.get(t / (n * n), (t / n) % n, t % n).partial(m)).collect())
        .collect();
    let dg = |m: usize, l: usize, j: usize, k: usize| &dgamma[m][(l * n + j) * n + k];
    let entries: Vec<(usize, usize, usize, usize)> = (0..n)
        .flat_map(|l| (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (0..n).map(move |k| (l, i, j, k)))))
        .collect();
    let vals: Vec<RatFunc> = entries
        .par_iter()
        .map(|&(l, i, j, k)| {
            let mut v = dg(i, l, j, k) - dg(j, l, i, k);
            for m in 0..n {
                let a = c.get(l, i, m);
                let b = c.get(m, j, k);
                if !a.is_zero() && !b.is_zero() {
                    v = &v + &(a * b);
                }
                let a = c.get(l, j, m);
                let b = c.get(m, i, k);
                if !a.is_zero() && !b.is_zero() {
                    v = &v - &(a * b);
                }
            }
            -v
        })
        .collect();
    let mut r = vec![RatFunc::zero(); n * n * n * n];
    for (&(l, i, j, k), v) in entries.iter().zip(vals) {
        r[idx(n, l, j, i, k)] = -v.clone();
        r[idx(n, l, i, j, k)] = v;
    }
    RiemannTensor { dim: n, r }
}

impl RiemannTensor {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `Rˡᵢⱼₖ`.
    pub fn get(&self, l: usize, i: usize, j: usize, k: usize) -> &RatFunc {
        &self.r[idx(self.dim, l, i, j, k)]
    }

    pub fn is_zero(&self) -> bool {
        self.r.iter().all(|v| v.is_zero())
    }

    pub fn at(&self, p: &Point) -> Result<RiemannAt> {
        p.check_dim(self.dim)?;
        let r = self.r.iter().map(|v| v.eval(p.coords())).collect::<Result<_>>()?;
        Ok(RiemannAt { dim: self.dim, r })
    }
}

/// Curvature evaluated at a point, computed from `Γ` and `∂Γ` there.
pub fn riemann_at(c: &Connection, p: &Point) -> Result<RiemannAt> {
    let n = c.dim();
    p.check_dim(n)?;
    let gam = c.at(p)?;
    let g = |k: usize, i: usize, j: usize| &gam[(k * n + i) * n + j];
    let mut dgam = Vec::with_capacity(n);
    for m in 0..n {
        let mut d = Vec::with_capacity(n * n * n);
        for t in 0..n * n * n {
            d.push(c.get(t / (n * n), (t / n) % n, t % n).partial(m).eval(p.coords())?);
        }
        dgam.push(d);
    }
    let dg = |m: usize, l: usize, j: usize, k: usize| &dgam[m][(l * n + j) * n + k];
    let mut r = vec![Rational::zero(); n * n * n * n];
    for l in 0..n {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut v = dg(i, l, j, k) - dg(j, l, i, k);
                    for m in 0..n {
                        v += g(l, i, m) * g(m, j, k) - g(l, j, m) * g(m, i, k);
                    }
                    r[idx(n, l, i, j, k)] = -v;
                }
            }
        }
    }
    Ok(RiemannAt { dim: n, r })
}

/// Curvature components at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct RiemannAt {
    dim: usize,
    r: Vec<Rational>,
}

impl RiemannAt {
    pub fn zero(dim: usize) -> Self {
        RiemannAt { dim, r: vec![Rational::zero(); dim * dim * dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, l: usize, i: usize, j: usize, k: usize) -> &Rational {
        &self.r[idx(self.dim, l, i, j, k)]
    }

    pub fn is_zero(&self) -> bool {
        self.r.iter().all(|v| v.is_zero())
    }

    /// The endomorphism `R(X, Y)`.
    pub fn endo(&self, x: &[Rational], y: &[Rational]) -> QMatrix {
        let n = self.dim;
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let c = &x[i] * &y[j];
                for l in 0..n {
                    for k in 0..n {
                        let v = self.get(l, i, j, k);
                        if !v.is_zero() {
                            m[(l, k)] += &c * v;
                        }
                    }
                }
            }
        }
        m
    }

    /// `R(X, Y)Z`.
    pub fn apply(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        self.endo(x, y).apply(z)
    }

    /// `R(X,Y)Q = [R(X,Y), Q]`, the action on endomorphisms.
    pub fn act(&self, x: &[Rational], y: &[Rational], q: &QMatrix) -> QMatrix {
        self.endo(x, y).commutator(q)
    }
}
