use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{Point, RatFunc, Rational};
use crate::linalg::Matrix;
use crate::patch::{ext_deriv, KForm};
use crate::FMatrix;

/// Linear connection on a coordinate patch, `∇_{∂ᵢ}∂ⱼ = Γᵏᵢⱼ ∂ₖ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Connection {
    dim: usize,
    gamma: Vec<RatFunc>,
}

impl Connection {
    pub fn zero(dim: usize) -> Self {
        Connection { dim, gamma: vec![RatFunc::zero(); dim * dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, k: usize, i: usize, j: usize) -> usize {
        (k * self.dim + i) * self.dim + j
    }

    /// `Γᵏᵢⱼ`.
    pub fn get(&self, k: usize, i: usize, j: usize) -> &RatFunc {
        &self.gamma[self.idx(k, i, j)]
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, v: RatFunc) {
        let n = self.idx(k, i, j);
        self.gamma[n] = v;
    }

    pub fn is_flat_coefficients(&self) -> bool {
        self.gamma.iter().all(|g| g.is_zero())
    }

    pub fn at(&self, p: &Point) -> Result<Vec<Rational>> {
        self.gamma.iter().map(|g| g.eval(p.coords())).collect()
    }

    /// `(∇_{∂ₖ} g)ᵢⱼ = ∂ₖgᵢⱼ − Γˡₖᵢ gₗⱼ − Γˡₖⱼ gᵢₗ`, all entries.
    pub fn metricity_residual(&self, g: &FMatrix) -> Vec<RatFunc> {
        let n = self.dim;
        let mut out = Vec::with_capacity(n * n * n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let mut v = g[(i, j)].partial(k);
                    for l in 0..n {
                        v = &v - &(self.get(l, k, i) * &g[(l, j)]);
                        v = &v - &(self.get(l, k, j) * &g[(i, l)]);
                    }
                    out.push(v);
                }
            }
        }
        out
    }

    pub fn is_metric(&self, g: &FMatrix) -> bool {
        self.metricity_residual(g).iter().all(|v| v.is_zero())
    }

    /// `T(∂ᵢ, ∂ⱼ) = (Γᵏᵢⱼ − Γᵏⱼᵢ) ∂ₖ`.
    pub fn torsion(&self) -> Torsion {
        let n = self.dim;
        let mut t = vec![RatFunc::zero(); n * n * n];
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    t[(k * n + i) * n + j] = self.get(k, i, j) - self.get(k, j, i);
                }
            }
        }
        Torsion { dim: n, t }
    }
}

/// Torsion components `Tᵏᵢⱼ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Torsion {
    dim: usize,
    t: Vec<RatFunc>,
}

impl Torsion {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> &RatFunc {
        &self.t[(k * self.dim + i) * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(|v| v.is_zero())
    }

    /// `g(T(∂ᵢ, ∂ⱼ), ∂ₗ)`.
    pub fn lowered(&self, g: &FMatrix, i: usize, j: usize, l: usize) -> RatFunc {
        (0..self.dim).fold(RatFunc::zero(), |acc, k| &acc + &(self.get(k, i, j) * &g[(k, l)]))
    }

    pub fn at(&self, p: &Point) -> Result<TorsionAt> {
        Ok(TorsionAt { dim: self.dim, t: self.t.iter().map(|v| v.eval(p.coords())).collect::<Result<_>>()? })
    }
}

/// Torsion evaluated at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct TorsionAt {
    dim: usize,
    t: Vec<Rational>,
}

impl TorsionAt {
    pub fn zero(dim: usize) -> Self {
        TorsionAt { dim, t: vec![Rational::zero(); dim * dim * dim] }
    }

    /// From `dΘ` values and `g⁻¹`: `Tᵏᵢⱼ = gᵏˡ dΘᵢⱼₗ`.
    pub fn from_dtheta(g_inv: &Matrix<Rational>, dtheta: impl Fn(usize, usize, usize) -> Rational) -> Self {
        let n = g_inv.rows();
        let mut t = vec![Rational::zero(); n * n * n];
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    t[(k * n + i) * n + j] = (0..n).fold(Rational::zero(), |acc, l| acc + &g_inv[(k, l)] * dtheta(i, j, l));
                }
            }
        }
        TorsionAt { dim: n, t }
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.t[(k * self.dim + i) * self.dim + j]
    }

    /// `T(X, Y)`.
    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        (0..n)
            .map(|k| {
                let mut acc = Rational::zero();
                for i in 0..n {
                    if x[i].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        if !y[j].is_zero() {
                            acc += self.get(k, i, j) * &x[i] * &y[j];
                        }
                    }
                }
                acc
            })
            .collect()
    }
}

/// Christoffel symbols `Γᵏᵢⱼ = ½gᵏˡ(∂ᵢgⱼₗ + ∂ⱼgᵢₗ − ∂ₗgᵢⱼ)`.
pub fn levi_civita(g: &FMatrix) -> Result<Connection> {
    let n = g.rows();
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let g_inv = g.inverse().map_err(|_| Error::DegenerateMetric)?;
    let dg: Vec<FMatrix> = (0..n).map(|k| g.partial(k)).collect();
    let half = RatFunc::constant(Rational::new(1.into(), 2.into()));
    let mut c = Connection::zero(n);
    for i in 0..n {
        for j in i..n {
            // lowered symbols Γ_{ijl}
            let low: Vec<RatFunc> = (0..n).map(|l| &(&dg[i][(j, l)] + &dg[j][(i, l)]) - &dg[l][(i, j)]).collect();
            for k in 0..n {
                let v = (0..n)
                    .filter(|&l| !low[l].is_zero() && !g_inv[(k, l)].is_zero())
                    .fold(RatFunc::zero(), |acc, l| &acc + &(&g_inv[(k, l)] * &low[l]));
                let v = &v * &half;
                c.set(k, j, i, v.clone());
                c.set(k, i, j, v);
            }
        }
    }
    Ok(c)
}

/// Metric connection with totally skew torsion `g(T(X,Y),Z) = dΘ(X,Y,Z)`:
/// `Γᵏᵢⱼ = Γ_LCᵏᵢⱼ + ½gᵏˡ dΘᵢⱼₗ`.
pub fn hitchin_connection(g: &FMatrix, theta: &KForm) -> Result<(Connection, Torsion)> {
    let mut c = levi_civita(g)?;
    let dt = ext_deriv(theta);
    if !dt.is_zero() {
        let n = g.rows();
        let g_inv = g.inverse().map_err(|_| Error::DegenerateMetric)?;
        let half = RatFunc::constant(Rational::new(1.into(), 2.into()));
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let extra = (0..n).fold(RatFunc::zero(), |acc, l| {
                        let d = dt.get(&[i, j, l]);
                        if d.is_zero() {
                            acc
                        } else {
                            &acc + &(&g_inv[(k, l)] * &d)
                        }
                    });
                    if !extra.is_zero() {
                        let v = c.get(k, i, j) + &(&extra * &half);
                        c.set(k, i, j, v);
                    }
                }
            }
        }
    }
    let t = c.torsion();
    Ok((c, t))
}
