use std::ops::{Add, Neg, Sub};

use super::Matrix;
use crate::exact::Field;

/// Index pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn pairs(dim: usize) -> Vec<(usize, usize)> {
    (0..dim).flat_map(|i| (i + 1..dim).map(move |j| (i, j))).collect()
}

pub fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * (2 * dim - i - 1) / 2 + (j - i - 1)
}

/// Element of `Λ²` stored on the basis `eᵢ∧eⱼ`, `i < j`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoVector<T> {
    dim: usize,
    comps: Vec<T>,
}

impl<T: Field> TwoVector<T> {
    pub fn zero(dim: usize) -> Self {
        TwoVector { dim, comps: vec![T::zero(); dim * (dim - 1) / 2] }
    }

    pub fn from_comps(dim: usize, comps: Vec<T>) -> Self {
        assert_eq!(comps.len(), dim * (dim - 1) / 2, "component count");
        TwoVector { dim, comps }
    }

    /// `eᵢ ∧ eⱼ` for any `i ≠ j` (zero-based).
    pub fn basis(dim: usize, i: usize, j: usize) -> Self {
        let mut t = Self::zero(dim);
        t.add_entry(i, j, T::one());
        t
    }

    /// Sum of `c · eᵢ∧eⱼ` terms with zero-based indices in any order.
    pub fn from_terms(dim: usize, terms: &[(usize, usize, T)]) -> Self {
        let mut t = Self::zero(dim);
        for (i, j, c) in terms {
            t.add_entry(*i, *j, c.clone());
        }
        t
    }

    pub fn wedge(u: &[T], v: &[T]) -> Self {
        let dim = u.len();
        let comps = pairs(dim)
            .into_iter()
            .map(|(i, j)| u[i].clone() * v[j].clone() - u[j].clone() * v[i].clone())
            .collect();
        TwoVector { dim, comps }
    }

    fn add_entry(&mut self, i: usize, j: usize, c: T) {
        assert!(i != j, "eᵢ∧eᵢ = 0");
        let (a, b, c) = if i < j { (i, j, c) } else { (j, i, -c) };
        let k = pair_index(self.dim, a, b);
        self.comps[k] = self.comps[k].clone() + c;
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comps(&self) -> &[T] {
        &self.comps
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => T::zero(),
            std::cmp::Ordering::Less => self.comps[pair_index(self.dim, i, j)].clone(),
            std::cmp::Ordering::Greater => -self.comps[pair_index(self.dim, j, i)].clone(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        TwoVector { dim: self.dim, comps: self.comps.iter().map(|v| c.clone() * v.clone()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// Full antisymmetric matrix `Aⁱʲ`.
    pub fn to_matrix(&self) -> Matrix<T> {
        Matrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j))
    }

    pub fn from_matrix(a: &Matrix<T>) -> Self {
        let dim = a.rows();
        TwoVector { dim, comps: pairs(dim).into_iter().map(|(i, j)| a[(i, j)].clone()).collect() }
    }

    pub fn as_column(&self) -> Vec<T> {
        self.comps.clone()
    }

    /// Apply an operator given as a matrix on the component vector.
    pub fn apply(&self, op: &Matrix<T>) -> Self {
        TwoVector { dim: self.dim, comps: op.apply(&self.comps) }
    }
}

impl<T: Field> Add for &TwoVector<T> {
    type Output = TwoVector<T>;
    fn add(self, rhs: &TwoVector<T>) -> TwoVector<T> {
        TwoVector {
            dim: self.dim,
            comps: self.comps.iter().zip(&rhs.comps).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<T: Field> Sub for &TwoVector<T> {
    type Output = TwoVector<T>;
    fn sub(self, rhs: &TwoVector<T>) -> TwoVector<T> {
        TwoVector {
            dim: self.dim,
            comps: self.comps.iter().zip(&rhs.comps).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<T: Field> Neg for &TwoVector<T> {
    type Output = TwoVector<T>;
    fn neg(self) -> TwoVector<T> {
        TwoVector { dim: self.dim, comps: self.comps.iter().map(|a| -a.clone()).collect() }
    }
}

/// Gram matrix `Λ[(i,j),(k,l)] = g_ik g_jl − g_il g_jk` of the induced
/// metric on `Λ²`.
pub fn lambda2_gram<T: Field>(g: &Matrix<T>) -> Matrix<T> {
    let ps = pairs(g.rows());
    Matrix::from_fn(ps.len(), ps.len(), |a, b| {
        let (i, j) = ps[a];
        let (k, l) = ps[b];
        g[(i, k)].clone() * g[(j, l)].clone() - g[(i, l)].clone() * g[(j, k)].clone()
    })
}

/// Induced inner product `g(a, b)` on 2-vectors.
pub fn lambda2_inner<T: Field>(g: &Matrix<T>, a: &TwoVector<T>, b: &TwoVector<T>) -> T {
    lambda2_gram(g).form(a.comps(), b.comps())
}

/// The `g`-skew endomorphism `S_a` with `g(S_a u, v) = g(a, u∧v)`.
pub fn endo_from_2vector<T: Field>(g: &Matrix<T>, a: &TwoVector<T>) -> Matrix<T> {
    -(&a.to_matrix() * g)
}

/// Inverse of [`endo_from_2vector`]: the 2-vector of a `g`-skew endomorphism.
pub fn twovector_from_endo<T: Field>(g_inv: &Matrix<T>, s: &Matrix<T>) -> TwoVector<T> {
    TwoVector::from_matrix(&-(s * g_inv))
}
