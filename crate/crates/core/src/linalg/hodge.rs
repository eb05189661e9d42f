//! Hodge star and self-dual splitting on `Λ²` of a four-dimensional space.

use num_traits::Signed;

use super::twovec::{lambda2_gram, pairs, TwoVector};
use super::{standard_neutral, Matrix};
use crate::error::{Error, Result};
use crate::exact::{Field, Rational, Surd};

fn perm_sign(p: [usize; 4]) -> i64 {
    let mut s = 1;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// Star operator normalized by `a ∧ ⋆₀b = g(a, b) e₁∧e₂∧e₃∧e₄`, as a matrix on
/// 2-vector components. The metric Hodge star is `⋆₀` divided by the signed
/// volume factor `±√det g`.
pub fn star0<T: Field>(g: &Matrix<T>) -> Result<Matrix<T>> {
    if g.rows() != 4 {
        return Err(Error::DimNot4);
    }
    let ps = pairs(4);
    let gram = lambda2_gram(g);
    let mut out = Matrix::zeros(6, 6);
    for (row, &(m, n)) in ps.iter().enumerate() {
        let (k, l) = ps[5 - row];
        let eps = T::from_i64(perm_sign([k, l, m, n]));
        for col in 0..6 {
            out[(row, col)] = eps.clone() * gram[(5 - row, col)].clone();
        }
    }
    Ok(out)
}

/// Check that the columns of `onb` are orthonormal with norms `(1,1,−1,−1)`.
pub fn check_onb<T: Field>(g: &Matrix<T>, onb: &Matrix<T>) -> Result<()> {
    if g.rows() != 4 || onb.rows() != 4 || onb.cols() != 4 {
        return Err(Error::DimNot4);
    }
    if &(&onb.transpose() * g) * onb != standard_neutral(2) {
        return Err(Error::DegenerateInput("basis is not orthonormal of type (1,1,-1,-1)".into()));
    }
    Ok(())
}

/// Hodge star for the orientation of the ordered orthonormal basis `onb`
/// (columns), acting on 2-vectors written in coordinates.
pub fn hodge_matrix<T: Field>(g: &Matrix<T>, onb: &Matrix<T>) -> Result<Matrix<T>> {
    check_onb(g, onb)?;
    // vol(onb) = det(onb) e1∧e2∧e3∧e4
    Ok(star0(g)?.scale(&onb.det()))
}

pub fn hodge_star<T: Field>(g: &Matrix<T>, onb: &Matrix<T>, a: &TwoVector<T>) -> Result<TwoVector<T>> {
    Ok(a.apply(&hodge_matrix(g, onb)?))
}

/// `(½(a + ⋆a), ½(a − ⋆a))`.
pub fn selfdual_split<T: Field>(
    g: &Matrix<T>,
    onb: &Matrix<T>,
    a: &TwoVector<T>,
) -> Result<(TwoVector<T>, TwoVector<T>)> {
    let s = hodge_star(g, onb, a)?;
    let h = T::half();
    Ok(((a + &s).scale(&h), (a - &s).scale(&h)))
}

/// Hodge star of a rational neutral metric for the coordinate orientation
/// (`orientation = 1`) or its reverse, over `ℚ(√det g)`.
pub fn hodge_surd(g: &Matrix<Rational>, orientation: i8) -> Result<Matrix<Surd>> {
    let d = g.det();
    if !d.is_positive() {
        return Err(Error::BadSignature);
    }
    let root = Surd::sqrt(d);
    let sign = Surd::from(if orientation >= 0 { 1 } else { -1 });
    let factor = &sign / &root;
    Ok(star0(g)?.map(|q| &factor * &Surd::from(q.clone())))
}

/// Projections `½(1 ± ⋆)` onto `Λ²±`.
pub fn selfdual_projectors<T: Field>(star: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let id = Matrix::identity(star.rows());
    let h = T::half();
    ((&id + star).scale(&h), (&id - star).scale(&h))
}

/// Unnormalized self-dual basis `e₁∧e₂+e₃∧e₄`, `e₁∧e₃+e₂∧e₄`, `e₁∧e₄−e₂∧e₃`
/// built on the columns of `onb`.
pub fn selfdual_basis<T: Field>(onb: &Matrix<T>) -> [TwoVector<T>; 3] {
    let e: Vec<Vec<T>> = (0..4).map(|j| onb.col(j)).collect();
    let w = |i: usize, j: usize| TwoVector::wedge(&e[i], &e[j]);
    [&w(0, 1) + &w(2, 3), &w(0, 2) + &w(1, 3), &w(0, 3) - &w(1, 2)]
}

/// The endomorphisms `J₁, J₂, J₃` of the unnormalized self-dual basis.
pub fn j_structures<T: Field>(g: &Matrix<T>, onb: &Matrix<T>) -> [Matrix<T>; 3] {
    let [a, b, c] = selfdual_basis(onb);
    [
        super::endo_from_2vector(g, &a),
        super::endo_from_2vector(g, &b),
        super::endo_from_2vector(g, &c),
    ]
}

/// Is the operator an involution?
pub fn is_involution<T: Field>(m: &Matrix<T>) -> bool {
    (m * m).is_identity()
}
