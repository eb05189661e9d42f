//! Neutral-signature linear algebra: matrices, bilinear forms, 2-vectors and
//! the four-dimensional Hodge machinery.

mod bilinear;
mod hodge;
mod matrix;
mod twovec;

pub use bilinear::{
    antisymmetric, eval_form, orthogonal_basis, flat, flat_map, is_neutral, is_skew_for, null_frame_metric, signature,
    standard_neutral, standard_para,
};
pub use hodge::{
    check_onb, hodge_matrix, hodge_star, hodge_surd, is_involution, j_structures, selfdual_basis,
    selfdual_projectors, selfdual_split, star0,
};
pub use matrix::Matrix;
pub use twovec::{endo_from_2vector, lambda2_gram, lambda2_inner, pair_index, pairs, twovector_from_endo, TwoVector};

/// Bilinear forms are stored by their Gram matrix `B[i][j] = b(eᵢ, eⱼ)`.
pub type Bilinear<T> = Matrix<T>;
/// Endomorphisms act on column vectors.
pub type Endo<T> = Matrix<T>;
