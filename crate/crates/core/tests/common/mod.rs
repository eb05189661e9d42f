#![allow(dead_code)]

use genpara::exact::{int, rat};
use genpara::linalg::{Matrix, TwoVector};
use genpara::{QMatrix, Rational};
use proptest::prelude::*;

pub fn q(n: i64) -> Rational {
    int(n)
}

pub fn qm(rows: &[&[i64]]) -> QMatrix {
    Matrix::from_i64(rows)
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..7, 1i64..4).prop_map(|(n, d)| rat(n, d))
}

pub fn qvec(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), n)
}

pub fn two_vector(dim: usize) -> impl Strategy<Value = TwoVector<Rational>> {
    qvec(dim * (dim - 1) / 2).prop_map(move |c| TwoVector::from_comps(dim, c))
}

pub fn qmatrix(n: usize) -> impl Strategy<Value = QMatrix> {
    qvec(n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

pub fn antisym(n: usize) -> impl Strategy<Value = QMatrix> {
    qvec(n * n).prop_map(move |v| {
        Matrix::from_fn(n, n, |i, j| {
            if i < j {
                v[i * n + j].clone()
            } else if i > j {
                -v[j * n + i].clone()
            } else {
                int(0)
            }
        })
    })
}
