//! Exact computations with paracomplex and generalized paracomplex structures
//! on neutral-signature vector spaces and coordinate patches.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod curv;
pub mod error;
pub mod exact;
pub mod gpx;
pub mod linalg;
pub mod para;
pub mod patch;
pub mod report;

pub use error::{Error, Result};
pub use exact::{Field, Point, RatFunc, Rational, Surd};
pub use report::ValidationReport;

/// Matrix over the rationals.
pub type QMatrix = linalg::Matrix<Rational>;
/// Matrix over rational functions of the patch variables.
pub type FMatrix = linalg::Matrix<RatFunc>;
/// Matrix over a real quadratic extension.
pub type SMatrix = linalg::Matrix<Surd>;
/// Floating-point matrix.
pub type F64Matrix = linalg::Matrix<f64>;
