//! Exact scalars, dense matrices and polynomials.

pub mod matrix;
pub mod poly;
pub mod scalar;

pub use matrix::{kron, mat_mul, solve_exact, Matrix};
pub use poly::{poly_shift, Poly};
pub use scalar::Scalar;
