//! Exact arithmetic substrate: rationals, dense matrices, polynomials,
//! residues modulo a large prime, and seeded sampling.

pub mod matrix;
pub mod modp;
pub mod poly;
pub mod qpoly;
pub mod random;

pub use matrix::{int, ratio, ExactMatrix, ExactScalar};
pub use poly::Poly;
pub use qpoly::QPolynomial;
pub use random::{random_invertible, random_invertible_with_bound, RandomSource};
