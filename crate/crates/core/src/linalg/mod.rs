//! Dense matrices over arbitrary-precision rationals.

mod inverse;
mod matrix;
mod one_inverse;
mod pinv;
mod rational;

pub use inverse::{invert, pseudo_inverse_rank_factorization, rank, symmetric_pinv};
pub use matrix::RationalMatrix;
pub use one_inverse::{one_inverse_block_zero, one_inverse_schur, resistance_from_one_inverse};
pub use pinv::laplacian_pinv;
pub use rational::{format_rational, int, parse_rational, ratio, to_f64, Rational};
