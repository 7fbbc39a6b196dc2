use num_traits::One;

use super::inverse::invert;
use super::matrix::RationalMatrix;
use super::rational::{int, Rational};
use crate::error::Result;
use crate::graph::Graph;

/// Moore-Penrose inverse of the Laplacian of a connected graph, computed
/// exactly as `(L + J/n)⁻¹ − J/n`.
pub fn laplacian_pinv(g: &Graph) -> Result<RationalMatrix> {
    g.ensure_connected()?;
    let n = g.order();
    let j_over_n = RationalMatrix::ones(n).scale(&(Rational::one() / int(n as i64)));
    let shifted = &g.laplacian() + &j_over_n;
    let x = invert(&shifted)?;
    Ok(&x - &j_over_n)
}
