//! Resistance regularity read off the Laplacian eigendecomposition.
//!
//! With `γ_k`, `S_k` the Laplacian eigenpairs, `Σ_{k<n} S_k[i] S_k[j] / γ_k`
//! is `l†_ij`, and `L L† = I − J/n` gives
//! `l†_ii = (Σ_{j∈N(i)} l†_ij + 1 − 1/n) / deg(i)`. The graph is resistance
//! regular iff that quantity is the same for every vertex. The sum is
//! invariant under sign flips and rotations inside eigenspaces, so the
//! eigenvectors need no canonical form.

use super::jacobi::{symmetric_eigen, FloatMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct LaplacianEigen {
    /// `γ_1 ≥ … ≥ γ_{n−1} > γ_n = 0`
    pub gammas: Vec<f64>,
    /// Column `k` is the unit eigenvector of `gammas[k]`.
    pub vectors: FloatMatrix,
}

/// Laplacian eigenpairs with the smallest one pinned to `(0, 1/√n)`.
pub fn laplacian_eigen(g: &Graph) -> Result<LaplacianEigen> {
    g.ensure_connected()?;
    let n = g.order();
    let l = FloatMatrix::from_rational(&g.laplacian())?;
    let mut e = symmetric_eigen(&l)?;
    let last = n - 1;
    e.values[last] = 0.0;
    let unit = 1.0 / (n as f64).sqrt();
    for i in 0..n {
        e.vectors[(i, last)] = unit;
    }
    Ok(LaplacianEigen { gammas: e.values, vectors: e.vectors })
}

impl LaplacianEigen {
    /// `Σ_{k<n} S_k[i] S_k[j] / γ_k`, i.e. `l†_ij`.
    pub fn pinv_entry(&self, i: usize, j: usize) -> f64 {
        let n = self.gammas.len();
        (0..n.saturating_sub(1))
            .map(|k| self.vectors[(i, k)] * self.vectors[(j, k)] / self.gammas[k])
            .sum()
    }
}

#[derive(Clone, Debug)]
pub struct EigenCondition {
    /// Per-vertex quantity; equals `l†_ii`.
    pub quantities: Vec<f64>,
    pub spread: f64,
    pub regular: bool,
}

pub fn eigencondition_regularity_test(g: &Graph, tol: f64) -> Result<EigenCondition> {
    if g.order() < 2 {
        return Err(Error::TooSmall(g.order()));
    }
    let eig = laplacian_eigen(g)?;
    let n = g.order();
    let adj = g.adjacency_lists();
    let shift = 1.0 - 1.0 / n as f64;
    let quantities: Vec<f64> = (0..n)
        .map(|i| {
            let neighbour_sum: f64 = adj[i].iter().map(|&j| eig.pinv_entry(i, j)).sum();
            (neighbour_sum + shift) / adj[i].len() as f64
        })
        .collect();
    let lo = quantities.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = quantities.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let spread = hi - lo;
    Ok(EigenCondition { quantities, spread, regular: spread < tol })
}
