//! For a `k`-resistance regular graph with distinct resistance eigenvalues
//! `k = ρ_1 > ρ_2 > … > ρ_t`, `Q(x) = n Π_{i≥2} (x − ρ_i)/(k − ρ_i)` satisfies
//! `Q(R) = J`.

use super::jacobi::FloatMatrix;
use super::spectrum::r_spectrum_from_profile;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::to_f64;
use crate::resistance::profile;

#[derive(Clone, Debug)]
pub struct QPolynomialCheck {
    /// Coefficients of `Q`, constant term first.
    pub coefficients: Vec<f64>,
    /// Roots `ρ_2 … ρ_t` used in the product form.
    pub roots: Vec<f64>,
    pub max_abs_deviation: f64,
}

fn expand(scale: f64, roots: &[f64]) -> Vec<f64> {
    let mut coeffs = vec![scale];
    for &root in roots {
        let mut next = vec![0.0; coeffs.len() + 1];
        for (d, c) in coeffs.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= root * c;
        }
        coeffs = next;
    }
    coeffs
}

pub fn q_polynomial_check(g: &Graph, tol: f64) -> Result<QPolynomialCheck> {
    let p = profile(g)?;
    let k = match p.label.resistance_constant() {
        Some(k) => to_f64(k),
        None => return Err(Error::Precondition("graph is not resistance regular".into())),
    };
    let spec = r_spectrum_from_profile(&p, tol)?;
    let roots: Vec<f64> = spec.groups.iter().skip(1).map(|(v, _)| *v).collect();
    let scale = p.order() as f64 / roots.iter().map(|r| k - r).product::<f64>();

    let r = FloatMatrix::from_rational(&p.r)?;
    let n = r.order();
    let mut q = FloatMatrix::from_fn(n, |i, j| if i == j { scale } else { 0.0 });
    for &root in &roots {
        let factor = FloatMatrix::from_fn(n, |i, j| r[(i, j)] - if i == j { root } else { 0.0 });
        q = q.matmul(&factor);
    }
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            worst = worst.max((q[(i, j)] - 1.0).abs());
        }
    }
    Ok(QPolynomialCheck { coefficients: expand(scale, &roots), roots, max_abs_deviation: worst })
}
