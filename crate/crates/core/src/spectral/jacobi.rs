//! Cyclic Jacobi eigensolver for real symmetric matrices.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::linalg::{to_f64, RationalMatrix};

/// Largest tolerated `|a_ij − a_ji|`, relative to `max(1, max |a_ij|)`.
pub const SYMMETRY_TOL: f64 = 1e-12;
/// Convergence: off-diagonal Frobenius norm below this fraction of `‖A‖_F`.
pub const CONVERGENCE_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// Square row-major `f64` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatMatrix {
    n: usize,
    data: Vec<f64>,
}

impl FloatMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("float matrix must be square".into()));
        }
        Ok(Self { n, data: rows.concat() })
    }

    /// Nearest-double image of a square rational matrix.
    pub fn from_rational(m: &RationalMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension(format!("{}x{} matrix is not square", m.rows(), m.cols())));
        }
        Ok(Self { n: m.rows(), data: m.entries().iter().map(to_f64).collect() })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "order mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self[(i, j)] * self[(i, j)];
                }
            }
        }
        s.sqrt()
    }

    fn max_asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst
    }
}

impl Index<(usize, usize)> for FloatMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for FloatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

/// Eigenvalues in descending order with matching orthonormal eigenvector columns.
#[derive(Clone, Debug)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: FloatMatrix,
}

fn rotate(a: &mut FloatMatrix, v: &mut FloatMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == 0.0 {
        return;
    }
    let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = a.order();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

/// Full eigendecomposition `A = V·diag(λ)·Vᵀ`.
pub fn symmetric_eigen(m: &FloatMatrix) -> Result<SymmetricEigen> {
    let n = m.order();
    let scale = m.max_abs().max(1.0);
    let asym = m.max_asymmetry();
    if asym > SYMMETRY_TOL * scale {
        return Err(Error::NotSymmetric(asym));
    }
    // symmetrise away sub-tolerance noise
    let mut a = FloatMatrix::from_fn(n, |i, j| 0.5 * (m[(i, j)] + m[(j, i)]));
    let mut v = FloatMatrix::identity(n);
    let target = CONVERGENCE_TOL * a.frobenius_norm();
    let mut sweeps = 0;
    while a.off_diagonal_norm() > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: a.off_diagonal_norm() });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(y, y)].total_cmp(&a[(x, x)]));
    let values = order.iter().map(|&k| a[(k, k)]).collect();
    let vectors = FloatMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    Ok(SymmetricEigen { values, vectors })
}

/// Eigenvalues only, descending.
pub fn symmetric_eigenvalues(m: &FloatMatrix) -> Result<Vec<f64>> {
    symmetric_eigen(m).map(|e| e.values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol)
    }

    fn reconstruction_error(m: &FloatMatrix, e: &SymmetricEigen) -> f64 {
        let n = m.order();
        let d = FloatMatrix::from_fn(n, |i, j| if i == j { e.values[i] } else { 0.0 });
        let back = e.vectors.matmul(&d).matmul(&e.vectors.transpose());
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .fold(0.0, |w, (i, j)| f64::max(w, (back[(i, j)] - m[(i, j)]).abs()))
    }

    #[test]
    fn swap_matrix() {
        let m = FloatMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!(close(&symmetric_eigenvalues(&m).unwrap(), &[1.0, -1.0], 1e-14));
    }

    #[test]
    fn diagonal_sorted() {
        let m = FloatMatrix::from_rows(&[vec![3.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 2.0]]).unwrap();
        assert_eq!(symmetric_eigenvalues(&m).unwrap(), vec![3.0, 2.0, 1.0]);
    }

    #[test]
    fn complete_graph_resistance() {
        let m = FloatMatrix::from_fn(4, |i, j| if i == j { 0.0 } else { 0.5 });
        assert!(close(&symmetric_eigenvalues(&m).unwrap(), &[1.5, -0.5, -0.5, -0.5], 1e-13));
    }

    #[test]
    fn analytic_three_by_three() {
        // tridiag(-1, 2, -1): eigenvalues 2 - 2cos(kπ/4), k = 1..3
        let m = FloatMatrix::from_rows(&[vec![2.0, -1.0, 0.0], vec![-1.0, 2.0, -1.0], vec![0.0, -1.0, 2.0]]).unwrap();
        let expected = [2.0 + 2f64.sqrt(), 2.0, 2.0 - 2f64.sqrt()];
        assert!(close(&symmetric_eigenvalues(&m).unwrap(), &expected, 1e-13));
    }

    #[test]
    fn analytic_two_by_two() {
        // [[a,b],[b,c]]: (a+c)/2 ± sqrt(((a-c)/2)² + b²)
        let (a, b, c) = (1.5f64, -0.7, 4.0);
        let m = FloatMatrix::from_rows(&[vec![a, b], vec![b, c]]).unwrap();
        let mid = (a + c) / 2.0;
        let rad = (((a - c) / 2.0).powi(2) + b * b).sqrt();
        assert!(close(&symmetric_eigenvalues(&m).unwrap(), &[mid + rad, mid - rad], 1e-13));
    }

    #[test]
    fn analytic_four_by_four_cycle_adjacency() {
        // adjacency of C4: 2, 0, 0, -2
        let m = FloatMatrix::from_fn(4, |i, j| if (i + 1) % 4 == j || (j + 1) % 4 == i { 1.0 } else { 0.0 });
        assert!(close(&symmetric_eigenvalues(&m).unwrap(), &[2.0, 0.0, 0.0, -2.0], 1e-13));
    }

    #[test]
    fn rejects_asymmetric() {
        let m = FloatMatrix::from_rows(&[vec![0.0, 1.0], vec![0.5, 0.0]]).unwrap();
        assert!(matches!(symmetric_eigen(&m), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn trivial_orders() {
        assert!(symmetric_eigenvalues(&FloatMatrix::zeros(0)).unwrap().is_empty());
        assert_eq!(symmetric_eigenvalues(&FloatMatrix::zeros(3)).unwrap(), vec![0.0; 3]);
    }

    fn symmetric_strategy() -> impl Strategy<Value = FloatMatrix> {
        (1usize..=50).prop_flat_map(|n| {
            prop::collection::vec(-10.0f64..10.0, n * n).prop_map(move |raw| {
                FloatMatrix::from_fn(n, |i, j| {
                    let (a, b) = (i.min(j), i.max(j));
                    raw[a * n + b]
                })
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn reconstructs_random_symmetric(m in symmetric_strategy()) {
            let e = symmetric_eigen(&m).unwrap();
            prop_assert!(reconstruction_error(&m, &e) < 1e-8);
            let vtv = e.vectors.transpose().matmul(&e.vectors);
            let n = m.order();
            for i in 0..n {
                for j in 0..n {
                    let want = if i == j { 1.0 } else { 0.0 };
                    prop_assert!((vtv[(i, j)] - want).abs() < 1e-10);
                }
            }
            prop_assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
        }
    }
}
