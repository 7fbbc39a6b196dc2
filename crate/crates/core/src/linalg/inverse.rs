use num_traits::{One, Signed, Zero};

use super::matrix::RationalMatrix;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Location of the largest `|entry|` in the trailing submatrix starting at
/// `(k, k)`, ties broken by the first occurrence in row-major order.
fn full_pivot(m: &RationalMatrix, k: usize, width: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), Rational)> = None;
    for i in k..m.rows() {
        for j in k..width {
            let v = m[(i, j)].abs();
            if v.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, b)| v > *b) {
                best = Some(((i, j), v));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

fn swap_rows(m: &mut RationalMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let tmp = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = tmp;
    }
}

fn swap_cols(m: &mut RationalMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let tmp = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = tmp;
    }
}

/// Eliminate column `k` from every row but `k`, after scaling row `k` to a unit pivot.
fn eliminate(m: &mut RationalMatrix, k: usize) {
    let pivot = m[(k, k)].clone();
    for j in 0..m.cols() {
        let v = &m[(k, j)] / &pivot;
        m[(k, j)] = v;
    }
    for i in 0..m.rows() {
        if i == k || m[(i, k)].is_zero() {
            continue;
        }
        let factor = m[(i, k)].clone();
        for j in 0..m.cols() {
            if m[(k, j)].is_zero() {
                continue;
            }
            let delta = &factor * &m[(k, j)];
            m[(i, j)] -= delta;
        }
    }
}

/// Exact inverse by Gauss-Jordan elimination with full pivoting.
pub fn invert(m: &RationalMatrix) -> Result<RationalMatrix> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "cannot invert a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let identity = RationalMatrix::identity(n);
    let mut aug = RationalMatrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else {
            identity[(i, j - n)].clone()
        }
    });
    // col_perm[k] = original column now sitting at position k
    let mut col_perm: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let Some((p, q)) = full_pivot(&aug, k, n) else {
            return Err(Error::Singular { rank: k, order: n });
        };
        swap_rows(&mut aug, k, p);
        swap_cols(&mut aug, k, q);
        col_perm.swap(k, q);
        eliminate(&mut aug, k);
    }
    let mut inv = RationalMatrix::zeros(n, n);
    for (k, &orig) in col_perm.iter().enumerate() {
        for j in 0..n {
            inv[(orig, j)] = aug[(k, n + j)].clone();
        }
    }
    Ok(inv)
}

/// Exact rank.
pub fn rank(m: &RationalMatrix) -> usize {
    rref(m).1.len()
}

/// Reduced row echelon form and its pivot columns.
fn rref(m: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols() {
        if row == a.rows() {
            break;
        }
        let Some(p) = (row..a.rows()).find(|&i| !a[(i, col)].is_zero()) else {
            continue;
        };
        swap_rows(&mut a, row, p);
        let pivot = a[(row, col)].clone();
        for j in 0..a.cols() {
            let v = &a[(row, j)] / &pivot;
            a[(row, j)] = v;
        }
        for i in 0..a.rows() {
            if i != row && !a[(i, col)].is_zero() {
                let factor = a[(i, col)].clone();
                for j in 0..a.cols() {
                    let delta = &factor * &a[(row, j)];
                    a[(i, j)] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// Moore-Penrose inverse of an arbitrary rational matrix through the full-rank
/// factorization `A = F G`: `A† = Gᵀ (G Gᵀ)⁻¹ (Fᵀ F)⁻¹ Fᵀ`.
pub fn pseudo_inverse_rank_factorization(m: &RationalMatrix) -> Result<RationalMatrix> {
    let (reduced, pivots) = rref(m);
    let r = pivots.len();
    if r == 0 {
        return Ok(RationalMatrix::zeros(m.cols(), m.rows()));
    }
    let f = RationalMatrix::from_fn(m.rows(), r, |i, k| m[(i, pivots[k])].clone());
    let g = reduced.submatrix(0, r, 0, m.cols());
    let ft = f.transpose();
    let gt = g.transpose();
    let ggt_inv = invert(&(&g * &gt))?;
    let ftf_inv = invert(&(&ft * &f))?;
    Ok(&(&(&gt * &ggt_inv) * &ftf_inv) * &ft)
}

/// Moore-Penrose inverse of a symmetric block arising inside the {1}-inverse
/// constructions. Zero-row-sum blocks use the shift `(S + J/s)⁻¹ − J/s`, valid
/// when the kernel of `S` is exactly the all-ones line; anything else goes
/// through the rank factorization.
pub fn symmetric_pinv(s: &RationalMatrix) -> Result<RationalMatrix> {
    if !s.is_symmetric() {
        return Err(Error::BlockPrecondition(
            "pseudoinverse requested for a non-symmetric block".into(),
        ));
    }
    let order = s.rows();
    if order > 0 && s.has_zero_row_sums() {
        let j_over = RationalMatrix::ones(order).scale(&(Rational::one() / int(order as i64)));
        if let Ok(x) = invert(&(s + &j_over)) {
            return Ok(&x - &j_over);
        }
    }
    pseudo_inverse_rank_factorization(s)
}
