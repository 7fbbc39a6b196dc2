//! Block {1}-inverses of Laplacians. Any `M` with `LML = L` yields resistance
//! distances through `r_ij = m_ii + m_jj − m_ij − m_ji`.

use num_traits::Zero;

use super::inverse::{invert, symmetric_pinv};
use super::matrix::RationalMatrix;
use super::rational::int;
use crate::error::{Error, Result};

fn check_laplacian_shape(l: &RationalMatrix) -> Result<()> {
    if !l.is_symmetric() || !l.has_zero_row_sums() {
        return Err(Error::BlockPrecondition(
            "input is not a symmetric zero-row-sum (Laplacian) matrix".into(),
        ));
    }
    Ok(())
}

fn invert_block(block: &RationalMatrix, name: &str) -> Result<RationalMatrix> {
    invert(block).map_err(|e| match e {
        Error::Singular { rank, order } => {
            Error::BlockPrecondition(format!("{name} is singular (rank {rank} of {order})"))
        }
        other => other,
    })
}

fn verify_one_inverse(l: &RationalMatrix, m: RationalMatrix) -> Result<RationalMatrix> {
    if &(l * &m) * l != *l {
        return Err(Error::BlockPrecondition("assembled matrix fails LML = L".into()));
    }
    Ok(m)
}

/// `[L1⁻¹ 0; 0 S†]` with `S = L3 − L2ᵀ L1⁻¹ L2`, for a split where every vertex
/// of the leading block is adjacent either to all trailing vertices or to none
/// (each column of `L2ᵀ` is `−1` throughout or zero).
pub fn one_inverse_block_zero(l: &RationalMatrix, split: usize) -> Result<RationalMatrix> {
    check_laplacian_shape(l)?;
    let [l1, l2, l2t, l3] = l.split_blocks(split)?;
    let minus_one = int(-1);
    for col in 0..l2t.cols() {
        let column: Vec<_> = (0..l2t.rows()).map(|r| &l2t[(r, col)]).collect();
        let all_minus = column.iter().all(|x| **x == minus_one);
        let all_zero = column.iter().all(|x| x.is_zero());
        if !all_minus && !all_zero {
            return Err(Error::BlockPrecondition(format!(
                "column {col} of the off-diagonal block is neither all −1 nor zero"
            )));
        }
    }
    let l1_inv = invert_block(&l1, "leading block L1")?;
    let s = &l3 - &(&(&l2t * &l1_inv) * &l2);
    let s_pinv = symmetric_pinv(&s)?;
    let m = RationalMatrix::from_blocks(
        &l1_inv,
        &RationalMatrix::zeros(l2.rows(), l2.cols()),
        &RationalMatrix::zeros(l2t.rows(), l2t.cols()),
        &s_pinv,
    )?;
    verify_one_inverse(l, m)
}

/// Schur-complement {1}-inverse for a split whose trailing block `L3` is
/// invertible: with `M = L1 − L2 L3⁻¹ L2ᵀ`,
/// `[M†, −M† L2 L3⁻¹; −L3⁻¹ L2ᵀ M†, L3⁻¹ + L3⁻¹ L2ᵀ M† L2 L3⁻¹]`.
pub fn one_inverse_schur(l: &RationalMatrix, split: usize) -> Result<RationalMatrix> {
    check_laplacian_shape(l)?;
    let [l1, l2, l2t, l3] = l.split_blocks(split)?;
    let l3_inv = invert_block(&l3, "trailing block L3")?;
    let schur = &l1 - &(&(&l2 * &l3_inv) * &l2t);
    let schur_pinv = symmetric_pinv(&schur)?;
    let right = &l2 * &l3_inv; // L2 L3⁻¹
    let left = &l3_inv * &l2t; // L3⁻¹ L2ᵀ
    let top_right = -&(&schur_pinv * &right);
    let bottom_left = -&(&left * &schur_pinv);
    let bottom_right = &l3_inv + &(&(&left * &schur_pinv) * &right);
    let m = RationalMatrix::from_blocks(&schur_pinv, &top_right, &bottom_left, &bottom_right)?;
    verify_one_inverse(l, m)
}

/// `r_ij = m_ii + m_jj − m_ij − m_ji` for any {1}-inverse `m` of a connected Laplacian.
pub fn resistance_from_one_inverse(m: &RationalMatrix) -> RationalMatrix {
    RationalMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        &m[(i, i)] + &m[(j, j)] - &m[(i, j)] - &m[(j, i)]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_k2, generate, FamilySpec, Graph};
    use crate::linalg::{laplacian_pinv, ratio, Rational};

    fn pinv_resistance(g: &Graph) -> RationalMatrix {
        resistance_from_one_inverse(&laplacian_pinv(g).unwrap())
    }

    fn scaled_centering(n: usize, c: &Rational) -> RationalMatrix {
        // c·(nI − J)
        (&RationalMatrix::identity(n).scale(&int(n as i64)) - &RationalMatrix::ones(n)).scale(c)
    }

    #[test]
    fn complete_bipartite_block_zero() {
        for n in 2..=4usize {
            let g = generate(&FamilySpec::CompleteBipartite(n, n)).unwrap();
            let m = one_inverse_block_zero(&g.laplacian(), n).unwrap();
            let nn = n as i64;
            let expected = RationalMatrix::from_blocks(
                &RationalMatrix::identity(n).scale(&ratio(1, nn)),
                &RationalMatrix::zeros(n, n),
                &RationalMatrix::zeros(n, n),
                &scaled_centering(n, &ratio(1, nn * nn)),
            )
            .unwrap();
            assert_eq!(m, expected);
            assert_eq!(resistance_from_one_inverse(&m), pinv_resistance(&g));
        }
    }

    #[test]
    fn k2_block_zero() {
        let g = generate(&FamilySpec::Complete(2)).unwrap();
        let m = one_inverse_block_zero(&g.laplacian(), 1).unwrap();
        assert_eq!(m, RationalMatrix::from_i64_rows(&[vec![1, 0], vec![0, 0]]));
    }

    #[test]
    fn star_leaves_first() {
        let g = Graph::new(4, [(0, 3), (1, 3), (2, 3)]).unwrap();
        let l = g.laplacian();
        let m = one_inverse_block_zero(&l, 3).unwrap();
        assert_eq!(&(&l * &m) * &l, l);
        assert_eq!(resistance_from_one_inverse(&m), pinv_resistance(&g));
    }

    #[test]
    fn block_zero_rejects_mixed_columns() {
        let g = generate(&FamilySpec::Path(3)).unwrap();
        assert!(matches!(
            one_inverse_block_zero(&g.laplacian(), 1),
            Err(Error::BlockPrecondition(_))
        ));
    }

    #[test]
    fn block_zero_edge_cases() {
        // C4 split at 2: columns of L2ᵀ are (-1,0) and (0,-1)
        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        assert!(one_inverse_block_zero(&c4.laplacian(), 2).is_err());
        // K_{2,2} split at 3: the lone trailing vertex sees vertex 2 not at all, 0 and 1 fully
        let k22 = generate(&FamilySpec::CompleteBipartite(2, 2)).unwrap();
        let m = one_inverse_block_zero(&k22.laplacian(), 3).unwrap();
        assert_eq!(resistance_from_one_inverse(&m), pinv_resistance(&k22));
        // edgeless Laplacian: L1 = [0]
        let zero = RationalMatrix::zeros(2, 2);
        assert!(matches!(one_inverse_block_zero(&zero, 1), Err(Error::BlockPrecondition(_))));
        assert!(one_inverse_block_zero(&c4.laplacian(), 4).is_err());
    }

    #[test]
    fn complete_times_k2_schur_closed_form() {
        for n in 2..=5usize {
            let g = cartesian_k2(&generate(&FamilySpec::Complete(n)).unwrap()).unwrap();
            let m = one_inverse_schur(&g.laplacian(), n).unwrap();
            let nn = n as i64;
            let c = ratio(1, nn * nn * (nn + 2));
            let centred = scaled_centering(n, &int(1));
            let corner = &RationalMatrix::identity(n).scale(&int(nn * (nn + 1)))
                + &RationalMatrix::ones(n).scale(&ratio(nn * nn * nn + 2 * nn * nn - 1, nn + 1));
            let expected = RationalMatrix::from_blocks(
                &centred.scale(&int(nn + 1)),
                &centred,
                &centred,
                &corner,
            )
            .unwrap()
            .scale(&c);
            assert_eq!(m, expected, "K{n} x K2");
            assert_eq!(resistance_from_one_inverse(&m), pinv_resistance(&g));
        }
    }

    #[test]
    fn schur_small_cases() {
        let k2 = generate(&FamilySpec::Complete(2)).unwrap();
        let l = k2.laplacian();
        let m = one_inverse_schur(&l, 1).unwrap();
        assert_eq!(&(&l * &m) * &l, l);

        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        let l = c4.laplacian();
        let m = one_inverse_schur(&l, 2).unwrap();
        assert_eq!(&(&l * &m) * &l, l);
        assert_eq!(resistance_from_one_inverse(&m), pinv_resistance(&c4));
    }

    #[test]
    fn schur_rejects_singular_trailing_block() {
        let zero = RationalMatrix::zeros(3, 3);
        assert!(matches!(one_inverse_schur(&zero, 1), Err(Error::BlockPrecondition(_))));
        let not_laplacian = RationalMatrix::from_i64_rows(&[vec![1, 0], vec![0, 1]]);
        assert!(one_inverse_schur(&not_laplacian, 1).is_err());
    }
}
