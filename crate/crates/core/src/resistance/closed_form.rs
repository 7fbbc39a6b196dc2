use num_traits::Zero;

use super::resistance_matrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{ratio, Rational, RationalMatrix};

/// Families with a known resistance formula.
#[derive(Clone, Debug)]
pub enum ClosedForm {
    /// Resistance between vertices `i` and `j` of `C_n`: `d(n − d)/n`.
    Cycle { n: usize, i: usize, j: usize },
    /// Full resistance matrix of the double graph of `g`.
    Double(Graph),
    /// Full resistance matrix of `g[K2]`.
    LexicoK2(Graph),
    /// Full resistance matrix of `K_{n,n}` (parts contiguous).
    BipartiteNN(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedFormValue {
    Scalar(Rational),
    Matrix(RationalMatrix),
}

impl ClosedFormValue {
    pub fn into_matrix(self) -> Option<RationalMatrix> {
        match self {
            Self::Matrix(m) => Some(m),
            Self::Scalar(_) => None,
        }
    }
}

fn cycle(n: usize, i: usize, j: usize) -> Result<Rational> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!("cycle needs at least 3 vertices, got {n}")));
    }
    if i >= n || j >= n {
        return Err(Error::InvalidFamily(format!("vertices ({i},{j}) outside C{n}")));
    }
    let gap = i.abs_diff(j);
    let d = gap.min(n - gap) as i64;
    Ok(ratio((n as i64 - d) * d, n as i64))
}

/// Shared shape of the double-graph and `G[K2]` formulas: same-fibre pairs get
/// `1/(deg + shift)`, all others `r/4 + 1/(4(deg_i + shift)) + 1/(4(deg_j + shift))`.
fn two_copy_matrix(g: &Graph, shift: usize) -> Result<RationalMatrix> {
    let r = resistance_matrix(g)?;
    let n = g.order();
    let deg = g.degrees();
    let inv: Vec<Rational> = deg.iter().map(|&d| ratio(1, (d + shift) as i64)).collect();
    let quarter = ratio(1, 4);
    Ok(RationalMatrix::from_fn(2 * n, 2 * n, |a, b| {
        let (u, v) = (a % n, b % n);
        if a == b {
            Rational::zero()
        } else if u == v {
            inv[u].clone()
        } else {
            (&r[(u, v)] + &inv[u] + &inv[v]) * &quarter
        }
    }))
}

fn bipartite(n: usize) -> Result<RationalMatrix> {
    if n == 0 {
        return Err(Error::InvalidFamily("K_{n,n} needs n >= 1".into()));
    }
    let nn = n as i64;
    let within = ratio(2, nn);
    let across = ratio(2 * nn - 1, nn * nn);
    Ok(RationalMatrix::from_fn(2 * n, 2 * n, |i, j| {
        if i == j {
            Rational::zero()
        } else if (i < n) == (j < n) {
            within.clone()
        } else {
            across.clone()
        }
    }))
}

pub fn closed_form_resistance(kind: &ClosedForm) -> Result<ClosedFormValue> {
    Ok(match kind {
        ClosedForm::Cycle { n, i, j } => ClosedFormValue::Scalar(cycle(*n, *i, *j)?),
        ClosedForm::Double(g) => ClosedFormValue::Matrix(two_copy_matrix(g, 0)?),
        ClosedForm::LexicoK2(g) => ClosedFormValue::Matrix(two_copy_matrix(g, 1)?),
        ClosedForm::BipartiteNN(n) => ClosedFormValue::Matrix(bipartite(*n)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use crate::graph::{double_graph, generate, lexicographic_k2, FamilySpec};

    fn scalar(kind: ClosedForm) -> Rational {
        match closed_form_resistance(&kind).unwrap() {
            ClosedFormValue::Scalar(v) => v,
            other => panic!("expected a scalar, got {other:?}"),
        }
    }

    fn matrix(kind: ClosedForm) -> RationalMatrix {
        closed_form_resistance(&kind).unwrap().into_matrix().unwrap()
    }

    #[test]
    fn cycle_four() {
        assert_eq!(scalar(ClosedForm::Cycle { n: 4, i: 0, j: 1 }), ratio(3, 4));
        assert_eq!(scalar(ClosedForm::Cycle { n: 4, i: 0, j: 2 }), int(1));
        assert_eq!(scalar(ClosedForm::Cycle { n: 4, i: 3, j: 0 }), ratio(3, 4));
        assert!(closed_form_resistance(&ClosedForm::Cycle { n: 2, i: 0, j: 1 }).is_err());
        assert!(closed_form_resistance(&ClosedForm::Cycle { n: 5, i: 0, j: 5 }).is_err());
    }

    #[test]
    fn cycle_matches_matrix() {
        for n in 3..=9 {
            let r = resistance_matrix(&generate(&FamilySpec::Cycle(n)).unwrap()).unwrap();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(r[(i, j)], scalar(ClosedForm::Cycle { n, i, j }));
                }
            }
        }
    }

    #[test]
    fn double_of_k2() {
        let k2 = generate(&FamilySpec::Complete(2)).unwrap();
        let m = matrix(ClosedForm::Double(k2.clone()));
        // u1 = 0, u2 = 1, u1' = 2, u2' = 3
        assert_eq!(m[(0, 2)], int(1));
        assert_eq!(m[(0, 1)], ratio(3, 4));
        assert_eq!(m[(0, 3)], ratio(3, 4));
        assert_eq!(m, resistance_matrix(&double_graph(&k2).unwrap()).unwrap());
    }

    #[test]
    fn products_of_path_match() {
        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        assert_eq!(
            matrix(ClosedForm::Double(p4.clone())),
            resistance_matrix(&double_graph(&p4).unwrap()).unwrap()
        );
        assert_eq!(
            matrix(ClosedForm::LexicoK2(p4.clone())),
            resistance_matrix(&lexicographic_k2(&p4).unwrap()).unwrap()
        );
    }

    #[test]
    fn bipartite_block_form() {
        for n in 1..=5 {
            let g = generate(&FamilySpec::CompleteBipartite(n, n)).unwrap();
            assert_eq!(matrix(ClosedForm::BipartiteNN(n)), resistance_matrix(&g).unwrap());
        }
        assert!(closed_form_resistance(&ClosedForm::BipartiteNN(0)).is_err());
    }

    #[test]
    fn disconnected_products_rejected() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert!(closed_form_resistance(&ClosedForm::Double(g)).is_err());
    }
}
