//! Brute-force ground truth for small graphs.
//!
//! Effective resistance equals `F_ij / T`, where `T` counts spanning trees and
//! `F_ij` counts spanning forests with two components separating `i` from `j`.
//! Both are counted here by enumerating edge subsets and checking them with a
//! union-find; no matrix arithmetic is involved.

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{Rational, RationalMatrix};

/// Largest edge count accepted by the enumerator.
pub const MAX_EDGES: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestCounts {
    pub trees: BigUint,
    /// `sep[i][j]`: spanning 2-forests with `i` and `j` in different trees.
    pub sep: Vec<Vec<BigUint>>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False when `a` and `b` were already joined (the edge closes a cycle).
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Calls `visit` with every `k`-subset of `0..m` in lexicographic order.
fn for_each_subset(m: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < m - k + p) else {
            return;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

fn acyclic(n: usize, edges: &[(usize, usize)], subset: &[usize]) -> Option<UnionFind> {
    let mut uf = UnionFind::new(n);
    subset
        .iter()
        .all(|&e| uf.union(edges[e].0, edges[e].1))
        .then_some(uf)
}

pub fn count_structures(g: &Graph) -> Result<ForestCounts> {
    g.ensure_connected()?;
    let n = g.order();
    let m = g.size();
    if m > MAX_EDGES {
        return Err(Error::Budget { edges: m, limit: MAX_EDGES });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();

    let mut trees: u64 = 0;
    for_each_subset(m, n - 1, |s| {
        if acyclic(n, &edges, s).is_some() {
            trees += 1;
        }
    });

    let mut sep = vec![vec![0u64; n]; n];
    if n >= 2 {
        for_each_subset(m, n - 2, |s| {
            let Some(mut uf) = acyclic(n, &edges, s) else {
                return;
            };
            // n − 2 independent edges leave exactly two trees
            let root: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
            for i in 0..n {
                for j in i + 1..n {
                    if root[i] != root[j] {
                        sep[i][j] += 1;
                        sep[j][i] += 1;
                    }
                }
            }
        });
    }

    Ok(ForestCounts {
        trees: BigUint::from(trees),
        sep: sep
            .into_iter()
            .map(|row| row.into_iter().map(BigUint::from).collect())
            .collect(),
    })
}

/// `r_ij = F_ij / T` from enumerated forest counts.
pub fn oracle_resistance(g: &Graph) -> Result<RationalMatrix> {
    let counts = count_structures(g)?;
    let n = g.order();
    let trees = BigInt::from(counts.trees);
    Ok(RationalMatrix::from_fn(n, n, |i, j| {
        Rational::new(BigInt::from(counts.sep[i][j].clone()), trees.clone())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};
    use crate::linalg::{int, ratio};

    fn family(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn subsets_enumerated_once() {
        let mut seen = Vec::new();
        for_each_subset(5, 3, |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 10);
        assert_eq!(seen.first().unwrap(), &vec![0, 1, 2]);
        assert_eq!(seen.last().unwrap(), &vec![2, 3, 4]);
        let mut empty = 0;
        for_each_subset(3, 0, |_| empty += 1);
        assert_eq!(empty, 1);
    }

    #[test]
    fn triangle() {
        let c = count_structures(&family(FamilySpec::Complete(3))).unwrap();
        assert_eq!(c.trees, big(3));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(c.sep[i][j], big(if i == j { 0 } else { 2 }));
            }
        }
    }

    #[test]
    fn four_cycle() {
        let c = count_structures(&family(FamilySpec::Cycle(4))).unwrap();
        assert_eq!(c.trees, big(4));
        assert_eq!(c.sep[0][1], big(3));
        assert_eq!(c.sep[0][2], big(4));
        let r = oracle_resistance(&family(FamilySpec::Cycle(4))).unwrap();
        assert_eq!(r[(0, 1)], ratio(3, 4));
        assert_eq!(r[(0, 2)], int(1));
    }

    #[test]
    fn path_three() {
        let g = family(FamilySpec::Path(3));
        let c = count_structures(&g).unwrap();
        assert_eq!(c.trees, big(1));
        assert_eq!((c.sep[0][1].clone(), c.sep[0][2].clone()), (big(1), big(2)));
        let r = oracle_resistance(&g).unwrap();
        assert_eq!((r[(0, 1)].clone(), r[(0, 2)].clone()), (int(1), int(2)));
    }

    #[test]
    fn complete_four() {
        let r = oracle_resistance(&family(FamilySpec::Complete(4))).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == j { int(0) } else { ratio(1, 2) };
                assert_eq!(r[(i, j)], expected);
            }
        }
    }

    #[test]
    fn budget_and_connectivity() {
        // K8 has 28 edges
        assert_eq!(
            count_structures(&family(FamilySpec::Complete(8))).unwrap_err(),
            Error::Budget { edges: 28, limit: MAX_EDGES }
        );
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert!(count_structures(&g).is_err());
        let single = count_structures(&Graph::new(1, []).unwrap()).unwrap();
        assert_eq!(single.trees, big(1));
    }
}
