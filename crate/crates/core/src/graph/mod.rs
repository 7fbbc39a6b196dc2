//! Simple undirected graphs, the standard families, and the three products
//! with `K2` used throughout (double graph, lexicographic, cartesian).
//!
//! Product numbering: vertex `v` of the first copy keeps index `v`, its
//! counterpart in the second copy gets `v + n`. Resistance matrices of products
//! therefore come out in the block form `[B0 B1; B1 B0]`.

mod edgelist;
mod family;
mod graph6;

use std::collections::{BTreeSet, VecDeque};

pub use edgelist::{format_edge_list, parse_edge_list};
pub use family::{generate, FamilySpec};
pub use graph6::{encode_graph6, parse_graph6, parse_graph6_corpus};

use crate::error::{Error, Result};
use crate::linalg::{int, RationalMatrix};

/// Equality compares vertex count and edge set; the label is ignored.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from 0-based endpoint pairs. Pairs are normalised to
    /// `(min, max)`; self-loops, repeated pairs and out-of-range endpoints are
    /// rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be at least 1".into()));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) has an endpoint >= {n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u},{v})")));
            }
        }
        Ok(Self { n, edges: set, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        let deg = self.degrees();
        deg.iter().all(|&d| d == deg[0]).then_some(deg[0])
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// Connected components as a vertex -> component index map, plus the count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let adj = self.adjacency_lists();
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 == 1
    }

    pub fn ensure_connected(&self) -> Result<()> {
        match self.components().1 {
            1 => Ok(()),
            components => Err(Error::Disconnected { components }),
        }
    }

    /// Breadth-first distances from every vertex (`usize::MAX` if unreachable).
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_lists();
        (0..self.n)
            .map(|s| {
                let mut dist = vec![usize::MAX; self.n];
                dist[s] = 0;
                let mut queue = VecDeque::from([s]);
                while let Some(u) = queue.pop_front() {
                    for &w in &adj[u] {
                        if dist[w] == usize::MAX {
                            dist[w] = dist[u] + 1;
                            queue.push_back(w);
                        }
                    }
                }
                dist
            })
            .collect()
    }

    /// `L = D − A` as an exact integer matrix.
    pub fn laplacian(&self) -> RationalMatrix {
        let mut l = RationalMatrix::zeros(self.n, self.n);
        for (v, d) in self.degrees().into_iter().enumerate() {
            l[(v, v)] = int(d as i64);
        }
        for &(u, v) in &self.edges {
            l[(u, v)] = int(-1);
            l[(v, u)] = int(-1);
        }
        l
    }
}

/// Double graph: a copy `v'` of every vertex joined to the neighbours of `v`
/// (and not to `v` itself). Copies are numbered `v + n`.
pub fn double_graph(g: &Graph) -> Result<Graph> {
    g.ensure_connected()?;
    let n = g.order();
    let edges = g
        .edges()
        .flat_map(|(u, v)| [(u, v), (u + n, v + n), (u, v + n), (v, u + n)]);
    let label = g.label().map(|l| format!("D2({l})"));
    let d = Graph::new(2 * n, edges)?;
    Ok(match label {
        Some(l) => d.with_label(l),
        None => d,
    })
}

/// Lexicographic product `G[K2]`: `(v,a) ~ (w,b)` iff `vw ∈ E(G)`, or `v = w`
/// and `a ≠ b`. Vertex `(v,a)` is numbered `v + a·n`.
pub fn lexicographic_k2(g: &Graph) -> Result<Graph> {
    g.ensure_connected()?;
    let n = g.order();
    let fibers = (0..n).map(|v| (v, v + n));
    let lifted = g
        .edges()
        .flat_map(|(u, v)| [(u, v), (u + n, v + n), (u, v + n), (v, u + n)]);
    let label = g.label().map(|l| format!("{l}[K2]"));
    let p = Graph::new(2 * n, fibers.chain(lifted))?;
    Ok(match label {
        Some(l) => p.with_label(l),
        None => p,
    })
}

/// Cartesian product `G × K2`: `(v,a) ~ (w,b)` iff `v = w, a ≠ b` or
/// `vw ∈ E(G), a = b`. Vertex `(v,a)` is numbered `v + a·n`.
pub fn cartesian_k2(g: &Graph) -> Result<Graph> {
    g.ensure_connected()?;
    let n = g.order();
    let rungs = (0..n).map(|v| (v, v + n));
    let layers = g.edges().flat_map(|(u, v)| [(u, v), (u + n, v + n)]);
    let label = g.label().map(|l| format!("{l}xK2"));
    let p = Graph::new(2 * n, rungs.chain(layers))?;
    Ok(match label {
        Some(l) => p.with_label(l),
        None => p,
    })
}
