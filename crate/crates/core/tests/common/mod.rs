#![allow(dead_code)]

use std::path::PathBuf;

use rand::rngs::StdRng;
use rand::Rng;
use resreg_core::graph::{parse_edge_list, parse_graph6_corpus};
use resreg_core::linalg::parse_rational;
use resreg_core::{Graph, RationalMatrix};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(data_path(name)).unwrap_or_else(|e| panic!("reading {name}: {e}"))
}

/// All connected graphs on `n` vertices, with their corpus line numbers.
pub fn corpus(n: usize) -> Vec<(usize, Graph)> {
    parse_graph6_corpus(&read(&format!("conn{n}.g6")))
        .into_iter()
        .map(|(line, g)| (line, g.unwrap_or_else(|e| panic!("conn{n}.g6:{line}: {e}"))))
        .collect()
}

/// Connected graphs with 2 ≤ n ≤ `max_n`, labelled `conn<n>:<line>`.
pub fn corpus_up_to(max_n: usize) -> Vec<Graph> {
    (2..=max_n)
        .flat_map(|n| corpus(n).into_iter().map(move |(line, g)| g.with_label(format!("conn{n}:{line}"))))
        .collect()
}

pub fn figure(k: usize) -> Graph {
    parse_edge_list(&read(&format!("figure{k}.edges")))
        .unwrap()
        .with_label(format!("figure{k}"))
}

pub fn printed_matrix(k: usize) -> RationalMatrix {
    let rows: Vec<Vec<_>> = read(&format!("figure{k}.matrix"))
        .lines()
        .map(|l| l.split(',').map(|c| parse_rational(c).unwrap()).collect())
        .collect();
    let n = rows.len();
    RationalMatrix::from_fn(n, n, |i, j| rows[i][j].clone())
}

/// Uniform `G(n, p)` sample conditioned on connectivity.
pub fn random_connected(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    loop {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::new(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}
