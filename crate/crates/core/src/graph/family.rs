use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    /// Parts are numbered contiguously in the order given.
    CompleteMultipartite(Vec<usize>),
    /// `CP(2p)`: vertices `2i` and `2i+1` are the non-adjacent partners.
    CocktailParty(usize),
    Path(usize),
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match self {
            Self::Complete(n) | Self::Cycle(n) | Self::Path(n) => *n,
            Self::CompleteBipartite(a, b) => a + b,
            Self::CompleteMultipartite(parts) => parts.iter().sum(),
            Self::CocktailParty(p) => 2 * p,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match self {
            Self::Complete(0) | Self::Path(0) => bad(format!("{self:?}: order must be at least 1")),
            Self::Cycle(n) if *n < 3 => bad(format!("cycle needs at least 3 vertices, got {n}")),
            Self::CompleteBipartite(a, b) if *a == 0 || *b == 0 => {
                bad(format!("complete bipartite parts must be non-empty, got ({a},{b})"))
            }
            Self::CompleteMultipartite(parts) if parts.is_empty() || parts.contains(&0) => {
                bad(format!("multipartite parts must be non-empty, got {parts:?}"))
            }
            Self::CocktailParty(0) => bad("cocktail party graph needs p >= 1".into()),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Complete(n) => write!(f, "K{n}"),
            Self::Cycle(n) => write!(f, "C{n}"),
            Self::Path(n) => write!(f, "P{n}"),
            Self::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            Self::CompleteMultipartite(parts) => {
                let p: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "K{}", p.join(","))
            }
            Self::CocktailParty(p) => write!(f, "CP({})", 2 * p),
        }
    }
}

/// Parses `name:params`, e.g. `complete:4`, `cycle:5`, `bipartite:3,3`,
/// `multipartite:2,2,2`, `cocktail:3`, `path:4`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidFamily(format!("expected name:params, got {s:?}")))?;
        let nums = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidFamily(format!("bad parameter {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let one = |nums: &[usize]| match nums {
            [x] => Ok(*x),
            _ => Err(Error::InvalidFamily(format!("{name} takes one parameter"))),
        };
        let spec = match name.trim().to_ascii_lowercase().as_str() {
            "complete" | "k" => Self::Complete(one(&nums)?),
            "cycle" | "c" => Self::Cycle(one(&nums)?),
            "path" | "p" => Self::Path(one(&nums)?),
            "cocktail" | "cp" => Self::CocktailParty(one(&nums)?),
            "bipartite" => match nums.as_slice() {
                [a, b] => Self::CompleteBipartite(*a, *b),
                _ => return Err(Error::InvalidFamily("bipartite takes two parameters".into())),
            },
            "multipartite" => Self::CompleteMultipartite(nums),
            other => return Err(Error::InvalidFamily(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn multipartite_edges(parts: &[usize]) -> Vec<(usize, usize)> {
    let mut part_of = Vec::new();
    for (idx, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(idx, size));
    }
    let n = part_of.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    edges
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.order();
    let edges: Vec<(usize, usize)> = match spec {
        FamilySpec::Complete(n) => (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))).collect(),
        FamilySpec::Cycle(n) => (0..*n).map(|u| (u, (u + 1) % n)).collect(),
        FamilySpec::Path(n) => (1..*n).map(|v| (v - 1, v)).collect(),
        FamilySpec::CompleteBipartite(a, b) => multipartite_edges(&[*a, *b]),
        FamilySpec::CompleteMultipartite(parts) => multipartite_edges(parts),
        FamilySpec::CocktailParty(p) => multipartite_edges(&vec![2; *p]),
    };
    Ok(Graph::new(n, edges)?.with_label(spec.to_string()))
}
