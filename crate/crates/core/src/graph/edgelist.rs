//! Plain-text edge lists: a header line `n <count>` followed by one `u v`
//! pair per line with 1-based vertex ids. `#` starts a comment.

use super::Graph;
use crate::error::{Error, Result};

fn line_err(line: usize, msg: impl Into<String>) -> Error {
    Error::EdgeList { line, msg: msg.into() }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hdr_line, header) = lines.next().ok_or_else(|| line_err(1, "missing `n <count>` header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .ok()
            .filter(|&c| c >= 1)
            .ok_or_else(|| line_err(hdr_line, format!("bad vertex count {count:?}")))?,
        _ => return Err(line_err(hdr_line, format!("expected `n <count>`, got {header:?}"))),
    };

    let mut edges = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (line, content) in lines {
        let ids: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = ids.as_slice() else {
            return Err(line_err(line, format!("expected two vertex ids, got {content:?}")));
        };
        let parse = |s: &str| -> Result<usize> {
            let id: usize = s
                .parse()
                .map_err(|_| line_err(line, format!("unparseable vertex id {s:?}")))?;
            if id == 0 || id > n {
                return Err(line_err(line, format!("vertex id {id} outside 1..={n}")));
            }
            Ok(id - 1)
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(line_err(line, format!("self-loop at vertex {}", u + 1)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(line_err(line, format!("duplicate edge {} {}", u + 1, v + 1)));
        }
        edges.push((u, v));
    }
    Graph::new(n, edges)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}
