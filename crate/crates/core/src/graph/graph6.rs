//! The graph6 ASCII format: a size header `N(n)` followed by the upper
//! triangle of the adjacency matrix in column-major order (`x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`), six bits per byte offset by 63, zero padded.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn sextet(byte: u8, pos: usize) -> Result<u8> {
    if !(BIAS..=126).contains(&byte) {
        return Err(err(format!("byte {byte} at offset {pos} outside 63..=126")));
    }
    Ok(byte - BIAS)
}

/// Returns `(n, header length)`.
fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    let wide = |count: usize, offset: usize| -> Result<(usize, usize)> {
        if bytes.len() < offset + count {
            return Err(err("truncated size header"));
        }
        let mut n = 0usize;
        for (k, &b) in bytes[offset..offset + count].iter().enumerate() {
            n = (n << 6) | sextet(b, offset + k)? as usize;
        }
        Ok((n, offset + count))
    };
    match bytes {
        [] => Err(err("empty input")),
        [126, 126, ..] => wide(6, 2),
        [126, ..] => wide(3, 1),
        [b, ..] => Ok((sextet(*b, 0)? as usize, 1)),
    }
}

fn encode_order(n: usize, out: &mut String) {
    let push_wide = |out: &mut String, count: usize| {
        for k in (0..count).rev() {
            out.push(char::from(((n >> (6 * k)) & 0x3f) as u8 + BIAS));
        }
    };
    if n <= 62 {
        out.push(char::from(n as u8 + BIAS));
    } else if n <= 258_047 {
        out.push('~');
        push_wide(out, 3);
    } else {
        out.push_str("~~");
        push_wide(out, 6);
    }
}

/// Decodes one graph6 line (an optional `>>graph6<<` prefix is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim();
    let body = body.strip_prefix(HEADER).unwrap_or(body);
    let bytes = body.as_bytes();
    let (n, start) = decode_order(bytes)?;
    if n == 0 {
        return Err(err("graph6 encodes zero vertices"));
    }
    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    let data = &bytes[start..];
    if data.len() != expected {
        return Err(err(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            data.len()
        )));
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for (k, &b) in data.iter().enumerate() {
        let v = sextet(b, start + k)?;
        bits.extend((0..6).rev().map(|s| (v >> s) & 1 == 1));
    }
    if bits[bit_count..].iter().any(|&b| b) {
        return Err(err("non-zero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(acc + BIAS));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((acc << (6 - filled)) + BIAS));
    }
    out
}

/// Decodes a corpus with one graph per line. Blank lines are skipped; each
/// graph is paired with its 1-based line number.
pub fn parse_graph6_corpus(text: &str) -> Vec<(usize, Result<Graph>)> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(idx, line)| (idx + 1, parse_graph6(line)))
        .collect()
}
