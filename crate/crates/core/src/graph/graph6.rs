//! graph6 encoding of simple graphs.

use super::SimpleGraph;
use crate::error::{Error, Result};

const HEADER: &[u8] = b">>graph6<<";

pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Parses one graph6 string; an optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn from_graph6(input: &[u8]) -> Result<SimpleGraph> {
    let mut s = input.trim_ascii();
    if let Some(rest) = s.strip_prefix(HEADER) {
        s = rest;
    }
    let err = |msg: String| Error::Parse(format!("graph6: {msg}"));
    if let Some(&b) = s.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("byte {b:#04x} outside the printable range")));
    }
    let (n, body) = match s {
        [] => return Err(err("empty input".into())),
        [126, 126, ..] => return Err(err("graphs above 258047 vertices are not supported".into())),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(err("truncated vertex count".into())),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    if n > SimpleGraph::MAX_VERTICES {
        return Err(err(format!("{n} vertices exceeds the cap of {}", SimpleGraph::MAX_VERTICES)));
    }
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(err(format!(
            "expected {} adjacency bytes for {n} vertices, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let mut g = SimpleGraph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// One graph per non-empty line.
pub fn from_graph6_lines(text: &str) -> Result<Vec<SimpleGraph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| from_graph6(l.as_bytes()))
        .collect()
}
