//! Named graph families.

use super::SimpleGraph;
use crate::coloring::Coloring;
use crate::error::{Error, Result};

pub fn path(n: usize) -> Result<SimpleGraph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    SimpleGraph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<SimpleGraph> {
    if n < 3 {
        return Err(Error::Argument(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let mut g = path(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

/// `K_{1,m}` with center 0.
pub fn star(m: usize) -> Result<SimpleGraph> {
    let edges: Vec<_> = (1..=m).map(|v| (0, v)).collect();
    SimpleGraph::from_edges(m + 1, &edges)
}

pub fn complete(n: usize) -> Result<SimpleGraph> {
    complete_multipartite(&vec![1; n])
}

/// Parts are numbered consecutively in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Result<SimpleGraph> {
    if parts.contains(&0) {
        return Err(Error::Argument("part sizes must be positive".into()));
    }
    let part_of = part_labels(parts);
    let mut g = SimpleGraph::new(part_of.len())?;
    for u in 0..part_of.len() {
        for v in u + 1..part_of.len() {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Part index of each vertex of `complete_multipartite(parts)`.
pub fn part_labels(parts: &[usize]) -> Vec<usize> {
    parts
        .iter()
        .enumerate()
        .flat_map(|(p, &m)| std::iter::repeat_n(p, m))
        .collect()
}

/// `K_{m,m}` minus a perfect matching: `i` and `m + i` are the unmatched pairs.
pub fn lm(m: usize) -> Result<SimpleGraph> {
    if m < 3 {
        return Err(Error::Argument(format!("L_m needs m >= 3, got {m}")));
    }
    let mut g = SimpleGraph::new(2 * m)?;
    for a in 0..m {
        for b in 0..m {
            if a != b {
                g.add_edge(a, m + b)?;
            }
        }
    }
    Ok(g)
}

/// An `i`-chromatic graph with a proper `k`-coloring that is isolated in the
/// `(j-1)`-localized coloring graph.
///
/// With `i == k` this is the balanced complete `i`-partite graph with parts of
/// size `ceil(j/2)`. Otherwise there are `i` parts of size `k * ceil(j/i)`,
/// every color used `ceil(j/i)` times per part, and edges join differently
/// colored vertices of different parts. Vertex `q` of part `p` is numbered
/// `p * part_size + q`.
pub fn isolating_graph(i: usize, j: usize, k: usize) -> Result<(SimpleGraph, Coloring)> {
    if i < 2 || i > k {
        return Err(Error::Argument(format!("need 2 <= i <= k, got i={i}, k={k}")));
    }
    if j == 0 {
        return Err(Error::Argument("localization must be at least 1".into()));
    }
    if i == k {
        let size = j.div_ceil(2);
        let g = complete_multipartite(&vec![size; i])?;
        let colors = part_labels(&vec![size; i]).iter().map(|&p| p as u8).collect();
        return Ok((g, Coloring::new(colors)));
    }
    let reps = j.div_ceil(i);
    let size = k * reps;
    let mut g = SimpleGraph::new(i * size)?;
    let color = |v: usize| (v % size) / reps;
    for u in 0..i * size {
        for v in u + 1..i * size {
            if u / size != v / size && color(u) != color(v) {
                g.add_edge(u, v)?;
            }
        }
    }
    let colors = (0..i * size).map(|v| color(v) as u8).collect();
    Ok((g, Coloring::new(colors)))
}
