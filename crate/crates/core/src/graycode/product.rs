//! Gray codes of hosts split into two parts with no edges between them.
//!
//! The coloring graph of such a host is the Cartesian product of the parts'
//! coloring graphs, and two Hamiltonian cycles combine into one through the
//! product by snaking over the grid.

use super::{scatter, CyclicGrayCode};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};

/// Combines codes of the parts of `host` on vertex sets `first` and `second`
/// (which partition the vertices, with no edge between them). Each part's
/// code is over the induced subgraph with vertices in increasing order.
pub fn product_code(
    host: &SimpleGraph,
    first: VertexSet,
    a: &CyclicGrayCode,
    second: VertexSet,
    b: &CyclicGrayCode,
) -> Result<CyclicGrayCode> {
    if first.intersection(second) != VertexSet::EMPTY || first.union(second) != host.vertices() {
        return Err(Error::Argument("product parts must partition the host".into()));
    }
    if !host.boundary(first).intersection(second).is_empty() {
        return Err(Error::Argument("product parts must not be joined by edges".into()));
    }
    if a.k != b.k {
        return Err(Error::Argument(format!("palettes {} and {} differ", a.k, b.k)));
    }
    if a.host != host.induced_subgraph(first).0 || b.host != host.induced_subgraph(second).0 {
        return Err(Error::Argument("part codes are not over the induced parts".into()));
    }
    let map_a: Vec<usize> = first.iter().collect();
    let map_b: Vec<usize> = second.iter().collect();
    let order = snake(a.len(), b.len());
    let sequence = order
        .into_iter()
        .map(|(r, c)| {
            let mut colors = vec![0u8; host.n()];
            scatter(&mut colors, &map_a, a.sequence[r].colors());
            scatter(&mut colors, &map_b, b.sequence[c].colors());
            crate::coloring::Coloring::new(colors)
        })
        .collect();
    Ok(CyclicGrayCode {
        host: host.clone(),
        k: a.k,
        j: a.j.max(b.j),
        sequence,
    })
}

/// Combines codes of vertex-disjoint pieces with no edges between them, each
/// over its induced subgraph, into a code of the subgraph they induce together.
pub(crate) fn combine_pieces(host: &SimpleGraph, pieces: Vec<(VertexSet, CyclicGrayCode)>) -> Result<CyclicGrayCode> {
    let mut acc: Option<(VertexSet, CyclicGrayCode)> = None;
    for (set, code) in pieces {
        acc = Some(match acc {
            None => (set, code),
            Some((done, prev)) => {
                let union = done.union(set);
                let (part, _) = host.induced_subgraph(union);
                let local = |s: VertexSet| -> VertexSet {
                    union.iter().enumerate().filter(|(_, v)| s.contains(*v)).map(|(i, _)| i).collect()
                };
                (union, product_code(&part, local(done), &prev, local(set), &code)?)
            }
        });
    }
    acc.map(|(_, code)| code)
        .ok_or_else(|| Error::Argument("no pieces to combine".into()))
}

/// A Hamiltonian cycle through the grid `rows × cols` in which every step
/// moves along one coordinate to a cyclic neighbor in that coordinate's cycle.
///
/// Start at `(0,0)`, sweep rows `0..rows` over columns `1..cols` alternating
/// direction, step to `(rows-1, 0)`, and return up column 0. The closing
/// edge of the row cycle is never used, so rows only need a path.
pub(crate) fn snake(rows: usize, cols: usize) -> Vec<(usize, usize)> {
    if rows == 0 || cols == 0 {
        return Vec::new();
    }
    if rows == 1 {
        return (0..cols).map(|c| (0, c)).collect();
    }
    if cols == 1 {
        return (0..rows).map(|r| (r, 0)).collect();
    }
    let mut out = Vec::with_capacity(rows * cols);
    out.push((0, 0));
    for r in 0..rows {
        if r % 2 == 0 {
            out.extend((1..cols).map(|c| (r, c)));
        } else {
            out.extend((1..cols).rev().map(|c| (r, c)));
        }
    }
    out.extend((1..rows).rev().map(|r| (r, 0)));
    out
}
