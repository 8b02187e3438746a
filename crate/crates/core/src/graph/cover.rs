//! Smallest vertex set containing given terminals that induces a connected subgraph.
//!
//! A connected subgraph on vertex set `S` exists iff the induced subgraph on
//! `S` is connected, so the induced test is used throughout. Small bounds are
//! answered by growing candidate sets outward from the terminals; otherwise a
//! Dreyfus–Wagner subset dynamic program over unit edge weights gives a Steiner
//! tree whose vertex set is the cover.

use super::{SimpleGraph, VertexSet};
use crate::error::{Error, Result};
use std::collections::HashSet;

const MAX_DP_TERMINALS: usize = 20;
const GROWTH_BOUND: usize = 6;

/// Size of a smallest connected cover of `d`, or `None` if `d` meets several components.
pub fn min_connected_cover_size(h: &SimpleGraph, d: VertexSet) -> Result<Option<usize>> {
    Ok(min_connected_cover(h, d)?.map(VertexSet::len))
}

/// A smallest vertex set `S ⊇ d` with `h[S]` connected.
pub fn min_connected_cover(h: &SimpleGraph, d: VertexSet) -> Result<Option<VertexSet>> {
    check_terminals(h, d)?;
    if !spans_one_component(h, d) {
        return Ok(None);
    }
    if h.induces_connected(d) {
        return Ok(Some(d));
    }
    steiner_dp(h, d).map(Some)
}

/// A smallest connected cover of `d` provided one of size at most `bound` exists.
pub fn min_connected_cover_within(
    h: &SimpleGraph,
    d: VertexSet,
    bound: usize,
) -> Result<Option<VertexSet>> {
    check_terminals(h, d)?;
    if d.len() > bound || !spans_one_component(h, d) {
        return Ok(None);
    }
    if h.induces_connected(d) {
        return Ok(Some(d));
    }
    if bound <= GROWTH_BOUND {
        return Ok(grow_cover(h, d, bound));
    }
    let s = steiner_dp(h, d)?;
    Ok((s.len() <= bound).then_some(s))
}

fn check_terminals(h: &SimpleGraph, d: VertexSet) -> Result<()> {
    if d.is_empty() {
        return Err(Error::Argument("terminal set must be nonempty".into()));
    }
    if !d.is_subset(h.vertices()) {
        return Err(Error::Argument(format!("terminals {d:?} outside the graph")));
    }
    Ok(())
}

fn spans_one_component(h: &SimpleGraph, d: VertexSet) -> bool {
    d.is_subset(h.reach(d.first().unwrap(), h.vertices()))
}

/// Breadth-first over supersets of `d`, adding one boundary vertex at a time.
/// Every minimal cover is reachable this way: the non-terminal vertices of a
/// Steiner tree can be added in order of their tree distance from `d`.
fn grow_cover(h: &SimpleGraph, d: VertexSet, bound: usize) -> Option<VertexSet> {
    let mut level = vec![d];
    let mut seen: HashSet<VertexSet> = HashSet::new();
    for _ in d.len()..bound {
        let mut next = Vec::new();
        for &s in &level {
            for v in h.boundary(s).iter() {
                let t = s.with(v);
                if seen.insert(t) {
                    if h.induces_connected(t) {
                        return Some(t);
                    }
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort();
        level = next;
    }
    None
}

#[derive(Clone, Copy)]
enum Step {
    Leaf,
    Split(u32),
    Via(u8),
}

fn steiner_dp(h: &SimpleGraph, d: VertexSet) -> Result<VertexSet> {
    let terminals: Vec<usize> = d.iter().collect();
    let t = terminals.len();
    if t > MAX_DP_TERMINALS {
        return Err(Error::Unsupported(format!(
            "connected cover of {t} terminals exceeds the {MAX_DP_TERMINALS}-terminal limit"
        )));
    }
    let n = h.n();
    let dist = all_pairs_distances(h);
    const INF: u32 = u32::MAX / 4;
    let full = (1usize << t) - 1;
    let mut cost = vec![INF; (full + 1) * n];
    let mut step = vec![Step::Leaf; (full + 1) * n];
    for (i, &ti) in terminals.iter().enumerate() {
        for v in 0..n {
            cost[(1 << i) * n + v] = dist[ti * n + v];
            step[(1 << i) * n + v] = Step::Leaf;
        }
    }
    for mask in 1..=full {
        if mask.count_ones() < 2 {
            continue;
        }
        let row = mask * n;
        for v in 0..n {
            let mut sub = (mask - 1) & mask;
            while sub > 0 {
                // each unordered split once
                if sub < mask ^ sub {
                    let c = cost[sub * n + v] + cost[(mask ^ sub) * n + v];
                    if c < cost[row + v] {
                        cost[row + v] = c;
                        step[row + v] = Step::Split(sub as u32);
                    }
                }
                sub = (sub - 1) & mask;
            }
        }
        // unit weights: relax along shortest paths
        let base: Vec<u32> = cost[row..row + n].to_vec();
        for v in 0..n {
            for u in 0..n {
                let c = base[u] + dist[u * n + v];
                if c < cost[row + v] {
                    cost[row + v] = c;
                    step[row + v] = Step::Via(u as u8);
                }
            }
        }
    }
    let root = terminals[0];
    let mut cover = VertexSet::EMPTY;
    let mut stack = vec![(full, root)];
    while let Some((mask, v)) = stack.pop() {
        cover = cover.with(v);
        match step[mask * n + v] {
            Step::Leaf => {
                let ti = terminals[mask.trailing_zeros() as usize];
                cover = cover.union(shortest_path(h, &dist, ti, v));
            }
            Step::Split(sub) => {
                stack.push((sub as usize, v));
                stack.push((mask ^ sub as usize, v));
            }
            Step::Via(u) => {
                cover = cover.union(shortest_path(h, &dist, u as usize, v));
                stack.push((mask, u as usize));
            }
        }
    }
    debug_assert!(h.induces_connected(cover) && d.is_subset(cover));
    Ok(cover)
}

fn all_pairs_distances(h: &SimpleGraph) -> Vec<u32> {
    let n = h.n();
    let mut dist = vec![u32::MAX / 4; n * n];
    for s in 0..n {
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        let mut k = 0;
        while !frontier.is_empty() {
            for v in frontier.iter() {
                dist[s * n + v] = k;
            }
            let next = h.boundary(frontier).difference(seen);
            seen = seen.union(next);
            frontier = next;
            k += 1;
        }
    }
    dist
}

fn shortest_path(h: &SimpleGraph, dist: &[u32], from: usize, to: usize) -> VertexSet {
    let n = h.n();
    let mut out = VertexSet::singleton(from);
    let mut cur = from;
    while cur != to {
        cur = h
            .neighbors(cur)
            .iter()
            .find(|&w| dist[w * n + to] + 1 == dist[cur * n + to])
            .expect("shortest path exists");
        out = out.with(cur);
    }
    out
}
