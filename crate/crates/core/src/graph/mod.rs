//! Host graphs on at most 64 vertices with bitmask neighbor sets.

mod cover;
pub mod families;
pub mod generate;
pub mod graph6;
pub mod multigraph;

pub use cover::{min_connected_cover, min_connected_cover_size, min_connected_cover_within};
pub use multigraph::{MultiGraph, SubdivisionSpec};

use crate::error::{Error, Result};
use std::fmt;

/// A set of vertices of a graph with at most 64 vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Undirected simple graph on vertices `0..n`, `n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl SimpleGraph {
    pub const MAX_VERTICES: usize = 64;

    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > Self::MAX_VERTICES {
            return Err(Error::Graph(format!(
                "{n} vertices exceeds the cap of {}",
                Self::MAX_VERTICES
            )));
        }
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Graph(format!(
                "edge {u}-{v} out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Graph(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Union of the neighborhoods of `set`, excluding `set` itself.
    pub fn boundary(&self, set: VertexSet) -> VertexSet {
        let all = set.iter().fold(0u64, |acc, v| acc | self.adj[v]);
        VertexSet(all & !set.0)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !((2u64 << u).wrapping_sub(1))).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// Vertices reachable from `v` inside `within`.
    pub fn reach(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = VertexSet(self.boundary(frontier).0 & within.0 & !seen.0);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Whether the induced subgraph on `set` is connected (the empty set is not).
    pub fn induces_connected(&self, set: VertexSet) -> bool {
        match set.first() {
            None => false,
            Some(v) => self.reach(v, set) == set,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.induces_connected(self.vertices())
    }

    /// Connected components ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, rest);
            out.push(c);
            rest = rest.difference(c);
        }
        out
    }

    /// Number of edges on a shortest `x`–`y` path; `None` across components.
    pub fn distance(&self, x: usize, y: usize) -> Option<usize> {
        let mut seen = VertexSet::singleton(x);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            if frontier.contains(y) {
                return Some(d);
            }
            let next = self.boundary(frontier).difference(seen);
            seen = seen.union(next);
            frontier = next;
            d += 1;
        }
        None
    }

    /// Induced subgraph on `set`; vertex `i` of the result is `map[i]` here.
    pub fn induced_subgraph(&self, set: VertexSet) -> (SimpleGraph, Vec<usize>) {
        let map: Vec<usize> = set.iter().collect();
        let mut index = [usize::MAX; 64];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut g = SimpleGraph {
            n: map.len(),
            adj: vec![0; map.len()],
        };
        for (i, &v) in map.iter().enumerate() {
            for w in VertexSet(self.adj[v] & set.0).iter() {
                g.adj[i] |= 1 << index[w];
            }
        }
        (g, map)
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::new(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    /// Vertex `(a, b)` is numbered `a * other.n() + b`.
    pub fn cartesian_product(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let m = other.n;
        let mut g = SimpleGraph::new(self.n * m)?;
        for a in 0..self.n {
            for (b1, b2) in other.edges() {
                g.add_edge(a * m + b1, a * m + b2)?;
            }
        }
        for (a1, a2) in self.edges() {
            for b in 0..m {
                g.add_edge(a1 * m + b, a2 * m + b)?;
            }
        }
        Ok(g)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        g
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for c in self.components() {
            let root = c.first().unwrap();
            side[root] = 0;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u).iter() {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    /// Peels minimum-degree vertices (least index on ties). Returns the
    /// degeneracy and the vertices in reverse peeling order, so every vertex
    /// has at most `d` neighbors earlier in the order.
    pub fn degeneracy_order(&self) -> (usize, Vec<usize>) {
        let mut alive = self.vertices();
        let mut peeled = Vec::with_capacity(self.n);
        let mut d = 0;
        while !alive.is_empty() {
            let v = alive
                .iter()
                .min_by_key(|&v| (self.neighbors(v).intersection(alive).len(), v))
                .unwrap();
            d = d.max(self.neighbors(v).intersection(alive).len());
            peeled.push(v);
            alive = alive.without(v);
        }
        peeled.reverse();
        (d, peeled)
    }

    pub fn degeneracy(&self) -> usize {
        self.degeneracy_order().0
    }

    /// Least `k` admitting a proper `k`-coloring.
    pub fn chromatic_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        (1..=self.n)
            .find(|&k| crate::coloring::first_coloring(self, k).is_some())
            .unwrap_or(self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let s = VertexSet::from_vertices([3, 0, 5]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(4));
        assert_eq!(s.without(3).with(1), VertexSet::from_vertices([0, 1, 5]));
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn rejects_loops_and_range() {
        let mut g = SimpleGraph::new(3).unwrap();
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        assert!(SimpleGraph::new(65).is_err());
    }

    #[test]
    fn product_of_two_edges_is_a_square() {
        let k2 = complete(2).unwrap();
        let p = k2.cartesian_product(&k2).unwrap();
        assert_eq!(p.edge_count(), 4);
        assert!((0..4).all(|v| p.degree(v) == 2));
        assert!(p.is_connected());
    }

    #[test]
    fn distances() {
        let c6 = cycle(6).unwrap();
        assert_eq!(c6.distance(0, 3), Some(3));
        assert_eq!(c6.distance(2, 2), Some(0));
        let two = SimpleGraph::new(1)
            .unwrap()
            .disjoint_union(&SimpleGraph::new(1).unwrap())
            .unwrap();
        assert!(!two.is_connected());
        assert_eq!(two.distance(0, 1), None);
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(path(5).unwrap().degeneracy(), 1);
        assert_eq!(star(4).unwrap().degeneracy(), 1);
        assert_eq!(cycle(4).unwrap().degeneracy(), 2);
        assert_eq!(complete(5).unwrap().degeneracy(), 4);
        let (d, order) = cycle(7).unwrap().degeneracy_order();
        assert_eq!(d, 2);
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(sorted, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(cycle(5).unwrap().chromatic_number(), 3);
        assert_eq!(cycle(6).unwrap().chromatic_number(), 2);
        assert_eq!(complete_multipartite(&[2, 3]).unwrap().chromatic_number(), 2);
        assert_eq!(complete(4).unwrap().chromatic_number(), 4);
        assert_eq!(SimpleGraph::new(3).unwrap().chromatic_number(), 1);
    }

    #[test]
    fn components_and_induced() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[1], VertexSet::singleton(2));
        let (sub, map) = g.induced_subgraph(VertexSet::from_vertices([1, 3, 4]));
        assert_eq!(map, vec![1, 3, 4]);
        assert_eq!(sub.edges(), vec![(1, 2)]);
    }
}
