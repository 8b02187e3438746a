//! Proper colorings, their enumeration, and localized adjacency.
//!
//! Colors are stored 0-based; the textual form is 1-based (`"1312"`), with
//! commas between colors once the palette exceeds nine.

mod localized;

pub use localized::{product_decomposition_check, LocalizedColoringGraph};

use crate::error::{Error, Result};
use crate::graph::{min_connected_cover_within, SimpleGraph, VertexSet};
use crate::solver::Budget;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring(Vec<u8>);

impl Coloring {
    pub fn new(colors: Vec<u8>) -> Self {
        Coloring(colors)
    }

    pub fn colors(&self) -> &[u8] {
        &self.0
    }

    pub fn into_colors(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn color(&self, v: usize) -> u8 {
        self.0[v]
    }

    /// Number of colors needed to express this coloring (largest color + 1).
    pub fn palette_lower_bound(&self) -> usize {
        self.0.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
    }

    pub fn is_proper(&self, h: &SimpleGraph) -> bool {
        self.0.len() == h.n() && h.edges().iter().all(|&(u, v)| self.0[u] != self.0[v])
    }

    /// Vertices where the two colorings disagree.
    pub fn diff(&self, other: &Coloring) -> Result<VertexSet> {
        if self.0.len() != other.0.len() {
            return Err(Error::Argument(format!(
                "colorings of {} and {} vertices are not comparable",
                self.0.len(),
                other.0.len()
            )));
        }
        Ok(diff_slices(&self.0, &other.0))
    }

    /// Radix-`k` code `Σ colors[v]·k^v`.
    pub fn code(&self, k: usize) -> u128 {
        self.0.iter().rev().fold(0u128, |acc, &c| acc * k as u128 + c as u128)
    }

    pub fn from_code(mut code: u128, k: usize, n: usize) -> Coloring {
        let mut colors = Vec::with_capacity(n);
        for _ in 0..n {
            colors.push((code % k as u128) as u8);
            code /= k as u128;
        }
        Coloring(colors)
    }

    /// Parses `"1312"` or `"1,3,1,2"` (1-based colors).
    pub fn parse(s: &str) -> Result<Coloring> {
        let s = s.trim();
        let err = |msg: String| Error::Parse(format!("coloring {s:?}: {msg}"));
        let parts: Vec<&str> = if s.contains(',') {
            s.split(',').map(str::trim).collect()
        } else {
            s.char_indices().map(|(i, c)| &s[i..i + c.len_utf8()]).collect()
        };
        if parts.len() > SimpleGraph::MAX_VERTICES {
            return Err(err("more than 64 vertices".into()));
        }
        parts
            .iter()
            .map(|p| match p.parse::<u16>() {
                Ok(c) if (1..=256).contains(&c) => Ok((c - 1) as u8),
                _ => Err(err(format!("bad color {p:?}"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Coloring)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&c| c < 9) {
            for &c in &self.0 {
                write!(f, "{}", c + 1)?;
            }
        } else {
            for (i, &c) in self.0.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", c as usize + 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring({self})")
    }
}

pub(crate) fn diff_slices(a: &[u8], b: &[u8]) -> VertexSet {
    let mut d = 0u64;
    for (v, (x, y)) in a.iter().zip(b).enumerate() {
        if x != y {
            d |= 1 << v;
        }
    }
    VertexSet(d)
}

/// Whether two proper colorings are adjacent in the `j`-localized coloring graph.
pub fn adjacent(h: &SimpleGraph, j: usize, a: &Coloring, b: &Coloring) -> Result<bool> {
    let d = a.diff(b)?;
    if d.is_empty() {
        return Ok(false);
    }
    Ok(min_connected_cover_within(h, d, j)?.is_some())
}

/// All proper `k`-colorings as a flat lexicographically sorted table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringTable {
    n: usize,
    k: usize,
    count: usize,
    data: Vec<u8>,
}

impl ColoringTable {
    pub fn build(h: &SimpleGraph, k: usize, budget: &Budget) -> Result<Self> {
        if k > 256 {
            return Err(Error::Argument(format!("palette of {k} colors exceeds 256")));
        }
        let n = h.n();
        let mut data = Vec::new();
        let mut count = 0usize;
        let limit = budget.max_colorings;
        let mut overflow = false;
        for_each_coloring(h, k, |c| {
            count += 1;
            if count > limit {
                overflow = true;
                return false;
            }
            data.extend_from_slice(c);
            true
        });
        if overflow {
            return Err(Error::BudgetExceeded { reached: count, limit });
        }
        Ok(ColoringTable { n, k, count, data })
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize) -> &[u8] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn coloring(&self, i: usize) -> Coloring {
        Coloring(self.get(i).to_vec())
    }

    pub fn index_of(&self, colors: &[u8]) -> Option<usize> {
        if colors.len() != self.n {
            return None;
        }
        if self.n == 0 {
            return Some(0);
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(colors) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u8]> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }
}

/// Calls `visit` on every proper `k`-coloring in lexicographic order until it
/// returns `false`.
pub fn for_each_coloring<F: FnMut(&[u8]) -> bool>(h: &SimpleGraph, k: usize, mut visit: F) {
    let n = h.n();
    if n == 0 {
        visit(&[]);
        return;
    }
    if k == 0 {
        return;
    }
    // earlier neighbors of each vertex
    let back: Vec<VertexSet> = (0..n)
        .map(|v| VertexSet(h.neighbors(v).0 & ((1u64 << v) - 1)))
        .collect();
    let mut colors = vec![0u8; n];
    let mut next = vec![0usize; n];
    let mut v = 0usize;
    loop {
        // try the next admissible color at v
        let mut placed = false;
        while next[v] < k {
            let c = next[v] as u8;
            next[v] += 1;
            if back[v].iter().all(|w| colors[w] != c) {
                colors[v] = c;
                placed = true;
                break;
            }
        }
        if placed {
            if v + 1 == n {
                if !visit(&colors) {
                    return;
                }
            } else {
                v += 1;
                next[v] = 0;
            }
        } else {
            if v == 0 {
                return;
            }
            v -= 1;
        }
    }
}

/// All proper `k`-colorings, lexicographic by color vector.
pub fn enumerate_colorings(h: &SimpleGraph, k: usize, budget: &Budget) -> Result<Vec<Coloring>> {
    let table = ColoringTable::build(h, k, budget)?;
    Ok((0..table.len()).map(|i| table.coloring(i)).collect())
}

pub fn count_colorings(h: &SimpleGraph, k: usize) -> u64 {
    let mut count = 0u64;
    for_each_coloring(h, k, |_| {
        count += 1;
        true
    });
    count
}

/// Lexicographically first proper `k`-coloring.
pub fn first_coloring(h: &SimpleGraph, k: usize) -> Option<Coloring> {
    let mut found = None;
    for_each_coloring(h, k, |c| {
        found = Some(Coloring(c.to_vec()));
        false
    });
    found
}

/// Vertex sets of size at most `j` that induce connected subgraphs.
pub fn connected_sets(h: &SimpleGraph, j: usize) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = Vec::new();
    let mut level: Vec<VertexSet> = (0..h.n()).map(VertexSet::singleton).collect();
    let mut size = 1;
    while size <= j && !level.is_empty() {
        out.extend(&level);
        if size == j {
            break;
        }
        let mut next: Vec<VertexSet> = level
            .iter()
            .flat_map(|&s| h.boundary(s).iter().map(move |v| s.with(v)))
            .collect();
        next.sort();
        next.dedup();
        level = next;
        size += 1;
    }
    out
}

/// Colorings adjacent to `phi` in the `j`-localized coloring graph, generated
/// by recoloring connected vertex sets of size at most `j`.
pub fn localized_neighbors(h: &SimpleGraph, k: usize, j: usize, phi: &Coloring) -> Vec<Coloring> {
    let sets = connected_sets(h, j);
    let mut out = Vec::new();
    neighbors_via_sets(h, k, phi.colors(), &sets, |c| out.push(Coloring(c.to_vec())));
    out.sort();
    out.dedup();
    out
}

pub(crate) fn neighbors_via_sets<F: FnMut(&[u8])>(
    h: &SimpleGraph,
    k: usize,
    phi: &[u8],
    sets: &[VertexSet],
    mut emit: F,
) {
    let mut psi = phi.to_vec();
    for &t in sets {
        let verts: Vec<usize> = t.iter().collect();
        assign(h, k, phi, &verts, 0, &mut psi, &mut emit);
        for &v in &verts {
            psi[v] = phi[v];
        }
    }
}

fn assign<F: FnMut(&[u8])>(
    h: &SimpleGraph,
    k: usize,
    phi: &[u8],
    verts: &[usize],
    i: usize,
    psi: &mut Vec<u8>,
    emit: &mut F,
) {
    if i == verts.len() {
        if verts.iter().any(|&v| psi[v] != phi[v]) {
            emit(psi);
        }
        return;
    }
    let v = verts[i];
    for c in 0..k as u8 {
        // neighbors already fixed: outside the set, or earlier in it
        let ok = h.neighbors(v).iter().all(|w| {
            let fixed = !verts[i..].contains(&w);
            !fixed || psi[w] != c
        });
        if ok {
            psi[v] = c;
            assign(h, k, phi, verts, i + 1, psi, emit);
        }
    }
    psi[v] = phi[v];
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use proptest::prelude::*;

    /// Deletion–contraction chromatic polynomial.
    fn chromatic_polynomial(n: usize, edges: &[(usize, usize)], k: u64) -> u64 {
        let Some(&(u, v)) = edges.first() else {
            return k.pow(n as u32);
        };
        let rest = &edges[1..];
        // contract v into u and relabel the last vertex into v's slot
        let last = n - 1;
        let mut merged: Vec<(usize, usize)> = Vec::new();
        for &(a, b) in rest {
            let map = |x: usize| {
                let x = if x == v { u } else { x };
                if x == last { v } else { x }
            };
            let (a, b) = (map(a), map(b));
            if a != b {
                let e = (a.min(b), a.max(b));
                if !merged.contains(&e) {
                    merged.push(e);
                }
            }
        }
        chromatic_polynomial(n, rest, k) - chromatic_polynomial(n - 1, &merged, k)
    }

    #[test]
    fn enumeration_counts() {
        let budget = Budget::default();
        assert_eq!(enumerate_colorings(&path(3).unwrap(), 3, &budget).unwrap().len(), 12);
        assert_eq!(enumerate_colorings(&cycle(4).unwrap(), 3, &budget).unwrap().len(), 18);
        assert!(enumerate_colorings(&complete(3).unwrap(), 2, &budget).unwrap().is_empty());
        let tiny = Budget { max_colorings: 10, ..Budget::default() };
        assert_eq!(
            enumerate_colorings(&cycle(4).unwrap(), 3, &tiny),
            Err(Error::BudgetExceeded { reached: 11, limit: 10 })
        );
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all = enumerate_colorings(&cycle(5).unwrap(), 3, &Budget::default()).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0].to_string(), "12123");
    }

    #[test]
    fn diff_examples() {
        let a = Coloring::parse("1212").unwrap();
        let b = Coloring::parse("1312").unwrap();
        assert_eq!(a.diff(&a).unwrap(), VertexSet::EMPTY);
        assert_eq!(a.diff(&b).unwrap(), VertexSet::singleton(1));
        let c = Coloring::parse("2121").unwrap();
        assert_eq!(a.diff(&c).unwrap(), VertexSet::full(4));
        assert!(a.diff(&Coloring::parse("12").unwrap()).is_err());
    }

    #[test]
    fn adjacency_examples() {
        let c4 = cycle(4).unwrap();
        let p = |s| Coloring::parse(s).unwrap();
        assert!(adjacent(&c4, 1, &p("1212"), &p("1232")).unwrap());
        assert!(!adjacent(&c4, 3, &p("1212"), &p("2121")).unwrap());
        assert!(adjacent(&c4, 4, &p("1212"), &p("2121")).unwrap());
        assert!(!adjacent(&c4, 4, &p("1212"), &p("1212")).unwrap());
    }

    #[test]
    fn coloring_text() {
        let c = Coloring::parse("1,10,3").unwrap();
        assert_eq!(c.colors(), &[0, 9, 2]);
        assert_eq!(c.to_string(), "1,10,3");
        assert_eq!(Coloring::parse("1312").unwrap().to_string(), "1312");
        assert!(Coloring::parse("103").is_err());
        assert!(Coloring::parse("1,,2").is_err());
        assert_eq!(Coloring::parse("").unwrap().len(), 0);
    }

    #[test]
    fn codes_round_trip() {
        let c = Coloring::parse("1312").unwrap();
        let code = c.code(3);
        // colors 0, 2, 0, 1 in base 3, least significant first
        assert_eq!(code, 6 + 27);
        assert_eq!(Coloring::from_code(code, 3, 4), c);
    }

    #[test]
    fn connected_set_counts() {
        // a path on 4 vertices has 4 + 3 + 2 connected sets of size <= 3
        assert_eq!(connected_sets(&path(4).unwrap(), 3).len(), 9);
        assert_eq!(connected_sets(&complete(4).unwrap(), 4).len(), 15);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = SimpleGraph::new(n).unwrap();
                let mut it = bits.into_iter();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            g.add_edge(u, v).unwrap();
                        }
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn counts_match_chromatic_polynomial(g in arb_graph(7), k in 1usize..5) {
            let expected = chromatic_polynomial(g.n(), &g.edges(), k as u64);
            prop_assert_eq!(count_colorings(&g, k), expected);
        }

        #[test]
        fn enumerated_colorings_are_proper_and_distinct(g in arb_graph(6), k in 1usize..4) {
            let all = enumerate_colorings(&g, k, &Budget::default()).unwrap();
            prop_assert!(all.iter().all(|c| c.is_proper(&g)));
            prop_assert!(all.windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn generated_neighbors_match_pairwise_test(g in arb_graph(5), k in 2usize..4, j in 1usize..4) {
            let all = enumerate_colorings(&g, k, &Budget::default()).unwrap();
            for phi in all.iter().take(6) {
                let generated = localized_neighbors(&g, k, j, phi);
                let pairwise: Vec<Coloring> = all
                    .iter()
                    .filter(|psi| adjacent(&g, j, phi, psi).unwrap())
                    .cloned()
                    .collect();
                prop_assert_eq!(generated, pairwise);
            }
        }

        #[test]
        fn parse_never_panics(s in "\\PC{0,12}") {
            let _ = Coloring::parse(&s);
        }
    }
}
