//! Small-graph generation up to isomorphism and seeded random graphs.

use super::SimpleGraph;
use rand::Rng;
use std::collections::BTreeMap;

/// Largest order for which `canonical_key` packs the adjacency into a word.
pub const MAX_CANONICAL_ORDER: usize = 11;

/// Upper-triangle adjacency bits (column order, as in graph6) of the
/// lexicographically least relabeling that lists vertices by nondecreasing
/// degree. Two graphs get the same key iff they are isomorphic.
pub fn canonical_key(g: &SimpleGraph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_CANONICAL_ORDER, "canonical form limited to {MAX_CANONICAL_ORDER} vertices");
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut classes: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || g.degree(by_degree[i]) != g.degree(by_degree[start]) {
            classes.push((start, i));
            start = i;
        }
    }
    let mut order = by_degree;
    let mut best = u64::MAX;
    permute_classes(g, &mut order, &classes, 0, &mut best);
    best
}

fn permute_classes(
    g: &SimpleGraph,
    order: &mut Vec<usize>,
    classes: &[(usize, usize)],
    class: usize,
    best: &mut u64,
) {
    if class == classes.len() {
        *best = (*best).min(key_of(g, order));
        return;
    }
    let (lo, hi) = classes[class];
    heap_permutations(order, lo, hi - lo, &mut |o| {
        permute_classes(g, o, classes, class + 1, best)
    });
}

fn heap_permutations(
    order: &mut Vec<usize>,
    lo: usize,
    k: usize,
    visit: &mut dyn FnMut(&mut Vec<usize>),
) {
    if k <= 1 {
        visit(order);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(order, lo, k - 1, visit);
        if k.is_multiple_of(2) {
            order.swap(lo + i, lo + k - 1);
        } else {
            order.swap(lo, lo + k - 1);
        }
    }
    heap_permutations(order, lo, k - 1, visit);
}

/// `order[i]` is the original vertex placed at position `i`.
fn key_of(g: &SimpleGraph, order: &[usize]) -> u64 {
    let mut key = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            key = key << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    key
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// ordered by canonical key. Built by adding a vertex with every possible
/// neighborhood to each class on `n - 1` vertices and keeping one graph per key.
pub fn small_graphs(n: usize) -> Vec<SimpleGraph> {
    assert!(n <= 8, "exhaustive generation limited to 8 vertices");
    let mut level: BTreeMap<u64, SimpleGraph> = BTreeMap::new();
    let seed = SimpleGraph::new(n.min(1)).unwrap();
    level.insert(canonical_key(&seed), seed);
    for m in 2..=n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for nbrs in 0u64..1 << (m - 1) {
                let mut h = SimpleGraph::new(m).unwrap();
                for (u, v) in g.edges() {
                    h.add_edge(u, v).unwrap();
                }
                for u in 0..m - 1 {
                    if nbrs >> u & 1 == 1 {
                        h.add_edge(u, m - 1).unwrap();
                    }
                }
                next.entry(canonical_key(&h)).or_insert(h);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> SimpleGraph {
    let mut g = SimpleGraph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
