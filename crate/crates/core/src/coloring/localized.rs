use super::{diff_slices, neighbors_via_sets, connected_sets, Coloring, ColoringTable};
use crate::error::Result;
use crate::graph::{graph6, min_connected_cover_within, SimpleGraph, VertexSet};
use crate::solver::Budget;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

/// Node counts up to this size build edges by testing every pair; larger
/// spaces generate neighbors by recoloring connected vertex sets.
const PAIRWISE_LIMIT: usize = 3000;

/// The `j`-localized `k`-coloring graph of a host graph. Nodes are the proper
/// colorings in lexicographic order.
#[derive(Clone, Debug)]
pub struct LocalizedColoringGraph {
    host: SimpleGraph,
    k: usize,
    j: usize,
    nodes: ColoringTable,
    adj: Vec<Vec<u32>>,
}

impl LocalizedColoringGraph {
    pub fn build(host: &SimpleGraph, k: usize, j: usize, budget: &Budget) -> Result<Self> {
        let nodes = ColoringTable::build(host, k, budget)?;
        let adj = if nodes.len() <= PAIRWISE_LIMIT {
            pairwise_adjacency(host, j, &nodes)
        } else {
            generated_adjacency(host, k, j, &nodes)
        };
        Ok(LocalizedColoringGraph {
            host: host.clone(),
            k,
            j,
            nodes,
            adj,
        })
    }

    /// Same nodes with adjacency recomputed for another localization.
    pub fn with_localization(&self, j: usize) -> Self {
        let adj = if self.nodes.len() <= PAIRWISE_LIMIT {
            pairwise_adjacency(&self.host, j, &self.nodes)
        } else {
            generated_adjacency(&self.host, self.k, j, &self.nodes)
        };
        LocalizedColoringGraph {
            host: self.host.clone(),
            k: self.k,
            j,
            nodes: self.nodes.clone(),
            adj,
        }
    }

    pub fn host(&self) -> &SimpleGraph {
        &self.host
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adj[i]
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adj
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&(b as u32)).is_ok()
    }

    pub fn colors(&self, i: usize) -> &[u8] {
        self.nodes.get(i)
    }

    pub fn coloring(&self, i: usize) -> Coloring {
        self.nodes.coloring(i)
    }

    pub fn index_of(&self, c: &Coloring) -> Option<usize> {
        self.nodes.index_of(c.colors())
    }

    pub fn table(&self) -> &ColoringTable {
        &self.nodes
    }

    pub fn is_connected(&self) -> bool {
        self.node_count() <= 1 || self.bfs_parents(0).iter().all(Option::is_some)
    }

    /// Breadth-first tree from `root`: `parents[root] == Some(root)`, unreached nodes `None`.
    pub fn bfs_parents(&self, root: usize) -> Vec<Option<u32>> {
        bfs_parents(&self.adj, root)
    }

    /// Component index of every node, components numbered by least node.
    pub fn component_labels(&self) -> Vec<u32> {
        let mut label = vec![u32::MAX; self.node_count()];
        let mut next = 0;
        for s in 0..self.node_count() {
            if label[s] != u32::MAX {
                continue;
            }
            label[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if label[w as usize] == u32::MAX {
                        label[w as usize] = next;
                        queue.push_back(w as usize);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Shortest path between two nodes, inclusive.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let parents = bfs_parents(&self.adj, to);
        parents[from]?;
        let mut path = vec![from];
        let mut cur = from;
        while cur != to {
            cur = parents[cur].unwrap() as usize;
            path.push(cur);
        }
        Some(path)
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("graph G{}_{} {{\n", self.j, self.k);
        for i in 0..self.node_count() {
            writeln!(s, "  n{i} [label=\"{}\"];", self.coloring(i)).unwrap();
        }
        for (a, nbrs) in self.adj.iter().enumerate() {
            for &b in nbrs.iter().filter(|&&b| b as usize > a) {
                writeln!(s, "  n{a} -- n{b};").unwrap();
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Export {
            graph: String,
            k: usize,
            j: usize,
            nodes: Vec<String>,
            edges: Vec<[u32; 2]>,
        }
        let edges = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(a, nbrs)| {
                nbrs.iter()
                    .filter(move |&&b| b as usize > a)
                    .map(move |&b| [a as u32, b])
            })
            .collect();
        serde_json::to_value(Export {
            graph: graph6::to_graph6(&self.host),
            k: self.k,
            j: self.j,
            nodes: (0..self.node_count()).map(|i| self.coloring(i).to_string()).collect(),
            edges,
        })
        .expect("serializable")
    }
}

pub(crate) fn bfs_parents(adj: &[Vec<u32>], root: usize) -> Vec<Option<u32>> {
    let mut parent = vec![None; adj.len()];
    if adj.is_empty() {
        return parent;
    }
    parent[root] = Some(root as u32);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if parent[w as usize].is_none() {
                parent[w as usize] = Some(u as u32);
                queue.push_back(w as usize);
            }
        }
    }
    parent
}

fn pairwise_adjacency(host: &SimpleGraph, j: usize, nodes: &ColoringTable) -> Vec<Vec<u32>> {
    let n = nodes.len();
    let upper: Vec<Vec<u32>> = (0..n)
        .into_par_iter()
        .map_init(HashMap::<VertexSet, bool>::new, |memo, a| {
            let ca = nodes.get(a);
            (a + 1..n)
                .filter(|&b| {
                    let d = diff_slices(ca, nodes.get(b));
                    *memo.entry(d).or_insert_with(|| {
                        min_connected_cover_within(host, d, j)
                            .expect("terminals are nonempty host vertices")
                            .is_some()
                    })
                })
                .map(|b| b as u32)
                .collect()
        })
        .collect();
    let mut adj = vec![Vec::new(); n];
    for (a, row) in upper.iter().enumerate() {
        for &b in row {
            adj[a].push(b);
            adj[b as usize].push(a as u32);
        }
    }
    for row in &mut adj {
        row.sort_unstable();
    }
    adj
}

fn generated_adjacency(host: &SimpleGraph, k: usize, j: usize, nodes: &ColoringTable) -> Vec<Vec<u32>> {
    let sets = connected_sets(host, j);
    (0..nodes.len())
        .into_par_iter()
        .map(|a| {
            let mut row = Vec::new();
            neighbors_via_sets(host, k, nodes.get(a), &sets, |c| {
                row.push(nodes.index_of(c).expect("proper coloring is enumerated") as u32)
            });
            row.sort_unstable();
            row.dedup();
            row
        })
        .collect()
}

/// Checks that the localized graph of `host` is the Cartesian product of the
/// localized graphs of its components under the restriction bijection.
pub fn product_decomposition_check(host: &SimpleGraph, k: usize, j: usize, budget: &Budget) -> Result<bool> {
    let whole = LocalizedColoringGraph::build(host, k, j, budget)?;
    let comps = host.components();
    let mut factors = Vec::new();
    for &c in &comps {
        let (sub, map) = host.induced_subgraph(c);
        factors.push((LocalizedColoringGraph::build(&sub, k, j, budget)?, map));
    }
    let node_product: usize = factors.iter().map(|(f, _)| f.node_count()).product();
    if node_product != whole.node_count() {
        return Ok(false);
    }
    let restrict = |colors: &[u8], map: &[usize]| map.iter().map(|&v| colors[v]).collect::<Vec<u8>>();
    for a in 0..whole.node_count() {
        for &b in whole.neighbors(a) {
            let (ca, cb) = (whole.colors(a), whole.colors(b as usize));
            let moved: Vec<usize> = factors
                .iter()
                .enumerate()
                .filter(|(_, (_, map))| restrict(ca, map) != restrict(cb, map))
                .map(|(i, _)| i)
                .collect();
            let [i] = moved[..] else { return Ok(false) };
            let (f, map) = &factors[i];
            let (x, y) = (f.table().index_of(&restrict(ca, map)), f.table().index_of(&restrict(cb, map)));
            match (x, y) {
                (Some(x), Some(y)) if f.has_edge(x, y) => {}
                _ => return Ok(false),
            }
        }
    }
    let product_edges: usize = factors
        .iter()
        .map(|(f, _)| f.edge_count() * node_product / f.node_count().max(1))
        .sum();
    Ok(product_edges == whole.edge_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn small_examples() {
        let g = LocalizedColoringGraph::build(&path(3).unwrap(), 3, 1, &b()).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (12, 15));
        let g = LocalizedColoringGraph::build(&complete(3).unwrap(), 3, 2, &b()).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (6, 9));
        assert!((0..6).all(|i| g.neighbors(i).len() == 3));
        let g = LocalizedColoringGraph::build(&complete(3).unwrap(), 3, 1, &b()).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (6, 0));
    }

    #[test]
    fn full_localization_is_complete() {
        let h = cycle(5).unwrap();
        let g = LocalizedColoringGraph::build(&h, 3, 5, &b()).unwrap();
        let n = g.node_count();
        assert_eq!(g.edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn generated_and_pairwise_agree() {
        let h = cycle(6).unwrap();
        let nodes = ColoringTable::build(&h, 3, &b()).unwrap();
        for j in 1..=4 {
            assert_eq!(pairwise_adjacency(&h, j, &nodes), generated_adjacency(&h, 3, j, &nodes));
        }
    }

    #[test]
    fn spanning_chain() {
        let h = cycle(5).unwrap();
        let g1 = LocalizedColoringGraph::build(&h, 3, 1, &b()).unwrap();
        for j in 2..=5 {
            let g2 = g1.with_localization(j);
            for a in 0..g1.node_count() {
                assert!(g1.neighbors(a).iter().all(|&x| g2.has_edge(a, x as usize)));
            }
        }
    }

    #[test]
    fn product_examples() {
        let two = SimpleGraph::new(2).unwrap();
        assert!(product_decomposition_check(&two, 2, 1, &b()).unwrap());
        let g = LocalizedColoringGraph::build(&two, 2, 1, &b()).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (4, 4));
        let k1_c4 = SimpleGraph::new(1).unwrap().disjoint_union(&cycle(4).unwrap()).unwrap();
        assert!(product_decomposition_check(&k1_c4, 3, 1, &b()).unwrap());
        assert!(product_decomposition_check(&cycle(4).unwrap(), 3, 2, &b()).unwrap());
    }

    #[test]
    fn exports() {
        let g = LocalizedColoringGraph::build(&path(2).unwrap(), 2, 2, &b()).unwrap();
        let dot = g.to_dot();
        assert!(dot.contains("label=\"12\"") && dot.contains("n0 -- n1;"));
        let json = g.to_json();
        assert_eq!(json["nodes"], serde_json::json!(["12", "21"]));
        assert_eq!(json["edges"], serde_json::json!([[0, 1]]));
    }
}
