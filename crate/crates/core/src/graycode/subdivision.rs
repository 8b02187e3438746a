//! Gray codes for graphs obtained by subdividing every edge of a multigraph.
//!
//! The subdivided graph is grown from a base in which some `ℓ` consecutive
//! internal vertices of selected edges are missing; each ladder step puts one
//! such path of `ℓ` degree-two vertices back, between vertices `x` and `y` of
//! the current graph. Each step replaces every coloring of the current code
//! by the block of its extensions to the new path. Within a block only the
//! path changes, so its internal adjacency is a small fixed graph that
//! depends only on whether `x` and `y` share a color. Which pairs of
//! extensions are joined by a Hamiltonian path of that graph is read from an
//! endpoint table.

use super::degeneracy::degeneracy_code;
use super::extend::{block_adjacency, path_endpoints, splice_blocks, Block, Splice};
use super::product::combine_pieces;
use super::search::searched_code;
use super::CyclicGrayCode;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, SimpleGraph, SubdivisionSpec, VertexSet};
use crate::solver::Budget;

/// One attachment: the path `path[0], …, path[ℓ-1]` with `x ~ path[0]` and
/// `path[ℓ-1] ~ y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderStep {
    pub x: usize,
    pub y: usize,
    pub path: Vec<usize>,
}

/// A sequence of induced subgraphs of the subdivided graph, each obtained
/// from the previous one by attaching a path of `ell` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionLadder {
    pub host: SimpleGraph,
    pub ell: usize,
    pub base: VertexSet,
    pub steps: Vec<LadderStep>,
}

impl SubdivisionLadder {
    /// Number of stages, counting the base and the full graph.
    pub fn len(&self) -> usize {
        self.steps.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertices of stage `i`; stage 0 is the base.
    pub fn stage(&self, i: usize) -> VertexSet {
        self.steps[..i]
            .iter()
            .fold(self.base, |acc, s| acc.union(s.path.iter().copied().collect()))
    }

    /// Whether every step joins a vertex to itself or two vertices more than
    /// `ell` apart in the stage it attaches to.
    pub fn separations_hold(&self) -> bool {
        self.steps.iter().enumerate().all(|(i, s)| {
            if s.x == s.y {
                return true;
            }
            let (g, map) = self.host.induced_subgraph(self.stage(i));
            let pos = |v: usize| map.iter().position(|&w| w == v).unwrap();
            g.distance(pos(s.x), pos(s.y)).is_none_or(|d| d > self.ell)
        })
    }
}

/// Keeps the edges of a spanning forest of `m` whole and, from every other
/// edge, removes the first `ell` internal vertices (counted from its smaller
/// endpoint); surplus internal vertices stay in the base as pendant paths.
pub fn subdivision_ladder(m: &MultiGraph, spec: &SubdivisionSpec, ell: usize) -> Result<SubdivisionLadder> {
    build_ladder(m, spec, ell, false)
}

/// With `close_loops`, a component of `m` with no ordinary edge keeps its
/// first loop whole, so its base is a cycle rather than a single vertex.
fn build_ladder(m: &MultiGraph, spec: &SubdivisionSpec, ell: usize, close_loops: bool) -> Result<SubdivisionLadder> {
    if ell == 0 {
        return Err(Error::Argument("attachments need at least one vertex".into()));
    }
    if let Some((i, &c)) = spec.counts.iter().enumerate().find(|(_, &c)| c < ell) {
        return Err(Error::Argument(format!("edge {i} is subdivided {c} times, fewer than {ell}")));
    }
    let host = m.subdivide(spec)?;
    let paths = m.subdivision_paths(spec)?;
    let mut parent: Vec<usize> = (0..m.n()).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while parent[r] != r {
            r = parent[r];
        }
        parent[v] = r;
        r
    }
    let mut base = host.vertices();
    let mut steps = Vec::new();
    let has_ordinary: Vec<bool> = (0..m.n()).map(|v| m.edges().iter().any(|&(a, b)| a != b && (a == v || b == v))).collect();
    let mut closed = vec![false; m.n()];
    for (&(u, v), inner) in m.edges().iter().zip(&paths) {
        if u != v {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                continue;
            }
        } else if close_loops && !has_ordinary[u] && !closed[u] {
            closed[u] = true;
            continue;
        }
        let removed = inner[..ell].to_vec();
        for &w in &removed {
            base = base.without(w);
        }
        let y = inner.get(ell).copied().unwrap_or(v);
        steps.push(LadderStep { x: u, y, path: removed });
    }
    Ok(SubdivisionLadder { host, ell, base, steps })
}

/// A code at localization 1 with four colors for a loopless multigraph with
/// every edge subdivided at least twice.
pub fn subdivided_h4_code(m: &MultiGraph, spec: &SubdivisionSpec, budget: &Budget) -> Result<CyclicGrayCode> {
    if m.has_loops() {
        return Err(Error::Precondition("the four-color construction needs a loopless multigraph".into()));
    }
    let ladder = subdivision_ladder(m, spec, 2)?;
    let (forest, _) = ladder.host.induced_subgraph(ladder.base);
    let base = degeneracy_code(&forest, 4, budget)?;
    climb(&ladder, base, 4, 1, &H4_TABLES, budget, false)
}

/// A code at localization 2 with three colors for a multigraph with every
/// edge subdivided at least three times.
pub fn subdivided_h3_code(m: &MultiGraph, spec: &SubdivisionSpec, budget: &Budget) -> Result<CyclicGrayCode> {
    let ladder = build_ladder(m, spec, 3, true)?;
    let mut pieces = Vec::new();
    for comp in ladder.host.induced_subgraph(ladder.base).0.components() {
        let (sub, map) = ladder.host.induced_subgraph(ladder.base);
        let host_set: VertexSet = comp.iter().map(|v| map[v]).collect();
        let (piece, _) = sub.induced_subgraph(comp);
        pieces.push((host_set, unicyclic_code(&piece, 3, 2, budget)?));
    }
    // pieces are over subsets of the base; renumber into the base's indices
    let (base_graph, base_map) = ladder.host.induced_subgraph(ladder.base);
    let local: Vec<(VertexSet, CyclicGrayCode)> = pieces
        .into_iter()
        .map(|(set, code)| {
            let s: VertexSet = base_map
                .iter()
                .enumerate()
                .filter(|(_, v)| set.contains(**v))
                .map(|(i, _)| i)
                .collect();
            (s, code)
        })
        .collect();
    let mut base = combine_pieces(&base_graph, local)?;
    base.j = 2;
    climb(&ladder, base, 3, 2, &H3_TABLES, budget, true)
}

/// A code at localization `j` for a connected graph with at most one cycle:
/// the cycle (or a leaf, for a tree) first, then the remaining vertices one
/// leaf at a time. Leaf growth can paint itself into a corner; the whole
/// component is then searched instead.
fn unicyclic_code(g: &SimpleGraph, k: usize, j: usize, budget: &Budget) -> Result<CyclicGrayCode> {
    // the 2-core is the cycle, if there is one
    let mut core = g.vertices();
    while core.len() > 1 {
        match core.iter().find(|&v| g.neighbors(v).intersection(core).len() <= 1) {
            Some(v) => core = core.without(v),
            None => break,
        }
    }
    let grown = if core.len() == 1 {
        let root = g.vertices().iter().min_by_key(|&v| g.neighbors(v).len()).unwrap();
        let start = CyclicGrayCode {
            host: g.induced_subgraph(VertexSet::singleton(root)).0,
            k,
            j,
            sequence: (0..k as u8).map(|c| Coloring::new(vec![c])).collect(),
        };
        grow_leaves(g, VertexSet::singleton(root), start, k, j)
    } else {
        searched_code(&g.induced_subgraph(core).0, k, j, budget).and_then(|c| grow_leaves(g, core, c, k, j))
    };
    match grown {
        Err(Error::Precondition(_)) => searched_code(g, k, j, budget),
        other => other,
    }
}

/// Adds the vertices outside `start` in depth-first order, each as a leaf of
/// the vertices already placed.
fn grow_leaves(g: &SimpleGraph, start: VertexSet, mut code: CyclicGrayCode, k: usize, j: usize) -> Result<CyclicGrayCode> {
    let mut placed = start;
    let mut order: Vec<usize> = start.iter().collect();
    while placed != g.vertices() {
        let v = order
            .iter()
            .rev()
            .find_map(|&u| g.neighbors(u).difference(placed).first())
            .ok_or_else(|| Error::Argument("leaf growth needs a connected graph".into()))?;
        order.push(v);
        let next = placed.with(v);
        let (sub, map) = g.induced_subgraph(next);
        let local = map.iter().position(|&w| w == v).unwrap();
        let outer = sub.vertices().without(local);
        let splice = Splice::new(&sub, outer, VertexSet::singleton(local), k);
        let sequence = splice_blocks(&splice, &code, j, &mut |block: &Block| {
            path_endpoints(&block_adjacency(&splice, block, j)?)
        })?;
        code = CyclicGrayCode { host: sub.clone(), k, j, sequence };
        placed = next;
    }
    Ok(code)
}

/// Runs the ladder from a code of its base.
fn climb(
    ladder: &SubdivisionLadder,
    mut code: CyclicGrayCode,
    k: usize,
    j: usize,
    tables: &[EndpointTable; 2],
    budget: &Budget,
    need_far_vertex: bool,
) -> Result<CyclicGrayCode> {
    let deadline = budget.deadline();
    let total = crate::coloring::count_colorings(&ladder.host, k);
    if total > budget.max_colorings as u64 {
        return Err(Error::BudgetExceeded { reached: total as usize, limit: budget.max_colorings });
    }
    for (i, step) in ladder.steps.iter().enumerate() {
        if deadline.expired() {
            return Err(Error::Undecided("time budget exhausted while climbing the ladder".into()));
        }
        let before = ladder.stage(i);
        if need_far_vertex {
            let near = ladder
                .host
                .neighbors(step.x)
                .union(ladder.host.neighbors(step.y))
                .with(step.x)
                .with(step.y);
            if before.difference(near).is_empty() {
                return Err(Error::Precondition(format!(
                    "attachment between {} and {} leaves no vertex outside their closed neighborhoods",
                    step.x, step.y
                )));
            }
        }
        let after = ladder.stage(i + 1);
        let (sub, map) = ladder.host.induced_subgraph(after);
        let local = |v: usize| map.iter().position(|&w| w == v).unwrap();
        let outer: VertexSet = before.iter().map(local).collect();
        let path: VertexSet = step.path.iter().map(|&v| local(v)).collect();
        let (x, y) = (local(step.x), local(step.y));
        let splice = Splice::new(&sub, outer, path, k);
        let order: Vec<usize> = step.path.iter().map(|&v| local(v)).collect();
        let positions: Vec<usize> = order
            .iter()
            .map(|v| splice.att_map.iter().position(|w| w == v).unwrap())
            .collect();
        let sequence = splice_blocks(&splice, &code, j, &mut |block: &Block| {
            let (cx, cy) = (block.full[x], block.full[y]);
            let table = &tables[usize::from(cx != cy)];
            let names: Vec<String> = block
                .exts
                .iter()
                .map(|e| {
                    let mut word = vec![cx];
                    word.extend(positions.iter().map(|&p| e[p]));
                    word.push(cy);
                    normalize(&word, k)
                })
                .collect();
            table.relation(&names)
        })?;
        code = CyclicGrayCode { host: sub, k, j, sequence };
    }
    Ok(code)
}

/// Renames colors so that `x` gets 1, `y` gets 2 if different, and the other
/// colors follow in increasing order.
fn normalize(word: &[u8], k: usize) -> String {
    let (cx, cy) = (word[0], *word.last().unwrap());
    let mut rename = vec![0u8; k];
    rename[cx as usize] = 1;
    let mut next = 2;
    if cy != cx {
        rename[cy as usize] = 2;
        next = 3;
    }
    for c in 0..k {
        if c as u8 != cx && c as u8 != cy {
            rename[c] = next;
            next += 1;
        }
    }
    word.iter().map(|&c| char::from(b'0' + rename[c as usize])).collect()
}

/// The block graph for one color pattern of `x` and `y`: its extensions
/// (written `x`, path, `y` after renaming), its edges, and which pairs are
/// joined by a Hamiltonian path.
pub struct EndpointTable {
    pub nodes: &'static [&'static str],
    pub edges: &'static [(&'static str, &'static str)],
    pub paths: PathPairs,
}

pub enum PathPairs {
    /// The block graph is a cycle in the listed node order; paths join
    /// exactly the cyclically consecutive nodes.
    CycleNeighbors,
    /// Every pair except these.
    AllExcept(&'static [(&'static str, &'static str)]),
}

impl EndpointTable {
    pub fn joined(&self, a: &str, b: &str) -> bool {
        if a == b {
            return false;
        }
        match &self.paths {
            PathPairs::CycleNeighbors => {
                let n = self.nodes.len();
                let i = self.nodes.iter().position(|s| *s == a);
                let j = self.nodes.iter().position(|s| *s == b);
                matches!((i, j), (Some(i), Some(j)) if (i + 1) % n == j || (j + 1) % n == i)
            }
            PathPairs::AllExcept(pairs) => !pairs.iter().any(|&(p, q)| (p == a && q == b) || (p == b && q == a)),
        }
    }

    fn relation(&self, names: &[String]) -> Result<Vec<Vec<bool>>> {
        let mut sorted: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        sorted.sort_unstable();
        let mut expected: Vec<&str> = self.nodes.to_vec();
        expected.sort_unstable();
        if sorted != expected {
            return Err(Error::Internal(format!("extensions {sorted:?} do not match the endpoint table")));
        }
        Ok(names
            .iter()
            .map(|a| names.iter().map(|b| self.joined(a, b)).collect())
            .collect())
    }
}

/// Four colors, attachments of two vertices, localization 1: `x` and `y`
/// alike, then different.
pub const H4_TABLES: [EndpointTable; 2] = [
    EndpointTable {
        nodes: &["1231", "1241", "1341", "1321", "1421", "1431"],
        edges: &[
            ("1231", "1241"),
            ("1241", "1341"),
            ("1341", "1321"),
            ("1321", "1421"),
            ("1421", "1431"),
            ("1431", "1231"),
        ],
        paths: PathPairs::CycleNeighbors,
    },
    EndpointTable {
        nodes: &["1212", "1312", "1342", "1242", "1232", "1432", "1412"],
        edges: &[
            ("1412", "1212"),
            ("1212", "1312"),
            ("1312", "1342"),
            ("1342", "1242"),
            ("1242", "1232"),
            ("1232", "1432"),
            ("1432", "1412"),
            ("1412", "1312"),
            ("1242", "1212"),
            ("1212", "1232"),
        ],
        paths: PathPairs::AllExcept(&[("1232", "1412"), ("1242", "1312")]),
    },
];

/// Three colors, attachments of three vertices, localization 2: `x` and `y`
/// alike, then different.
pub const H3_TABLES: [EndpointTable; 2] = [
    EndpointTable {
        nodes: &["12121", "12321", "13131", "13121", "13231", "12131"],
        edges: &[
            ("12121", "13121"),
            ("13121", "12321"),
            ("12321", "12131"),
            ("12131", "12121"),
            ("12121", "12321"),
            ("13131", "13121"),
            ("13121", "13231"),
            ("13231", "12131"),
            ("12131", "13131"),
            ("13131", "13231"),
        ],
        paths: PathPairs::AllExcept(&[("12131", "13121")]),
    },
    EndpointTable {
        nodes: &["12312", "13212", "13232", "12132", "13132"],
        edges: &[
            ("12312", "13212"),
            ("13212", "13232"),
            ("13232", "12132"),
            ("12132", "13132"),
            ("13132", "13212"),
            ("12312", "12132"),
            ("13232", "13132"),
        ],
        paths: PathPairs::AllExcept(&[("12132", "13212")]),
    },
];
