//! Splicing a Gray code of `H'` into one of `H = H' + H''`.
//!
//! Every base coloring `φ` of `H'` is replaced by the block of its extensions
//! to `H`, listed consecutively. The work is in choosing how each block starts
//! and ends so that the last extension of one block is adjacent to the first
//! extension of the next.

use super::product::product_code;
use super::{scatter, CyclicGrayCode};
use crate::choose::{
    for_each_list_coloring, is_f_choosable, list_colorings, tight_extension_holds, AttachmentContext,
    ListAssignment,
};
use crate::coloring::{enumerate_colorings, Coloring};
use crate::error::{Error, Result};
use crate::graph::{min_connected_cover_within, SimpleGraph, VertexSet};
use crate::solver::Budget;
use std::collections::HashMap;

/// Which extension argument to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtendMode {
    /// Keeps the localization: needs, for every small connected `F ⊆ H'`,
    /// a vertex `u` with `H''` choosable for the `F` size function lowered at
    /// `u`. Output localization is `ctx.j`.
    Tight,
    /// Needs `H''` choosable for `k - d'(v)`; output localization is the
    /// base localization plus `|H''|`.
    Loose,
}

/// Shared bookkeeping for one attachment.
pub(crate) struct Splice<'a> {
    pub host: &'a SimpleGraph,
    pub k: usize,
    pub outer_map: Vec<usize>,
    pub att_map: Vec<usize>,
    pub att_graph: SimpleGraph,
    /// For each attachment vertex, its neighbors in `H'` (host labels).
    outer_neighbors: Vec<Vec<usize>>,
}

impl<'a> Splice<'a> {
    pub fn new(host: &'a SimpleGraph, outer: VertexSet, attachment: VertexSet, k: usize) -> Self {
        let outer_map: Vec<usize> = outer.iter().collect();
        let att_map: Vec<usize> = attachment.iter().collect();
        let att_graph = host.induced_subgraph(attachment).0;
        let outer_neighbors = att_map
            .iter()
            .map(|&v| host.neighbors(v).intersection(outer).iter().collect())
            .collect();
        Splice { host, k, outer_map, att_map, att_graph, outer_neighbors }
    }

    /// The base coloring of `H'` placed in a full-length vector.
    pub fn spread(&self, phi: &Coloring) -> Vec<u8> {
        let mut full = vec![0u8; self.host.n()];
        scatter(&mut full, &self.outer_map, phi.colors());
        full
    }

    /// Lists for `H''` avoiding the outer colors of every given coloring.
    pub fn lists(&self, fulls: &[&[u8]]) -> ListAssignment {
        ListAssignment::new(
            self.outer_neighbors
                .iter()
                .map(|nb| {
                    (0..self.k as u8)
                        .filter(|&c| fulls.iter().all(|f| nb.iter().all(|&w| f[w] != c)))
                        .collect()
                })
                .collect(),
        )
    }

    /// All colorings of `H''` extending the given outer coloring, sorted.
    pub fn extensions(&self, full: &[u8]) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        for_each_list_coloring(&self.att_graph, &self.lists(&[full]), |c| {
            out.push(c.to_vec());
            true
        });
        out.sort();
        out
    }

    pub fn join(&self, full: &[u8], sigma: &[u8]) -> Coloring {
        let mut colors = full.to_vec();
        scatter(&mut colors, &self.att_map, sigma);
        Coloring::new(colors)
    }
}

pub fn extend_cycle(ctx: &AttachmentContext, base: &CyclicGrayCode, mode: ExtendMode) -> Result<CyclicGrayCode> {
    if base.k != ctx.k {
        return Err(Error::Argument(format!("base code uses {} colors, context {}", base.k, ctx.k)));
    }
    if base.host != ctx.outer_graph() {
        return Err(Error::Argument("base code is not over the outer subgraph".into()));
    }
    if base.is_empty() {
        return Err(Error::Precondition("the outer subgraph has no proper coloring".into()));
    }
    let target_j = match mode {
        ExtendMode::Tight => {
            if base.j > ctx.j {
                return Err(Error::Argument(format!(
                    "base localization {} exceeds the target {}",
                    base.j, ctx.j
                )));
            }
            ctx.j
        }
        ExtendMode::Loose => base.j + ctx.attachment.len(),
    };
    if ctx.is_separate() {
        return separate_product(ctx, base, target_j);
    }
    let splice = Splice::new(&ctx.host, ctx.outer, ctx.attachment, ctx.k);
    let sequence = match mode {
        ExtendMode::Tight => {
            if let Err(f) = tight_extension_holds(ctx)? {
                return Err(Error::Precondition(format!(
                    "for the recolored subgraph on {f:?} no attachment vertex leaves the attachment choosable"
                )));
            }
            tight(&splice, base)?
        }
        ExtendMode::Loose => {
            let deg = crate::choose::degree_functions(ctx, None)?;
            let sizes: Vec<i64> = deg.outer.iter().map(|&d| ctx.k as i64 - d as i64).collect();
            if !is_f_choosable(&splice.att_graph, &sizes)? {
                return Err(Error::Precondition(format!(
                    "attachment is not choosable for list sizes {sizes:?}"
                )));
            }
            loose(ctx, &splice, base)?
        }
    };
    Ok(CyclicGrayCode {
        host: ctx.host.clone(),
        k: ctx.k,
        j: target_j,
        sequence,
    })
}

/// `H''` is its own component: the coloring graph is a product.
fn separate_product(ctx: &AttachmentContext, base: &CyclicGrayCode, j: usize) -> Result<CyclicGrayCode> {
    let att_graph = ctx.attachment_graph();
    let colorings = enumerate_colorings(&att_graph, ctx.k, &Budget::default())?;
    if colorings.is_empty() {
        return Err(Error::Precondition("the attachment has no proper coloring".into()));
    }
    // a connected attachment's colorings are pairwise adjacent at its own size
    let att = CyclicGrayCode {
        host: att_graph,
        k: ctx.k,
        j: ctx.attachment.len(),
        sequence: colorings,
    };
    let mut code = product_code(&ctx.host, ctx.outer, base, ctx.attachment, &att)?;
    code.j = j.max(code.j);
    Ok(code)
}

/// Each block starts and ends with extensions that are also valid for the
/// neighboring base coloring; picking, for every consecutive pair, one of two
/// distinct shared extensions so that no block starts and ends alike.
fn tight(splice: &Splice, base: &CyclicGrayCode) -> Result<Vec<Coloring>> {
    let b = base.len();
    let fulls: Vec<Vec<u8>> = base.sequence.iter().map(|c| splice.spread(c)).collect();
    if b == 1 {
        return Ok(splice.extensions(&fulls[0]).iter().map(|s| splice.join(&fulls[0], s)).collect());
    }
    // options[i]: two distinct extensions shared by base colorings i-1 and i
    let mut options: Vec<[Vec<u8>; 2]> = Vec::with_capacity(b);
    for i in 0..b {
        let prev = &fulls[(i + b - 1) % b];
        let found = list_colorings(&splice.att_graph, &splice.lists(&[prev, &fulls[i]]), 2);
        if found.len() < 2 {
            return Err(Error::Precondition(format!(
                "base colorings {} and {} share fewer than two extensions",
                base.sequence[(i + b - 1) % b],
                base.sequence[i]
            )));
        }
        options.push([found[0].colors().to_vec(), found[1].colors().to_vec()]);
    }
    let choice = alternate(&options).ok_or_else(|| {
        Error::Internal("no alternating choice of shared extensions around the cycle".into())
    })?;
    let mut out = Vec::new();
    for i in 0..b {
        let first = &options[i][choice[i]];
        let next = (i + 1) % b;
        let last = &options[next][choice[next]];
        out.push(splice.join(&fulls[i], first));
        for s in splice.extensions(&fulls[i]) {
            if &s != first && &s != last {
                out.push(splice.join(&fulls[i], &s));
            }
        }
        out.push(splice.join(&fulls[i], last));
    }
    Ok(out)
}

/// Picks one of two options per position so that cyclically consecutive
/// picks differ.
fn alternate(options: &[[Vec<u8>; 2]]) -> Option<Vec<usize>> {
    let b = options.len();
    for start in 0..2 {
        // reach[i][c]: predecessor choice that makes choice c at i feasible
        let mut back: Vec<[Option<usize>; 2]> = vec![[None, None]; b];
        back[0][start] = Some(start);
        for i in 1..b {
            for c in 0..2 {
                back[i][c] = (0..2).find(|&p| back[i - 1][p].is_some() && options[i - 1][p] != options[i][c]);
            }
        }
        if let Some(last) = (0..2).find(|&c| back[b - 1][c].is_some() && options[b - 1][c] != options[0][start]) {
            let mut choice = vec![0; b];
            choice[b - 1] = last;
            for i in (1..b).rev() {
                choice[i - 1] = back[i][choice[i]].unwrap();
            }
            return Some(choice);
        }
    }
    None
}

/// The looser splice: rotate so the seam recolors a neighbor of `H''`, then
/// keep the attachment's coloring across every step that stays away from it.
fn loose(ctx: &AttachmentContext, splice: &Splice, base: &CyclicGrayCode) -> Result<Vec<Coloring>> {
    let b = base.len();
    let fulls: Vec<Vec<u8>> = base.sequence.iter().map(|c| splice.spread(c)).collect();
    if b == 1 {
        return Ok(splice.extensions(&fulls[0]).iter().map(|s| splice.join(&fulls[0], s)).collect());
    }
    let near = ctx.host.boundary(ctx.attachment).intersection(ctx.outer);
    let changes = |i: usize| -> VertexSet {
        crate::coloring::diff_slices(&fulls[(i + b - 1) % b], &fulls[i])
    };
    let start = (0..b)
        .find(|&i| !changes(i).intersection(near).is_empty())
        .ok_or_else(|| {
            Error::Precondition(
                "no step of the base cycle recolors a neighbor of the attachment, so no seam exists".into(),
            )
        })?;
    let outer_graph = ctx.outer_graph();
    let mut index_in_outer = vec![usize::MAX; ctx.host.n()];
    for (i, &v) in splice.outer_map.iter().enumerate() {
        index_in_outer[v] = i;
    }
    let mut out = Vec::new();
    let mut last: Vec<u8> = Vec::new();
    for t in 0..b {
        let i = (start + t) % b;
        let mut exts = splice.extensions(&fulls[i]);
        if t > 0 {
            let local: VertexSet = changes(i).iter().map(|v| index_in_outer[v]).collect();
            let cover = min_connected_cover_within(&outer_graph, local, base.j)?
                .ok_or_else(|| Error::Argument("base code has a non-adjacent step".into()))?;
            let cover_host: VertexSet = cover.iter().map(|v| splice.outer_map[v]).collect();
            if cover_host.intersection(near).is_empty() {
                let pos = exts
                    .iter()
                    .position(|s| *s == last)
                    .ok_or_else(|| Error::Internal("kept attachment coloring is not an extension".into()))?;
                let keep = exts.remove(pos);
                exts.insert(0, keep);
            }
        }
        for s in &exts {
            out.push(splice.join(&fulls[i], s));
        }
        last = exts.last().unwrap().clone();
    }
    Ok(out)
}

/// One block for the general splice: a base coloring and its extensions.
pub(crate) struct Block<'b> {
    pub full: &'b [u8],
    pub exts: Vec<Vec<u8>>,
}

/// Splices blocks whose internal adjacency need not be complete. For each
/// block, `endpoints` reports which ordered pairs of its extensions are
/// joined by a Hamiltonian path of the block. A cyclic dynamic program picks
/// every block's first and last extension so that consecutive blocks meet at
/// adjacent colorings, and each block path is then realized by search.
pub(crate) fn splice_blocks(
    splice: &Splice,
    base: &CyclicGrayCode,
    j: usize,
    endpoints: &mut dyn FnMut(&Block) -> Result<Vec<Vec<bool>>>,
) -> Result<Vec<Coloring>> {
    let b = base.len();
    let fulls: Vec<Vec<u8>> = base.sequence.iter().map(|c| splice.spread(c)).collect();
    let blocks: Vec<Block> = fulls.iter().map(|f| Block { full: f, exts: splice.extensions(f) }).collect();
    if blocks.iter().any(|bl| bl.exts.is_empty()) {
        return Err(Error::Precondition("some base coloring does not extend".into()));
    }
    if b == 1 {
        return Err(Error::Unsupported("splicing into a single base coloring".into()));
    }
    let mut cache: HashMap<Vec<Vec<u8>>, std::rc::Rc<Vec<Vec<bool>>>> = HashMap::new();
    let mut relations = Vec::with_capacity(b);
    for bl in &blocks {
        let rel = match cache.get(&bl.exts) {
            Some(r) => r.clone(),
            None => {
                let r = std::rc::Rc::new(endpoints(bl)?);
                cache.insert(bl.exts.clone(), r.clone());
                r
            }
        };
        relations.push(rel);
    }
    let traversable = |i: usize, from: usize, to: usize| -> bool {
        if blocks[i].exts.len() == 1 {
            from == to
        } else {
            from != to && relations[i][from][to]
        }
    };
    // seam[i][e][g]: last extension e of block i meets first extension g of block i+1
    let mut seams: Vec<Vec<Vec<bool>>> = Vec::with_capacity(b);
    for i in 0..b {
        let next = (i + 1) % b;
        let outer_diff = crate::coloring::diff_slices(&fulls[i], &fulls[next]);
        let mut m = vec![vec![false; blocks[next].exts.len()]; blocks[i].exts.len()];
        for (e, se) in blocks[i].exts.iter().enumerate() {
            for (g, sg) in blocks[next].exts.iter().enumerate() {
                let inner: VertexSet = crate::coloring::diff_slices(se, sg)
                    .iter()
                    .map(|v| splice.att_map[v])
                    .collect();
                let d = outer_diff.union(inner);
                m[e][g] = !d.is_empty() && min_connected_cover_within(splice.host, d, j)?.is_some();
            }
        }
        seams.push(m);
    }
    let mut plan: Option<Vec<(usize, usize)>> = None;
    'start: for g0 in 0..blocks[0].exts.len() {
        // entry_from[i][g]: exit of block i-1 leading to entry g of block i
        // exit_from[i][e]: entry of block i leading to exit e
        let mut entry_ok = vec![false; blocks[0].exts.len()];
        entry_ok[g0] = true;
        let mut exit_from: Vec<Vec<Option<usize>>> = Vec::with_capacity(b);
        let mut entry_from: Vec<Vec<Option<usize>>> = vec![Vec::new()];
        for i in 0..b {
            let size = blocks[i].exts.len();
            let exits: Vec<Option<usize>> = (0..size)
                .map(|e| (0..size).find(|&f| entry_ok[f] && traversable(i, f, e)))
                .collect();
            let next = (i + 1) % b;
            let next_size = blocks[next].exts.len();
            let entries: Vec<Option<usize>> = (0..next_size)
                .map(|g| (0..size).find(|&e| exits[e].is_some() && seams[i][e][g]))
                .collect();
            entry_ok = entries.iter().map(|x| x.is_some()).collect();
            exit_from.push(exits);
            entry_from.push(entries);
        }
        if !entry_ok[g0] {
            continue;
        }
        // walk back from the closing seam
        let mut chosen = vec![(0usize, 0usize); b];
        let mut g = g0;
        for i in (0..b).rev() {
            let e = entry_from[i + 1][g].unwrap();
            let f = exit_from[i][e].unwrap();
            chosen[i] = (f, e);
            g = f;
        }
        if chosen[0].0 == g0 {
            plan = Some(chosen);
            break 'start;
        }
    }
    let plan = plan.ok_or_else(|| Error::Precondition("no choice of block endpoints closes the cycle".into()))?;
    let mut out = Vec::new();
    let mut paths: HashMap<(Vec<Vec<u8>>, usize, usize), Vec<usize>> = HashMap::new();
    for (i, &(from, to)) in plan.iter().enumerate() {
        let key = (blocks[i].exts.clone(), from, to);
        let path = match paths.get(&key) {
            Some(p) => p.clone(),
            None => {
                let p = block_path(splice, &blocks[i], j, from, to)?;
                paths.insert(key, p.clone());
                p
            }
        };
        for e in path {
            out.push(splice.join(blocks[i].full, &blocks[i].exts[e]));
        }
    }
    Ok(out)
}

/// Adjacency among a block's extensions in the `j`-localized graph of the host.
pub(crate) fn block_adjacency(splice: &Splice, block: &Block, j: usize) -> Result<Vec<Vec<bool>>> {
    let n = block.exts.len();
    let mut adj = vec![vec![false; n]; n];
    for a in 0..n {
        for c in a + 1..n {
            let local = crate::coloring::diff_slices(&block.exts[a], &block.exts[c]);
            let d: VertexSet = local.iter().map(|v| splice.att_map[v]).collect();
            let ok = min_connected_cover_within(splice.host, d, j)?.is_some();
            adj[a][c] = ok;
            adj[c][a] = ok;
        }
    }
    Ok(adj)
}

/// Hamiltonian-path endpoint relation of a small graph, by subset dynamic programming.
pub(crate) fn path_endpoints(adj: &[Vec<bool>]) -> Result<Vec<Vec<bool>>> {
    let n = adj.len();
    if n > 16 {
        return Err(Error::Unsupported(format!("blocks of {n} extensions are too large to search")));
    }
    let full = (1usize << n) - 1;
    let mut rel = vec![vec![false; n]; n];
    for s in 0..n {
        // reach[mask] = bitset of possible ends of a path from s covering mask
        let mut reach = vec![0u32; 1 << n];
        reach[1 << s] = 1 << s;
        for mask in 0..=full {
            let ends = reach[mask];
            if ends == 0 {
                continue;
            }
            for e in 0..n {
                if ends >> e & 1 == 0 {
                    continue;
                }
                for w in 0..n {
                    if mask >> w & 1 == 0 && adj[e][w] {
                        reach[mask | 1 << w] |= 1 << w;
                    }
                }
            }
        }
        for t in 0..n {
            rel[s][t] = t != s && reach[full] >> t & 1 == 1;
        }
    }
    Ok(rel)
}

/// A Hamiltonian path of the block from extension `from` to extension `to`.
fn block_path(splice: &Splice, block: &Block, j: usize, from: usize, to: usize) -> Result<Vec<usize>> {
    let n = block.exts.len();
    if n == 1 {
        return Ok(vec![0]);
    }
    let adj = block_adjacency(splice, block, j)?;
    let mut path = vec![from];
    let mut used = vec![false; n];
    used[from] = true;
    fn go(adj: &[Vec<bool>], path: &mut Vec<usize>, used: &mut Vec<bool>, to: usize) -> bool {
        let n = adj.len();
        let v = *path.last().unwrap();
        if path.len() == n {
            return v == to;
        }
        for w in 0..n {
            if !used[w] && adj[v][w] && (w != to || path.len() + 1 == n) {
                used[w] = true;
                path.push(w);
                if go(adj, path, used, to) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }
    if go(&adj, &mut path, &mut used, to) {
        Ok(path)
    } else {
        Err(Error::Internal(format!(
            "block endpoint table promised a path from {:?} to {:?}",
            block.exts[from], block.exts[to]
        )))
    }
}
