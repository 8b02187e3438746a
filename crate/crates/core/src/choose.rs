//! List colorings and brute-force `f`-choosability for small attachments.
//!
//! An attachment splits a host `H` into an outer part `H'` and a small
//! connected part `H''`. The size functions below count, for each vertex of
//! `H''`, how many colors remain available once its outer neighbors (and the
//! neighbors inside a recolored subgraph `F` of `H'`) are taken into account.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};
use serde::Serialize;

/// Largest graph accepted by [`is_f_choosable`].
pub const MAX_CHOOSABILITY_VERTICES: usize = 6;
/// Cap on list assignments examined by one choosability check.
const ASSIGNMENT_LIMIT: u64 = 50_000_000;

/// A host split into an outer subgraph and a small connected attachment.
#[derive(Clone, Debug)]
pub struct AttachmentContext {
    pub host: SimpleGraph,
    pub outer: VertexSet,
    pub attachment: VertexSet,
    pub k: usize,
    pub j: usize,
}

impl AttachmentContext {
    /// The outer part is everything not in `attachment`.
    pub fn new(host: SimpleGraph, attachment: VertexSet, k: usize, j: usize) -> Result<Self> {
        if attachment.is_empty() || !attachment.is_subset(host.vertices()) {
            return Err(Error::Argument(format!("attachment {attachment:?} is not a nonempty vertex subset")));
        }
        if !host.induces_connected(attachment) {
            return Err(Error::Argument(format!("attachment {attachment:?} is not connected")));
        }
        if attachment.len() > j {
            return Err(Error::Argument(format!(
                "attachment has {} vertices, more than j = {j}",
                attachment.len()
            )));
        }
        let outer = host.vertices().difference(attachment);
        Ok(AttachmentContext { host, outer, attachment, k, j })
    }

    /// Attachment vertices in increasing order; size functions follow this order.
    pub fn attachment_vertices(&self) -> Vec<usize> {
        self.attachment.iter().collect()
    }

    /// The attachment as a graph of its own, vertices in increasing order.
    pub fn attachment_graph(&self) -> SimpleGraph {
        self.host.induced_subgraph(self.attachment).0
    }

    /// The outer part as a graph of its own, vertices in increasing order.
    pub fn outer_graph(&self) -> SimpleGraph {
        self.host.induced_subgraph(self.outer).0
    }

    /// Whether no edge joins the attachment to the outer part.
    pub fn is_separate(&self) -> bool {
        self.host.boundary(self.attachment).intersection(self.outer).is_empty()
    }
}

/// Neighbor counts of each attachment vertex into `H'` and into `F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeFunctions {
    pub vertices: Vec<usize>,
    pub outer: Vec<usize>,
    pub into_f: Option<Vec<usize>>,
}

pub fn degree_functions(ctx: &AttachmentContext, f: Option<VertexSet>) -> Result<DegreeFunctions> {
    if let Some(f) = f {
        if !f.is_subset(ctx.outer) {
            return Err(Error::Argument(format!("{f:?} is not inside the outer subgraph")));
        }
    }
    let vertices = ctx.attachment_vertices();
    let outer = vertices
        .iter()
        .map(|&v| ctx.host.neighbors(v).intersection(ctx.outer).len())
        .collect();
    let into_f = f.map(|f| {
        vertices
            .iter()
            .map(|&v| ctx.host.neighbors(v).intersection(f).len())
            .collect()
    });
    Ok(DegreeFunctions { vertices, outer, into_f })
}

/// Which list-size function to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SizeVariant {
    /// `k - d'(v) - min(d'(v), j)`
    Plain,
    /// `k - d'(v) - d^F(v)`
    Within,
    /// the plain function lowered by one at `u`
    PlainLess,
    /// the `F` function lowered by one at `u`
    WithinLess,
}

/// List sizes per attachment vertex (increasing vertex order). Values may be
/// negative; a nonpositive size means an empty list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeFunction {
    pub vertices: Vec<usize>,
    pub values: Vec<i64>,
}

impl SizeFunction {
    pub fn at(&self, v: usize) -> Option<i64> {
        self.vertices.iter().position(|&w| w == v).map(|i| self.values[i])
    }
}

pub fn size_function(
    ctx: &AttachmentContext,
    variant: SizeVariant,
    f: Option<VertexSet>,
    u: Option<usize>,
) -> Result<SizeFunction> {
    let needs_f = matches!(variant, SizeVariant::Within | SizeVariant::WithinLess);
    let needs_u = matches!(variant, SizeVariant::PlainLess | SizeVariant::WithinLess);
    if needs_f && f.is_none() {
        return Err(Error::Argument(format!("{variant:?} needs a subgraph F")));
    }
    if needs_u {
        match u {
            Some(u) if ctx.attachment.contains(u) => {}
            Some(u) => return Err(Error::Argument(format!("vertex {u} is not in the attachment"))),
            None => return Err(Error::Argument(format!("{variant:?} needs a vertex u"))),
        }
    }
    let deg = degree_functions(ctx, if needs_f { f } else { None })?;
    let k = ctx.k as i64;
    let values = deg
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let d = deg.outer[i] as i64;
            let base = if needs_f {
                k - d - deg.into_f.as_ref().unwrap()[i] as i64
            } else {
                k - d - d.min(ctx.j as i64)
            };
            if needs_u && Some(v) == u {
                base - 1
            } else {
                base
            }
        })
        .collect();
    Ok(SizeFunction { vertices: deg.vertices, values })
}

/// Per-vertex lists of allowed colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListAssignment {
    pub lists: Vec<Vec<u8>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<u8>>) -> Self {
        ListAssignment { lists }
    }

    /// `L(v) = {0, …, f(v)-1}`, empty where `f(v) <= 0`.
    pub fn initial(sizes: &[i64]) -> Self {
        ListAssignment {
            lists: sizes.iter().map(|&s| (0..s.max(0) as u8).collect()).collect(),
        }
    }
}

/// A proper coloring of `f` choosing each color from its list.
pub fn find_list_coloring(f: &SimpleGraph, lists: &ListAssignment) -> Option<Coloring> {
    let mut found = None;
    for_each_list_coloring(f, lists, |c| {
        found = Some(Coloring::new(c.to_vec()));
        false
    });
    found
}

/// Up to `limit` distinct list colorings, in lexicographic order of list positions.
pub fn list_colorings(f: &SimpleGraph, lists: &ListAssignment, limit: usize) -> Vec<Coloring> {
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    for_each_list_coloring(f, lists, |c| {
        out.push(Coloring::new(c.to_vec()));
        out.len() < limit
    });
    out
}

/// Backtracking over list colorings; `visit` returns `false` to stop.
pub fn for_each_list_coloring<V: FnMut(&[u8]) -> bool>(f: &SimpleGraph, lists: &ListAssignment, mut visit: V) {
    let n = f.n();
    assert_eq!(lists.lists.len(), n, "one list per vertex");
    let mut colors = vec![0u8; n];
    fn go<V: FnMut(&[u8]) -> bool>(
        v: usize,
        f: &SimpleGraph,
        lists: &ListAssignment,
        colors: &mut Vec<u8>,
        visit: &mut V,
    ) -> bool {
        if v == f.n() {
            return visit(colors);
        }
        let earlier = VertexSet(f.neighbors(v).0 & ((1u64 << v) - 1));
        for &c in &lists.lists[v] {
            if earlier.iter().all(|w| colors[w] != c) {
                colors[v] = c;
                if !go(v + 1, f, lists, colors, visit) {
                    return false;
                }
            }
        }
        true
    }
    go(0, f, lists, &mut colors, &mut visit);
}

/// Whether every assignment of lists with sizes `sizes` admits a list coloring.
///
/// Lists are drawn from a universe of `Σ f(v)` colors, which loses nothing:
/// any assignment uses at most that many distinct colors and renaming them
/// injectively preserves colorability. Assignments are enumerated up to that
/// renaming by introducing unseen colors in increasing order. Vertices whose
/// list is longer than their degree are peeled off first, since they can
/// always be colored last.
pub fn is_f_choosable(f: &SimpleGraph, sizes: &[i64]) -> Result<bool> {
    let n = f.n();
    if sizes.len() != n {
        return Err(Error::Argument(format!("{} sizes for {n} vertices", sizes.len())));
    }
    if n > MAX_CHOOSABILITY_VERTICES {
        return Err(Error::Unsupported(format!(
            "choosability is checked exhaustively only up to {MAX_CHOOSABILITY_VERTICES} vertices, got {n}"
        )));
    }
    if sizes.iter().any(|&s| s <= 0) {
        return Ok(false);
    }
    // peel vertices that can always be colored last
    let mut keep = f.vertices();
    loop {
        let peel = keep
            .iter()
            .find(|&v| sizes[v] as usize > f.neighbors(v).intersection(keep).len());
        match peel {
            Some(v) => keep = keep.without(v),
            None => break,
        }
    }
    if keep.is_empty() {
        return Ok(true);
    }
    let (core, map) = f.induced_subgraph(keep);
    let core_sizes: Vec<usize> = map.iter().map(|&v| sizes[v] as usize).collect();
    let mut lists: Vec<Vec<u8>> = vec![Vec::new(); core.n()];
    let mut examined = 0u64;
    let all = assign(&core, &core_sizes, 0, 0, &mut lists, &mut examined)?;
    Ok(all)
}

/// Enumerates list choices for vertices `v..` given that colors `0..seen`
/// already appear; returns whether every completion is colorable.
fn assign(
    f: &SimpleGraph,
    sizes: &[usize],
    v: usize,
    seen: usize,
    lists: &mut Vec<Vec<u8>>,
    examined: &mut u64,
) -> Result<bool> {
    if v == f.n() {
        *examined += 1;
        if *examined > ASSIGNMENT_LIMIT {
            return Err(Error::Unsupported("choosability check exceeds the assignment limit".into()));
        }
        return Ok(find_list_coloring(f, &ListAssignment::new(lists.clone())).is_some());
    }
    let size = sizes[v];
    for fresh in 0..=size {
        let old = size - fresh;
        if old > seen {
            continue;
        }
        let mut subsets = Vec::new();
        for_each_subset(seen, old, |subset| {
            subsets.push(subset.to_vec());
            true
        });
        for subset in subsets {
            let mut list: Vec<u8> = subset.iter().map(|&c| c as u8).collect();
            list.extend((seen..seen + fresh).map(|c| c as u8));
            lists[v] = list;
            if !assign(f, sizes, v + 1, seen + fresh, lists, examined)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Calls `visit` on every `r`-subset of `0..n` (as sorted indices) until it returns `false`.
fn for_each_subset<V: FnMut(&[usize]) -> bool>(n: usize, r: usize, mut visit: V) {
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        if !visit(&idx) {
            return;
        }
        // advance to the next combination
        let mut i = r;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - r + i {
                idx[i] += 1;
                for t in i + 1..r {
                    idx[t] = idx[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Whether `H''` satisfies the hypothesis of the tight extension: for every
/// connected `F ⊆ H'` on at most `j` vertices some `u` makes `H''`
/// choosable for the `F` function lowered at `u`. Returns the first failing
/// `F` on refusal.
pub fn tight_extension_holds(ctx: &AttachmentContext) -> Result<std::result::Result<(), VertexSet>> {
    let outer = ctx.host.induced_subgraph(ctx.outer);
    let att = ctx.attachment_graph();
    let mut checked: Vec<Vec<usize>> = Vec::new();
    for local in crate::coloring::connected_sets(&outer.0, ctx.j) {
        let f: VertexSet = local.iter().map(|i| outer.1[i]).collect();
        let deg = degree_functions(ctx, Some(f))?;
        let signature = deg.into_f.clone().unwrap();
        if checked.contains(&signature) {
            continue;
        }
        let mut holds = false;
        for &u in &deg.vertices {
            let sizes = size_function(ctx, SizeVariant::WithinLess, Some(f), Some(u))?;
            if is_f_choosable(&att, &sizes.values)? {
                holds = true;
                break;
            }
        }
        if !holds {
            return Ok(Err(f));
        }
        checked.push(signature);
    }
    Ok(Ok(()))
}
