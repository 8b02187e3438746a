//! Hamiltonian cycle search on adjacency lists.
//!
//! Cheap structural refutations run first (connectivity, minimum degree, cut
//! vertices, bipartite imbalance, two-vertex separators whose sides cannot be
//! traversed). The search itself extends a path from node 0, taking forced
//! moves first and otherwise trying the unvisited neighbor with the fewest
//! unvisited neighbors of its own; it prunes when a node runs out of
//! available neighbors or the unvisited region disconnects.

use super::{Budget, Deadline};
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::VecDeque;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HamiltonStatus {
    Hamiltonian,
    NotHamiltonian,
    /// One node, or two adjacent nodes: Hamiltonian by convention.
    DegenerateConvention,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HamiltonicityVerdict {
    pub status: HamiltonStatus,
    pub cycle: Option<Vec<usize>>,
    /// Why the graph was refuted, when it was.
    pub reason: Option<String>,
}

impl HamiltonicityVerdict {
    pub fn is_hamiltonian(&self) -> bool {
        self.status != HamiltonStatus::NotHamiltonian
    }

    fn yes(status: HamiltonStatus, cycle: Vec<usize>) -> Self {
        HamiltonicityVerdict {
            status,
            cycle: Some(cycle),
            reason: None,
        }
    }

    fn no(reason: impl Into<String>) -> Self {
        HamiltonicityVerdict {
            status: HamiltonStatus::NotHamiltonian,
            cycle: None,
            reason: Some(reason.into()),
        }
    }
}

/// Largest graph on which every pair of nodes is tried as a separator.
const SEPARATOR_CHECK_LIMIT: usize = 400;

/// Decides Hamiltonicity of the graph given by sorted, symmetric adjacency lists.
pub fn hamiltonian_cycle(adj: &[Vec<u32>], budget: &Budget) -> Result<HamiltonicityVerdict> {
    let n = adj.len();
    if n > budget.max_colorings {
        return Err(Error::Undecided(format!(
            "{n} nodes exceed the search budget of {}",
            budget.max_colorings
        )));
    }
    match n {
        0 => return Ok(HamiltonicityVerdict::no("no nodes")),
        1 => return Ok(HamiltonicityVerdict::yes(HamiltonStatus::DegenerateConvention, vec![0])),
        2 => {
            return Ok(if adj[0].contains(&1) {
                HamiltonicityVerdict::yes(HamiltonStatus::DegenerateConvention, vec![0, 1])
            } else {
                HamiltonicityVerdict::no("two non-adjacent nodes")
            })
        }
        _ => {}
    }
    decide(adj, &budget.deadline())
}

fn decide(adj: &[Vec<u32>], deadline: &Deadline) -> Result<HamiltonicityVerdict> {
    if let Some(reason) = refute(adj) {
        return Ok(HamiltonicityVerdict::no(reason));
    }
    if let Some(cycle) = rotation_search(adj, deadline) {
        return Ok(HamiltonicityVerdict::yes(HamiltonStatus::Hamiltonian, cycle));
    }
    if adj.len() <= SEPARATOR_CHECK_LIMIT {
        match contract_gadgets(adj) {
            Contraction::Impossible(reason) => return Ok(HamiltonicityVerdict::no(reason)),
            Contraction::Reduced(reduced) => {
                let mut verdict = decide(&reduced.adj, deadline)?;
                if let Some(cycle) = verdict.cycle.take() {
                    verdict.cycle = Some(reduced.expand(&cycle));
                } else if let Some(reason) = verdict.reason.take() {
                    verdict.reason = Some(format!("after contracting two-node-separated pieces: {reason}"));
                }
                return Ok(verdict);
            }
            Contraction::Unchanged => {}
        }
    }
    match Search::new(adj, *deadline).run()? {
        Some(cycle) => Ok(HamiltonicityVerdict::yes(HamiltonStatus::Hamiltonian, cycle)),
        None => Ok(HamiltonicityVerdict::no("exhaustive search")),
    }
}

/// Pieces up to this size cut off by two nodes are replaced by single nodes.
const GADGET_LIMIT: usize = 16;

enum Contraction {
    Unchanged,
    Impossible(String),
    Reduced(Reduced),
}

/// A graph in which pieces were replaced by degree-two stand-ins.
struct Reduced {
    adj: Vec<Vec<u32>>,
    /// Original node of every kept reduced node, `None` for stand-ins.
    original: Vec<Option<usize>>,
    /// For each stand-in: the separator node its path starts next to, and the
    /// path through the piece.
    paths: Vec<(usize, Vec<usize>)>,
    stand_in: Vec<Option<usize>>,
}

impl Reduced {
    fn expand(&self, cycle: &[usize]) -> Vec<usize> {
        let len = cycle.len();
        let mut out = Vec::new();
        for (i, &v) in cycle.iter().enumerate() {
            match self.stand_in[v] {
                None => out.push(self.original[v].unwrap()),
                Some(g) => {
                    let (a, path) = &self.paths[g];
                    let prev = self.original[cycle[(i + len - 1) % len]];
                    if prev == Some(*a) {
                        out.extend(path);
                    } else {
                        out.extend(path.iter().rev());
                    }
                }
            }
        }
        out
    }
}

/// A Hamiltonian cycle crosses a piece cut off by nodes `a` and `b` in one
/// stretch from `a` to `b`. Small pieces are therefore replaced by one node
/// adjacent to just `a` and `b`, after checking that some path covers the
/// piece from a neighbor of `a` to a neighbor of `b`.
fn contract_gadgets(adj: &[Vec<u32>]) -> Contraction {
    let n = adj.len();
    let mut blocked = vec![false; n];
    // claimed[v]: v lies in, or separates, an already chosen piece
    let mut claimed = vec![false; n];
    let mut gadgets: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for a in 0..n {
        blocked[a] = true;
        for b in a + 1..n {
            blocked[b] = true;
            let found = pieces(adj, &blocked);
            blocked[b] = false;
            if found.len() != 2 {
                continue;
            }
            let piece = found.into_iter().min_by_key(|p| p.len()).unwrap();
            if piece.len() < 2 || piece.len() > GADGET_LIMIT || piece.iter().any(|&v| claimed[v]) {
                continue;
            }
            let Some(path) = piece_path(adj, &piece, a, b) else {
                return Contraction::Impossible(format!(
                    "no path covers the piece cut off by nodes {a} and {b}"
                ));
            };
            for &v in piece.iter().chain([&a, &b]) {
                claimed[v] = true;
            }
            gadgets.push((a, b, path));
        }
        blocked[a] = false;
    }
    if gadgets.is_empty() {
        return Contraction::Unchanged;
    }
    let mut removed = vec![false; n];
    for (_, _, path) in &gadgets {
        for &v in path {
            removed[v] = true;
        }
    }
    let mut index = vec![usize::MAX; n];
    let mut original = Vec::new();
    for v in (0..n).filter(|&v| !removed[v]) {
        index[v] = original.len();
        original.push(Some(v));
    }
    let kept = original.len();
    let mut rows: Vec<Vec<u32>> = original
        .iter()
        .map(|v| {
            adj[v.unwrap()]
                .iter()
                .filter(|&&w| !removed[w as usize])
                .map(|&w| index[w as usize] as u32)
                .collect()
        })
        .collect();
    let mut stand_in = vec![None; kept];
    let mut paths = Vec::new();
    for (g, (a, b, path)) in gadgets.into_iter().enumerate() {
        let p = rows.len() as u32;
        rows.push(vec![index[a] as u32, index[b] as u32]);
        rows[index[a]].push(p);
        rows[index[b]].push(p);
        original.push(None);
        stand_in.push(Some(g));
        paths.push((a, path));
    }
    for row in &mut rows {
        row.sort_unstable();
    }
    Contraction::Reduced(Reduced { adj: rows, original, paths, stand_in })
}

/// A path through every node of `piece`, starting next to `a` and ending
/// next to `b`, by dynamic programming over subsets.
fn piece_path(adj: &[Vec<u32>], piece: &[usize], a: usize, b: usize) -> Option<Vec<usize>> {
    let m = piece.len();
    let local = |v: u32| piece.iter().position(|&p| p == v as usize);
    let near = |v: usize, s: usize| adj[v].binary_search(&(s as u32)).is_ok();
    let full = (1usize << m) - 1;
    // prev[mask][v]: predecessor of v on a path covering mask and ending at v
    let mut prev = vec![vec![u8::MAX; m]; 1 << m];
    const START: u8 = u8::MAX - 1;
    for (i, &v) in piece.iter().enumerate() {
        if near(v, a) {
            prev[1 << i][i] = START;
        }
    }
    for mask in 1..=full {
        for i in 0..m {
            if prev[mask][i] == u8::MAX {
                continue;
            }
            for &w in &adj[piece[i]] {
                if let Some(t) = local(w) {
                    if mask & (1 << t) == 0 && prev[mask | 1 << t][t] == u8::MAX {
                        prev[mask | 1 << t][t] = i as u8;
                    }
                }
            }
        }
    }
    let mut end = (0..m).find(|&i| prev[full][i] != u8::MAX && near(piece[i], b))?;
    let mut mask = full;
    let mut path = Vec::with_capacity(m);
    loop {
        path.push(piece[end]);
        let p = prev[mask][end];
        if p == START {
            break;
        }
        mask &= !(1 << end);
        end = p as usize;
    }
    path.reverse();
    Some(path)
}

/// Checks that `cycle` is a Hamiltonian cycle (or a degenerate one) of `adj`.
pub fn is_hamiltonian_cycle(adj: &[Vec<u32>], cycle: &[usize]) -> bool {
    let n = adj.len();
    if cycle.len() != n || n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    if n == 1 {
        return true;
    }
    let steps = if n == 2 { 1 } else { n };
    (0..steps).all(|i| adj[cycle[i]].binary_search(&(cycle[(i + 1) % n] as u32)).is_ok())
}

fn refute(adj: &[Vec<u32>]) -> Option<String> {
    let n = adj.len();
    if let Some(v) = (0..n).find(|&v| adj[v].len() < 2) {
        return Some(format!("node {v} has degree {}", adj[v].len()));
    }
    if reachable(adj, 0, &vec![false; n]) < n {
        return Some("disconnected".into());
    }
    if let Some(v) = cut_vertex(adj) {
        return Some(format!("node {v} is a cut vertex"));
    }
    if let Some(side) = two_coloring(adj, &vec![false; n]) {
        let ones = side.iter().filter(|&&s| s == 1).count();
        if 2 * ones != n {
            return Some(format!("bipartite with sides {} and {ones}", n - ones));
        }
    }
    if n <= SEPARATOR_CHECK_LIMIT {
        return separator_refutation(adj);
    }
    None
}

fn reachable(adj: &[Vec<u32>], from: usize, blocked: &[bool]) -> usize {
    let mut seen = blocked.to_vec();
    seen[from] = true;
    let mut stack = vec![from];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                count += 1;
                stack.push(w as usize);
            }
        }
    }
    count
}

/// Side (0/1) of every unblocked node if the unblocked part is bipartite.
fn two_coloring(adj: &[Vec<u32>], blocked: &[bool]) -> Option<Vec<u8>> {
    let n = adj.len();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if blocked[s] || side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                let w = w as usize;
                if blocked[w] {
                    continue;
                }
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    stack.push(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

/// Iterative Tarjan low-link search for an articulation point.
fn cut_vertex(adj: &[Vec<u32>]) -> Option<usize> {
    let n = adj.len();
    let mut disc = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut time = 0u32;
    let mut root_children = 0;
    disc[0] = 0;
    low[0] = 0;
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    while let Some(top) = stack.last_mut() {
        let (u, parent, i) = *top;
        if i < adj[u].len() {
            top.2 += 1;
            let w = adj[u][i] as usize;
            if disc[w] == u32::MAX {
                time += 1;
                disc[w] = time;
                low[w] = time;
                if u == 0 {
                    root_children += 1;
                }
                stack.push((w, u, 0));
            } else if w != parent {
                low[u] = low[u].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[u]);
                if parent != 0 && low[u] >= disc[parent] {
                    return Some(parent);
                }
            }
        }
    }
    (root_children > 1).then_some(0)
}

/// If removing `{a, b}` leaves several pieces, a Hamiltonian cycle must cross
/// each piece as a path from `a` to `b`; three pieces are impossible, and a
/// bipartite piece must have the parity of such a path.
fn separator_refutation(adj: &[Vec<u32>]) -> Option<String> {
    let n = adj.len();
    let mut blocked = vec![false; n];
    for a in 0..n {
        blocked[a] = true;
        for b in a + 1..n {
            blocked[b] = true;
            let pieces = pieces(adj, &blocked);
            blocked[b] = false;
            if pieces.len() >= 3 {
                return Some(format!("removing nodes {a} and {b} leaves {} pieces", pieces.len()));
            }
            if pieces.len() == 2 {
                for piece in &pieces {
                    if !piece_traversable(adj, piece, a, b) {
                        return Some(format!(
                            "nodes {a} and {b} separate a bipartite piece with no spanning {a}-{b} path"
                        ));
                    }
                }
            }
        }
        blocked[a] = false;
    }
    None
}

fn pieces(adj: &[Vec<u32>], blocked: &[bool]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = blocked.to_vec();
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut piece = vec![s];
        let mut i = 0;
        while i < piece.len() {
            let u = piece[i];
            i += 1;
            for &w in &adj[u] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    piece.push(w as usize);
                }
            }
        }
        out.push(piece);
    }
    out
}

/// Parity test for a path from `a` to `b` through all of `piece`.
fn piece_traversable(adj: &[Vec<u32>], piece: &[usize], a: usize, b: usize) -> bool {
    let n = adj.len();
    let mut inside = vec![false; n];
    for &v in piece {
        inside[v] = true;
    }
    inside[a] = true;
    inside[b] = true;
    let blocked: Vec<bool> = inside.iter().map(|&x| !x).collect();
    let Some(side) = two_coloring(adj, &blocked) else {
        return true;
    };
    let total = piece.len() + 2;
    let ones = (0..n).filter(|&v| inside[v] && side[v] == 1).count();
    let zeros = total - ones;
    if side[a] == side[b] {
        let (same, other) = if side[a] == 1 { (ones, zeros) } else { (zeros, ones) };
        same == other + 1
    } else {
        ones == zeros
    }
}

/// Rotation steps allowed per node in each attempt of the heuristic.
const ROTATIONS_PER_NODE: usize = 60;
const ROTATION_ATTEMPTS: u64 = 4;

/// Randomized path extension with rotations: grow a path greedily and, when
/// its end is stuck, pick a path neighbor `p[i]` of the end and reverse the
/// tail after it, making `p[i+1]` the new end. Finds cycles in most
/// Hamiltonian graphs quickly; failure proves nothing. Seeded, so
/// deterministic.
fn rotation_search(adj: &[Vec<u32>], deadline: &Deadline) -> Option<Vec<usize>> {
    use rand::{Rng, SeedableRng};
    let n = adj.len();
    for attempt in 0..ROTATION_ATTEMPTS {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(attempt);
        let mut pos = vec![usize::MAX; n];
        let mut path = vec![0usize];
        pos[0] = 0;
        let mut steps = 0;
        while steps < ROTATIONS_PER_NODE * n {
            steps += 1;
            if steps % 4096 == 0 && deadline.expired() {
                return None;
            }
            let end = *path.last().unwrap();
            let open: Vec<u32> = adj[end].iter().copied().filter(|&w| pos[w as usize] == usize::MAX).collect();
            if !open.is_empty() {
                let w = open[rng.gen_range(0..open.len())] as usize;
                pos[w] = path.len();
                path.push(w);
                continue;
            }
            if path.len() == n && adj[end].binary_search(&(path[0] as u32)).is_ok() {
                return Some(path);
            }
            // rotate at a random path neighbor of the end
            let len = path.len();
            let pivots: Vec<usize> = adj[end]
                .iter()
                .map(|&w| pos[w as usize])
                .filter(|&i| i + 2 < len)
                .collect();
            if pivots.is_empty() {
                if rng.gen_bool(0.5) {
                    path.reverse();
                    for (i, &v) in path.iter().enumerate() {
                        pos[v] = i;
                    }
                }
                continue;
            }
            let i = pivots[rng.gen_range(0..pivots.len())];
            path[i + 1..].reverse();
            for (t, &v) in path[i + 1..].iter().enumerate() {
                pos[v] = i + 1 + t;
            }
        }
    }
    None
}

struct Search<'a> {
    adj: &'a [Vec<u32>],
    on_path: Vec<bool>,
    /// Unvisited neighbors of each node.
    free: Vec<u32>,
    near_start: Vec<bool>,
    path: Vec<usize>,
    deadline: Deadline,
    scratch: Vec<bool>,
}

struct Frame {
    candidates: Vec<u32>,
    next: usize,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<u32>], deadline: Deadline) -> Self {
        let n = adj.len();
        let mut near_start = vec![false; n];
        for &w in &adj[0] {
            near_start[w as usize] = true;
        }
        Search {
            adj,
            on_path: vec![false; n],
            free: adj.iter().map(|a| a.len() as u32).collect(),
            near_start,
            path: Vec::with_capacity(n),
            deadline,
            scratch: vec![false; n],
        }
    }

    fn visit(&mut self, x: usize) {
        self.on_path[x] = true;
        self.path.push(x);
        for &w in &self.adj[x] {
            self.free[w as usize] -= 1;
        }
    }

    fn unvisit(&mut self) {
        let x = self.path.pop().unwrap();
        self.on_path[x] = false;
        for &w in &self.adj[x] {
            self.free[w as usize] += 1;
        }
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&(b as u32)).is_ok()
    }

    fn run(mut self) -> Result<Option<Vec<usize>>> {
        let n = self.adj.len();
        self.visit(0);
        let mut stack = match self.expand() {
            Some(candidates) => vec![Frame { candidates, next: 0 }],
            None => return Ok(None),
        };
        let mut ticks = 0u32;
        while let Some(frame) = stack.last_mut() {
            ticks = ticks.wrapping_add(1);
            if ticks.is_multiple_of(1024) && self.deadline.expired() {
                return Err(Error::Undecided(format!(
                    "Hamiltonicity search on {n} nodes exceeded its time budget"
                )));
            }
            if frame.next == frame.candidates.len() {
                stack.pop();
                if !stack.is_empty() {
                    self.unvisit();
                }
                continue;
            }
            let x = frame.candidates[frame.next] as usize;
            frame.next += 1;
            self.visit(x);
            if self.path.len() == n {
                if self.adjacent(x, 0) {
                    return Ok(Some(self.path));
                }
                self.unvisit();
                continue;
            }
            match self.expand() {
                Some(candidates) => stack.push(Frame { candidates, next: 0 }),
                None => self.unvisit(),
            }
        }
        Ok(None)
    }

    /// Candidate next nodes from the current end, or `None` if the partial
    /// path cannot be completed.
    fn expand(&mut self) -> Option<Vec<u32>> {
        let n = self.adj.len();
        let len = self.path.len();
        let end = self.path[len - 1];
        let remaining = n - len;
        if self.free[0] == 0 {
            return None;
        }
        // the previous end just became interior; its unvisited neighbors lost an option
        if len >= 3 {
            let prev = self.path[len - 2];
            for &w in &self.adj[prev] {
                let w = w as usize;
                if !self.on_path[w] {
                    let avail = self.free[w] + self.near_start[w] as u32 + self.adjacent(w, end) as u32;
                    if avail < 2 {
                        return None;
                    }
                }
            }
        }
        let open: Vec<u32> = self.adj[end]
            .iter()
            .copied()
            .filter(|&w| !self.on_path[w as usize])
            .collect();
        if open.is_empty() {
            return None;
        }
        if remaining >= 2 {
            let mut forced = None;
            for &w in &open {
                let w_ = w as usize;
                let others = self.free[w_] + self.near_start[w_] as u32;
                if self.free[w_] == 0 {
                    return None;
                }
                if others == 1 {
                    if forced.is_some() {
                        return None;
                    }
                    forced = Some(w);
                }
            }
            if !self.unvisited_connected(open[0] as usize, remaining) {
                return None;
            }
            if let Some(w) = forced {
                return Some(vec![w]);
            }
        }
        // most constrained first: fewest remaining ways to be entered and left
        let mut open = open;
        open.sort_by_key(|&w| (self.free[w as usize], w));
        Some(open)
    }

    fn unvisited_connected(&mut self, from: usize, remaining: usize) -> bool {
        let seen = &mut self.scratch;
        seen.iter_mut().for_each(|s| *s = false);
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                let w = w as usize;
                if !self.on_path[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == remaining
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            adj[a].push(b as u32);
            adj[b].push(a as u32);
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        adj
    }

    fn cycle(n: usize) -> Vec<Vec<u32>> {
        from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    fn brute_force(adj: &[Vec<u32>]) -> bool {
        let n = adj.len();
        if n <= 2 {
            return n == 1 || n == 2 && adj[0].contains(&1);
        }
        let mut perm: Vec<usize> = (1..n).collect();
        fn rec(adj: &[Vec<u32>], perm: &mut Vec<usize>, k: usize) -> bool {
            if k == perm.len() {
                let mut cyc = vec![0];
                cyc.extend(perm.iter());
                return is_hamiltonian_cycle(adj, &cyc);
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                if rec(adj, perm, k + 1) {
                    return true;
                }
                perm.swap(k, i);
            }
            false
        }
        rec(adj, &mut perm, 0)
    }

    #[test]
    fn examples() {
        let b = Budget::default();
        let v = hamiltonian_cycle(&cycle(6), &b).unwrap();
        assert_eq!(v.status, HamiltonStatus::Hamiltonian);
        assert!(is_hamiltonian_cycle(&cycle(6), v.cycle.as_ref().unwrap()));
        let k2 = from_edges(2, &[(0, 1)]);
        assert_eq!(hamiltonian_cycle(&k2, &b).unwrap().status, HamiltonStatus::DegenerateConvention);
        let two = vec![vec![], vec![]];
        assert_eq!(hamiltonian_cycle(&two, &b).unwrap().status, HamiltonStatus::NotHamiltonian);
        let one = vec![vec![]];
        assert_eq!(hamiltonian_cycle(&one, &b).unwrap().status, HamiltonStatus::DegenerateConvention);
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let v = hamiltonian_cycle(&from_edges(10, &edges), &Budget::default()).unwrap();
        assert_eq!(v.status, HamiltonStatus::NotHamiltonian);
    }

    #[test]
    fn refutations() {
        // K_{2,3}: bipartite imbalance
        let k23 = from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(refute(&k23).unwrap().contains("bipartite"));
        // two triangles sharing a node
        let bowtie = from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        assert!(refute(&bowtie).unwrap().contains("cut vertex"));
    }

    #[test]
    fn contracts_separated_pieces() {
        // a hexagon 4..9 hanging between nodes 0 and 1, which also share the path 0-2-3-1
        let base = [(0, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 4), (0, 4)];
        for (tail, hamiltonian) in [(7, false), (5, true)] {
            let mut edges = base.to_vec();
            edges.push((1, tail));
            let adj = from_edges(10, &edges);
            let Contraction::Reduced(r) = contract_gadgets(&adj) else { panic!("expected a contraction") };
            assert!(r.adj.len() < 10);
            let v = hamiltonian_cycle(&adj, &Budget::default()).unwrap();
            assert_eq!(v.is_hamiltonian(), hamiltonian);
            assert_eq!(brute_force(&adj), hamiltonian);
            if let Some(c) = &v.cycle {
                assert!(is_hamiltonian_cycle(&adj, c));
            }
        }
    }

    #[test]
    fn times_out_as_undecided() {
        let b = Budget {
            time_limit: std::time::Duration::ZERO,
            ..Budget::default()
        };
        // a graph needing real search: Petersen plus a pendant path made non-bipartite
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let r = hamiltonian_cycle(&from_edges(10, &edges), &b);
        assert!(matches!(r, Err(Error::Undecided(_))) || r.unwrap().status == HamiltonStatus::NotHamiltonian);
    }

    use proptest::prelude::*;
    proptest! {
        #[test]
        fn agrees_with_brute_force(n in 3usize..8, bits in proptest::collection::vec(any::<bool>(), 28)) {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for a in 0..n {
                for b in a + 1..n {
                    if it.next().unwrap() {
                        edges.push((a, b));
                    }
                }
            }
            let adj = from_edges(n, &edges);
            let v = hamiltonian_cycle(&adj, &Budget::default()).unwrap();
            prop_assert_eq!(v.is_hamiltonian(), brute_force(&adj));
            if let Some(c) = &v.cycle {
                prop_assert!(is_hamiltonian_cycle(&adj, c));
            }
        }
    }
}
