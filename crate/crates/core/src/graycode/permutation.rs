//! Cyclic listings of all permutations in which consecutive permutations
//! differ by swapping the first entry with one other entry.
//!
//! The listing for `n` is assembled from `n` relabeled copies of the listing
//! for `n - 1`, one for each symbol parked in the last position. Each copy is
//! entered at some permutation and left at another, and the exit of one copy
//! swaps its first and last entries to enter the next. A copy may traverse
//! the smaller cycle in either of two shapes: the whole cycle from one entry
//! to its cyclic predecessor, or a "chord" shape that uses one extra
//! star-transposition edge of the smaller listing to cut the cycle into two
//! arcs. Each shape fixes how the exit permutation is related to the entry; a
//! short depth-first search picks one shape per copy so that every symbol is
//! parked exactly once and the last exit closes up on the first entry.

use crate::error::{Error, Result};
use std::collections::HashMap;

/// Largest `n` accepted by [`star_transposition_code`].
pub const MAX_PERMUTATION_SIZE: usize = 8;

/// A cyclic listing of all permutations of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationCode {
    pub n: usize,
    pub sequence: Vec<Vec<u8>>,
}

impl PermutationCode {
    /// Checks that the listing contains every permutation once and that
    /// cyclically consecutive permutations differ in position 0 and exactly
    /// one other position. Returns the first bad index.
    pub fn validate(&self) -> std::result::Result<(), usize> {
        let expected: usize = (1..=self.n).product();
        let mut seen = std::collections::HashSet::new();
        for (i, p) in self.sequence.iter().enumerate() {
            let mut sorted = p.clone();
            sorted.sort_unstable();
            if p.len() != self.n || sorted.iter().enumerate().any(|(a, &b)| a != b as usize) || !seen.insert(p) {
                return Err(i);
            }
        }
        if self.sequence.len() != expected {
            return Err(self.sequence.len());
        }
        let len = self.sequence.len();
        if len < 2 {
            return Ok(());
        }
        for i in 0..len {
            if !is_star_step(&self.sequence[i], &self.sequence[(i + 1) % len]) {
                return Err(i);
            }
        }
        Ok(())
    }
}

/// Whether `a` and `b` differ exactly in position 0 and one other position.
pub fn is_star_step(a: &[u8], b: &[u8]) -> bool {
    let d: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
    d.len() == 2 && d[0] == 0
}

/// How a copy of the smaller cycle is traversed.
#[derive(Clone, Copy, Debug)]
enum Shape {
    /// Start at entry `i` and walk backwards around the whole cycle.
    Around(usize),
    /// Start at `i + 1`, walk forwards to `j`, jump along the chord to `i`,
    /// walk backwards to `j + 1`.
    Chord(usize, usize),
}

pub fn star_transposition_code(n: usize) -> Result<PermutationCode> {
    if n < 1 {
        return Err(Error::Argument("permutation codes need n >= 1".into()));
    }
    if n > MAX_PERMUTATION_SIZE {
        return Err(Error::Unsupported(format!(
            "star-transposition codes are built up to n = {MAX_PERMUTATION_SIZE}, got {n}"
        )));
    }
    let mut cycle: Vec<Vec<u8>> = if n == 1 { vec![vec![0]] } else { vec![vec![0, 1], vec![1, 0]] };
    for m in 3..=n {
        cycle = lift(&cycle, m)?;
    }
    Ok(PermutationCode { n, sequence: cycle })
}

/// Builds the cycle on `n` symbols from the cycle `c` on `n - 1` symbols.
fn lift(c: &[Vec<u8>], n: usize) -> Result<Vec<Vec<u8>>> {
    let m = c.len();
    let pos: HashMap<&[u8], usize> = c.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    // relative permutation from a path's first to its last element, one shape per distinct relation
    let mut shapes: Vec<(Vec<usize>, Shape)> = Vec::new();
    let mut add = |rel: Vec<usize>, s: Shape| {
        if !shapes.iter().any(|(r, _)| *r == rel) {
            shapes.push((rel, s));
        }
    };
    for i in 0..m {
        add(relative(&c[i], &c[(i + 1) % m]), Shape::Around(i));
        for t in 1..n - 1 {
            let mut nb = c[i].clone();
            nb.swap(0, t);
            let j = pos[nb.as_slice()];
            if j == (i + 1) % m || j == (i + m - 1) % m {
                continue;
            }
            add(relative(&c[(i + 1) % m], &c[(j + 1) % m]), Shape::Chord(i, j));
        }
    }
    let first: Vec<u8> = (0..n as u8).collect();
    let mut chosen: Vec<(Vec<u8>, usize)> = Vec::new();
    let mut used = vec![false; n];
    used[n - 1] = true;
    if !search(&first, &first, &shapes, &mut used, &mut chosen, n) {
        return Err(Error::Internal(format!("no star-transposition assembly found for n = {n}")));
    }
    let mut out = Vec::with_capacity(m * n);
    for (entry, s) in chosen {
        let (path, start) = traverse(c, shapes[s].1);
        // relabel the small cycle so that `start` becomes the entry's prefix
        let mut sigma = [0u8; 256];
        for (a, &b) in c[start].iter().zip(&entry[..n - 1]) {
            sigma[*a as usize] = b;
        }
        let last = entry[n - 1];
        for &r in &path {
            let mut p: Vec<u8> = c[r].iter().map(|&s| sigma[s as usize]).collect();
            p.push(last);
            out.push(p);
        }
    }
    Ok(out)
}

/// `rel[t]` is the position in `p` of the symbol `q[t]`.
fn relative(p: &[u8], q: &[u8]) -> Vec<usize> {
    q.iter().map(|s| p.iter().position(|x| x == s).unwrap()).collect()
}

/// Indices visited by a shape, and the index it starts at.
fn traverse(c: &[Vec<u8>], shape: Shape) -> (Vec<usize>, usize) {
    let m = c.len();
    match shape {
        Shape::Around(i) => ((0..m).map(|t| (i + m - t) % m).collect(), i),
        Shape::Chord(i, j) => {
            let mut path = Vec::with_capacity(m);
            let mut k = (i + 1) % m;
            loop {
                path.push(k);
                if k == j {
                    break;
                }
                k = (k + 1) % m;
            }
            let mut k = i;
            loop {
                path.push(k);
                if k == (j + 1) % m {
                    break;
                }
                k = (k + m - 1) % m;
            }
            (path, (i + 1) % m)
        }
    }
}

fn search(
    entry: &[u8],
    first: &[u8],
    shapes: &[(Vec<usize>, Shape)],
    used: &mut Vec<bool>,
    chosen: &mut Vec<(Vec<u8>, usize)>,
    n: usize,
) -> bool {
    for (s, (rel, _)) in shapes.iter().enumerate() {
        let mut exit: Vec<u8> = rel.iter().map(|&r| entry[r]).collect();
        exit.push(entry[n - 1]);
        let mut next = exit;
        next.swap(0, n - 1);
        chosen.push((entry.to_vec(), s));
        if chosen.len() == n {
            if next == first {
                return true;
            }
        } else if !used[next[n - 1] as usize] {
            used[next[n - 1] as usize] = true;
            if search(&next, first, shapes, used, chosen, n) {
                return true;
            }
            used[next[n - 1] as usize] = false;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{hamiltonian_cycle, Budget, HamiltonStatus};

    #[test]
    fn small_cases() {
        let c2 = star_transposition_code(2).unwrap();
        assert_eq!(c2.sequence, vec![vec![0, 1], vec![1, 0]]);
        for n in 1..=7 {
            let code = star_transposition_code(n).unwrap();
            assert_eq!(code.validate(), Ok(()), "n = {n}");
        }
        assert!(star_transposition_code(MAX_PERMUTATION_SIZE + 1).is_err());
    }

    #[test]
    fn validator_rejects_bad_listings() {
        let bad = PermutationCode { n: 3, sequence: vec![vec![0, 1, 2], vec![1, 2, 0]] };
        assert!(bad.validate().is_err());
        let mut good = star_transposition_code(4).unwrap();
        good.sequence.swap(3, 7);
        assert!(good.validate().is_err());
    }

    /// The star-transposition Cayley graph of S_n.
    fn cayley(n: usize) -> (Vec<Vec<u8>>, Vec<Vec<u32>>) {
        let mut perms: Vec<Vec<u8>> = vec![(0..n as u8).collect()];
        let mut i = 0;
        let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
        index.insert(perms[0].clone(), 0);
        while i < perms.len() {
            for t in 1..n {
                let mut q = perms[i].clone();
                q.swap(0, t);
                if !index.contains_key(&q) {
                    index.insert(q.clone(), perms.len());
                    perms.push(q);
                }
            }
            i += 1;
        }
        let adj = perms
            .iter()
            .map(|p| {
                (1..n)
                    .map(|t| {
                        let mut q = p.clone();
                        q.swap(0, t);
                        index[&q] as u32
                    })
                    .collect()
            })
            .collect();
        (perms, adj)
    }

    #[test]
    fn cayley_graph_oracle_agrees() {
        for n in 3..=5 {
            let (perms, adj) = cayley(n);
            let verdict = hamiltonian_cycle(&adj, &Budget::default()).unwrap();
            assert_eq!(verdict.status, HamiltonStatus::Hamiltonian);
            let found = PermutationCode {
                n,
                sequence: verdict.cycle.unwrap().into_iter().map(|i| perms[i].clone()).collect(),
            };
            assert_eq!(found.validate(), Ok(()));
            // the constructed code is a Hamiltonian cycle of the same graph
            let code = star_transposition_code(n).unwrap();
            assert_eq!(code.sequence.len(), perms.len());
        }
    }
}
