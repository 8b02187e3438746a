//! Hamiltonian cycles and antipodal Hamiltonian paths in the hypercube over a
//! two-letter alphabet `{b, c}`.

use crate::error::{Error, Result};

/// A listing of `n`-letter strings over `{b, c}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypercubeCode {
    pub n: usize,
    pub b: u8,
    pub c: u8,
    pub sequence: Vec<Vec<u8>>,
    /// Whether the listing is meant as a cycle (otherwise a path).
    pub cyclic: bool,
}

impl HypercubeCode {
    /// Checks that every string over `{b, c}` appears once, consecutive
    /// strings differ in one letter, and (for cycles) the last and first do
    /// too. Returns the first bad index.
    pub fn validate(&self) -> std::result::Result<(), usize> {
        let mut seen = std::collections::HashSet::new();
        for (i, s) in self.sequence.iter().enumerate() {
            if s.len() != self.n || s.iter().any(|&x| x != self.b && x != self.c) || !seen.insert(s) {
                return Err(i);
            }
        }
        if self.sequence.len() != 1usize << self.n {
            return Err(self.sequence.len());
        }
        let len = self.sequence.len();
        let steps = if self.cyclic { len } else { len - 1 };
        for i in 0..steps {
            let a = &self.sequence[i];
            let z = &self.sequence[(i + 1) % len];
            if a.iter().zip(z).filter(|(x, y)| x != y).count() != 1 {
                return Err(i);
            }
        }
        Ok(())
    }
}

fn letters(bits: usize, n: usize, b: u8, c: u8) -> Vec<u8> {
    (0..n).map(|i| if bits >> (n - 1 - i) & 1 == 1 { c } else { b }).collect()
}

/// The reflected binary Gray cycle, starting at `b…b`.
pub fn reflected_gray_cycle(n: usize, b: u8, c: u8) -> Result<HypercubeCode> {
    if n < 2 {
        return Err(Error::Argument(format!("the {n}-cube has no Hamiltonian cycle")));
    }
    if b == c {
        return Err(Error::Argument("the two letters must differ".into()));
    }
    if n > 24 {
        return Err(Error::Unsupported(format!("{n}-cube listings are too large")));
    }
    let sequence = (0..1usize << n).map(|i| letters(i ^ (i >> 1), n, b, c)).collect();
    Ok(HypercubeCode { n, b, c, sequence, cyclic: true })
}

/// A Hamiltonian path from `b…b` to `c…c`. These exist exactly for odd `n`
/// (the endpoints lie in the same bipartition class when `n` is even).
///
/// Built two dimensions at a time: given the path `p` for `n`, the path for
/// `n + 2` snakes through `p_0 … p_{N-3}` crossed with the 2-cube, then
/// finishes on the 3-cube spanned by the last two strings of `p` and the two
/// new letters, going from `(p_{N-2}, bb)` to `(p_{N-1}, cc)`.
pub fn antipodal_gray_path(n: usize, b: u8, c: u8) -> Result<HypercubeCode> {
    if n.is_multiple_of(2) {
        return Err(Error::Argument(format!(
            "no Hamiltonian path joins the constant strings of the {n}-cube: they lie on the same side of its bipartition, which happens exactly when n is even"
        )));
    }
    if b == c {
        return Err(Error::Argument("the two letters must differ".into()));
    }
    if n > 23 {
        return Err(Error::Unsupported(format!("{n}-cube listings are too large")));
    }
    // work over bits 0 = b, 1 = c, high bit first
    let mut path: Vec<Vec<u8>> = vec![vec![0], vec![1]];
    let square: [[u8; 2]; 4] = [[0, 0], [0, 1], [1, 1], [1, 0]];
    // (selector, two new letters) for the final 3-cube, from 0bb to 1cc
    let cube: [[u8; 3]; 8] = [
        [0, 0, 0],
        [0, 0, 1],
        [0, 1, 1],
        [0, 1, 0],
        [1, 1, 0],
        [1, 0, 0],
        [1, 0, 1],
        [1, 1, 1],
    ];
    let mut dim = 1;
    while dim < n {
        let len = path.len();
        let mut next = Vec::with_capacity(len * 4);
        for (i, p) in path[..len - 2].iter().enumerate() {
            let order: Vec<&[u8; 2]> = if i % 2 == 0 {
                square.iter().collect()
            } else {
                square.iter().rev().collect()
            };
            for q in order {
                let mut s = p.clone();
                s.extend_from_slice(q);
                next.push(s);
            }
        }
        for t in cube {
            let mut s = path[len - 2 + t[0] as usize].clone();
            s.extend_from_slice(&t[1..]);
            next.push(s);
        }
        path = next;
        dim += 2;
    }
    let sequence = path
        .into_iter()
        .map(|s| s.into_iter().map(|x| if x == 0 { b } else { c }).collect())
        .collect();
    Ok(HypercubeCode { n, b, c, sequence, cyclic: false })
}
