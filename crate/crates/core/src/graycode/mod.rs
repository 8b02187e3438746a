//! Explicit cyclic Gray codes of proper colorings, and their validator.

mod degeneracy;
mod extend;
pub mod fixtures;
pub mod hypercube;
mod multipartite;
pub mod permutation;
mod product;
mod search;
pub mod subdivision;

pub use degeneracy::degeneracy_code;
pub use extend::{extend_cycle, ExtendMode};
pub use hypercube::{antipodal_gray_path, reflected_gray_cycle, HypercubeCode};
pub use multipartite::{multipartite_code_k, multipartite_code_kplus1};
pub use permutation::{star_transposition_code, PermutationCode};
pub use product::product_code;
pub use search::searched_code;
pub use subdivision::{subdivided_h3_code, subdivided_h4_code, subdivision_ladder, SubdivisionLadder};

use crate::coloring::{count_colorings, Coloring};
use crate::graph::{min_connected_cover_within, SimpleGraph};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;

/// A cyclic listing of all proper `k`-colorings of `host` in which cyclically
/// consecutive colorings are adjacent in the `j`-localized coloring graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicGrayCode {
    pub host: SimpleGraph,
    pub k: usize,
    pub j: usize,
    pub sequence: Vec<Coloring>,
}

impl CyclicGrayCode {
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// One coloring per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.sequence {
            s.push_str(&c.to_string());
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "graph": crate::graph::graph6::to_graph6(&self.host),
            "k": self.k,
            "j": self.j,
            "length": self.sequence.len(),
            "sequence": self.sequence.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    /// The same code with its sequence rotated to start at `start`.
    pub fn rotated(&self, start: usize) -> CyclicGrayCode {
        let mut sequence = self.sequence.clone();
        if !sequence.is_empty() {
            sequence.rotate_left(start % self.sequence.len());
        }
        CyclicGrayCode { sequence, ..self.clone() }
    }
}

/// The first way a listing fails to be a cyclic Gray code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// Entry has the wrong length, a color outside the palette, or a monochromatic edge.
    Improper { index: usize, coloring: String },
    /// Entry repeats an earlier one.
    Duplicate { index: usize, first: usize, coloring: String },
    /// Fewer distinct colorings than the host has.
    Missing { expected: u64, found: usize },
    /// Entry `index` and its cyclic successor are not adjacent.
    NotAdjacent { index: usize, diff: Vec<usize> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Improper { index, coloring } => {
                write!(f, "entry {index} ({coloring}) is not a proper coloring")
            }
            Violation::Duplicate { index, first, coloring } => {
                write!(f, "entry {index} ({coloring}) repeats entry {first}")
            }
            Violation::Missing { expected, found } => {
                write!(f, "listing has {found} colorings, host has {expected}")
            }
            Violation::NotAdjacent { index, diff } => {
                write!(f, "entries {index} and its successor differ on {diff:?}, which no small connected subgraph covers")
            }
        }
    }
}

impl std::error::Error for Violation {}

/// Checks that `code` lists every proper coloring exactly once with
/// cyclically consecutive entries adjacent. Reports the first offending
/// index. A listing of one coloring is a valid (degenerate) cycle.
pub fn validate_code(code: &CyclicGrayCode) -> Result<(), Violation> {
    let host = &code.host;
    let mut seen: HashMap<&[u8], usize> = HashMap::with_capacity(code.sequence.len());
    for (index, c) in code.sequence.iter().enumerate() {
        if c.len() != host.n() || c.palette_lower_bound() > code.k || !c.is_proper(host) {
            return Err(Violation::Improper { index, coloring: c.to_string() });
        }
        if let Some(&first) = seen.get(c.colors()) {
            return Err(Violation::Duplicate { index, first, coloring: c.to_string() });
        }
        seen.insert(c.colors(), index);
    }
    let expected = count_colorings(host, code.k);
    if expected != code.sequence.len() as u64 {
        return Err(Violation::Missing { expected, found: code.sequence.len() });
    }
    let len = code.sequence.len();
    if len < 2 {
        return Ok(());
    }
    let first_bad = (0..len).into_par_iter().find_first(|&i| {
        let a = &code.sequence[i];
        let b = &code.sequence[(i + 1) % len];
        !step_ok(host, code.j, a, b)
    });
    match first_bad {
        None => Ok(()),
        Some(index) => {
            let diff = code.sequence[index]
                .diff(&code.sequence[(index + 1) % len])
                .map(|d| d.iter().collect())
                .unwrap_or_default();
            Err(Violation::NotAdjacent { index, diff })
        }
    }
}

fn step_ok(host: &SimpleGraph, j: usize, a: &Coloring, b: &Coloring) -> bool {
    match a.diff(b) {
        Ok(d) if !d.is_empty() => matches!(min_connected_cover_within(host, d, j), Ok(Some(_))),
        _ => false,
    }
}

/// Places a coloring of an induced subgraph (vertex `i` is `map[i]`) into a
/// full-length color vector.
pub(crate) fn scatter(into: &mut [u8], map: &[usize], colors: &[u8]) {
    for (&v, &c) in map.iter().zip(colors) {
        into[v] = c;
    }
}
