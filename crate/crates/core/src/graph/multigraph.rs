//! Multigraphs with loops, their subdivisions, and a small text format.
//!
//! Text format: the vertex count, then one edge per item as `u v` followed
//! by an optional subdivision count written `xC` or `C` (default 0). Items
//! are separated by newlines or `;`, and `#` starts a comment:
//!
//! ```text
//! 2; 0 1 x3; 0 1 x3
//! ```

use super::SimpleGraph;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt::Write as _;

const MAX_EDGES: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// One subdivision count per multigraph edge, in edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionSpec {
    pub counts: Vec<usize>,
}

impl SubdivisionSpec {
    pub fn uniform(m: &MultiGraph, count: usize) -> Self {
        SubdivisionSpec {
            counts: vec![count; m.edge_count()],
        }
    }
}

impl MultiGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n > SimpleGraph::MAX_VERTICES {
            return Err(Error::Graph(format!("{n} vertices exceeds the cap")));
        }
        Ok(MultiGraph { n, edges: Vec::new() })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut m = Self::new(n)?;
        for &(u, v) in edges {
            m.add_edge(u, v)?;
        }
        Ok(m)
    }

    /// Edges are stored with the smaller endpoint first; loops are `(v, v)`.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Graph(format!("edge {u}-{v} out of range for {} vertices", self.n)));
        }
        if self.edges.len() >= MAX_EDGES {
            return Err(Error::Graph(format!("more than {MAX_EDGES} edges")));
        }
        self.edges.push((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// Replaces each edge by a path through its count of new vertices. New
    /// vertices are numbered from `n` upward, edge by edge in input order,
    /// running from the smaller endpoint to the larger.
    pub fn subdivide(&self, spec: &SubdivisionSpec) -> Result<SimpleGraph> {
        let paths = self.subdivision_paths(spec)?;
        let total = self.n + spec.counts.iter().sum::<usize>();
        let mut g = SimpleGraph::new(total)?;
        for (&(u, v), inner) in self.edges.iter().zip(&paths) {
            let mut prev = u;
            for &w in inner {
                g.add_edge(prev, w)?;
                prev = w;
            }
            g.add_edge(prev, v)?;
        }
        Ok(g)
    }

    /// The internal path vertices of each edge after subdivision.
    pub fn subdivision_paths(&self, spec: &SubdivisionSpec) -> Result<Vec<Vec<usize>>> {
        self.check_spec(spec)?;
        let mut next = self.n;
        Ok(spec
            .counts
            .iter()
            .map(|&c| {
                let p = (next..next + c).collect();
                next += c;
                p
            })
            .collect())
    }

    fn check_spec(&self, spec: &SubdivisionSpec) -> Result<()> {
        if spec.counts.len() != self.edges.len() {
            return Err(Error::Argument(format!(
                "{} subdivision counts for {} edges",
                spec.counts.len(),
                self.edges.len()
            )));
        }
        let total = spec.counts.iter().try_fold(self.n, |acc, &c| acc.checked_add(c));
        if total.is_none_or(|t| t > SimpleGraph::MAX_VERTICES) {
            return Err(Error::Graph("subdivision exceeds the 64-vertex cap".into()));
        }
        let mut direct: HashMap<(usize, usize), usize> = HashMap::new();
        for (i, (&(u, v), &c)) in self.edges.iter().zip(&spec.counts).enumerate() {
            if u == v && c < 2 {
                return Err(Error::Argument(format!(
                    "loop {i} at vertex {u} needs at least 2 subdivisions, got {c}"
                )));
            }
            if u != v && c == 0 {
                *direct.entry((u, v)).or_default() += 1;
            }
        }
        if let Some((&(u, v), _)) = direct.iter().find(|(_, &k)| k > 1) {
            return Err(Error::Argument(format!(
                "parallel edges {u}-{v} left unsubdivided would not be simple"
            )));
        }
        Ok(())
    }
}

/// Parses the text format into a multigraph and its subdivision counts.
pub fn parse_multigraph(text: &str) -> Result<(MultiGraph, SubdivisionSpec)> {
    let mut items = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(';'))
        .map(str::trim)
        .filter(|s| !s.is_empty());
    let err = |msg: String| Error::Parse(format!("multigraph: {msg}"));
    let first = items.next().ok_or_else(|| err("missing vertex count".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| err(format!("bad vertex count {first:?}")))?;
    let mut m = MultiGraph::new(n).map_err(|e| err(e.to_string()))?;
    let mut counts = Vec::new();
    for item in items {
        let tokens: Vec<&str> = item.split_whitespace().collect();
        let (u, v, c) = match tokens.as_slice() {
            [u, v] => (*u, *v, None),
            [u, v, c] => (*u, *v, Some(*c)),
            _ => return Err(err(format!("expected `u v [xcount]`, got {item:?}"))),
        };
        let vertex = |t: &str| t.parse::<usize>().map_err(|_| err(format!("bad vertex {t:?}")));
        let (u, v) = (vertex(u)?, vertex(v)?);
        let count = match c {
            None => 0,
            Some(c) => {
                let digits = c.strip_prefix('x').unwrap_or(c);
                let c: usize = digits.parse().map_err(|_| err(format!("bad count {c:?}")))?;
                if c > SimpleGraph::MAX_VERTICES {
                    return Err(err(format!("count {c} exceeds the vertex cap")));
                }
                c
            }
        };
        m.add_edge(u, v).map_err(|e| err(e.to_string()))?;
        counts.push(count);
    }
    Ok((m, SubdivisionSpec { counts }))
}

pub fn to_text(m: &MultiGraph, spec: &SubdivisionSpec) -> String {
    let mut s = format!("{}\n", m.n());
    for (&(u, v), c) in m.edges().iter().zip(&spec.counts) {
        writeln!(s, "{u} {v} x{c}").unwrap();
    }
    s
}
