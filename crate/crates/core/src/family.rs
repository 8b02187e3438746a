//! Textual graph specifications such as `cycle:5` or `multipartite:1,3`.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{families, graph6, SimpleGraph};
use std::fmt;
use std::str::FromStr;

/// Largest vertex count a specification may describe.
const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    /// `K_{1,m}`.
    Star(usize),
    Complete(usize),
    Multipartite(Vec<usize>),
    /// `K_{m,m}` minus a perfect matching.
    Lm(usize),
    /// The isolating construction for `(parts, localization, colors)`.
    Isolating { parts: usize, j: usize, k: usize },
    Graph6(String),
}

impl Family {
    /// The host graph, checked against the 64-vertex cap before building.
    pub fn build(&self) -> Result<SimpleGraph> {
        let too_big = || Error::Argument(format!("{self} has more than {MAX_VERTICES} vertices"));
        let check = |n: Option<usize>| n.filter(|&n| n <= MAX_VERTICES).ok_or_else(too_big);
        match self {
            Family::Path(n) => families::path(check(Some(*n))?),
            Family::Cycle(n) => families::cycle(check(Some(*n))?),
            Family::Star(m) => families::star(check(m.checked_add(1))? - 1),
            Family::Complete(n) => families::complete(check(Some(*n))?),
            Family::Multipartite(parts) => {
                check(parts.iter().try_fold(0usize, |acc, &m| acc.checked_add(m)))?;
                families::complete_multipartite(parts)
            }
            Family::Lm(m) => families::lm(check(m.checked_mul(2))? / 2),
            Family::Isolating { .. } => Ok(self.isolating()?.0),
            Family::Graph6(text) => graph6::from_graph6(text.as_bytes()),
        }
    }

    /// The isolating construction together with its distinguished coloring.
    pub fn isolating(&self) -> Result<(SimpleGraph, Coloring)> {
        let Family::Isolating { parts, j, k } = *self else {
            return Err(Error::Argument(format!("{self} is not an isolating construction")));
        };
        let n = if parts == k {
            j.div_ceil(2).checked_mul(parts)
        } else {
            j.div_ceil(parts.max(1)).checked_mul(k).and_then(|s| s.checked_mul(parts))
        };
        if n.is_none_or(|n| n > MAX_VERTICES) {
            return Err(Error::Argument(format!("{self} has more than {MAX_VERTICES} vertices")));
        }
        families::isolating_graph(parts, j, k)
    }

    /// Part sizes when the graph is complete multipartite.
    pub fn parts(&self) -> Option<Vec<usize>> {
        match self {
            Family::Multipartite(p) => Some(p.clone()),
            Family::Complete(n) => Some(vec![1; *n]),
            Family::Star(m) => Some(vec![1, *m]),
            _ => None,
        }
    }
}

fn numbers(name: &str, args: &str) -> Result<Vec<usize>> {
    if args.is_empty() {
        return Err(Error::Parse(format!("{name} needs arguments")));
    }
    args.split(',')
        .map(|a| {
            a.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{name}: {a:?} is not a count")))
        })
        .collect()
}

fn one(name: &str, args: &str) -> Result<usize> {
    match numbers(name, args)?.as_slice() {
        [n] => Ok(*n),
        other => Err(Error::Parse(format!("{name} takes one count, got {}", other.len()))),
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("{s:?} is not of the form name:arguments")))?;
        let name = name.trim();
        let family = match name.to_ascii_lowercase().as_str() {
            "path" => Family::Path(one(name, args)?),
            "cycle" => Family::Cycle(one(name, args)?),
            "star" => Family::Star(one(name, args)?),
            "complete" => Family::Complete(one(name, args)?),
            "multipartite" => Family::Multipartite(numbers(name, args)?),
            "lm" => Family::Lm(one(name, args)?),
            "l" | "isolating" => match numbers(name, args)?.as_slice() {
                &[parts, j, k] => Family::Isolating { parts, j, k },
                _ => return Err(Error::Parse(format!("{name} takes parts,j,k"))),
            },
            "graph6" | "g6" => Family::Graph6(args.trim().to_string()),
            _ => return Err(Error::Parse(format!("unknown family {name:?}"))),
        };
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Star(m) => write!(f, "star:{m}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Multipartite(p) => {
                let parts: Vec<String> = p.iter().map(|m| m.to_string()).collect();
                write!(f, "multipartite:{}", parts.join(","))
            }
            Family::Lm(m) => write!(f, "Lm:{m}"),
            Family::Isolating { parts, j, k } => write!(f, "L:{parts},{j},{k}"),
            Family::Graph6(s) => write!(f, "graph6:{s}"),
        }
    }
}
