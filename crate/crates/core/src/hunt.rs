//! Searches graph corpora for graphs whose Gray code number grows with the
//! palette, and for once-subdivided graphs beyond the conjectured bounds
//! `h_3 <= 2`, `h_4 = 1`.
//!
//! Graphs are evaluated independently in parallel and reported in input
//! order. Instances that exhaust the budget are listed as undecided and
//! never reported as findings.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{generate, graph6, MultiGraph, SimpleGraph, SubdivisionSpec};
use crate::graycode::{validate_code, CyclicGrayCode};
use crate::solver::{compute_g, is_hamiltonian_at, Budget, HStrategy};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HuntPredicate {
    /// `h_k(H) < h_{k+1}(H)` for some `k` in range.
    GrayNumberIncrease,
    /// Subdividing every edge of `H` once gives a graph with `h_3 > 2` or
    /// `h_4 > 1`.
    SubdivisionBounds,
}

#[derive(Clone, Debug)]
pub struct HuntTask {
    pub graphs: Vec<SimpleGraph>,
    pub k_min: usize,
    pub k_max: usize,
    pub predicate: HuntPredicate,
    pub budget: Budget,
}

/// Every graph on at most `max_n` vertices, one per isomorphism class.
pub fn small_graph_corpus(max_n: usize) -> Result<Vec<SimpleGraph>> {
    if max_n > 7 {
        return Err(Error::Argument(format!(
            "generated corpora stop at 7 vertices, got {max_n}; pass graph6 input instead"
        )));
    }
    Ok((1..=max_n).flat_map(generate::small_graphs).collect())
}

/// One evaluated `(graph, k)` pair: the raw numbers behind the verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntEntry {
    pub graph: String,
    pub n: usize,
    pub degeneracy: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<usize>,
    /// For subdivision bounds: the localization tested and whether the
    /// coloring graph is Hamiltonian there.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tested_j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hamiltonian: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub undecided: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub predicate: HuntPredicate,
    /// graph6 of the graph the claim is about (the subdivided graph for
    /// subdivision bounds).
    pub graph: String,
    pub k: usize,
    pub j: usize,
    pub detail: String,
    /// For a Gray code number increase: a Hamiltonian cycle at `(k, j)`,
    /// listed as color strings; `(k + 1, j)` is claimed non-Hamiltonian.
    pub cycle: Option<Vec<String>>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct HuntOutcome {
    pub entries: Vec<HuntEntry>,
    pub findings: Vec<Finding>,
}

impl HuntOutcome {
    pub fn undecided(&self) -> impl Iterator<Item = &HuntEntry> {
        self.entries.iter().filter(|e| e.undecided.is_some())
    }
}

pub fn run_hunt(task: &HuntTask) -> Result<HuntOutcome> {
    if task.k_min > task.k_max {
        return Err(Error::Argument(format!("empty palette range {}..={}", task.k_min, task.k_max)));
    }
    let per_graph: Vec<Result<HuntOutcome>> = task
        .graphs
        .par_iter()
        .map(|g| match task.predicate {
            HuntPredicate::GrayNumberIncrease => increase(g, task),
            HuntPredicate::SubdivisionBounds => subdivision_bounds(g, &task.budget),
        })
        .collect();
    let mut out = HuntOutcome::default();
    for r in per_graph {
        let r = r?;
        out.entries.extend(r.entries);
        out.findings.extend(r.findings);
    }
    Ok(out)
}

fn entry(g: &SimpleGraph, k: usize) -> HuntEntry {
    HuntEntry {
        graph: graph6::to_graph6(g),
        n: g.n(),
        degeneracy: g.degeneracy(),
        k,
        g: None,
        h: None,
        tested_j: None,
        hamiltonian: None,
        undecided: None,
    }
}

/// Least `j` with a Hamiltonian `j`-localized graph, with its cycle.
fn least_hamiltonian(g: &SimpleGraph, k: usize, budget: &Budget) -> Result<(usize, Vec<Coloring>)> {
    for j in 1..=g.n().max(1) {
        let colorings = crate::coloring::LocalizedColoringGraph::build(g, k, j, budget)?;
        let verdict = is_hamiltonian_at(g, k, j, budget, HStrategy::PreferConstruction)?;
        if let Some(cycle) = verdict.cycle {
            return Ok((j, cycle.into_iter().map(|i| colorings.coloring(i)).collect()));
        }
    }
    Err(Error::Internal("coloring graph not Hamiltonian at full localization".into()))
}

fn increase(g: &SimpleGraph, task: &HuntTask) -> Result<HuntOutcome> {
    let chi = g.chromatic_number().max(1);
    let mut out = HuntOutcome::default();
    let mut previous: Option<(usize, Vec<Coloring>)> = None;
    for k in task.k_min.max(chi)..=task.k_max + 1 {
        let mut e = entry(g, k);
        let h = match compute_g(g, k, &task.budget).and_then(|gk| Ok((gk, least_hamiltonian(g, k, &task.budget)?))) {
            Ok((gk, h)) => {
                e.g = Some(gk);
                e.h = Some(h.0);
                Some(h)
            }
            Err(err) if err.is_undecided() => {
                e.undecided = Some(err.to_string());
                None
            }
            Err(err) => return Err(err),
        };
        if let (Some((hk, cycle)), Some((hnext, _))) = (&previous, &h) {
            if hk < hnext {
                out.findings.push(Finding {
                    predicate: HuntPredicate::GrayNumberIncrease,
                    graph: e.graph.clone(),
                    k: k - 1,
                    j: *hk,
                    detail: format!("h_{}(H) = {hk} < h_{k}(H) = {hnext}", k - 1),
                    cycle: Some(cycle.iter().map(|c| c.to_string()).collect()),
                });
            }
        }
        if k <= task.k_max {
            out.entries.push(e);
        }
        previous = h;
    }
    Ok(out)
}

/// `g` with every edge subdivided once.
pub fn subdivide_once(g: &SimpleGraph) -> Result<SimpleGraph> {
    let m = MultiGraph::from_edges(g.n(), &g.edges())?;
    m.subdivide(&SubdivisionSpec::uniform(&m, 1))
}

fn subdivision_bounds(g: &SimpleGraph, budget: &Budget) -> Result<HuntOutcome> {
    let h = subdivide_once(g)?;
    let mut out = HuntOutcome::default();
    for (k, j) in [(3, 2), (4, 1)] {
        let mut e = entry(&h, k);
        e.tested_j = Some(j);
        match is_hamiltonian_at(&h, k, j, budget, HStrategy::PreferConstruction) {
            Ok(v) => {
                e.hamiltonian = Some(v.is_hamiltonian());
                if !v.is_hamiltonian() {
                    out.findings.push(Finding {
                        predicate: HuntPredicate::SubdivisionBounds,
                        graph: e.graph.clone(),
                        k,
                        j,
                        detail: format!(
                            "subdividing {} once: the {j}-localized {k}-coloring graph is not Hamiltonian ({})",
                            graph6::to_graph6(g),
                            v.reason.unwrap_or_default()
                        ),
                        cycle: None,
                    });
                }
            }
            Err(err) if err.is_undecided() => e.undecided = Some(err.to_string()),
            Err(err) => return Err(err),
        }
        out.entries.push(e);
    }
    Ok(out)
}

/// Re-establishes a finding from its own data by an independent route: the
/// listed cycle is validated colorings-first, and refutations are re-decided
/// by plain search without shortcuts.
pub fn recheck(finding: &Finding, budget: &Budget) -> Result<bool> {
    let host = graph6::from_graph6(finding.graph.as_bytes())?;
    let refuted_k = match finding.predicate {
        HuntPredicate::GrayNumberIncrease => {
            let Some(cycle) = &finding.cycle else {
                return Ok(false);
            };
            let sequence = cycle.iter().map(|s| Coloring::parse(s)).collect::<Result<Vec<_>>>()?;
            let code = CyclicGrayCode { host: host.clone(), k: finding.k, j: finding.j, sequence };
            if validate_code(&code).is_err() {
                return Ok(false);
            }
            finding.k + 1
        }
        HuntPredicate::SubdivisionBounds => finding.k,
    };
    let verdict = is_hamiltonian_at(&host, refuted_k, finding.j, budget, HStrategy::SearchOnly)?;
    Ok(!verdict.is_hamiltonian())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn task(graphs: Vec<SimpleGraph>, k_min: usize, k_max: usize, predicate: HuntPredicate) -> HuntTask {
        HuntTask { graphs, k_min, k_max, predicate, budget: Budget::default() }
    }

    #[test]
    fn path_on_three_vertices_decreases() {
        let out = run_hunt(&task(vec![families::star(2).unwrap()], 3, 3, HuntPredicate::GrayNumberIncrease)).unwrap();
        assert!(out.findings.is_empty());
        assert_eq!(out.entries.len(), 1);
        assert_eq!((out.entries[0].g, out.entries[0].h), (Some(1), Some(2)));
    }

    #[test]
    fn corpus_sizes() {
        let sizes: Vec<usize> = (1..=5).map(|n| generate::small_graphs(n).len()).collect();
        assert_eq!(sizes, vec![1, 2, 4, 11, 34]);
        assert_eq!(small_graph_corpus(4).unwrap().len(), 18);
        assert!(small_graph_corpus(8).is_err());
    }

    #[test]
    fn findings_recheck() {
        // the listed 2-colorings of P_3 do not form a cycle at j = 1
        let p3 = families::path(3).unwrap();
        let bogus = Finding {
            predicate: HuntPredicate::GrayNumberIncrease,
            graph: graph6::to_graph6(&p3),
            k: 2,
            j: 1,
            detail: String::new(),
            cycle: Some(vec!["121".into(), "212".into()]),
        };
        assert!(!recheck(&bogus, &Budget::default()).unwrap());
        let genuine = Finding {
            predicate: HuntPredicate::SubdivisionBounds,
            graph: graph6::to_graph6(&p3),
            k: 3,
            j: 1,
            detail: String::new(),
            cycle: None,
        };
        // G^1_3(P_3) really is not Hamiltonian
        assert!(recheck(&genuine, &Budget::default()).unwrap());
    }

    #[test]
    fn subdivided_triangle_meets_bounds() {
        let out = run_hunt(&task(vec![families::complete(3).unwrap()], 3, 4, HuntPredicate::SubdivisionBounds)).unwrap();
        assert!(out.findings.is_empty());
        assert_eq!(out.entries.len(), 2);
        assert!(out.entries.iter().all(|e| e.hamiltonian == Some(true) && e.n == 6));
    }

    #[test]
    fn input_order_is_kept() {
        let graphs = vec![families::cycle(4).unwrap(), families::path(2).unwrap(), families::cycle(5).unwrap()];
        let out = run_hunt(&task(graphs.clone(), 3, 3, HuntPredicate::GrayNumberIncrease)).unwrap();
        let names: Vec<String> = graphs.iter().map(graph6::to_graph6).collect();
        let seen: Vec<String> = out.entries.iter().map(|e| e.graph.clone()).collect();
        assert_eq!(seen, names);
    }
}
