use super::hamilton::{hamiltonian_cycle, HamiltonStatus, HamiltonicityVerdict};
use super::Budget;
use crate::coloring::{Coloring, LocalizedColoringGraph};
use crate::error::{Error, Result};
use crate::graph::{graph6, SimpleGraph};
use crate::graycode::{degeneracy_code, validate_code};
use rayon::prelude::*;
use serde::Serialize;

/// Spanning-tree certificates are omitted above this many nodes.
const CERTIFICATE_NODE_LIMIT: usize = 100_000;

/// How Hamiltonicity is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HStrategy {
    /// Backtracking search only.
    SearchOnly,
    /// At `j = 1` with `k >= degeneracy + 3`, use the vertex-by-vertex
    /// construction as the (validated) certificate; search otherwise.
    PreferConstruction,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelReport {
    pub j: usize,
    pub connected: bool,
    /// BFS parent of every node (the root is its own parent).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spanning_tree: Option<Vec<u32>>,
    /// `None` when Hamiltonicity was not decided at this level.
    pub hamiltonian: Option<HamiltonStatus>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ParameterReport {
    pub graph: String,
    pub n: usize,
    pub k: usize,
    pub colorings: usize,
    pub g: Option<usize>,
    pub h: Option<usize>,
    pub levels: Vec<LevelReport>,
    /// For disconnected hosts, the Gray code number of each component.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub component_h: Option<Vec<Option<usize>>>,
    pub undecided: bool,
}

fn check_palette(h: &SimpleGraph, k: usize) -> Result<()> {
    let chi = h.chromatic_number();
    if k < chi || k == 0 {
        return Err(Error::Argument(format!(
            "{k} colors is below the chromatic number {chi}"
        )));
    }
    Ok(())
}

/// Least `j` with the `j`-localized `k`-coloring graph connected.
pub fn compute_g(h: &SimpleGraph, k: usize, budget: &Budget) -> Result<usize> {
    check_palette(h, k)?;
    let mut g = LocalizedColoringGraph::build(h, k, 1, budget)?;
    for j in 1..=h.n().max(1) {
        if j > 1 {
            g = g.with_localization(j);
        }
        if g.is_connected() {
            return Ok(j);
        }
    }
    Err(Error::Internal("coloring graph disconnected at full localization".into()))
}

/// Least `j` with the `j`-localized `k`-coloring graph Hamiltonian.
pub fn compute_h(h: &SimpleGraph, k: usize, budget: &Budget) -> Result<usize> {
    compute_h_with(h, k, budget, HStrategy::PreferConstruction)
}

pub fn compute_h_with(h: &SimpleGraph, k: usize, budget: &Budget, strategy: HStrategy) -> Result<usize> {
    check_palette(h, k)?;
    let mut g = LocalizedColoringGraph::build(h, k, 1, budget)?;
    for j in 1..=h.n().max(1) {
        if j > 1 {
            g = g.with_localization(j);
        }
        if hamiltonicity(&g, strategy, budget)?.is_hamiltonian() {
            return Ok(j);
        }
    }
    Err(Error::Internal("coloring graph not Hamiltonian at full localization".into()))
}

/// Hamiltonicity of one localized coloring graph.
pub fn is_hamiltonian_at(
    h: &SimpleGraph,
    k: usize,
    j: usize,
    budget: &Budget,
    strategy: HStrategy,
) -> Result<HamiltonicityVerdict> {
    let g = LocalizedColoringGraph::build(h, k, j, budget)?;
    hamiltonicity(&g, strategy, budget)
}

fn hamiltonicity(g: &LocalizedColoringGraph, strategy: HStrategy, budget: &Budget) -> Result<HamiltonicityVerdict> {
    if g.node_count() > 2 && !g.is_connected() {
        return Ok(HamiltonicityVerdict {
            status: HamiltonStatus::NotHamiltonian,
            cycle: None,
            reason: Some("disconnected".into()),
        });
    }
    let host = g.host();
    if strategy == HStrategy::PreferConstruction
        && g.j() == 1
        && g.node_count() > 2
        && g.k() >= host.degeneracy() + 3
    {
        let code = degeneracy_code(host, g.k(), budget)?;
        validate_code(&code).map_err(|v| Error::Internal(v.to_string()))?;
        let cycle = code
            .sequence
            .iter()
            .map(|c| g.index_of(c).expect("validated colorings are enumerated"))
            .collect();
        return Ok(HamiltonicityVerdict {
            status: HamiltonStatus::Hamiltonian,
            cycle: Some(cycle),
            reason: None,
        });
    }
    hamiltonian_cycle(g.adjacency(), budget)
}

fn level_report(
    g: &LocalizedColoringGraph,
    decide_hamiltonicity: bool,
    strategy: HStrategy,
    budget: &Budget,
) -> Result<LevelReport> {
    let connected = g.is_connected();
    let spanning_tree = (connected && g.node_count() <= CERTIFICATE_NODE_LIMIT && g.node_count() > 0)
        .then(|| g.bfs_parents(0).into_iter().map(|p| p.unwrap()).collect());
    let mut report = LevelReport {
        j: g.j(),
        connected,
        spanning_tree,
        hamiltonian: None,
        cycle: None,
        note: None,
    };
    if decide_hamiltonicity {
        match hamiltonicity(g, strategy, budget) {
            Ok(v) => {
                report.hamiltonian = Some(v.status);
                report.cycle = v
                    .cycle
                    .map(|c| c.into_iter().map(|i| g.coloring(i).to_string()).collect());
                report.note = v.reason;
            }
            Err(e) if e.is_undecided() => report.note = Some(e.to_string()),
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Per-level connectivity and Hamiltonicity with certificates. With `only_j`
/// a single level is reported; otherwise levels run from 1 until the graph is
/// Hamiltonian (or a level is undecided).
pub fn parameter_report(h: &SimpleGraph, k: usize, only_j: Option<usize>, budget: &Budget) -> Result<ParameterReport> {
    check_palette(h, k)?;
    let strategy = HStrategy::PreferConstruction;
    let base = LocalizedColoringGraph::build(h, k, only_j.unwrap_or(1), budget)?;
    let mut report = ParameterReport {
        graph: graph6::to_graph6(h),
        n: h.n(),
        k,
        colorings: base.node_count(),
        g: None,
        h: None,
        levels: Vec::new(),
        component_h: None,
        undecided: false,
    };
    if let Some(j) = only_j {
        if j == 0 {
            return Err(Error::Argument("localization must be at least 1".into()));
        }
        let level = level_report(&base, true, strategy, budget)?;
        report.undecided = level.hamiltonian.is_none();
        report.levels.push(level);
        return Ok(report);
    }
    let mut g = base;
    for j in 1..=h.n().max(1) {
        if j > 1 {
            g = g.with_localization(j);
        }
        let level = level_report(&g, true, strategy, budget)?;
        if level.connected && report.g.is_none() {
            report.g = Some(j);
        }
        let status = level.hamiltonian;
        report.levels.push(level);
        match status {
            None => {
                report.undecided = true;
                break;
            }
            Some(s) if s != HamiltonStatus::NotHamiltonian => {
                report.h = Some(j);
                break;
            }
            Some(_) => {}
        }
    }
    let comps = h.components();
    if comps.len() > 1 {
        let per: Vec<Option<usize>> = comps
            .iter()
            .map(|&c| {
                let (sub, _) = h.induced_subgraph(c);
                compute_h(&sub, k, budget).ok()
            })
            .collect();
        report.component_h = Some(per);
    }
    Ok(report)
}

/// Least `K` in `[χ, d+2]` such that the 1-localized graph is connected for
/// every tested `k >= K`; larger palettes are covered by the degeneracy bound.
pub fn mixing_number_k1(h: &SimpleGraph, budget: &Budget) -> Result<usize> {
    threshold(h, h.degeneracy() + 2, budget, |g| Ok(g.is_connected()))
}

/// As [`mixing_number_k1`] for Hamiltonicity, testing `k` up to `d+3`.
pub fn graycode_number_k0(h: &SimpleGraph, budget: &Budget) -> Result<usize> {
    threshold(h, h.degeneracy() + 3, budget, |g| {
        Ok(hamiltonicity(g, HStrategy::PreferConstruction, budget)?.is_hamiltonian())
    })
}

fn threshold<F>(h: &SimpleGraph, top: usize, budget: &Budget, holds: F) -> Result<usize>
where
    F: Fn(&LocalizedColoringGraph) -> Result<bool> + Sync,
{
    let chi = h.chromatic_number().max(1);
    let verdicts: Vec<Result<bool>> = (chi..=top)
        .into_par_iter()
        .map(|k| holds(&LocalizedColoringGraph::build(h, k, 1, budget)?))
        .collect();
    let mut least = chi;
    for (k, v) in (chi..=top).zip(verdicts) {
        if !v? {
            least = k + 1;
        }
    }
    Ok(least)
}

/// Shortest recoloring sequence from `from` to `to`, or `None` if separated.
pub fn reconfiguration_path(
    h: &SimpleGraph,
    k: usize,
    j: usize,
    from: &Coloring,
    to: &Coloring,
    budget: &Budget,
) -> Result<Option<Vec<Coloring>>> {
    for c in [from, to] {
        if !c.is_proper(h) || c.palette_lower_bound() > k {
            return Err(Error::Argument(format!("{c} is not a proper {k}-coloring")));
        }
    }
    let g = LocalizedColoringGraph::build(h, k, j, budget)?;
    let (a, b) = (g.index_of(from).unwrap(), g.index_of(to).unwrap());
    Ok(g.shortest_path(a, b)
        .map(|p| p.into_iter().map(|i| g.coloring(i)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn cycles_and_stars() {
        assert_eq!(compute_g(&cycle(4).unwrap(), 3, &b()).unwrap(), 1);
        assert_eq!(compute_h(&cycle(4).unwrap(), 3, &b()).unwrap(), 2);
        assert_eq!(compute_g(&cycle(5).unwrap(), 3, &b()).unwrap(), 2);
        assert_eq!(compute_g(&star(4).unwrap(), 3, &b()).unwrap(), 1);
        assert_eq!(compute_h(&star(2).unwrap(), 3, &b()).unwrap(), 2);
        assert_eq!(compute_h(&complete(3).unwrap(), 3, &b()).unwrap(), 2);
    }

    #[test]
    fn palette_below_chromatic_number_is_rejected() {
        assert!(compute_g(&complete(3).unwrap(), 2, &b()).is_err());
    }

    #[test]
    fn bipartite_two_colorings_need_every_vertex() {
        for n in [4, 6] {
            let c = cycle(n).unwrap();
            assert_eq!(compute_g(&c, 2, &b()).unwrap(), n);
            assert_eq!(compute_h(&c, 2, &b()).unwrap(), n);
        }
        let p = |s| Coloring::parse(s).unwrap();
        let c6 = cycle(6).unwrap();
        assert_eq!(reconfiguration_path(&c6, 2, 5, &p("121212"), &p("212121"), &b()).unwrap(), None);
        let same = reconfiguration_path(&c6, 2, 1, &p("121212"), &p("121212"), &b()).unwrap();
        assert_eq!(same.unwrap().len(), 1);
    }

    #[test]
    fn thresholds() {
        assert_eq!(mixing_number_k1(&lm(3).unwrap(), &b()).unwrap(), 4);
        assert_eq!(graycode_number_k0(&star(2).unwrap(), &b()).unwrap(), 4);
        assert_eq!(graycode_number_k0(&path(4).unwrap(), &b()).unwrap(), 3);
        assert_eq!(graycode_number_k0(&star(3).unwrap(), &b()).unwrap(), 3);
    }

    #[test]
    fn report_shape() {
        let r = parameter_report(&path(3).unwrap(), 3, Some(1), &b()).unwrap();
        assert_eq!(r.levels.len(), 1);
        assert!(r.levels[0].connected);
        assert_eq!(r.levels[0].hamiltonian, Some(HamiltonStatus::NotHamiltonian));
        let r = parameter_report(&cycle(5).unwrap(), 3, None, &b()).unwrap();
        assert_eq!((r.g, r.h), (Some(2), Some(2)));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["levels"][1]["hamiltonian"], "hamiltonian");
    }

    #[test]
    fn construction_and_search_agree_at_j1() {
        let h = cycle(5).unwrap();
        for strategy in [HStrategy::SearchOnly, HStrategy::PreferConstruction] {
            let v = is_hamiltonian_at(&h, 5, 1, &b(), strategy).unwrap();
            assert_eq!(v.status, HamiltonStatus::Hamiltonian);
        }
    }
}
