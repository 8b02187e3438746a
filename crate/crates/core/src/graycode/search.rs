//! Gray codes found by Hamiltonian-cycle search, one component at a time.

use super::product::combine_pieces;
use super::CyclicGrayCode;
use crate::coloring::LocalizedColoringGraph;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::solver::{hamiltonian_cycle, Budget};

/// Searches each component's `j`-localized coloring graph for a Hamiltonian
/// cycle and combines the cycles through the product. Fails with a
/// precondition error when some component has no cycle.
pub fn searched_code(host: &SimpleGraph, k: usize, j: usize, budget: &Budget) -> Result<CyclicGrayCode> {
    if host.n() == 0 {
        return Ok(CyclicGrayCode { host: host.clone(), k, j, sequence: vec![crate::Coloring::new(vec![])] });
    }
    let mut pieces = Vec::new();
    for comp in host.components() {
        let (sub, _) = host.induced_subgraph(comp);
        pieces.push((comp, component_code(&sub, k, j, budget)?));
    }
    let mut code = combine_pieces(host, pieces)?;
    code.j = j;
    Ok(code)
}

fn component_code(sub: &SimpleGraph, k: usize, j: usize, budget: &Budget) -> Result<CyclicGrayCode> {
    let g = LocalizedColoringGraph::build(sub, k, j, budget)?;
    if g.node_count() == 0 {
        return Err(Error::Precondition(format!("the host has no proper {k}-coloring")));
    }
    let verdict = hamiltonian_cycle(g.adjacency(), budget)?;
    match verdict.cycle {
        Some(cycle) => Ok(CyclicGrayCode {
            host: sub.clone(),
            k,
            j,
            sequence: cycle.into_iter().map(|i| g.coloring(i)).collect(),
        }),
        None => Err(Error::Precondition(format!(
            "the {j}-localized {k}-coloring graph is not Hamiltonian ({})",
            verdict.reason.unwrap_or_default()
        ))),
    }
}
