//! Gray codes at localization 1 for graphs with few colors' worth of degeneracy.

use super::extend::{extend_cycle, ExtendMode};
use super::CyclicGrayCode;
use crate::choose::AttachmentContext;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};
use crate::solver::Budget;

/// Adds the vertices one at a time in degeneracy order; each new vertex has
/// at most `d` earlier neighbors, so with `k ≥ d + 3` colors every base cycle
/// extends without loosening the localization.
pub fn degeneracy_code(host: &SimpleGraph, k: usize, budget: &Budget) -> Result<CyclicGrayCode> {
    let (d, order) = host.degeneracy_order();
    if k < d + 3 {
        return Err(Error::Precondition(format!(
            "the host is {d}-degenerate, so this construction needs at least {} colors, got {k}",
            d + 3
        )));
    }
    let total = crate::coloring::count_colorings(host, k);
    if total > budget.max_colorings as u64 {
        return Err(Error::BudgetExceeded { reached: total as usize, limit: budget.max_colorings });
    }
    if host.n() == 0 {
        return Ok(CyclicGrayCode { host: host.clone(), k, j: 1, sequence: vec![Coloring::new(vec![])] });
    }
    let deadline = budget.deadline();
    let first = VertexSet::singleton(order[0]);
    let mut code = CyclicGrayCode {
        host: host.induced_subgraph(first).0,
        k,
        j: 1,
        sequence: (0..k as u8).map(|c| Coloring::new(vec![c])).collect(),
    };
    let mut built = first;
    for &v in &order[1..] {
        if deadline.expired() {
            return Err(Error::Undecided("time budget exhausted while extending".into()));
        }
        let next = built.with(v);
        let (sub, map) = host.induced_subgraph(next);
        let local = map.iter().position(|&w| w == v).expect("new vertex is in its own prefix");
        let ctx = AttachmentContext::new(sub, VertexSet::singleton(local), k, 1)?;
        code = extend_cycle(&ctx, &code, ExtendMode::Tight)?;
        built = next;
    }
    Ok(code)
}
