use proptest::prelude::*;
use recolor::coloring::{count_colorings, localized_neighbors};
use recolor::graph::{families, MultiGraph, SubdivisionSpec};
use recolor::graycode::{degeneracy_code, subdivided_h3_code, subdivided_h4_code, validate_code};
use recolor::hunt::{run_hunt, HuntPredicate, HuntTask};
use recolor::solver::hamilton::is_hamiltonian_cycle;
use recolor::solver::{compute_g, compute_h, hamiltonian_cycle, parameter_report, Budget};
use recolor::{LocalizedColoringGraph, SimpleGraph};

fn budget() -> Budget {
    Budget::default()
}

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n).unwrap();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

fn hamiltonian(g: &LocalizedColoringGraph) -> bool {
    hamiltonian_cycle(g.adjacency(), &budget()).unwrap().is_hamiltonian()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn numbers_are_ordered_and_monotone(h in graph(5), extra in 0usize..2) {
        let k = h.chromatic_number().max(2) + extra;
        let (g, hk) = (compute_g(&h, k, &budget()).unwrap(), compute_h(&h, k, &budget()).unwrap());
        prop_assert!(g <= hk);
        let mut level = LocalizedColoringGraph::build(&h, k, 1, &budget()).unwrap();
        for j in 1..=h.n() {
            if j > 1 {
                level = level.with_localization(j);
            }
            prop_assert_eq!(level.is_connected(), j >= g, "connectivity at j = {}", j);
            prop_assert_eq!(hamiltonian(&level), j >= hk, "Hamiltonicity at j = {}", j);
        }
    }

    #[test]
    fn report_certificates_revalidate(h in graph(5)) {
        let k = h.chromatic_number().max(2) + 1;
        let report = parameter_report(&h, k, None, &budget()).unwrap();
        prop_assert!(!report.undecided);
        for level in &report.levels {
            let g = LocalizedColoringGraph::build(&h, k, level.j, &budget()).unwrap();
            if let Some(parents) = &level.spanning_tree {
                for (v, &p) in parents.iter().enumerate() {
                    prop_assert!(p as usize == v || g.has_edge(v, p as usize));
                }
            }
            if let Some(cycle) = &level.cycle {
                let idx: Vec<usize> = cycle
                    .iter()
                    .map(|s| g.index_of(&recolor::Coloring::parse(s).unwrap()).unwrap())
                    .collect();
                prop_assert!(is_hamiltonian_cycle(g.adjacency(), &idx));
            }
        }
    }

    #[test]
    fn components_bound_the_numbers(a in graph(3), b in graph(3)) {
        let h = a.disjoint_union(&b).unwrap();
        let k = h.chromatic_number().max(2) + 1;
        let parts: Vec<SimpleGraph> = h.components().into_iter().map(|c| h.induced_subgraph(c).0).collect();
        let g_max = parts.iter().map(|p| compute_g(p, k, &budget()).unwrap()).max().unwrap();
        let h_max = parts.iter().map(|p| compute_h(p, k, &budget()).unwrap()).max().unwrap();
        prop_assert_eq!(compute_g(&h, k, &budget()).unwrap(), g_max);
        prop_assert!(compute_h(&h, k, &budget()).unwrap() <= h_max);
    }

    #[test]
    fn degeneracy_bounds(h in graph(6)) {
        let d = h.degeneracy();
        prop_assume!(count_colorings(&h, d + 3) <= 200_000);
        prop_assert_eq!(compute_g(&h, d + 2, &budget()).unwrap(), 1);
        prop_assert_eq!(compute_h(&h, d + 3, &budget()).unwrap(), 1);
        let code = degeneracy_code(&h, d + 3, &budget()).unwrap();
        prop_assert_eq!(validate_code(&code), Ok(()));
        prop_assert_eq!(code.len() as u64, count_colorings(&h, d + 3));
    }
}

fn multigraph(loops: bool) -> impl Strategy<Value = (MultiGraph, SubdivisionSpec)> {
    let (low, high) = if loops { (3usize, 4usize) } else { (2, 3) };
    let fewest = if loops { 1usize } else { 2 };
    (fewest..=3).prop_flat_map(move |n| {
        let edge = (0..n, 0..n).prop_filter("loops allowed only when asked", move |(u, v)| loops || u != v);
        proptest::collection::vec((edge, low..=high), 1..=3).prop_map(move |edges| {
            let mut m = MultiGraph::new(n).unwrap();
            let mut counts = Vec::new();
            for ((u, v), c) in edges {
                m.add_edge(u, v).unwrap();
                counts.push(c);
            }
            (m, SubdivisionSpec { counts })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn four_color_subdivision_codes_validate((m, spec) in multigraph(false)) {
        match subdivided_h4_code(&m, &spec, &budget()) {
            Ok(code) => {
                prop_assert_eq!(code.j, 1);
                prop_assert_eq!(validate_code(&code), Ok(()));
            }
            Err(e) => prop_assert!(e.is_undecided(), "{}", e),
        }
    }

    #[test]
    fn three_color_subdivision_codes_validate((m, spec) in multigraph(true)) {
        match subdivided_h3_code(&m, &spec, &budget()) {
            Ok(code) => {
                prop_assert_eq!(code.j, 2);
                prop_assert_eq!(validate_code(&code), Ok(()));
            }
            Err(e) => prop_assert!(e.is_undecided(), "{}", e),
        }
    }
}

/// Part lists `m_1 <= ... <= m_k` with `k >= 2` and at most `total` vertices.
fn part_lists(total: usize) -> Vec<Vec<usize>> {
    fn grow(prefix: &mut Vec<usize>, left: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        let from = prefix.last().copied().unwrap_or(1);
        for m in from..=left {
            prefix.push(m);
            grow(prefix, left - m, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), total, &mut out);
    out
}

#[test]
fn multipartite_numbers_with_k_colors() {
    for parts in part_lists(6) {
        let h = families::complete_multipartite(&parts).unwrap();
        let want = parts[0] + parts[parts.len() - 1];
        assert_eq!(compute_h(&h, parts.len(), &budget()).unwrap(), want, "{parts:?}");
        assert_eq!(compute_g(&h, parts.len(), &budget()).unwrap(), want, "{parts:?}");
    }
}

#[test]
fn an_even_part_blocks_a_one_localized_cycle_with_a_spare_color() {
    for parts in part_lists(5).into_iter().filter(|p| p.iter().any(|m| m % 2 == 0)) {
        let h = families::complete_multipartite(&parts).unwrap();
        let g = LocalizedColoringGraph::build(&h, parts.len() + 1, 1, &budget()).unwrap();
        assert!(!hamiltonian(&g), "{parts:?}");
    }
}

#[test]
fn isolating_construction_for_small_parameters() {
    for k in 2..=3 {
        for i in 2..=k {
            for j in 2..=3 {
                let (h, phi) = families::isolating_graph(i, j, k).unwrap();
                assert!(phi.is_proper(&h));
                assert_eq!(h.chromatic_number(), i, "({i},{j},{k})");
                assert!(localized_neighbors(&h, k, j - 1, &phi).is_empty(), "({i},{j},{k})");
            }
        }
    }
}

#[test]
fn hunts_are_reproducible() {
    let graphs: Vec<SimpleGraph> = (1..=4).flat_map(recolor::graph::generate::small_graphs).collect();
    let task = HuntTask { graphs, k_min: 3, k_max: 4, predicate: HuntPredicate::GrayNumberIncrease, budget: budget() };
    let (a, b) = (run_hunt(&task).unwrap(), run_hunt(&task).unwrap());
    assert_eq!(a.entries, b.entries);
    assert_eq!(a.findings, b.findings);
    assert!(a.findings.is_empty());
}
