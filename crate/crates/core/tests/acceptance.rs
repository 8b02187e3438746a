//! The acceptance criteria, each checked at exact equality and reported on
//! one PASS/FAIL line.
//!
//! Two criteria contain a sub-claim that exhaustive search refutes:
//! `h_4(K_{1,1,3}) = 2`, not 1, and in the isolating construction for
//! `(2,3,3)` the distinguished coloring still has no neighbor at
//! localization 3. Those criteria are checked as stated and reported FAIL.
//! The run as a whole succeeds only when the failing criteria are exactly
//! these two, failing with exactly these mismatches, so any other
//! regression (or a change in the refuted values) fails the target.

use recolor::coloring::{count_colorings, localized_neighbors};
use recolor::graph::generate::canonical_key;
use recolor::graph::{families, graph6, MultiGraph, SubdivisionSpec};
use recolor::graycode::{
    antipodal_gray_path, degeneracy_code, fixtures, multipartite_code_k, multipartite_code_kplus1,
    reflected_gray_cycle, star_transposition_code, subdivided_h3_code, subdivided_h4_code, validate_code,
    CyclicGrayCode,
};
use recolor::solver::{compute_g, compute_h, compute_h_with, hamiltonian_cycle, Budget, HStrategy};
use recolor::verify::{self, Outcome};
use recolor::{Error, LocalizedColoringGraph, Result, SimpleGraph};
use std::collections::HashSet;
use std::time::{Duration, Instant};

enum Verdict {
    Pass,
    Fail(Vec<String>),
    Undecided(String),
}

/// Mismatches found while checking one criterion.
#[derive(Default)]
struct Mismatches(Vec<String>);

impl Mismatches {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: impl std::fmt::Display, got: T, want: T) {
        if got != want {
            self.0.push(format!("{what}: got {got:?}, expected {want:?}"));
        }
    }

    fn holds(&mut self, what: impl std::fmt::Display, ok: bool) {
        if !ok {
            self.0.push(format!("{what} does not hold"));
        }
    }

    fn within(&mut self, start: Instant, limit: Duration) {
        let spent = start.elapsed();
        if spent > limit {
            self.0.push(format!("runtime {spent:?} exceeds {limit:?}"));
        }
    }

    fn valid(&mut self, what: impl std::fmt::Display, code: &CyclicGrayCode) {
        if let Err(v) = validate_code(code) {
            self.0.push(format!("{what}: {v}"));
        }
    }

    fn verdict(self) -> Verdict {
        if self.0.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail(self.0)
        }
    }
}

fn budget() -> Budget {
    Budget::default()
}

fn g_and_h(h: &SimpleGraph, k: usize) -> Result<(usize, usize)> {
    Ok((compute_g(h, k, &budget())?, compute_h(h, k, &budget())?))
}

fn trees_and_cycles() -> Result<Verdict> {
    let start = Instant::now();
    let mut m = Mismatches::default();
    for n in [3, 5, 6, 7, 8] {
        m.eq(format!("(g_3, h_3) of C_{n}"), g_and_h(&families::cycle(n)?, 3)?, (2, 2));
    }
    m.eq("(g_3, h_3) of C_4", g_and_h(&families::cycle(4)?, 3)?, (1, 2));
    for half in 1..=3 {
        m.eq(format!("(g_3, h_3) of K_1,{}", 2 * half), g_and_h(&families::star(2 * half)?, 3)?, (1, 2));
    }
    m.within(start, Duration::from_secs(120));
    Ok(m.verdict())
}

fn complete_graphs() -> Result<Verdict> {
    let start = Instant::now();
    let mut m = Mismatches::default();
    for n in 2..=4 {
        m.eq(format!("(g_{n}, h_{n}) of K_{n}"), g_and_h(&families::complete(n)?, n)?, (2, 2));
    }
    for n in 1..=4 {
        for k in n + 1..=n + 2 {
            m.eq(format!("(g_{k}, h_{k}) of K_{n}"), g_and_h(&families::complete(n)?, k)?, (1, 1));
        }
    }
    m.within(start, Duration::from_secs(60));
    Ok(m.verdict())
}

const MULTIPARTITE: [&[usize]; 5] = [&[1, 2], &[2, 2], &[1, 1, 2], &[1, 2, 2], &[1, 1, 3]];

fn complete_multipartite() -> Result<Verdict> {
    let start = Instant::now();
    let mut m = Mismatches::default();
    for parts in MULTIPARTITE {
        let h = families::complete_multipartite(parts)?;
        let want = parts[0] + parts[parts.len() - 1];
        m.eq(format!("(g_k, h_k) of K{parts:?}"), g_and_h(&h, parts.len())?, (want, want));
    }
    for parts in [&[1, 1, 1][..], &[1, 1, 3]] {
        let h = families::complete_multipartite(parts)?;
        m.eq(format!("h_k+1 of K{parts:?}"), compute_h(&h, parts.len() + 1, &budget())?, 1);
    }
    for parts in [&[1, 2][..], &[1, 1, 2]] {
        let h = families::complete_multipartite(parts)?;
        m.eq(format!("h_k+1 of K{parts:?}"), compute_h(&h, parts.len() + 1, &budget())?, 2);
        m.eq(format!("g_k+1 of K{parts:?}"), compute_g(&h, parts.len() + 1, &budget())?, 1);
    }
    m.within(start, Duration::from_secs(600));
    Ok(m.verdict())
}

fn multipartite_codes() -> Result<Verdict> {
    let mut m = Mismatches::default();
    let mut lists = MULTIPARTITE.to_vec();
    lists.extend([&[3, 3][..], &[1, 3]]);
    for parts in lists {
        let h = families::complete_multipartite(parts)?;
        let k = parts.len();
        for (code, colors) in [(multipartite_code_k(parts)?, k), (multipartite_code_kplus1(parts, &budget())?, k + 1)] {
            m.valid(format!("{colors}-color code of K{parts:?}"), &code);
            m.eq(format!("length of the {colors}-color code of K{parts:?}"), code.len() as u64, count_colorings(&h, colors));
        }
    }
    Ok(m.verdict())
}

fn isolation() -> Result<Verdict> {
    let start = Instant::now();
    let mut m = Mismatches::default();
    for (i, j, k) in [(2, 2, 3), (2, 3, 3), (3, 2, 3), (2, 2, 4)] {
        let (h, phi) = families::isolating_graph(i, j, k)?;
        m.holds(format!("properness of the distinguished coloring of L({i},{j},{k})"), phi.is_proper(&h));
        m.eq(format!("degree in G^{}_{k}(L({i},{j},{k}))", j - 1), localized_neighbors(&h, k, j - 1, &phi).len(), 0);
        m.holds(format!("positive degree in G^{j}_{k}(L({i},{j},{k}))"), !localized_neighbors(&h, k, j, &phi).is_empty());
    }
    m.within(start, Duration::from_secs(300));
    Ok(m.verdict())
}

fn lm_remark() -> Result<Verdict> {
    let mut m = Mismatches::default();
    for (lm, k, connected) in [(3, 3, false), (3, 4, true), (4, 4, false), (4, 5, true)] {
        let g = match LocalizedColoringGraph::build(&families::lm(lm)?, k, 1, &budget()) {
            Ok(g) => g,
            Err(e) if e.is_undecided() => return Ok(Verdict::Undecided(format!("G^1_{k}(L_{lm}): {e}"))),
            Err(e) => return Err(e),
        };
        m.eq(format!("connectivity of G^1_{k}(L_{lm})"), g.is_connected(), connected);
    }
    Ok(m.verdict())
}

fn fixture_cycle() -> Result<Verdict> {
    let mut m = Mismatches::default();
    let code = fixtures::c4_fixture();
    m.eq("listing length", code.len(), 18);
    m.valid("listing at j = 2", &code);
    m.holds("rejection at j = 1", validate_code(&CyclicGrayCode { j: 1, ..code }).is_err());
    Ok(m.verdict())
}

fn subdivided(n: usize, edges: &[(usize, usize)], count: usize) -> Result<(MultiGraph, SubdivisionSpec)> {
    let multi = MultiGraph::from_edges(n, edges)?;
    let spec = SubdivisionSpec::uniform(&multi, count);
    Ok((multi, spec))
}

const DOUBLE_EDGE: &[(usize, usize)] = &[(0, 1), (0, 1)];
const TRIANGLE: &[(usize, usize)] = &[(0, 1), (1, 2), (0, 2)];

fn subdivided_multigraphs() -> Result<Verdict> {
    let mut m = Mismatches::default();
    for (n, edges) in [(2, DOUBLE_EDGE), (3, TRIANGLE)] {
        let (multi, spec) = subdivided(n, edges, 2)?;
        let h = multi.subdivide(&spec)?;
        m.holds(format!("g_3 <= 2 for {}", graph6::to_graph6(&h)), compute_g(&h, 3, &budget())? <= 2);
        for count in [2, 3] {
            let (multi, spec) = subdivided(n, edges, count)?;
            let code = subdivided_h4_code(&multi, &spec, &budget())?;
            m.eq("four-color localization", code.j, 1);
            m.valid(format!("four-color code, {} edges subdivided {count} times", edges.len()), &code);
        }
    }
    for (n, edges, cycle_len) in [(1, &[(0, 0)][..], 4), (2, DOUBLE_EDGE, 8)] {
        let (multi, spec) = subdivided(n, edges, 3)?;
        let code = subdivided_h3_code(&multi, &spec, &budget())?;
        m.eq("three-color host", canonical_key(&code.host), canonical_key(&families::cycle(cycle_len)?));
        m.eq("three-color localization", code.j, 2);
        m.valid(format!("three-color code on C_{cycle_len}"), &code);
    }
    m.eq("h_3(C_4)", compute_h(&families::cycle(4)?, 3, &budget())?, 2);
    m.eq("h_4(C_6)", compute_h(&families::cycle(6)?, 4, &budget())?, 1);
    Ok(m.verdict())
}

fn loop_counterexample() -> Result<Verdict> {
    let mut m = Mismatches::default();
    for j in 1..=2 {
        let (multi, spec) = subdivided(1, &vec![(0, 0); j], 2)?;
        let h = multi.subdivide(&spec)?;
        let g = LocalizedColoringGraph::build(&h, 3, j, &budget())?;
        let labels = g.component_labels();
        // components never mix hub colors: each component's hub color is unique
        let mut hub_of = std::collections::HashMap::new();
        let mut shared = 0;
        for a in 0..g.node_count() {
            if *hub_of.entry(labels[a]).or_insert(g.colors(a)[0]) != g.colors(a)[0] {
                shared += 1;
            }
        }
        m.eq(format!("colorings sharing a component across hub colors, j = {j}"), shared, 0);
    }
    Ok(m.verdict())
}

fn degeneracy_properties() -> Result<Verdict> {
    let mut m = Mismatches::default();
    let corpus = verify::degeneracy_corpus();
    m.eq("corpus size", corpus.len(), 50);
    for h in &corpus {
        let d = h.degeneracy();
        let name = graph6::to_graph6(h);
        m.holds(format!("{name} has at most 6 vertices"), h.n() <= 6);
        m.holds(format!("{name} has at most 200000 colorings"), count_colorings(h, d + 3) <= 200_000);
        m.eq(format!("g_{} of {name}", d + 2), compute_g(h, d + 2, &budget())?, 1);
        m.eq(format!("h_{} of {name}", d + 3), compute_h_with(h, d + 3, &budget(), HStrategy::SearchOnly)?, 1);
        let code = degeneracy_code(h, d + 3, &budget())?;
        m.eq(format!("localization of the code of {name}"), code.j, 1);
        m.valid(format!("degeneracy code of {name}"), &code);
    }
    Ok(m.verdict())
}

/// `Q_n` plus a node joined to `0…0` and `1…1`; Hamiltonian exactly when
/// `Q_n` has an antipodal Hamiltonian path.
fn cube_with_handle(n: usize) -> Vec<Vec<u32>> {
    let size = 1usize << n;
    let mut adj: Vec<Vec<u32>> = (0..size).map(|v| (0..n).map(|i| (v ^ (1 << i)) as u32).collect()).collect();
    adj.push(vec![0, (size - 1) as u32]);
    adj[0].push(size as u32);
    adj[size - 1].push(size as u32);
    adj.iter_mut().for_each(|row| row.sort_unstable());
    adj
}

fn hypercube_facts() -> Result<Verdict> {
    let mut m = Mismatches::default();
    for n in [1, 3, 5] {
        let path = antipodal_gray_path(n, 1, 2)?;
        m.holds(format!("antipodal path of Q_{n} validates"), path.validate().is_ok());
        let (first, last) = (&path.sequence[0], &path.sequence[path.sequence.len() - 1]);
        m.holds(format!("ends of the Q_{n} path are antipodal"), first.iter().zip(last).all(|(a, b)| a != b));
    }
    for n in [2, 4] {
        let v = hamiltonian_cycle(&cube_with_handle(n), &budget())?;
        m.eq(format!("antipodal path of Q_{n} exists"), v.is_hamiltonian(), false);
    }
    for n in 2..=8 {
        let cycle = reflected_gray_cycle(n, 1, 2)?;
        m.holds(format!("reflected cycle of Q_{n} validates"), cycle.validate().is_ok() && cycle.cyclic);
    }
    Ok(m.verdict())
}

fn permutation_codes() -> Result<Verdict> {
    let mut m = Mismatches::default();
    for n in 2..=6 {
        let code = star_transposition_code(n)?;
        m.holds(format!("star code for n = {n} validates"), code.validate().is_ok());
        let distinct: HashSet<&Vec<u8>> = code.sequence.iter().collect();
        m.eq(format!("distinct permutations for n = {n}"), distinct.len(), (1..=n).product::<usize>());
    }
    // oracle: brute-force Hamiltonian search on the star Cayley graph, and a
    // step check written against the definition
    for n in [3, 4] {
        let code = star_transposition_code(n)?;
        let len = code.sequence.len();
        for i in 0..len {
            let (a, b) = (&code.sequence[i], &code.sequence[(i + 1) % len]);
            let diff: Vec<usize> = (0..n).filter(|&p| a[p] != b[p]).collect();
            m.holds(format!("step {i} for n = {n} swaps the first entry"), diff.len() == 2 && diff[0] == 0 && a[diff[1]] == b[0]);
        }
        let mut perms = code.sequence.clone();
        perms.sort();
        let adj: Vec<Vec<u32>> = perms
            .iter()
            .map(|p| {
                let mut row: Vec<u32> = (1..n)
                    .map(|i| {
                        let mut q = p.clone();
                        q.swap(0, i);
                        perms.binary_search(&q).expect("closed under swaps") as u32
                    })
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        m.holds(format!("search finds a star cycle for n = {n}"), hamiltonian_cycle(&adj, &budget())?.is_hamiltonian());
    }
    Ok(m.verdict())
}

fn structural_properties() -> Result<Verdict> {
    let mut m = Mismatches::default();
    for case in verify::run_suite("structure", &budget())? {
        match case.outcome {
            Outcome::Pass => {}
            Outcome::Fail(d) => m.0.push(format!("{}: {d}", case.name)),
            Outcome::Undecided(d) => return Ok(Verdict::Undecided(format!("{}: {d}", case.name))),
        }
    }
    Ok(m.verdict())
}

type Check = fn() -> Result<Verdict>;

const CRITERIA: [(&str, Check); 13] = [
    ("trees and cycles", trees_and_cycles),
    ("complete graphs", complete_graphs),
    ("complete multipartite graphs", complete_multipartite),
    ("constructive multipartite codes", multipartite_codes),
    ("isolation in the isolating construction", isolation),
    ("L_m connectivity threshold", lm_remark),
    ("four-cycle fixture", fixture_cycle),
    ("subdivided multigraphs", subdivided_multigraphs),
    ("looped hub separation", loop_counterexample),
    ("degeneracy bounds", degeneracy_properties),
    ("hypercube facts", hypercube_facts),
    ("permutation codes", permutation_codes),
    ("structural properties", structural_properties),
];

/// Criteria refuted by exhaustive search, with their exact mismatches.
const REFUTED: [(usize, &str); 2] = [
    (3, "h_k+1 of K[1, 1, 3]: got 2, expected 1"),
    (5, "positive degree in G^3_3(L(2,3,3)) does not hold"),
];

fn main() {
    let mut failures = Vec::new();
    let mut undecided = 0;
    for (i, (title, check)) in CRITERIA.iter().enumerate() {
        let id = i + 1;
        let start = Instant::now();
        let verdict = match check() {
            Ok(v) => v,
            Err(e @ (Error::Undecided(_) | Error::BudgetExceeded { .. })) => Verdict::Undecided(e.to_string()),
            Err(e) => Verdict::Fail(vec![format!("error: {e}")]),
        };
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Verdict::Pass => println!("PASS      criterion {id:2}: {title} ({secs:.2} s)"),
            Verdict::Undecided(why) => {
                undecided += 1;
                println!("UNDECIDED criterion {id:2}: {title} ({secs:.2} s): {why}");
            }
            Verdict::Fail(list) => {
                println!("FAIL      criterion {id:2}: {title} ({secs:.2} s)");
                for line in &list {
                    println!("          {line}");
                    failures.push((id, line.clone()));
                }
            }
        }
    }
    let expected: Vec<(usize, String)> = REFUTED.iter().map(|&(id, s)| (id, s.to_string())).collect();
    let failed: HashSet<usize> = failures.iter().map(|f| f.0).collect();
    println!(
        "{} of {} criteria pass, {} fail, {undecided} undecided",
        CRITERIA.len() - failed.len() - undecided,
        CRITERIA.len(),
        failed.len()
    );
    if failures != expected {
        println!("failures differ from the refuted sub-claims {expected:?}");
        std::process::exit(1);
    }
    println!("every failure is one of the refuted sub-claims");
}
