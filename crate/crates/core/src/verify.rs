//! Named suites of machine-checked claims about mixing and Gray code numbers,
//! constructions and their validators.
//!
//! Every case is a predicate with a pass/fail answer. Budget exhaustion is
//! reported as undecided, never as a failure.

use crate::coloring::{count_colorings, localized_neighbors, LocalizedColoringGraph};
use crate::error::{Error, Result};
use crate::graph::{families, generate, MultiGraph, SimpleGraph, SubdivisionSpec};
use crate::graycode::{
    antipodal_gray_path, degeneracy_code, fixtures, multipartite_code_k, multipartite_code_kplus1,
    reflected_gray_cycle, star_transposition_code, subdivided_h3_code, subdivided_h4_code, validate_code,
    CyclicGrayCode,
};
use crate::solver::{compute_g, compute_h, hamiltonian_cycle, Budget};
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail(String),
    Undecided(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub claim: &'static str,
    #[serde(flatten)]
    pub outcome: Outcome,
    pub millis: u128,
}

type Check = fn(&Budget) -> Result<Outcome>;

pub struct VerifyCase {
    pub name: &'static str,
    pub claim: &'static str,
    run: Check,
}

pub const SUITES: [&str; 12] = [
    "trees-cycles",
    "complete",
    "multipartite",
    "construction-L",
    "lm",
    "fixture",
    "subdivision",
    "loops",
    "degeneracy",
    "hypercube",
    "permutation",
    "structure",
];

fn case(name: &'static str, claim: &'static str, run: Check) -> VerifyCase {
    VerifyCase { name, claim, run }
}

pub fn cases(suite: &str) -> Result<Vec<VerifyCase>> {
    Ok(match suite {
        "trees-cycles" => vec![
            case("odd-and-long-cycles", "g_3(C_n) = h_3(C_n) = 2 for n in {3,5,6,7,8}", cycles),
            case("four-cycle", "g_3(C_4) = 1 and h_3(C_4) = 2", four_cycle),
            case("even-stars", "g_3(K_{1,2m}) = 1 and h_3(K_{1,2m}) = 2 for m in {1,2,3}", even_stars),
            case("other-trees", "h_3(T) = 1 for every tree T on at most 6 vertices other than an even star", other_trees),
        ],
        "complete" => vec![
            case("exact-palette", "g_n(K_n) = h_n(K_n) = 2 for n in {2,3,4}", complete_exact),
            case("spare-colors", "g_k(K_n) = h_k(K_n) = 1 for n < k <= n+2, n <= 4", complete_spare),
        ],
        "multipartite" => vec![
            case("k-colors", "g_k = h_k = m_1 + m_k for parts [1,2], [2,2], [1,1,2], [1,2,2], [1,1,3]", multipartite_k),
            case("one-spare-all-odd", "h_{k+1} = 1 for all-odd parts [1,1,1] and [1,1,3]", multipartite_odd),
            case("one-spare-some-even", "h_{k+1} = 2 and g_{k+1} = 1 for parts [1,2] and [1,1,2]", multipartite_even),
            case("codes", "both multipartite constructions validate, with every coloring listed", multipartite_codes),
        ],
        "construction-L" => vec![
            case("isolation", "the distinguished coloring is isolated at j-1 for (i,j,k) in {(2,2,3),(2,3,3),(3,2,3),(2,2,4),(3,3,3)}, and gains neighbors exactly when every part can change", isolation),
            case("matches-lm", "the two-part construction with j = 1 is L_m for m in {3,4}", isolating_is_lm),
        ],
        "lm" => vec![case("lm-threshold", "G^1_k(L_m) is disconnected exactly when k = m (m in {3,4}, k in {m, m+1})", lm_threshold)],
        "fixture" => vec![case("c4-listing", "the 18-entry listing is a Hamiltonian cycle of G^2_3(C_4) but not of G^1_3(C_4)", fixture)],
        "subdivision" => vec![
            case("mixing", "g_3 <= 2 for the double edge and the triangle, each edge subdivided twice", subdivision_mixing),
            case("four-colors", "the four-color construction validates at j = 1 on twice and thrice subdivided double edges and triangles", subdivision_h4),
            case("three-colors", "the three-color construction validates at j = 2 on a loop and a double edge subdivided thrice", subdivision_h3),
            case("minimal", "h_4(C_6) = 1 and h_3(C_4) = 2", subdivision_minimal),
        ],
        "loops" => vec![case("hub-separation", "with j loops at one vertex subdivided twice (j in {1,2}), colorings differing at the hub lie in different components of G^j_3", loops)],
        "degeneracy" => vec![case("random-graphs", "for 50 random graphs, g_{d+2} = 1, h_{d+3} = 1 and the degeneracy construction validates", degeneracy)],
        "hypercube" => vec![
            case("antipodal-paths", "an antipodal Hamiltonian path of Q_n exists exactly for odd n (n <= 5)", antipodal),
            case("reflected-cycles", "the reflected Gray cycle validates for n in 2..=8", reflected),
        ],
        "permutation" => vec![case("star-codes", "star-transposition codes validate for n in 2..=6 and the Cayley graph search agrees for n in {3,4}", permutations)],
        "structure" => vec![
            case("spanning-chain", "G^j_k is a spanning subgraph of G^{j+1}_k", spanning_chain),
            case("g-at-most-h", "g_k <= h_k", g_at_most_h),
            case("products", "the coloring graph of a disconnected host is the product of its components' graphs", products),
            case("node-counts", "node counts equal the chromatic polynomial", node_counts),
        ],
        other => return Err(Error::Argument(format!("unknown suite {other:?}; known: {}", SUITES.join(", ")))),
    })
}

/// Runs one suite's cases in parallel, reporting them in order.
pub fn run_suite(suite: &str, budget: &Budget) -> Result<Vec<CaseResult>> {
    let name = SUITES
        .iter()
        .copied()
        .find(|s| *s == suite)
        .ok_or_else(|| Error::Argument(format!("unknown suite {suite:?}; known: {}", SUITES.join(", "))))?;
    Ok(cases(name)?
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let outcome = match (c.run)(budget) {
                Ok(o) => o,
                Err(e) if e.is_undecided() => Outcome::Undecided(e.to_string()),
                Err(e) => Outcome::Fail(e.to_string()),
            };
            CaseResult { suite: name, name: c.name, claim: c.claim, outcome, millis: start.elapsed().as_millis() }
        })
        .collect())
}

/// Collects every mismatch; passes when there are none.
struct Tally(Vec<String>);

impl Tally {
    fn new() -> Self {
        Tally(Vec::new())
    }

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

    fn outcome(self) -> Outcome {
        if self.0.is_empty() {
            Outcome::Pass
        } else {
            Outcome::Fail(self.0.join("; "))
        }
    }
}

fn code_ok(t: &mut Tally, what: impl std::fmt::Display, code: &CyclicGrayCode) {
    if let Err(v) = validate_code(code) {
        t.0.push(format!("{what}: {v}"));
    }
}

fn cycles(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for n in [3, 5, 6, 7, 8] {
        let c = families::cycle(n)?;
        t.eq(format!("(g, h) of C_{n}"), (compute_g(&c, 3, b)?, compute_h(&c, 3, b)?), (2, 2));
    }
    Ok(t.outcome())
}

fn four_cycle(b: &Budget) -> Result<Outcome> {
    let c = families::cycle(4)?;
    let mut t = Tally::new();
    t.eq("(g, h) of C_4", (compute_g(&c, 3, b)?, compute_h(&c, 3, b)?), (1, 2));
    Ok(t.outcome())
}

fn even_stars(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for m in 1..=3 {
        let s = families::star(2 * m)?;
        t.eq(format!("(g, h) of K_1,{}", 2 * m), (compute_g(&s, 3, b)?, compute_h(&s, 3, b)?), (1, 2));
    }
    Ok(t.outcome())
}

fn is_even_star(g: &SimpleGraph) -> bool {
    let n = g.n();
    n >= 3 && n % 2 == 1 && g.edge_count() == n - 1 && (0..n).any(|v| g.degree(v) == n - 1)
}

fn other_trees(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for n in 1..=6 {
        for g in generate::small_graphs(n) {
            if g.is_forest() && g.is_connected() && !is_even_star(&g) {
                t.eq(format!("h_3 of tree {}", crate::graph::graph6::to_graph6(&g)), compute_h(&g, 3, b)?, 1);
            }
        }
    }
    Ok(t.outcome())
}

fn complete_exact(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for n in 2..=4 {
        let g = families::complete(n)?;
        t.eq(format!("(g, h) of K_{n} with {n} colors"), (compute_g(&g, n, b)?, compute_h(&g, n, b)?), (2, 2));
    }
    Ok(t.outcome())
}

fn complete_spare(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for n in 1..=4 {
        let g = families::complete(n)?;
        for k in n + 1..=n + 2 {
            t.eq(format!("(g, h) of K_{n} with {k} colors"), (compute_g(&g, k, b)?, compute_h(&g, k, b)?), (1, 1));
        }
    }
    Ok(t.outcome())
}

const MULTIPARTITE_LISTS: [&[usize]; 5] = [&[1, 2], &[2, 2], &[1, 1, 2], &[1, 2, 2], &[1, 1, 3]];

fn multipartite_k(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for parts in MULTIPARTITE_LISTS {
        let g = families::complete_multipartite(parts)?;
        let k = parts.len();
        let want = parts.iter().min().unwrap() + parts.iter().max().unwrap();
        t.eq(format!("(g, h) of K{parts:?} with {k} colors"), (compute_g(&g, k, b)?, compute_h(&g, k, b)?), (want, want));
    }
    Ok(t.outcome())
}

fn multipartite_odd(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for parts in [&[1, 1, 1][..], &[1, 1, 3]] {
        let g = families::complete_multipartite(parts)?;
        t.eq(format!("h of K{parts:?} with {} colors", parts.len() + 1), compute_h(&g, parts.len() + 1, b)?, 1);
    }
    Ok(t.outcome())
}

fn multipartite_even(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for parts in [&[1, 2][..], &[1, 1, 2]] {
        let g = families::complete_multipartite(parts)?;
        let k = parts.len() + 1;
        t.eq(format!("(g, h) of K{parts:?} with {k} colors"), (compute_g(&g, k, b)?, compute_h(&g, k, b)?), (1, 2));
    }
    Ok(t.outcome())
}

fn multipartite_codes(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    let mut lists: Vec<&[usize]> = MULTIPARTITE_LISTS.to_vec();
    lists.extend([&[3, 3][..], &[1, 3], &[1, 1, 1]]);
    for parts in lists {
        code_ok(&mut t, format!("k-color code of K{parts:?}"), &multipartite_code_k(parts)?);
        code_ok(&mut t, format!("(k+1)-color code of K{parts:?}"), &multipartite_code_kplus1(parts, b)?);
    }
    Ok(t.outcome())
}

/// Least localization at which the distinguished coloring of the isolating
/// construction has a neighbor: every part must contain a full color class.
pub fn isolation_threshold(i: usize, j: usize, k: usize) -> usize {
    if i == k {
        2 * j.div_ceil(2)
    } else {
        i * j.div_ceil(i)
    }
}

fn isolation(_: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for (i, j, k) in [(2, 2, 3), (2, 3, 3), (3, 2, 3), (2, 2, 4), (3, 3, 3)] {
        let (g, phi) = families::isolating_graph(i, j, k)?;
        let top = isolation_threshold(i, j, k);
        t.holds(format!("properness of the distinguished coloring for ({i},{j},{k})"), phi.is_proper(&g));
        t.eq(format!("degree at j-1 for ({i},{j},{k})"), localized_neighbors(&g, k, j - 1, &phi).len(), 0);
        t.eq(format!("degree at {} for ({i},{j},{k})", top - 1), localized_neighbors(&g, k, top - 1, &phi).len(), 0);
        t.holds(format!("positive degree at {top} for ({i},{j},{k})"), !localized_neighbors(&g, k, top, &phi).is_empty());
        t.eq(format!("chromatic number for ({i},{j},{k})"), g.chromatic_number(), i);
    }
    Ok(t.outcome())
}

fn isolating_is_lm(_: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for m in [3, 4] {
        let (g, _) = families::isolating_graph(2, 1, m)?;
        t.eq(
            format!("canonical form for m = {m}"),
            generate::canonical_key(&g),
            generate::canonical_key(&families::lm(m)?),
        );
    }
    Ok(t.outcome())
}

fn lm_threshold(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for m in [3, 4] {
        let g = families::lm(m)?;
        for k in [m, m + 1] {
            let connected = LocalizedColoringGraph::build(&g, k, 1, b)?.is_connected();
            t.eq(format!("connectivity of G^1_{k}(L_{m})"), connected, k != m);
        }
    }
    Ok(t.outcome())
}

fn fixture(_: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    let code = fixtures::c4_fixture();
    code_ok(&mut t, "listing at j = 2", &code);
    let strict = CyclicGrayCode { j: 1, ..code };
    t.holds("rejection at j = 1", validate_code(&strict).is_err());
    Ok(t.outcome())
}

fn multigraph(n: usize, edges: &[(usize, usize)]) -> Result<MultiGraph> {
    MultiGraph::from_edges(n, edges)
}

const DOUBLE_EDGE: &[(usize, usize)] = &[(0, 1), (0, 1)];
const TRIANGLE: &[(usize, usize)] = &[(0, 1), (1, 2), (0, 2)];

fn subdivision_mixing(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for (n, edges) in [(2, DOUBLE_EDGE), (3, TRIANGLE)] {
        let m = multigraph(n, edges)?;
        let h = m.subdivide(&SubdivisionSpec::uniform(&m, 2))?;
        t.holds(format!("g_3 <= 2 on {} vertices", h.n()), compute_g(&h, 3, b)? <= 2);
    }
    Ok(t.outcome())
}

fn subdivision_h4(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for (n, edges) in [(2, DOUBLE_EDGE), (3, TRIANGLE)] {
        for count in [2, 3] {
            let m = multigraph(n, edges)?;
            let code = subdivided_h4_code(&m, &SubdivisionSpec::uniform(&m, count), b)?;
            t.eq("declared localization", code.j, 1);
            code_ok(&mut t, format!("{} edges subdivided {count} times", edges.len()), &code);
        }
    }
    Ok(t.outcome())
}

fn subdivision_h3(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for (n, edges, len) in [(1, &[(0, 0)][..], 18), (2, DOUBLE_EDGE, 258)] {
        let m = multigraph(n, edges)?;
        let code = subdivided_h3_code(&m, &SubdivisionSpec::uniform(&m, 3), b)?;
        t.eq("declared localization", code.j, 2);
        t.eq("listing length", code.len(), len);
        code_ok(&mut t, format!("{} edges subdivided 3 times", edges.len()), &code);
    }
    Ok(t.outcome())
}

fn subdivision_minimal(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    t.eq("h_4(C_6)", compute_h(&families::cycle(6)?, 4, b)?, 1);
    t.eq("h_3(C_4)", compute_h(&families::cycle(4)?, 3, b)?, 2);
    Ok(t.outcome())
}

fn loops(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for j in 1..=2 {
        let m = multigraph(1, &vec![(0, 0); j])?;
        let h = m.subdivide(&SubdivisionSpec::uniform(&m, 2))?;
        let g = LocalizedColoringGraph::build(&h, 3, j, b)?;
        let labels = g.component_labels();
        let mut mixed = 0;
        for a in 0..g.node_count() {
            for c in a + 1..g.node_count() {
                if g.colors(a)[0] != g.colors(c)[0] && labels[a] == labels[c] {
                    mixed += 1;
                }
            }
        }
        t.eq(format!("pairs across hub colors sharing a component, j = {j}"), mixed, 0);
    }
    Ok(t.outcome())
}

/// The fixed random corpus used for the degeneracy claims.
pub fn degeneracy_corpus() -> Vec<SimpleGraph> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let mut out = Vec::new();
    while out.len() < 50 {
        let n = 1 + out.len() % 6;
        let g = generate::random_graph(n, 0.5, &mut rng);
        if count_colorings(&g, g.degeneracy() + 3) <= 200_000 {
            out.push(g);
        }
    }
    out
}

fn degeneracy(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for g in degeneracy_corpus() {
        let d = g.degeneracy();
        let name = crate::graph::graph6::to_graph6(&g);
        t.eq(format!("g_{} of {name}", d + 2), compute_g(&g, d + 2, b)?, 1);
        let h = crate::solver::compute_h_with(&g, d + 3, b, crate::solver::HStrategy::SearchOnly)?;
        t.eq(format!("h_{} of {name}", d + 3), h, 1);
        code_ok(&mut t, format!("degeneracy code of {name}"), &degeneracy_code(&g, d + 3, b)?);
    }
    Ok(t.outcome())
}

/// The hypercube with one extra node joined to both constant strings: it is
/// Hamiltonian exactly when an antipodal Hamiltonian path exists.
fn cube_with_handle(n: usize) -> Vec<Vec<u32>> {
    let size = 1usize << n;
    let mut adj: Vec<Vec<u32>> = (0..size)
        .map(|v| (0..n).map(|i| (v ^ (1 << i)) as u32).collect())
        .collect();
    adj.push(vec![0, (size - 1) as u32]);
    adj[0].push(size as u32);
    adj[size - 1].push(size as u32);
    for row in &mut adj {
        row.sort_unstable();
    }
    adj
}

fn antipodal(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for n in 1..=5 {
        let exists = hamiltonian_cycle(&cube_with_handle(n), b)?.is_hamiltonian();
        t.eq(format!("antipodal path in Q_{n}"), exists, n % 2 == 1);
        if n % 2 == 1 {
            let code = antipodal_gray_path(n, 1, 2)?;
            t.holds(format!("constructed antipodal path for n = {n} validates"), code.validate().is_ok());
        } else {
            t.holds(format!("construction refuses n = {n}"), antipodal_gray_path(n, 1, 2).is_err());
        }
    }
    Ok(t.outcome())
}

fn reflected(_: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for n in 2..=8 {
        t.holds(format!("reflected cycle for n = {n}"), reflected_gray_cycle(n, 1, 2)?.validate().is_ok());
    }
    Ok(t.outcome())
}

fn permutations(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for n in 2..=6 {
        let code = star_transposition_code(n)?;
        t.holds(format!("star code for n = {n}"), code.validate().is_ok());
    }
    for n in [3, 4] {
        let perms = star_transposition_code(n)?.sequence;
        let mut sorted = perms.clone();
        sorted.sort();
        let adj: Vec<Vec<u32>> = sorted
            .iter()
            .map(|p| {
                let mut row: Vec<u32> = (1..n)
                    .map(|i| {
                        let mut q = p.clone();
                        q.swap(0, i);
                        sorted.binary_search(&q).unwrap() as u32
                    })
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        t.holds(format!("Cayley graph search for n = {n}"), hamiltonian_cycle(&adj, b)?.is_hamiltonian());
    }
    Ok(t.outcome())
}

/// Hosts on which the structural properties are checked, with palettes.
fn structure_instances() -> Result<Vec<(SimpleGraph, usize)>> {
    let mut out = Vec::new();
    for n in [3, 4, 5, 6] {
        out.push((families::cycle(n)?, 3));
    }
    for m in [2, 3, 4] {
        out.push((families::star(m)?, 3));
    }
    for n in [2, 3, 4] {
        out.push((families::complete(n)?, n));
        out.push((families::complete(n)?, n + 1));
    }
    for parts in MULTIPARTITE_LISTS {
        out.push((families::complete_multipartite(parts)?, parts.len()));
        out.push((families::complete_multipartite(parts)?, parts.len() + 1));
    }
    out.push((families::lm(3)?, 3));
    out.push((families::lm(3)?, 4));
    out.push((families::path(2)?.disjoint_union(&families::path(3)?)?, 3));
    out.push((families::cycle(4)?.disjoint_union(&families::path(1)?)?, 3));
    Ok(out)
}

fn spanning_chain(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for (h, k) in structure_instances()? {
        let mut g = LocalizedColoringGraph::build(&h, k, 1, b)?;
        for j in 2..=h.n() {
            let next = g.with_localization(j);
            let nested = (0..g.node_count()).all(|a| g.neighbors(a).iter().all(|&c| next.has_edge(a, c as usize)));
            t.holds(format!("G^{}_{k} inside G^{j}_{k} for {}", j - 1, crate::graph::graph6::to_graph6(&h)), nested);
            g = next;
        }
    }
    Ok(t.outcome())
}

fn g_at_most_h(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for (h, k) in structure_instances()? {
        let (g, hk) = (compute_g(&h, k, b)?, compute_h(&h, k, b)?);
        t.holds(format!("g = {g} <= h = {hk} for {} with {k} colors", crate::graph::graph6::to_graph6(&h)), g <= hk);
    }
    Ok(t.outcome())
}

fn products(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    let hosts = [
        families::path(2)?.disjoint_union(&families::path(3)?)?,
        families::cycle(4)?.disjoint_union(&families::path(1)?)?,
        families::path(2)?.disjoint_union(&families::path(2)?)?,
    ];
    for h in &hosts {
        for j in 1..=3 {
            t.holds(
                format!("product at j = {j} for {}", crate::graph::graph6::to_graph6(h)),
                crate::coloring::product_decomposition_check(h, 3, j, b)?,
            );
        }
    }
    Ok(t.outcome())
}

/// Chromatic polynomial at `k` by deletion and contraction on adjacency masks.
pub fn chromatic_polynomial(h: &SimpleGraph, k: u64) -> u64 {
    fn go(adj: &mut Vec<u64>, alive: u64, k: u64) -> i128 {
        let edge = (0..64).filter(|&v| alive >> v & 1 == 1).find_map(|u| {
            let up = adj[u] & alive & !((1u64 << (u + 1)) - 1);
            (up != 0).then(|| (u, up.trailing_zeros() as usize))
        });
        let Some((u, v)) = edge else {
            return (k as i128).pow(alive.count_ones());
        };
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        let deleted = go(adj, alive, k);
        // contract v into u
        let (saved_u, saved_v) = (adj[u], adj[v]);
        let moved = adj[v];
        let mut touched = Vec::new();
        for w in (0..64).filter(|&w| moved >> w & 1 == 1) {
            touched.push((w, adj[w]));
            adj[w] = (adj[w] & !(1 << v)) | 1 << u;
        }
        adj[u] |= moved;
        let contracted = go(adj, alive & !(1 << v), k);
        for (w, row) in touched.into_iter().rev() {
            adj[w] = row;
        }
        adj[u] = saved_u | 1 << v;
        adj[v] = saved_v | 1 << u;
        deleted - contracted
    }
    let mut adj: Vec<u64> = (0..64)
        .map(|v| if v < h.n() { h.neighbors(v).0 } else { 0 })
        .collect();
    let alive = if h.n() == 64 { u64::MAX } else { (1u64 << h.n()) - 1 };
    go(&mut adj, alive, k) as u64
}

fn node_counts(b: &Budget) -> Result<Outcome> {
    let mut t = Tally::new();
    for (h, k) in structure_instances()? {
        let nodes = LocalizedColoringGraph::build(&h, k, 1, b)?.node_count() as u64;
        t.eq(
            format!("nodes for {} with {k} colors", crate::graph::graph6::to_graph6(&h)),
            nodes,
            chromatic_polynomial(&h, k as u64),
        );
    }
    Ok(t.outcome())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chromatic_polynomial_examples() {
        // (k-1)^n + (-1)^n (k-1) for cycles
        for n in 3..=8 {
            let want = 2u64.pow(n as u32) as i64 + if n % 2 == 0 { 2 } else { -2 };
            assert_eq!(chromatic_polynomial(&families::cycle(n).unwrap(), 3) as i64, want);
        }
        assert_eq!(chromatic_polynomial(&families::complete(4).unwrap(), 5), 120);
        assert_eq!(chromatic_polynomial(&families::path(4).unwrap(), 3), 24);
        assert_eq!(chromatic_polynomial(&SimpleGraph::new(0).unwrap(), 3), 1);
    }

    #[test]
    fn every_suite_has_cases() {
        for s in SUITES {
            assert!(!cases(s).unwrap().is_empty());
        }
        assert!(run_suite("nope", &Budget::default()).is_err());
    }

    #[test]
    fn quick_suites_pass() {
        for s in ["fixture", "lm", "construction-L", "loops", "hypercube"] {
            for r in run_suite(s, &Budget::default()).unwrap() {
                assert_eq!(r.outcome, Outcome::Pass, "{s}/{}", r.name);
            }
        }
    }

    #[test]
    fn corpus_is_fixed() {
        let a = degeneracy_corpus();
        assert_eq!(a.len(), 50);
        assert_eq!(a, degeneracy_corpus());
        assert!(a.iter().all(|g| g.n() <= 6));
    }
}
