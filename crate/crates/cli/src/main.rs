//! `recolor`: mixing and Gray code numbers of small graphs, explicit Gray
//! codes of colorings, claim suites and counterexample hunts.
//!
//! Exit codes: 0 pass, 1 refuted (a failed claim, an invalid code or a hunt
//! finding), 2 undecided within budget, 3 usage or input error.

use clap::{Parser, Subcommand, ValueEnum};
use recolor::family::Family;
use recolor::graph::{graph6, multigraph, MultiGraph, SubdivisionSpec};
use recolor::graycode::{
    degeneracy_code, fixtures, multipartite_code_k, multipartite_code_kplus1, searched_code, subdivided_h3_code,
    subdivided_h4_code, validate_code,
};
use recolor::hunt::{self, HuntPredicate, HuntTask};
use recolor::solver::{graycode_number_k0, mixing_number_k1, parameter_report, Budget};
use recolor::verify::{self, Outcome, SUITES};
use recolor::{CyclicGrayCode, Error, LocalizedColoringGraph, SimpleGraph};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

const PASS: u8 = 0;
const REFUTED: u8 = 1;
const UNDECIDED: u8 = 2;
const USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "recolor", version, about = "Localized coloring graphs and Gray codes of colorings")]
struct Cli {
    /// Largest coloring space to build (overrides RECOLOR_BUDGET_NODES).
    #[arg(long, global = true, value_name = "COLORINGS")]
    budget_nodes: Option<usize>,
    /// Wall-clock limit per decision in seconds (overrides RECOLOR_BUDGET_SECS).
    #[arg(long, global = true, value_name = "SECONDS")]
    budget_secs: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Named family, e.g. cycle:5, Lm:3, multipartite:1,3, L:2,3,3, graph6:Bg.
    #[arg(long)]
    family: Option<String>,
    /// File with one graph6 string per line ("-" for stdin).
    #[arg(long, value_name = "PATH")]
    graph6: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Mixing and Gray code numbers with per-level certificates, as JSON.
    Compute {
        #[command(flatten)]
        source: GraphSource,
        /// Number of colors.
        #[arg(long)]
        k: Option<usize>,
        /// Report only this localization.
        #[arg(long)]
        j: Option<usize>,
        /// Also report the palette thresholds for connectivity and
        /// Hamiltonicity of the 1-localized graph.
        #[arg(long)]
        thresholds: bool,
        /// Print the coloring graph at --j (default 1) in DOT instead.
        #[arg(long)]
        dot: bool,
    },
    /// Emit a validated cyclic Gray code of colorings.
    Graycode {
        /// Named family of the host graph.
        #[arg(long, conflicts_with_all = ["fixture", "multigraph"])]
        family: Option<String>,
        /// Multigraph text file whose edges are subdivided (`n; u v x<count>; ...`).
        #[arg(long, value_name = "PATH", conflicts_with = "fixture")]
        multigraph: Option<PathBuf>,
        /// A built-in reference listing.
        #[arg(long, value_enum)]
        fixture: Option<FixtureName>,
        /// Number of colors.
        #[arg(long)]
        colors: Option<usize>,
        /// Localization for the search constructor (default: least that works).
        #[arg(long)]
        j: Option<usize>,
        #[arg(long, value_enum, default_value_t = Constructor::Auto)]
        constructor: Constructor,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run claim suites and print one line per case.
    Verify {
        /// Suite to run (repeatable); all suites by default.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: Vec<String>,
        /// One JSON object per case instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Search a graph corpus for Gray code numbers that grow with the palette
    /// or once-subdivided graphs beyond the conjectured bounds. Findings are
    /// streamed as JSON lines.
    Hunt {
        /// Every graph up to this many vertices (at most 7).
        #[arg(long, conflicts_with = "graph6", required_unless_present = "graph6")]
        max_n: Option<usize>,
        /// File with one graph6 string per line ("-" for stdin).
        #[arg(long, value_name = "PATH")]
        graph6: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        k_min: usize,
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        #[arg(long, value_enum, default_value_t = PredicateArg::Increase)]
        predicate: PredicateArg,
        /// Write every evaluated (graph, k) row as JSON lines to this file.
        #[arg(long, value_name = "PATH")]
        table: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FixtureName {
    /// The 18 3-colorings of the 4-cycle at localization 2.
    #[value(name = "c4-h3")]
    C4H3,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Constructor {
    /// Pick a construction from the host and palette, searching otherwise.
    Auto,
    /// Complete multipartite hosts with k or k + 1 colors.
    Multipartite,
    /// Vertex by vertex at localization 1; needs k >= degeneracy + 3.
    Degeneracy,
    /// Hamiltonian cycle search.
    Search,
    /// Multigraphs subdivided at least three times, 3 colors.
    SubdividedH3,
    /// Loopless multigraphs subdivided at least twice, 4 colors.
    SubdividedH4,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PredicateArg {
    Increase,
    Subdivision,
}

/// A failure together with the exit code it maps to.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            _ if e.is_undecided() => UNDECIDED,
            Error::Internal(_) => REFUTED,
            _ => USAGE,
        };
        Failure(code, e.to_string())
    }
}

type Run = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(USAGE);
        }
        Err(e) => e.exit(),
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            eprintln!("recolor: {msg}");
            code
        }
    };
    ExitCode::from(code)
}

fn run(cli: Cli) -> Run {
    let mut budget = Budget::from_env()?;
    if let Some(n) = cli.budget_nodes {
        budget.max_colorings = n;
    }
    if let Some(s) = cli.budget_secs {
        if !(s.is_finite() && s >= 0.0) {
            return Err(Failure(USAGE, format!("--budget-secs {s} is not a duration")));
        }
        budget.time_limit = Duration::from_secs_f64(s);
    }
    match cli.command {
        Command::Compute { source, k, j, thresholds, dot } => compute(&source, k, j, thresholds, dot, &budget),
        Command::Graycode { family, multigraph, fixture, colors, j, constructor, format } => {
            let code = match (fixture, family, multigraph) {
                (Some(FixtureName::C4H3), ..) => fixtures::c4_fixture(),
                (None, Some(spec), None) => family_code(&spec, colors, j, constructor, &budget)?,
                (None, None, Some(path)) => multigraph_code(&path, colors, constructor, &budget)?,
                _ => return Err(Failure(USAGE, "one of --family, --multigraph or --fixture is required".into())),
            };
            emit_code(&code, format)
        }
        Command::Verify { suite, json } => verify_suites(&suite, json, &budget),
        Command::Hunt { max_n, graph6, k_min, k_max, predicate, table } => {
            let graphs = match (max_n, graph6) {
                (Some(n), _) => hunt::small_graph_corpus(n)?,
                (None, Some(path)) => read_graph6(&path)?,
                (None, None) => return Err(Failure(USAGE, "one of --max-n or --graph6 is required".into())),
            };
            let predicate = match predicate {
                PredicateArg::Increase => HuntPredicate::GrayNumberIncrease,
                PredicateArg::Subdivision => HuntPredicate::SubdivisionBounds,
            };
            hunt_corpus(HuntTask { graphs, k_min, k_max, predicate, budget }, table.as_deref())
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    let read = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    read.map_err(|e| Failure(USAGE, format!("{}: {e}", path.display())))
}

fn read_graph6(path: &Path) -> Result<Vec<SimpleGraph>, Failure> {
    Ok(graph6::from_graph6_lines(&read_text(path)?)?)
}

fn hosts(source: &GraphSource) -> Result<Vec<SimpleGraph>, Failure> {
    match (&source.family, &source.graph6) {
        (Some(spec), _) => Ok(vec![spec.parse::<Family>()?.build()?]),
        (None, Some(path)) => read_graph6(path),
        (None, None) => Err(Failure(USAGE, "one of --family or --graph6 is required".into())),
    }
}

fn print_json(value: &impl serde::Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure(REFUTED, e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn compute(source: &GraphSource, k: Option<usize>, j: Option<usize>, thresholds: bool, dot: bool, budget: &Budget) -> Run {
    let graphs = hosts(source)?;
    if k.is_none() && !thresholds {
        return Err(Failure(USAGE, "--k or --thresholds is required".into()));
    }
    if dot {
        let [host] = graphs.as_slice() else {
            return Err(Failure(USAGE, "--dot needs exactly one graph".into()));
        };
        let k = k.ok_or_else(|| Failure(USAGE, "--dot needs --k".into()))?;
        print!("{}", LocalizedColoringGraph::build(host, k, j.unwrap_or(1), budget)?.to_dot());
        return Ok(PASS);
    }
    let mut code = PASS;
    for host in &graphs {
        let mut out = serde_json::Map::new();
        if let Some(k) = k {
            let report = parameter_report(host, k, j, budget)?;
            if report.undecided {
                code = UNDECIDED;
            }
            if let serde_json::Value::Object(fields) = serde_json::to_value(&report).expect("report serializes") {
                out = fields;
            }
        } else {
            out.insert("graph".into(), graph6::to_graph6(host).into());
            out.insert("n".into(), host.n().into());
        }
        if thresholds {
            for (key, value) in [("k1", mixing_number_k1(host, budget)), ("k0", graycode_number_k0(host, budget))] {
                match value {
                    Ok(v) => {
                        out.insert(key.into(), v.into());
                    }
                    Err(e) if e.is_undecided() => {
                        out.insert(key.into(), serde_json::Value::Null);
                        code = UNDECIDED;
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
        print_json(&out)?;
    }
    Ok(code)
}

fn family_code(spec: &str, colors: Option<usize>, j: Option<usize>, constructor: Constructor, budget: &Budget) -> Result<CyclicGrayCode, Failure> {
    let family: Family = spec.parse()?;
    let host = family.build()?;
    let k = colors.ok_or_else(|| Failure(USAGE, "--colors is required".into()))?;
    let parts = family.parts();
    let code = match constructor {
        Constructor::Multipartite | Constructor::Auto if parts.as_ref().is_some_and(|p| k == p.len() || k == p.len() + 1) => {
            let parts = parts.unwrap();
            if k == parts.len() {
                multipartite_code_k(&parts)?
            } else {
                multipartite_code_kplus1(&parts, budget)?
            }
        }
        Constructor::Multipartite => {
            return Err(Failure(USAGE, format!("{family} with {k} colors is not a complete multipartite host with k or k + 1 colors")))
        }
        Constructor::Degeneracy => degeneracy_code(&host, k, budget)?,
        Constructor::Auto if j.is_none() && k >= host.degeneracy() + 3 => degeneracy_code(&host, k, budget)?,
        Constructor::Auto | Constructor::Search => match j {
            Some(j) => searched_code(&host, k, j, budget)?,
            None => least_searched_code(&host, k, budget)?,
        },
        Constructor::SubdividedH3 | Constructor::SubdividedH4 => {
            return Err(Failure(USAGE, "subdivision constructors take --multigraph".into()))
        }
    };
    Ok(code)
}

fn least_searched_code(host: &SimpleGraph, k: usize, budget: &Budget) -> Result<CyclicGrayCode, Failure> {
    for j in 1..=host.n().max(1) {
        match searched_code(host, k, j, budget) {
            Err(Error::Precondition(_)) => continue,
            other => return Ok(other?),
        }
    }
    Err(Failure(USAGE, format!("no cyclic listing of the {k}-colorings exists at any localization")))
}

fn multigraph_code(path: &Path, colors: Option<usize>, constructor: Constructor, budget: &Budget) -> Result<CyclicGrayCode, Failure> {
    let (m, spec): (MultiGraph, SubdivisionSpec) = multigraph::parse_multigraph(&read_text(path)?)?;
    let code = match (constructor, colors) {
        (Constructor::SubdividedH4, None | Some(4)) | (Constructor::Auto, Some(4)) => subdivided_h4_code(&m, &spec, budget)?,
        (Constructor::SubdividedH3, None | Some(3)) | (Constructor::Auto, Some(3)) => subdivided_h3_code(&m, &spec, budget)?,
        (Constructor::Auto, _) => return Err(Failure(USAGE, "--multigraph needs --colors 3 or 4".into())),
        (Constructor::SubdividedH3 | Constructor::SubdividedH4, _) => {
            return Err(Failure(USAGE, "the subdivision constructors use exactly 3 or 4 colors respectively".into()))
        }
        _ => {
            let host = m.subdivide(&spec)?;
            let k = colors.ok_or_else(|| Failure(USAGE, "--colors is required".into()))?;
            match constructor {
                Constructor::Degeneracy => degeneracy_code(&host, k, budget)?,
                _ => least_searched_code(&host, k, budget)?,
            }
        }
    };
    Ok(code)
}

fn emit_code(code: &CyclicGrayCode, format: Format) -> Run {
    if let Err(v) = validate_code(code) {
        return Err(Failure(REFUTED, format!("constructed listing is not a Gray code: {v}")));
    }
    match format {
        Format::Text => print!("{}", code.to_text()),
        Format::Json => print_json(&code.to_json())?,
    }
    Ok(PASS)
}

fn verify_suites(selected: &[String], json: bool, budget: &Budget) -> Run {
    let suites: Vec<&str> = if selected.is_empty() {
        SUITES.to_vec()
    } else {
        selected.iter().map(String::as_str).collect()
    };
    let (mut failed, mut undecided) = (0, 0);
    for suite in suites {
        for case in verify::run_suite(suite, budget)? {
            match &case.outcome {
                Outcome::Fail(_) => failed += 1,
                Outcome::Undecided(_) => undecided += 1,
                Outcome::Pass => {}
            }
            if json {
                print_json(&case)?;
            } else {
                let (tag, detail) = match &case.outcome {
                    Outcome::Pass => ("PASS", String::new()),
                    Outcome::Fail(d) => ("FAIL", format!("\n      {d}")),
                    Outcome::Undecided(d) => ("UNDECIDED", format!("\n      {d}")),
                };
                println!("{tag:<9} {}/{} ({} ms): {}{detail}", case.suite, case.name, case.millis, case.claim);
            }
        }
    }
    Ok(if failed > 0 {
        REFUTED
    } else if undecided > 0 {
        UNDECIDED
    } else {
        PASS
    })
}

/// Graphs per batch; findings of one batch are printed before the next starts.
const HUNT_BATCH: usize = 64;

fn hunt_corpus(task: HuntTask, table: Option<&Path>) -> Run {
    let mut table = match table {
        Some(p) => Some(std::fs::File::create(p).map_err(|e| Failure(USAGE, format!("{}: {e}", p.display())))?),
        None => None,
    };
    let (mut findings, mut undecided) = (0, 0);
    for batch in task.graphs.chunks(HUNT_BATCH) {
        let sub = HuntTask { graphs: batch.to_vec(), ..task.clone() };
        let outcome = hunt::run_hunt(&sub)?;
        for entry in &outcome.entries {
            if let Some(reason) = &entry.undecided {
                undecided += 1;
                eprintln!("undecided: {} at k = {}: {reason}", entry.graph, entry.k);
            }
            if let Some(f) = table.as_mut() {
                let line = serde_json::to_string(entry).expect("entry serializes");
                writeln!(f, "{line}").map_err(|e| Failure(USAGE, e.to_string()))?;
            }
        }
        for finding in &outcome.findings {
            match hunt::recheck(finding, &task.budget) {
                Ok(true) => {
                    findings += 1;
                    print_json(finding)?;
                }
                Ok(false) => eprintln!("discarded: {} at k = {} does not recheck", finding.graph, finding.k),
                Err(e) => {
                    undecided += 1;
                    eprintln!("undecided: recheck of {} at k = {}: {e}", finding.graph, finding.k);
                }
            }
        }
        std::io::stdout().flush().ok();
    }
    Ok(if findings > 0 {
        REFUTED
    } else if undecided > 0 {
        UNDECIDED
    } else {
        PASS
    })
}
