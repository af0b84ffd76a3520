//! `kcover`: clique-cover checks, bounds, constructions and the exhaustive
//! oracle from the command line.
//!
//! Exit codes: 0 success / property holds, 1 property false, 2 usage or
//! input error, 3 a proven implication failed to hold.

mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kcover::cover::{has_cover, has_cover_with_counts, truss_decompose, CoverSpec};
use kcover::extremal::{
    build_extremal, cocktail_party_counterexample, decompose, extremal_spec, min_edges_components, min_edges_kcover,
    min_edges_vertex_kcover, recognize_extremal, Shape,
};
use kcover::format::graph6;
use kcover::oracle::{search, search_with_workers, OracleError, SearchSpec};
use kcover::reduce::{contract_and_verify, reduce_to_k4_covered, ReduceError};
use kcover::shrink::{run_procedure, verify_trace, Policy, ShrinkError};
use kcover::verify::{format_outcome, run_all};
use kcover::{Edge, Graph};
use serde::Serialize;
use serde_json::{json, Value};

use input::{read_graphs, Format};

/// Bumped on any breaking change to `--json` output.
const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "kcover", version, about = "Clique covers of graphs: checks, bounds, constructions, oracle")]
struct Cli {
    /// Emit JSON (one object per line) instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Input format; inferred from the file extension or content when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Also write the (first) output graph as Graphviz DOT to this path.
    #[arg(long, global = true, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for exhaustive search (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// (k,l)-cover checks.
    #[command(subcommand)]
    Cover(CoverCommand),
    /// l-truss components (every edge in at least l triangles).
    Truss {
        #[arg(short, long)]
        l: usize,
        file: Option<PathBuf>,
    },
    /// Minimum edge count of a (k,1)-covered graph on n vertices.
    Bound {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        k: usize,
        /// Exactly this many components, each (k,1)-covered.
        #[arg(long, conflicts_with = "vertex_variant")]
        components: Option<usize>,
        /// Every vertex (rather than every edge) lies in a K_k; connectivity not required.
        #[arg(long)]
        vertex_variant: bool,
    },
    /// Build a minimum (k,1)-covered connected graph.
    Construct {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        k: usize,
        #[arg(long, default_value = "star")]
        shape: Shape,
    },
    /// Decide membership in the extremal family.
    Recognize {
        #[arg(short, long)]
        k: usize,
        file: Option<PathBuf>,
    },
    /// Run clique peeling and print its certified lower bound.
    Shrink {
        #[arg(short, long)]
        k: usize,
        #[arg(long, default_value = "lex")]
        policy: Policy,
        file: Option<PathBuf>,
    },
    /// Contract one edge of a (3,2)-covered graph and check the result.
    Contract {
        /// Edge as `u,v`.
        #[arg(short, long, value_parser = parse_edge)]
        e: Edge,
        file: Option<PathBuf>,
    },
    /// Contract edges outside every K_4 until none remain.
    Reduce { file: Option<PathBuf> },
    /// Exhaustive minimum-edge search (n <= 8).
    Search {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        k: usize,
        #[arg(short, long, default_value_t = 1)]
        l: usize,
        /// Collect every minimizer up to isomorphism.
        #[arg(long)]
        all: bool,
        #[arg(long, conflicts_with = "components")]
        vertex_variant: bool,
        #[arg(long)]
        components: Option<usize>,
    },
    /// K_{2h+4} minus a perfect matching against the (2h+2,1) bound.
    Counterexample {
        #[arg(long)]
        l_half: usize,
    },
    /// Run every acceptance check and print a pass/fail table.
    VerifyPaper,
}

#[derive(Subcommand)]
enum CoverCommand {
    /// Does every edge lie in at least l copies of K_k?
    Check(CoverArgs),
}

#[derive(Args)]
struct CoverArgs {
    #[arg(short, long)]
    k: usize,
    #[arg(short, long, default_value_t = 1)]
    l: usize,
    /// Include per-edge clique counts.
    #[arg(long)]
    counts: bool,
    file: Option<PathBuf>,
}

fn parse_edge(s: &str) -> Result<Edge, String> {
    let (a, b) = s.split_once(',').ok_or("expected `u,v`")?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad vertex `{t}`"));
    Edge::new(num(a)?, num(b)?).map_err(|e| e.to_string())
}

/// Failure modes, each mapped to an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Violation(String),
}

type Outcome = Result<bool, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

struct Out {
    json: bool,
    dot: Option<PathBuf>,
    dot_written: bool,
}

impl Out {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) {
        if self.json {
            let mut v = serde_json::to_value(value).expect("serializable");
            if let Value::Object(map) = &mut v {
                map.insert("schema_version".into(), json!(SCHEMA_VERSION));
            }
            println!("{v}");
        } else {
            println!("{}", text());
        }
    }

    fn dot(&mut self, g: &Graph) -> Result<(), Failure> {
        if let Some(path) = self.dot.as_ref().filter(|_| !self.dot_written) {
            std::fs::write(path, g.to_dot()).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            self.dot_written = true;
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out { json: cli.json, dot: cli.dot.clone(), dot_written: false };
    match run(&cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Violation(m)) => {
            eprintln!("violation: {m}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli, out: &mut Out) -> Outcome {
    let graphs = |file: &Option<PathBuf>| read_graphs(file.as_deref(), cli.format).map_err(Failure::Usage);
    match &cli.command {
        Command::Cover(CoverCommand::Check(a)) => {
            let spec = CoverSpec::new(a.k, a.l).map_err(usage)?;
            let mut all = true;
            for g in graphs(&a.file)? {
                let r = if a.counts { has_cover_with_counts(&g, spec) } else { has_cover(&g, spec) };
                all &= r.holds;
                out.emit(&r, || {
                    let mut s = if r.holds {
                        format!("holds: every edge lies in at least {} copies of K_{}", a.l, a.k)
                    } else {
                        format!("fails: {} edges lie in fewer than {} copies of K_{}", r.defects.len(), a.l, a.k)
                    };
                    for d in &r.defects {
                        s += &format!("\n  {} {}: {}", d.u, d.v, d.count);
                    }
                    s
                });
            }
            Ok(all)
        }
        Command::Truss { l, file } => {
            for g in graphs(file)? {
                let trusses = truss_decompose(&g, *l);
                let rows: Vec<Value> = trusses
                    .iter()
                    .map(|t| {
                        let edges: Vec<[usize; 2]> =
                            t.graph.edges().map(|e| [t.vertices[e.u], t.vertices[e.v]]).collect();
                        json!({ "vertices": t.vertices, "edges": edges })
                    })
                    .collect();
                out.emit(&json!({ "l": l, "trusses": rows }), || {
                    let mut s = format!("{} {}-truss component(s)", trusses.len(), l);
                    for t in &trusses {
                        s += &format!("\n  {} vertices, {} edges: {:?}", t.vertices.len(), t.graph.edge_count(), t.vertices);
                    }
                    s
                });
            }
            Ok(true)
        }
        Command::Bound { n, k, components, vertex_variant } => {
            let (variant, value) = match (components, vertex_variant) {
                (Some(c), _) => ("components", min_edges_components(*n, *k, *c)),
                (None, true) => ("vertex", min_edges_vertex_kcover(*n, *k)),
                (None, false) => ("connected", min_edges_kcover(*n, *k)),
            };
            let bound = value.map_err(usage)?;
            let d = if variant == "connected" { decompose(*n, *k).ok() } else { None };
            let report = json!({
                "n": n, "k": k, "variant": variant, "components": components, "bound": bound,
                "q": d.map(|d| d.q), "r": d.map(|d| d.r),
            });
            out.emit(&report, || bound.to_string());
            Ok(true)
        }
        Command::Construct { n, k, shape } => {
            let spec = extremal_spec(*n, *k, *shape).map_err(usage)?;
            let g = build_extremal(*n, *k, *shape).map_err(usage)?;
            out.dot(&g)?;
            let g6 = graph6::encode(&g);
            let report = json!({
                "n": n, "k": k, "shape": format!("{shape:?}").to_lowercase(),
                "vertices": g.vertex_count(), "edges": g.edge_count(), "graph6": g6, "hypertree": spec.to_string(),
            });
            out.emit(&report, || g6.clone());
            Ok(true)
        }
        Command::Recognize { k, file } => {
            let mut all = true;
            for g in graphs(file)? {
                let r = recognize_extremal(&g, *k);
                all &= r.extremal;
                out.emit(&r, || match (&r.reason, &r.witness) {
                    (None, Some(w)) => format!("extremal: blocks {:?}", w.cliques),
                    (Some(reason), _) => format!("not extremal: {reason:?}"),
                    _ => "extremal".into(),
                });
            }
            Ok(all)
        }
        Command::Shrink { k, policy, file } => {
            let mut all = true;
            for g in graphs(file)? {
                let trace = match run_procedure(&g, *k, *policy) {
                    Ok(t) => t,
                    Err(e @ ShrinkError::CliqueOrder(_)) => return Err(usage(e)),
                    Err(e) => {
                        eprintln!("{e}");
                        all = false;
                        continue;
                    }
                };
                let verdict = verify_trace(&g, &trace);
                if !verdict.is_valid() {
                    return Err(Failure::Violation(format!("trace failed to replay: {verdict:?}")));
                }
                out.emit(&trace, || {
                    format!("bound {} after {} iterations (|E| = {})", trace.bound, trace.iterations(), g.edge_count())
                });
            }
            Ok(all)
        }
        Command::Contract { e, file } => {
            let mut all = true;
            for g in graphs(file)? {
                g.check_edge(*e).map_err(usage)?;
                match contract_and_verify(&g, *e) {
                    Ok(r) => {
                        out.dot(&r.output)?;
                        out.emit(&r, || {
                            format!(
                                "{}: {} vertices, {} edges (dropped {}), connected {}, (3,2)-cover {}",
                                r.graph, r.n_after, r.edges_after, r.edge_drop, r.connected, r.cover_32
                            )
                        });
                    }
                    Err(err) => all &= reduce_failure(err)?,
                }
            }
            Ok(all)
        }
        Command::Reduce { file } => {
            let mut all = true;
            for g in graphs(file)? {
                match reduce_to_k4_covered(&g) {
                    Ok((h, chain)) => {
                        out.dot(&h)?;
                        for r in &chain {
                            out.emit(r, || format!("contract {} -> {} ({} edges)", r.edge, r.graph, r.edges_after));
                        }
                        let g6 = graph6::encode(&h);
                        out.emit(&json!({ "result": g6, "contractions": chain.len() }), || {
                            format!("result {g6} after {} contraction(s)", chain.len())
                        });
                    }
                    Err(err) => all &= reduce_failure(err)?,
                }
            }
            Ok(all)
        }
        Command::Search { n, k, l, all, vertex_variant, components } => {
            let spec = match (vertex_variant, components) {
                (true, _) => SearchSpec::vertex_cover(*n, *k),
                (false, Some(c)) => SearchSpec { l: *l, ..SearchSpec::components(*n, *k, *c) },
                (false, None) => SearchSpec::connected(*n, *k, *l),
            };
            let report = match cli.workers {
                Some(w) => search_with_workers(&spec, *all, w),
                None => search(&spec, *all),
            }
            .map_err(|e| match e {
                OracleError::TooLarge(_) | OracleError::Invalid(_) => usage(e),
            })?;
            if let Some(m) = report.minimizers.first() {
                out.dot(&m.graph)?;
            }
            out.emit(&report, || {
                let mut s = match report.minimum {
                    Some(m) => format!("minimum {m} ({} subsets examined)", report.subsets_examined),
                    None => format!("no graph with {}..={} edges", report.searched.0, report.searched.1),
                };
                for m in &report.minimizers {
                    s += &format!("\n{}", m.canonical);
                }
                s
            });
            Ok(report.minimum.is_some())
        }
        Command::Counterexample { l_half } => {
            if *l_half == 0 {
                return Err(usage("--l-half must be at least 1"));
            }
            let r = cocktail_party_counterexample(*l_half);
            out.emit(&r, || {
                format!(
                    "{} vertices, {} edges, (3,{})-cover {}, bound {}, strictly smaller {}",
                    r.vertices,
                    r.edges,
                    2 * l_half,
                    r.cover_holds,
                    r.bound,
                    r.strictly_smaller
                )
            });
            Ok(r.strictly_smaller)
        }
        Command::VerifyPaper => {
            let outcomes = match cli.workers {
                Some(w) => rayon::ThreadPoolBuilder::new()
                    .num_threads(w.max(1))
                    .build()
                    .map_err(usage)?
                    .install(|| run_all(cli.seed)),
                None => run_all(cli.seed),
            };
            let passed = outcomes.iter().all(|o| o.passed);
            if out.json {
                out.emit(&json!({ "passed": passed, "criteria": outcomes }), String::new);
            } else {
                for o in &outcomes {
                    println!("{}", format_outcome(o));
                }
                println!("{}/{} passed", outcomes.iter().filter(|o| o.passed).count(), outcomes.len());
            }
            Ok(passed)
        }
    }
}

/// Precondition failures mean the property is false; a failed conclusion
/// is a violation.
fn reduce_failure(err: ReduceError) -> Outcome {
    match err {
        ReduceError::Precondition(p) => {
            eprintln!("precondition failed: {p}");
            Ok(false)
        }
        v @ ReduceError::TheoremViolation { .. } => Err(Failure::Violation(v.to_string())),
    }
}

