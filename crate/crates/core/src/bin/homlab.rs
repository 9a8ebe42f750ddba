//! `homlab`: generate graphs, run the solvers, check witnesses, and run the
//! verification suites.
//!
//! Exit codes: 0 decided or passed, 1 failure or bad input, 2 size guard,
//! 3 verification budget exhausted.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use homlab::corpus::{self, dense_g0_sequence, random_g0_sequence};
use homlab::games::{Game, GameFile, Strategy};
use homlab::graph::{
    categorical_product, complete_graph, g0_truncation, h_delta, named_graph, shift_graph, tree_ball,
    EdgeLabeledGraph, FiniteGraph, NamedGraph, TargetGraph,
};
use homlab::homgraph::{analyze, build_hom_approx_with};
use homlab::io::{labeled_to_dot, load_graph, write_dimacs, write_dot, write_labeled_dimacs, GraphJson};
use homlab::solve::{
    check_anti_game, chromatic_number_with, delta_star_with, edge_grabbing_from_orientation,
    edge_labeled_chromatic_number_with, find_hom_labeled_with_stats, find_hom_with_stats,
    hedetniemi_gap_with, is_edge_labeled_coloring, is_proper_coloring, sinkless_orientation, theta_hom,
    verify_hom, verify_labeled_hom, AntiGameLabeling, Coloring, DeltaStarWitness, Guard, Homomorphism,
    SearchStats,
};
use homlab::suites::{run_suite, Budget, Suite, VerifyConfig};
use homlab::Error;

#[derive(Parser)]
#[command(name = "homlab", version, about = "Graph homomorphism and game-theoretic coloring laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph.
    Gen(GenArgs),
    /// Run a solver and print its result.
    Solve(SolveArgs),
    /// Check a witness against a graph.
    Check(CheckArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Kn,
    Hdelta,
    Product,
    Treeball,
    G0,
    Named,
    Shiftgraph,
}

#[derive(Args)]
struct GenArgs {
    kind: GenKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    /// Radius of a tree ball.
    #[arg(long)]
    r: Option<usize>,
    /// Depth of a g0 truncation.
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long)]
    g: Option<PathBuf>,
    #[arg(long)]
    h: Option<PathBuf>,
    /// chvatal, grotzsch, petersen or cycle(n).
    #[arg(long)]
    name: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// g0 only: nested words with cyclically repeating labels.
    #[arg(long)]
    dense: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Task {
    Hom,
    Chrom,
    Chromlab,
    Deltastar,
    Theta,
    Antigame,
    Sinkless,
    Hedetniemi,
    Homgraph,
    Game,
}

#[derive(Args)]
struct SolveArgs {
    task: Task,
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    g: Option<PathBuf>,
    #[arg(long)]
    h: Option<PathBuf>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    depth: Option<usize>,
    /// Game description (JSON) for the game task.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Use the label-preserving variant for homgraph.
    #[arg(long)]
    labeled: bool,
    #[arg(long)]
    override_guard: bool,
    /// Add wall-clock time to the statistics.
    #[arg(long)]
    timings: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Hom,
    Coloring,
    Chromlab,
    Deltastar,
    Antigame,
    Strategy,
}

#[derive(Args)]
struct CheckArgs {
    kind: CheckKind,
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    g: Option<PathBuf>,
    #[arg(long)]
    h: Option<PathBuf>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Witness JSON, bare or wrapped in a solver result.
    #[arg(long)]
    witness: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
    suite: String,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_parser = ["small", "medium", "large"], default_value = "small")]
    budget: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

type CliResult = Result<ExitCode, Error>;

fn main() -> ExitCode {
    if let Some(n) = std::env::var("HOMLAB_THREADS").ok().and_then(|s| s.parse().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Solve(a) => solve(a),
        Command::Check(a) => check(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::SizeGuard { .. }) { 2 } else { 1 })
        }
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Error> {
    v.ok_or_else(|| Error::Precondition(format!("missing --{flag}")))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Precondition(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Option<PathBuf>, flag: &str) -> Result<TargetGraph, Error> {
    load_graph(need(path.as_deref(), flag)?)
}

fn labeled(g: TargetGraph) -> Result<EdgeLabeledGraph, Error> {
    match g {
        TargetGraph::Labeled(l) => Ok(l),
        TargetGraph::Plain(_) => Err(Error::Precondition("expected an edge-labeled graph (JSON with labels)".into())),
    }
}

fn gen(a: GenArgs) -> CliResult {
    let mut comments = vec![];
    let graph = match a.kind {
        GenKind::Kn => TargetGraph::Plain(complete_graph(need(a.n, "n")?)),
        GenKind::Hdelta => {
            let h = h_delta(need(a.delta, "delta")?)?;
            if a.format == Format::Json {
                let j = GraphJson::from_plain(&h.graph).with_roles(h.roles());
                emit(&a.out, &(serde_json::to_string_pretty(&j)? + "\n"))?;
                return Ok(ExitCode::SUCCESS);
            }
            comments = h
                .roles()
                .into_iter()
                .map(|(k, v)| format!("role {k} {}", join(v.iter().map(|x| x + 1))))
                .collect();
            TargetGraph::Plain(h.graph)
        }
        GenKind::Product => {
            let g = load(&a.g, "g")?;
            let h = load(&a.h, "h")?;
            TargetGraph::Plain(categorical_product(g.plain(), h.plain()))
        }
        GenKind::Treeball => {
            let b = tree_ball(need(a.delta, "delta")?, need(a.r.or(a.depth), "r")?)?;
            comments = (0..b.len()).map(|v| format!("word {} {}", v + 1, b.word_string(v))).collect();
            TargetGraph::Labeled(b.graph().clone())
        }
        GenKind::G0 => {
            let delta = need(a.delta, "delta")?;
            let depth = need(a.depth, "depth")?;
            let mut rng = corpus::rng(a.seed);
            let seq = if a.dense {
                dense_g0_sequence(delta, depth, &mut rng)
            } else {
                random_g0_sequence(delta, depth, &mut rng)
            };
            let g = g0_truncation(delta, depth, &seq)?;
            comments.push(format!("seed {}", a.seed));
            comments.extend(seq.iter().enumerate().map(|(k, (s, l))| {
                format!("level {k} word {} label {l}", s.iter().map(|b| b.to_string()).collect::<String>())
            }));
            comments.extend((0..g.words.len()).map(|v| format!("string {} {}", v + 1, g.word_string(v))));
            TargetGraph::Labeled(g.graph)
        }
        GenKind::Named => {
            let name: NamedGraph = need(a.name.as_deref(), "name")?.parse()?;
            TargetGraph::Plain(named_graph(name)?)
        }
        GenKind::Shiftgraph => {
            let (g, subsets) = shift_graph(need(a.n, "n")?, need(a.k, "k")?)?;
            comments = subsets
                .iter()
                .enumerate()
                .map(|(v, s)| format!("subset {} {}", v + 1, join(s.iter())))
                .collect();
            TargetGraph::Plain(g)
        }
    };
    let text = match (a.format, &graph) {
        (Format::Json, TargetGraph::Plain(g)) => serde_json::to_string_pretty(&GraphJson::from_plain(g))? + "\n",
        (Format::Json, TargetGraph::Labeled(g)) => serde_json::to_string_pretty(&GraphJson::from_labeled(g))? + "\n",
        (Format::Dot, TargetGraph::Plain(g)) => write_dot(g, None, None),
        (Format::Dot, TargetGraph::Labeled(g)) => labeled_to_dot(g),
        (Format::Text, TargetGraph::Plain(g)) => dimacs(g, &comments),
        (Format::Text, TargetGraph::Labeled(g)) => {
            let refs: Vec<&str> = comments.iter().map(String::as_str).collect();
            write_labeled_dimacs(g, &refs)
        }
    };
    emit(&a.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn dimacs(g: &FiniteGraph, comments: &[String]) -> String {
    let refs: Vec<&str> = comments.iter().map(String::as_str).collect();
    write_dimacs(g, &refs)
}

fn join<T: ToString>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct Stats {
    nodes_expanded: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_ms: Option<u64>,
}

#[derive(Serialize)]
struct SolveOutput {
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Value>,
    stats: Stats,
}

fn solve(a: SolveArgs) -> CliResult {
    let guard = if a.override_guard { Guard::Override } else { Guard::Enforce };
    let start = Instant::now();
    let (status, witness, stats): (&'static str, Option<Value>, SearchStats) = match a.task {
        Task::Hom => {
            let g = load(&a.g, "g")?;
            let h = load(&a.h, "h")?;
            let (found, stats) = match (&g, &h) {
                (TargetGraph::Labeled(g), TargetGraph::Labeled(h)) => find_hom_labeled_with_stats(g, h)?,
                _ => find_hom_with_stats(g.plain(), h.plain()),
            };
            found_or_none(found, stats)?
        }
        Task::Chrom => {
            let g = load(&a.graph, "graph")?;
            let (c, stats) = chromatic_number_with(g.plain(), guard)?;
            ("DECIDED", Some(coloring_json(&c)), stats)
        }
        Task::Chromlab => {
            let g = labeled(load(&a.graph, "graph")?)?;
            let (c, stats) = edge_labeled_chromatic_number_with(&g, guard)?;
            ("DECIDED", Some(coloring_json(&c)), stats)
        }
        Task::Deltastar => {
            let g = load(&a.graph, "graph")?;
            let w = delta_star_with(g.plain(), need(a.delta, "delta")?, guard)?;
            found_or_none(w, SearchStats::default())?
        }
        Task::Theta => {
            let g = load(&a.graph, "graph")?;
            let delta = need(a.delta, "delta")?;
            match delta_star_with(g.plain(), delta, guard)? {
                Some(w) => {
                    let t = theta_hom(g.plain(), &w, delta)?;
                    ("FOUND", Some(json!({"delta_star": w, "map": t.map})), SearchStats::default())
                }
                None => ("NONE", None, SearchStats::default()),
            }
        }
        Task::Antigame => {
            let g = labeled(load(&a.graph, "graph")?)?;
            match sinkless_orientation(g.graph()) {
                Some(o) => {
                    let l = edge_grabbing_from_orientation(&g, &o)?;
                    ("FOUND", Some(json!({"orientation": o, "labels": l.labels})), SearchStats::default())
                }
                None => ("NONE", None, SearchStats::default()),
            }
        }
        Task::Sinkless => {
            let g = load(&a.graph, "graph")?;
            found_or_none(sinkless_orientation(g.plain()), SearchStats::default())?
        }
        Task::Hedetniemi => {
            let g = load(&a.g, "g")?;
            let h = load(&a.h, "h")?;
            let gap = hedetniemi_gap_with(g.plain(), h.plain(), guard)?;
            let w = json!({"chi_g": gap.chi_g, "chi_h": gap.chi_h, "chi_product": gap.chi_product, "gap": gap.gap()});
            ("DECIDED", Some(w), SearchStats::default())
        }
        Task::Homgraph => {
            let g = load(&a.graph, "graph")?;
            let approx = build_hom_approx_with(
                need(a.delta, "delta")?,
                need(a.depth, "depth")?,
                g.as_target(),
                a.labeled,
                guard,
            )?;
            if a.format == Format::Dot {
                emit(&a.out, &approx.to_dot())?;
                return Ok(ExitCode::SUCCESS);
            }
            ("DECIDED", Some(serde_json::to_value(analyze(&approx))?), SearchStats::default())
        }
        Task::Game => {
            let text = read(need(a.spec.as_deref(), "spec")?)?;
            let file: GameFile = serde_json::from_str(&text)?;
            let target = file.target_graph()?;
            let table = file.label_table();
            let game = Game::new(file.spec(&target, &table))?;
            let out = game.solve()?;
            let w = json!({"winner": out.winner, "depth": file.depth, "strategy": out.strategy});
            ("DECIDED", Some(w), SearchStats::default())
        }
    };
    let output = SolveOutput {
        status,
        witness,
        stats: Stats {
            nodes_expanded: stats.nodes_expanded,
            wall_ms: a.timings.then(|| start.elapsed().as_millis() as u64),
        },
    };
    let text = match a.format {
        Format::Json | Format::Dot => serde_json::to_string_pretty(&output)? + "\n",
        Format::Text => {
            let mut s = format!("{status}\n");
            if let Some(w) = &output.witness {
                s += &format!("{w}\n");
            }
            s += &format!("nodes_expanded {}\n", output.stats.nodes_expanded);
            if let Some(ms) = output.stats.wall_ms {
                s += &format!("wall_ms {ms}\n");
            }
            s
        }
    };
    emit(&a.out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn found_or_none<T: Serialize>(
    found: Option<T>,
    stats: SearchStats,
) -> Result<(&'static str, Option<Value>, SearchStats), Error> {
    Ok(match found {
        Some(w) => ("FOUND", Some(serde_json::to_value(w)?), stats),
        None => ("NONE", None, stats),
    })
}

fn coloring_json(c: &Coloring) -> Value {
    json!({"chi": c.num_colors, "coloring": c})
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))
}

/// A witness file may hold the bare witness or a solver result around it.
fn load_witness<T: serde::de::DeserializeOwned>(path: &Path, inner: Option<&str>) -> Result<T, Error> {
    let mut v: Value = serde_json::from_str(&read(path)?)?;
    if let Some(w) = v.get_mut("witness") {
        v = w.take();
    }
    if let Some(key) = inner {
        if let Some(w) = v.get_mut(key) {
            v = w.take();
        }
    }
    Ok(serde_json::from_value(v)?)
}

fn check(a: CheckArgs) -> CliResult {
    let (ok, what) = match a.kind {
        CheckKind::Hom => {
            let g = load(&a.g, "g")?;
            let h = load(&a.h, "h")?;
            let m: Homomorphism = load_witness(&a.witness, None)?;
            let ok = match (&g, &h) {
                (TargetGraph::Labeled(g), TargetGraph::Labeled(h)) => verify_labeled_hom(g, h, &m.map),
                _ => verify_hom(g.plain(), h.plain(), &m.map),
            };
            (ok, "homomorphism")
        }
        CheckKind::Coloring => {
            let g = load(&a.graph, "graph")?;
            let c: Coloring = load_witness(&a.witness, Some("coloring"))?;
            (is_proper_coloring(g.plain(), &c.colors), "proper coloring")
        }
        CheckKind::Chromlab => {
            let g = labeled(load(&a.graph, "graph")?)?;
            let c: Coloring = load_witness(&a.witness, Some("coloring"))?;
            (is_edge_labeled_coloring(&g, &c.colors), "edge-labeled coloring")
        }
        CheckKind::Deltastar => {
            let g = load(&a.graph, "graph")?;
            let w: DeltaStarWitness = load_witness(&a.witness, Some("delta_star"))?;
            let res = w.verify(g.plain(), need(a.delta, "delta")?);
            if let Err(e) = &res {
                eprintln!("{e}");
            }
            (res.is_ok(), "delta-(*) witness")
        }
        CheckKind::Antigame => {
            let g = labeled(load(&a.graph, "graph")?)?;
            let l: AntiGameLabeling = load_witness(&a.witness, None)?;
            (check_anti_game(&g, &l.labels), "anti-game labeling")
        }
        CheckKind::Strategy => {
            let file: GameFile = serde_json::from_str(&read(need(a.spec.as_deref(), "spec")?)?)?;
            let target = file.target_graph()?;
            let table = file.label_table();
            let s: Strategy = load_witness(&a.witness, Some("strategy"))?;
            let game = Game::new(file.spec(&target, &table))?;
            (game.verify_strategy(&s)?, "winning strategy")
        }
    };
    println!("{} {what}", if ok { "VALID" } else { "INVALID" });
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn verify(a: VerifyArgs) -> CliResult {
    let suite: Suite = a.suite.parse()?;
    let budget: Budget = a.budget.parse()?;
    let config = VerifyConfig {
        delta: a.delta,
        seed: a.seed,
        budget,
    };
    let report = run_suite(suite, &config)?;
    match a.format {
        Format::Json | Format::Dot => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Text => print!("{report}"),
    }
    Ok(if report.incomplete {
        ExitCode::from(3)
    } else if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
