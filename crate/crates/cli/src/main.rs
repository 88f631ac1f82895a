//! `shallowcut`: generators, reductions and verifiers on graph files.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use shallowcut::dag::{reduce_clustered_dag, ClusteredInput, DagParams};
use shallowcut::generate::{generate, Family, GeneratorSpec};
use shallowcut::graph::{scc_topological, strong_diameter, weak_diameter, INF};
use shallowcut::io::{format_edge_set, format_graph, read_edge_set, read_graph};
use shallowcut::ldd::{
    estimate_removal_probability, low_diameter_decomposition, LddParams, LddResult,
};
use shallowcut::oracle::{
    ExactClosureShortcut, ExactTransitiveOracle, HubSamplingOracle, ShallowOracle,
};
use shallowcut::rational::{self, parse_ratio, Ratio64};
use shallowcut::reduce::{reduce_hopset, reduce_shortcut, Mode, ReductionConfig, ReductionReport};
use shallowcut::verify::{self, VerificationReport};
use shallowcut::{DiGraph, WeightedEdgeSet};

#[derive(Parser)]
#[command(
    name = "shallowcut",
    version,
    about = "Hopsets and shortcuts for directed graphs"
)]
struct Cli {
    /// Master random seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Directory for output files.
    #[arg(long, global = true, default_value = ".")]
    out_dir: PathBuf,
    /// Print a JSON summary on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph.
    Gen(GenArgs),
    /// Low-diameter decomposition; writes the result as JSON.
    Ldd(LddArgs),
    /// Clustered-DAG reduction on a graph's own SCC order.
    DagReduce(DagArgs),
    /// Full reduction: hopset or shortcut, then verification.
    Reduce(ReduceArgs),
    /// Verify a hopset, shortcut, LDD result or clustering.
    Verify(VerifyArgs),
    /// Repeat reductions over generated graphs; writes CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Path,
    Cycle,
    DagLayers,
    RandomGnm,
    SccChain,
    DisjointPaths,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Vertices (path, cycle, dag-layers, random-gnm).
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// Edges (dag-layers, random-gnm).
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long, default_value_t = 2)]
    layers: usize,
    /// Number of blocks (scc-chain).
    #[arg(long, default_value_t = 1)]
    blocks: usize,
    /// Cycle length per block (scc-chain).
    #[arg(long, default_value_t = 3)]
    block: usize,
    /// Number of paths (disjoint-paths).
    #[arg(long, default_value_t = 1)]
    paths: usize,
    /// Vertices per path (disjoint-paths).
    #[arg(long, default_value_t = 0)]
    len: usize,
    /// Maximum edge length N.
    #[arg(long = "max-len", default_value_t = 1)]
    max_len: u64,
}

impl FamilyArgs {
    fn family(&self, n: usize) -> Family {
        match self.family {
            FamilyName::Path => Family::Path { n },
            FamilyName::Cycle => Family::Cycle { n },
            FamilyName::DagLayers => Family::DagLayers {
                n,
                m: self.m,
                layers: self.layers,
            },
            FamilyName::RandomGnm => Family::RandomGnm { n, m: self.m },
            FamilyName::SccChain => Family::SccChain {
                blocks: self.blocks,
                block: self.block,
            },
            FamilyName::DisjointPaths => Family::DisjointPaths {
                paths: self.paths,
                len: self.len,
            },
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Output file name inside the output directory; stdout if omitted.
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Args)]
struct LddArgs {
    graph: PathBuf,
    /// Diameter parameter.
    #[arg(long)]
    d: u64,
    /// Sampling constant.
    #[arg(long, default_value_t = 2.0)]
    c: f64,
    /// Also run the LDD verifier; exit 1 if it fails.
    #[arg(long)]
    verify: bool,
    /// Estimate per-edge removal frequencies over this many seeded runs (writes removal.json).
    #[arg(long)]
    trials: Option<usize>,
    #[arg(short, long, default_value = "ldd.json")]
    output: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleName {
    Exact,
    Hub,
}

#[derive(Args, Clone)]
struct OracleArgs {
    #[arg(long, value_enum, default_value = "exact")]
    oracle: OracleName,
    /// Hub sampling probability for `--oracle hub`.
    #[arg(long, default_value = "1/4", value_parser = ratio)]
    hub_rate: Ratio64,
}

impl OracleArgs {
    fn build(&self) -> Box<dyn ShallowOracle> {
        match self.oracle {
            OracleName::Exact => Box::new(ExactTransitiveOracle),
            OracleName::Hub => Box::new(HubSamplingOracle::new(
                self.hub_rate,
                Ratio64::from_integer(1),
            )),
        }
    }
}

fn ratio(s: &str) -> Result<Ratio64, String> {
    parse_ratio(s).map_err(|e| e.to_string())
}

#[derive(Args)]
struct DagArgs {
    graph: PathBuf,
    #[arg(long)]
    lambda: u64,
    #[arg(long)]
    h: u64,
    #[arg(long, default_value = "1/2", value_parser = ratio)]
    eps: Ratio64,
    #[command(flatten)]
    oracle: OracleArgs,
    /// Check oracle preconditions and per-group hopbounds.
    #[arg(long)]
    check: bool,
    #[arg(long)]
    strict: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeName {
    Hopset,
    Shortcut,
}

#[derive(Args, Clone)]
struct ReduceConfigArgs {
    #[arg(long, value_enum, default_value = "hopset")]
    mode: ModeName,
    #[arg(long)]
    lambda: u64,
    #[arg(long)]
    h: u64,
    #[arg(long, default_value = "1/2", value_parser = ratio)]
    eps: Ratio64,
    #[arg(long, default_value = "1", value_parser = ratio)]
    c0: Ratio64,
    /// LDD repetitions per phase (default 4·⌈log₂ n⌉).
    #[arg(long)]
    reps: Option<usize>,
    /// LDD sampling constant.
    #[arg(long, default_value_t = 2.0)]
    ldd_c: f64,
    #[command(flatten)]
    oracle: OracleArgs,
    #[arg(long)]
    strict: bool,
    /// Check oracle preconditions during the run (slow).
    #[arg(long)]
    check: bool,
    /// Vertex ceiling for exhaustive verification.
    #[arg(long, default_value_t = verify::DEFAULT_CEILING)]
    verify_ceiling: usize,
}

impl ReduceConfigArgs {
    fn config(&self, seed: u64) -> ReductionConfig {
        let mut cfg = ReductionConfig::new(self.lambda, self.h);
        cfg.eps = self.eps;
        cfg.c0 = self.c0;
        cfg.seed = seed;
        cfg.ldd_repetitions = self.reps;
        cfg.ldd_c = self.ldd_c;
        cfg.strict = self.strict;
        cfg.check_invariants = self.check;
        cfg.verify_ceiling = self.verify_ceiling;
        // verification is run separately on the written output
        cfg.measure = false;
        cfg
    }

    fn run(&self, g: &DiGraph, seed: u64) -> Result<ReductionReport, Failure> {
        let cfg = self.config(seed);
        let report = match self.mode {
            ModeName::Hopset => reduce_hopset(g, &cfg, self.oracle.build().as_ref())?,
            ModeName::Shortcut => {
                if self.oracle.oracle != OracleName::Exact {
                    return Err(Failure::Usage(
                        "shortcut mode supports only --oracle exact".into(),
                    ));
                }
                reduce_shortcut(g, &cfg, &ExactClosureShortcut)?
            }
        };
        Ok(report)
    }
}

#[derive(Args)]
struct ReduceArgs {
    graph: PathBuf,
    #[command(flatten)]
    cfg: ReduceConfigArgs,
    /// Drop this percentage of the constructed edges before verifying
    /// (failure injection).
    #[arg(long, default_value_t = 0, hide = true)]
    drop_percent: u8,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindName {
    Hopset,
    Shortcut,
    Ldd,
    Clustered,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    kind: KindName,
    graph: PathBuf,
    /// Edge-set file (hopset / shortcut).
    #[arg(long)]
    edges: Option<PathBuf>,
    /// LDD result JSON (ldd).
    #[arg(long)]
    ldd: Option<PathBuf>,
    /// Stretch target (hopset).
    #[arg(long, default_value = "1", value_parser = ratio)]
    alpha: Ratio64,
    /// Hop budget (hopset / shortcut).
    #[arg(long)]
    h: Option<u64>,
    /// Diameter bound (ldd / clustered).
    #[arg(long)]
    d: Option<u64>,
    #[arg(long, default_value_t = verify::DEFAULT_CEILING)]
    ceiling: usize,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    repeat: usize,
    #[command(flatten)]
    cfg: ReduceConfigArgs,
    /// Also verify each run (bounded by the verification ceiling).
    #[arg(long)]
    verify: bool,
    #[arg(short, long, default_value = "bench.csv")]
    output: String,
}

#[derive(Debug)]
enum Failure {
    /// Bad arguments or input: exit 2.
    Usage(String),
    /// A verifier rejected the output: exit 1.
    Verification(String),
}

impl From<shallowcut::Error> for Failure {
    fn from(e: shallowcut::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> CliResult {
    match &cli.cmd {
        Command::Gen(a) => cmd_gen(cli, a),
        Command::Ldd(a) => cmd_ldd(cli, a),
        Command::DagReduce(a) => cmd_dag(cli, a),
        Command::Reduce(a) => cmd_reduce(cli, a),
        Command::Verify(a) => cmd_verify(cli, a),
        Command::Bench(a) => cmd_bench(cli, a),
    }
}

fn load_graph(path: &Path) -> Result<DiGraph, Failure> {
    let f = fs::File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    read_graph(BufReader::new(f)).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_edges(path: &Path) -> Result<WeightedEdgeSet, Failure> {
    let f = fs::File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    read_edge_set(BufReader::new(f)).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_out(cli: &Cli, name: &str, contents: &[u8]) -> Result<PathBuf, Failure> {
    fs::create_dir_all(&cli.out_dir)?;
    let path = cli.out_dir.join(name);
    fs::write(&path, contents)?;
    Ok(path)
}

fn to_json<T: Serialize>(value: &T) -> Result<Vec<u8>, Failure> {
    let mut v = serde_json::to_vec_pretty(value)?;
    v.push(b'\n');
    Ok(v)
}

fn print_json<T: Serialize>(value: &T) -> CliResult {
    let mut out = io::stdout().lock();
    out.write_all(&to_json(value)?)?;
    Ok(())
}

fn sha256_file(path: &Path) -> Result<String, Failure> {
    let bytes = fs::read(path)?;
    Ok(Sha256::digest(&bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect())
}

fn cmd_gen(cli: &Cli, a: &GenArgs) -> CliResult {
    let spec = GeneratorSpec {
        family: a.family.family(a.family.n),
        max_len: a.family.max_len,
        seed: cli.seed,
    };
    let g = generate(&spec)?;
    let text = format_graph(&g);
    match &a.output {
        Some(name) => {
            let path = write_out(cli, name, text.as_bytes())?;
            if cli.json {
                print_json(&serde_json::json!({
                    "spec": spec,
                    "n": g.n(),
                    "m": g.m(),
                    "path": path,
                }))?;
            } else {
                println!("wrote {} (n={}, m={})", path.display(), g.n(), g.m());
            }
        }
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_ldd(cli: &Cli, a: &LddArgs) -> CliResult {
    let g = load_graph(&a.graph)?;
    let mut params = LddParams::new(a.d, cli.seed);
    params.c = a.c;
    let result = low_diameter_decomposition(&g, &params)?;
    let path = write_out(cli, &a.output, &to_json(&result)?)?;
    let max_weak_diam = result
        .components
        .iter()
        .map(|c| weak_diameter(&g, c))
        .max()
        .unwrap_or(0);
    let report = if a.verify {
        Some(verify::verify_ldd(
            &g,
            a.d,
            &result,
            verify::DEFAULT_CEILING,
        )?)
    } else {
        None
    };
    let removal = match a.trials {
        Some(trials) => {
            let freq = estimate_removal_probability(&g, &params, trials)?;
            let mut sorted = freq.clone();
            sorted.sort_by(f64::total_cmp);
            let summary = serde_json::json!({
                "trials": trials,
                "max": sorted.last().copied().unwrap_or(0.0),
                "median": sorted.get(sorted.len() / 2).copied().unwrap_or(0.0),
                "frequencies": freq,
            });
            write_out(cli, "removal.json", &to_json(&summary)?)?;
            Some(summary)
        }
        None => None,
    };
    if cli.json {
        print_json(&serde_json::json!({
            "path": path,
            "removed": result.removed_edges.len(),
            "components": result.components.len(),
            "max_weak_diam": max_weak_diam,
            "stats": result.stats,
            "verification": report,
            "removal": removal.as_ref().map(|r| serde_json::json!({
                "trials": r["trials"], "max": r["max"], "median": r["median"],
            })),
        }))?;
    } else {
        println!(
            "components={} removed={} max_weak_diam={}",
            result.components.len(),
            result.removed_edges.len(),
            if max_weak_diam == INF {
                "inf".to_string()
            } else {
                max_weak_diam.to_string()
            }
        );
        if let Some(r) = &removal {
            println!(
                "trials={} max_freq={} median_freq={}",
                r["trials"], r["max"], r["median"]
            );
        }
    }
    check_report(report.as_ref())
}

fn check_report(report: Option<&VerificationReport>) -> CliResult {
    match report {
        Some(r) if !r.passed => Err(Failure::Verification(format!(
            "{} violation(s), first: {:?}",
            r.violation_count,
            r.violations.first()
        ))),
        _ => Ok(()),
    }
}

fn cmd_dag(cli: &Cli, a: &DagArgs) -> CliResult {
    let g = load_graph(&a.graph)?;
    let comps = scc_topological(&g);
    let cluster_diameter = comps
        .iter()
        .map(|c| strong_diameter(&g, c))
        .max()
        .unwrap_or(0);
    let input = ClusteredInput {
        graph: g.clone(),
        components_topo: comps,
        cluster_diameter,
    };
    let params = DagParams {
        lambda: a.lambda,
        h: a.h,
        eps: a.eps,
        seed: cli.seed,
        strict: a.strict,
        check_invariants: a.check,
    };
    let oracle = a.oracle.build();
    let (hopset, trace) = reduce_clustered_dag(&input, oracle.as_ref(), &params)?;
    let hopset_path = write_out(cli, "hopset.txt", format_edge_set(&hopset).as_bytes())?;
    let trace_path = write_out(cli, "dag-trace.json", &to_json(&trace)?)?;
    let alpha = rational::one_plus_pow(a.eps, trace.oracle_calls() as u32);
    let report = verify::verify_hopset(&g, &hopset, &alpha, a.h as usize, verify::DEFAULT_CEILING)?;
    write_out(cli, "verification.json", &to_json(&report)?)?;
    if cli.json {
        print_json(&serde_json::json!({
            "iterations": trace.oracle_calls(),
            "hopset_size": hopset.len(),
            "hopset": hopset_path,
            "trace": trace_path,
            "verification": report,
        }))?;
    } else {
        println!(
            "{} iterations, {} hopset edges, verification {}",
            trace.oracle_calls(),
            hopset.len(),
            if report.passed { "passed" } else { "FAILED" }
        );
    }
    check_report(Some(&report))
}

#[derive(Serialize)]
struct RunManifest {
    tool: &'static str,
    version: &'static str,
    mode: Mode,
    config: ReductionConfig,
    input: PathBuf,
    input_sha256: String,
    outputs: Vec<PathBuf>,
    /// Wall-clock milliseconds per stage.
    stage_ms: BTreeMap<&'static str, u128>,
}

fn verify_output(
    g: &DiGraph,
    report: &ReductionReport,
    edges: &WeightedEdgeSet,
    ceiling: usize,
) -> Result<VerificationReport, Failure> {
    let h = report.config.h as usize;
    Ok(match report.mode {
        Mode::Hopset => verify::verify_hopset(g, edges, &report.stretch_bound, h, ceiling)?,
        Mode::Shortcut => verify::verify_shortcut(g, &edges.pairs(), h, ceiling)?,
    })
}

fn cmd_reduce(cli: &Cli, a: &ReduceArgs) -> CliResult {
    let mut stage_ms = BTreeMap::new();
    let t = Instant::now();
    let g = load_graph(&a.graph)?;
    stage_ms.insert("load", t.elapsed().as_millis());

    let t = Instant::now();
    let mut report = a.cfg.run(&g, cli.seed)?;
    stage_ms.insert("reduce", t.elapsed().as_millis());

    let mut edges = report.hopset.clone();
    if a.drop_percent > 0 {
        let keep = edges.len() - edges.len() * a.drop_percent.min(100) as usize / 100;
        edges = edges.iter().take(keep).collect();
    }
    let (name, text) = match report.mode {
        Mode::Hopset => ("hopset.txt", format_edge_set(&edges)),
        Mode::Shortcut => ("shortcut.txt", format_shortcut(&edges)),
    };
    let edges_path = write_out(cli, name, text.as_bytes())?;

    let t = Instant::now();
    let verification = verify_output(&g, &report, &edges, a.cfg.verify_ceiling)?;
    stage_ms.insert("verify", t.elapsed().as_millis());
    report.measured_stretch = verification.measured_stretch;
    report.measured_hopbound = verification.measured_hopbound;
    report.verified = Some(verification.passed);

    let report_path = write_out(cli, "report.json", &to_json(&report)?)?;
    let verification_path = write_out(cli, "verification.json", &to_json(&verification)?)?;
    let manifest = RunManifest {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        mode: report.mode,
        config: report.config.clone(),
        input: a.graph.clone(),
        input_sha256: sha256_file(&a.graph)?,
        outputs: vec![edges_path.clone(), report_path, verification_path],
        stage_ms,
    };
    write_out(cli, "manifest.json", &to_json(&manifest)?)?;

    if cli.json {
        print_json(&serde_json::json!({
            "mode": report.mode,
            "size": edges.len(),
            "oracle_calls": report.oracle_calls,
            "ldd_calls": report.ldd_calls,
            "clamp_count": report.clamp_count,
            "measured_stretch": report.measured_stretch,
            "measured_hopbound": report.measured_hopbound,
            "passed": verification.passed,
            "output": edges_path,
        }))?;
    } else {
        println!(
            "{} edges, {} oracle calls, {} LDD calls, clamps {}, verification {} -> {}",
            edges.len(),
            report.oracle_calls,
            report.ldd_calls,
            report.clamp_count,
            if verification.passed {
                "passed"
            } else {
                "FAILED"
            },
            edges_path.display()
        );
    }
    check_report(Some(&verification))
}

fn format_shortcut(edges: &WeightedEdgeSet) -> String {
    edges
        .pairs()
        .iter()
        .map(|(u, v)| format!("{u} {v}\n"))
        .collect()
}

fn cmd_verify(_cli: &Cli, a: &VerifyArgs) -> CliResult {
    let g = load_graph(&a.graph)?;
    let need = |what: &str| Failure::Usage(format!("--kind needs --{what}"));
    let report = match a.kind {
        KindName::Hopset => {
            let edges = load_edges(a.edges.as_deref().ok_or_else(|| need("edges"))?)?;
            let h = a.h.ok_or_else(|| need("h"))? as usize;
            verify::verify_hopset(&g, &edges, &rational::to_big(a.alpha), h, a.ceiling)?
        }
        KindName::Shortcut => {
            let edges = load_edges(a.edges.as_deref().ok_or_else(|| need("edges"))?)?;
            let h = a.h.ok_or_else(|| need("h"))? as usize;
            verify::verify_shortcut(&g, &edges.pairs(), h, a.ceiling)?
        }
        KindName::Ldd => {
            let path = a.ldd.as_deref().ok_or_else(|| need("ldd"))?;
            let result: LddResult = serde_json::from_slice(&fs::read(path)?)?;
            verify::verify_ldd(&g, a.d.ok_or_else(|| need("d"))?, &result, a.ceiling)?
        }
        KindName::Clustered => {
            verify::verify_clustered(&g, a.d.ok_or_else(|| need("d"))?, a.ceiling)?
        }
    };
    print_json(&report)?;
    check_report(Some(&report))
}

#[derive(Serialize)]
struct BenchRow {
    n: usize,
    m: usize,
    run: String,
    hopset_size: f64,
    oracle_calls: f64,
    ldd_calls: f64,
    epochs: f64,
    clamp_count: f64,
    passed: Option<bool>,
    generate_ms: f64,
    reduce_ms: f64,
    verify_ms: f64,
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let k = xs.len();
    if k == 0 {
        0.0
    } else if k % 2 == 1 {
        xs[k / 2]
    } else {
        (xs[k / 2 - 1] + xs[k / 2]) / 2.0
    }
}

fn cmd_bench(cli: &Cli, a: &BenchArgs) -> CliResult {
    if a.repeat == 0 {
        return Err(Failure::Usage("--repeat must be at least 1".into()));
    }
    let mut rows = Vec::new();
    for &n in &a.sizes {
        let mut runs = Vec::new();
        for r in 0..a.repeat {
            let seed = shallowcut::rng::split(cli.seed, r as u64);
            let t = Instant::now();
            let g = generate(&GeneratorSpec {
                family: a.family.family(n),
                max_len: a.family.max_len,
                seed,
            })?;
            let generate_ms = t.elapsed().as_secs_f64() * 1e3;
            let t = Instant::now();
            let report = a.cfg.run(&g, seed)?;
            let reduce_ms = t.elapsed().as_secs_f64() * 1e3;
            let t = Instant::now();
            let passed = if a.verify {
                Some(verify_output(&g, &report, &report.hopset, a.cfg.verify_ceiling)?.passed)
            } else {
                None
            };
            let verify_ms = t.elapsed().as_secs_f64() * 1e3;
            runs.push(BenchRow {
                n: g.n(),
                m: g.m(),
                run: r.to_string(),
                hopset_size: report.total_size as f64,
                oracle_calls: report.oracle_calls as f64,
                ldd_calls: report.ldd_calls as f64,
                epochs: report.epochs.len() as f64,
                clamp_count: report.clamp_count as f64,
                passed,
                generate_ms,
                reduce_ms,
                verify_ms,
            });
        }
        let col = |f: fn(&BenchRow) -> f64| median(runs.iter().map(f).collect());
        let summary = BenchRow {
            n: runs[0].n,
            m: median(runs.iter().map(|r| r.m as f64).collect()) as usize,
            run: "median".into(),
            hopset_size: col(|r| r.hopset_size),
            oracle_calls: col(|r| r.oracle_calls),
            ldd_calls: col(|r| r.ldd_calls),
            epochs: col(|r| r.epochs),
            clamp_count: col(|r| r.clamp_count),
            passed: a
                .verify
                .then(|| runs.iter().all(|r| r.passed == Some(true))),
            generate_ms: col(|r| r.generate_ms),
            reduce_ms: col(|r| r.reduce_ms),
            verify_ms: col(|r| r.verify_ms),
        };
        let single = runs.len() == 1;
        rows.extend(runs);
        if !single {
            rows.push(summary);
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    let path = write_out(cli, &a.output, &bytes)?;
    if cli.json {
        print_json(&serde_json::json!({ "rows": rows.len(), "path": path }))?;
    } else {
        println!("{} rows -> {}", rows.len(), path.display());
    }
    if rows.iter().any(|r| r.passed == Some(false)) {
        return Err(Failure::Verification(
            "a bench run failed verification".into(),
        ));
    }
    Ok(())
}
