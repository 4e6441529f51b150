//! The `latgrowth` command line.
//!
//! Exit codes: 0 success, 1 a verification failed or a file could not be
//! written, 2 usage or invalid input, 3 a resource cap was hit (partial
//! results are still reported, marked `partial`).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::bounds::{
    evaluate_expansion, expansion, expansions, g_d, growth_lower_from_pc_upper,
    improved_upper_bound, pc_lower_from_growth_upper, significant, thm_pc_lower, BoundReport,
    Direction, Flavor, GrowthBound, GrowthQuantity, ThresholdBound, DEFAULT_C,
};
use crate::cache::{compute, Cache, Generator};
use crate::eden::{check_turn_bound, code_length, eden_decode, eden_encode, ijq_upper_bound, EdenCode};
use crate::enumeration::{
    for_each_animal, ratio_histogram, AnimalKind, Counts, EnumConfig, LatticeAnimal, Rooting,
};
use crate::error::{invalid, Error, Result};
use crate::lattice::Vertex;
use crate::percolation::{
    cluster_tail_curve, crossing_probability, estimate_threshold, PercConfig, PercEstimate,
};
use crate::report::{unix_now, Report, RunManifest, Timestamps};

/// Flags that change how a run executes but never what it computes.
const EXECUTION_ONLY: [&str; 3] = ["--threads", "--out", "--cache-dir"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "latgrowth",
    version,
    about = "Lattice animals, Eden codes, growth-rate bounds and percolation estimates"
)]
pub struct Cli {
    /// Output format on stdout.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub output: OutputFormat,
    /// Also write the report to this file (JSON, or CSV with `--output csv`).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; 0 lets the library decide. Results do not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Seed for Monte Carlo runs.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Cache directory; overrides $LATTICE_CACHE_DIR.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Decimal places for conservatively rounded bounds.
    #[arg(long, global = true, default_value_t = 4)]
    pub decimals: u32,
    /// Record start and finish times in the manifest.
    #[arg(long, global = true)]
    pub timestamps: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count lattice animals exactly.
    Enumerate(EnumerateArgs),
    /// Eden encoding of site animals.
    #[command(subcommand)]
    Eden(EdenCommand),
    /// Growth-rate and threshold bounds.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Monte Carlo percolation in a box.
    Percolate(PercolateArgs),
    /// Inspect or empty the count cache.
    #[command(subcommand)]
    Cache(CacheCommand),
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Lattice dimension.
    #[arg(long, value_parser = positive)]
    pub d: usize,
    /// Largest size counted.
    #[arg(long, value_parser = positive)]
    pub n_max: usize,
    /// site, bond, tree or interface2d.
    #[arg(long, default_value = "site")]
    pub kind: AnimalKind,
    /// lexmin or origin.
    #[arg(long, default_value = "lexmin")]
    pub rooting: Rooting,
    /// Bin width of the boundary-to-size ratio histogram at n = n-max.
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Stop after this many search nodes and report partial counts.
    #[arg(long)]
    pub node_budget: Option<u64>,
    /// Search depth at which work is split between threads.
    #[arg(long, default_value_t = 4)]
    pub split_depth: usize,
    /// fast or oracle (brute force, small sizes only).
    #[arg(long, default_value = "fast")]
    pub generator: Generator,
    /// Neither read nor write the cache.
    #[arg(long)]
    pub no_cache: bool,
}

#[derive(Debug, Subcommand)]
pub enum EdenCommand {
    /// Encode a site animal given as vertex coordinates.
    Encode {
        /// File with one vertex per line, e.g. `0,1`; `#` starts a comment.
        #[arg(long, required_unless_present = "cells", conflicts_with = "cells")]
        file: Option<PathBuf>,
        /// Inline vertices separated by `;`, e.g. `0,0;1,0`.
        #[arg(long)]
        cells: Option<String>,
    },
    /// Decode a bit string back to vertices.
    Decode {
        #[arg(long, value_parser = positive)]
        d: usize,
        #[arg(long)]
        bits: String,
    },
    /// Replay the codec on every site animal up to n-max.
    Verify {
        #[arg(long, value_parser = positive)]
        d: usize,
        #[arg(long, value_parser = positive)]
        n_max: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum BoundsCommand {
    /// Turn a growth upper bound into a threshold lower bound, or a threshold
    /// upper bound into a growth lower bound.
    Translate(TranslateArgs),
    /// Evaluate g_d(x).
    Lemma {
        #[arg(long, value_parser = positive)]
        d: usize,
        #[arg(long)]
        x: f64,
    },
    /// Evaluate a truncated 1/d expansion, or list them.
    Expansion {
        #[arg(long, requires = "d")]
        name: Option<String>,
        #[arg(long, value_parser = positive)]
        d: Option<usize>,
    },
    /// The Eden-improved growth bound f(2d-2-z).
    Improved {
        #[arg(long, value_parser = positive)]
        d: usize,
        #[arg(long = "C", default_value_t = DEFAULT_C)]
        c: f64,
    },
}

#[derive(Debug, Args)]
pub struct TranslateArgs {
    #[arg(long, required_unless_present = "from_pc_upper", conflicts_with = "from_pc_upper")]
    pub from_growth_upper: Option<f64>,
    #[arg(long)]
    pub from_pc_upper: Option<f64>,
    /// Dimension of Z^d; omit for other lattices.
    #[arg(long, value_parser = positive)]
    pub d: Option<usize>,
    #[arg(long, default_value = "site")]
    pub flavor: Flavor,
}

#[derive(Debug, Args)]
pub struct PercolateArgs {
    #[arg(long, value_parser = positive)]
    pub d: usize,
    /// Box side.
    #[arg(long, alias = "L")]
    pub side: usize,
    #[arg(long, default_value = "site")]
    pub flavor: Flavor,
    /// Occupation probability; estimates the crossing probability unless
    /// `--tail` is given.
    #[arg(long, conflicts_with = "threshold")]
    pub p: Option<f64>,
    /// Estimate the threshold by bisection.
    #[arg(long)]
    pub threshold: bool,
    /// Estimate P(|C| >= n) for n = 1..=N at `--p`.
    #[arg(long, requires = "p")]
    pub tail: Option<usize>,
    /// Trials per estimate (per bisection step in threshold mode).
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
}

#[derive(Debug, Subcommand)]
pub enum CacheCommand {
    List,
    Clear,
    Path,
}

struct Outcome {
    config: Value,
    results: Vec<Value>,
    table: String,
    cache_files: Vec<String>,
    status: i32,
}

impl Outcome {
    fn new(config: Value) -> Self {
        Outcome {
            config,
            results: Vec::new(),
            table: String::new(),
            cache_files: Vec::new(),
            status: 0,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.table.push_str(s.as_ref());
        self.table.push('\n');
    }
}

fn with_rigor(v: impl serde::Serialize, rigor: &str) -> Value {
    let mut v = serde_json::to_value(v).expect("results serialize");
    if let Value::Object(map) = &mut v {
        map.insert("rigor".into(), Value::String(rigor.into()));
    }
    v
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoxTooLarge { .. } | Error::OracleCap { .. } => 3,
        Error::Cache(_) | Error::Io(_) => 1,
        _ => 2,
    }
}

/// The arguments with execution-only flags and their values removed.
pub fn canonical_command(args: &[OsString]) -> Vec<String> {
    let mut out = vec!["latgrowth".to_string()];
    let mut skip_value = false;
    for a in args.iter().skip(1) {
        let a = a.to_string_lossy().into_owned();
        if skip_value {
            skip_value = false;
            continue;
        }
        if EXECUTION_ONLY.contains(&a.as_str()) {
            skip_value = true;
            continue;
        }
        if EXECUTION_ONLY.iter().any(|f| a.starts_with(&format!("{f}="))) {
            continue;
        }
        out.push(a);
    }
    out
}

/// Runs the binary on the process arguments and returns the exit code.
pub fn run() -> i32 {
    let args: Vec<OsString> = std::env::args_os().collect();
    run_with(&args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

pub fn run_with(args: &[OsString], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = if e.use_stderr() { e.render().to_string() } else { e.to_string() };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let started = unix_now();
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code(&e);
        }
    };

    let mut manifest = RunManifest::new(canonical_command(args), outcome.config);
    manifest.cache_files = outcome.cache_files;
    if let Some(out) = &cli.out {
        let name = out.file_name().map(|n| n.to_string_lossy().into_owned());
        manifest.outputs.push(name.unwrap_or_else(|| out.display().to_string()));
    }
    if cli.timestamps {
        manifest.timestamps = Some(Timestamps {
            started,
            finished: unix_now(),
        });
    }
    let report = Report {
        manifest,
        results: outcome.results,
    };
    let rendered = match cli.output {
        OutputFormat::Table => Ok(outcome.table),
        OutputFormat::Json => Ok(report.to_json()),
        OutputFormat::Csv => report.to_csv(),
    };
    let rendered = match rendered {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code(&e);
        }
    };
    if stdout.write_all(rendered.as_bytes()).is_err() {
        return 1;
    }
    if let Some(out) = &cli.out {
        let file = match cli.output {
            OutputFormat::Csv => rendered,
            _ => report.to_json(),
        };
        if let Err(e) = std::fs::write(out, file) {
            let _ = writeln!(stderr, "error: {}: {e}", out.display());
            return 1;
        }
    }
    if outcome.status == 3 {
        let _ = writeln!(stderr, "warning: node budget exhausted; counts are lower bounds");
    }
    outcome.status
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Enumerate(a) => enumerate(cli, a),
        Command::Eden(c) => eden(cli, c),
        Command::Bounds(c) => bounds(cli, c),
        Command::Percolate(a) => percolate(cli, a),
        Command::Cache(c) => cache(cli, c),
    }
}

fn enumerate(cli: &Cli, a: &EnumerateArgs) -> Result<Outcome> {
    let cfg = EnumConfig {
        node_budget: a.node_budget,
        threads: cli.threads,
        split_depth: a.split_depth,
    };
    let mut out = Outcome::new(json!({
        "d": a.d,
        "n_max": a.n_max,
        "kind": a.kind,
        "rooting": a.rooting,
        "epsilon": a.epsilon,
        "node_budget": a.node_budget,
        "generator": a.generator,
    }));
    let counts: Counts = if a.no_cache {
        let (lexmin, origin) = compute(a.d, a.n_max, a.kind, a.generator, &cfg)?;
        match a.rooting {
            Rooting::Lexmin => lexmin,
            Rooting::Origin => origin,
        }
    } else {
        let cache = Cache::resolve(cli.cache_dir.as_deref());
        let (counts, used) = cache.counts(a.d, a.n_max, a.kind, a.rooting, a.generator, &cfg)?;
        out.cache_files.push(used.file);
        counts
    };
    let mut partial = counts.partial;
    let rigor = if partial { "lower-bound" } else { "exact" };
    if partial {
        out.line("# partial: node budget exhausted, counts are lower bounds");
    }

    let width = counts.values.last().map_or(1, |c| c.to_string().len()).max(5);
    out.line(format!("# d={} kind={} rooting={}", a.d, a.kind, a.rooting));
    out.line(format!("{:>4}  {:>width$}", "n", "count"));
    for (i, c) in counts.values.iter().enumerate() {
        out.line(format!("{:>4}  {:>width$}", i + 1, c.to_string()));
        out.results.push(with_rigor(
            json!({
                "record": "count",
                "d": a.d,
                "kind": a.kind,
                "rooting": a.rooting,
                "n": i + 1,
                "count": c.to_string(),
                "partial": partial,
            }),
            rigor,
        ));
    }

    if let Some(eps) = a.epsilon {
        let h = ratio_histogram(a.d, a.n_max, a.kind, eps, &cfg)?;
        partial |= h.partial;
        let rigor = if h.partial { "lower-bound" } else { "exact" };
        out.line("");
        out.line(format!("# boundary/size ratio at n={}, bin width {eps}", a.n_max));
        for (&k, c) in &h.bins {
            let (lo, hi) = (h.bin_lower_edge(k), h.bin_lower_edge(k + 1));
            out.line(format!("[{lo:.4}, {hi:.4})  {c}"));
            out.results.push(with_rigor(
                json!({
                    "record": "histogram",
                    "d": a.d,
                    "kind": a.kind,
                    "rooting": Rooting::Lexmin,
                    "n": a.n_max,
                    "bin": k,
                    "ratio_low": lo,
                    "ratio_high": hi,
                    "count": c.to_string(),
                    "partial": h.partial,
                }),
                rigor,
            ));
        }
    }
    if partial {
        out.status = 3;
    }
    Ok(out)
}

/// Vertices from text: one per line (or `;`-separated), comma-separated
/// integer coordinates, blank lines and `#` comments ignored.
pub fn parse_animal(text: &str, separator: char) -> Result<LatticeAnimal> {
    let mut cells = Vec::new();
    let mut dim = None;
    for (i, raw) in text.split(separator).enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let coords = body
            .split(',')
            .map(|t| t.trim().parse::<i32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse {
                line,
                reason: format!("`{body}`: {e}"),
            })?;
        match dim {
            None => dim = Some(coords.len()),
            Some(d) if d != coords.len() => {
                return Err(Error::Parse {
                    line,
                    reason: format!("expected {d} coordinates, found {}", coords.len()),
                })
            }
            _ => {}
        }
        cells.push(Vertex::from(coords));
    }
    if cells.is_empty() {
        return Err(invalid("animal", "no vertices given"));
    }
    LatticeAnimal::site(cells)
}

fn eden(cli: &Cli, c: &EdenCommand) -> Result<Outcome> {
    match c {
        EdenCommand::Encode { file, cells } => {
            let animal = match (file, cells) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| invalid("file", format!("{}: {e}", path.display())))?;
                    parse_animal(&text, '\n')?
                }
                (None, Some(inline)) => parse_animal(inline, ';')?,
                (None, None) => return Err(invalid("file", "give --file or --cells")),
            };
            let (code, tree) = eden_encode(&animal)?;
            let mut out = Outcome::new(json!({
                "d": animal.dim(),
                "vertices": animal.cells().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            }));
            out.line(code.to_string());
            out.line(format!("# n={} turns={}", code.size_n(), tree.turn_count));
            out.results.push(with_rigor(
                json!({
                    "d": code.dim(),
                    "n": code.size_n(),
                    "bits": code.to_string(),
                    "ones": code.ones_count(),
                    "turns": tree.turn_count,
                }),
                "exact",
            ));
            Ok(out)
        }
        EdenCommand::Decode { d, bits } => {
            let code = EdenCode::parse(*d, bits.trim())?;
            let animal = eden_decode(&code)?;
            let vertices: Vec<String> = animal.cells().iter().map(|v| v.to_string()).collect();
            let mut out = Outcome::new(json!({ "d": d, "bits": bits.trim() }));
            for v in &vertices {
                out.line(v);
            }
            out.results.push(with_rigor(
                json!({ "d": d, "n": animal.size(), "vertices": vertices }),
                "exact",
            ));
            Ok(out)
        }
        EdenCommand::Verify { d, n_max } => verify(cli, *d, *n_max),
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    violations: u64,
    first: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }
}

fn verify(cli: &Cli, d: usize, n_max: usize) -> Result<Outcome> {
    let cfg = EnumConfig {
        threads: cli.threads,
        ..EnumConfig::default()
    };
    let mut round_trip = Tally::default();
    let mut shape = Tally::default();
    let mut turns = Tally::default();
    let mut per_n: BTreeMap<usize, (u64, usize)> = BTreeMap::new();
    let mut failure = None;
    for_each_animal(d, n_max, AnimalKind::Site, &cfg, |x| {
        if failure.is_some() {
            return;
        }
        let mut run = || -> Result<()> {
            let n = x.size();
            let (code, tree) = eden_encode(x)?;
            let back = eden_decode(&code);
            round_trip.record(back.as_ref() == Ok(x), || format!("{:?}", x.cells()));
            shape.record(
                code.bits().len() == code_length(d, n) && code.ones_count() == n - 1,
                || code.to_string(),
            );
            let tc = check_turn_bound(x)?;
            turns.record(tc.holds, || format!("{:?}", x.cells()));
            let e = per_n.entry(n).or_default();
            e.0 += 1;
            e.1 = e.1.max(tree.turn_count);
            Ok(())
        };
        if let Err(e) = run() {
            failure = Some(e);
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    let mut ijq = Tally::default();
    for (&n, &(count, q)) in &per_n {
        let bound = ijq_upper_bound(d, n, q);
        ijq.record(bound >= BigUint::from(count), || format!("n={n}: {bound} < {count}"));
    }

    let mut out = Outcome::new(json!({ "d": d, "n_max": n_max }));
    out.line(format!("# d={d} site animals n=1..={n_max}"));
    out.line(format!("{:<16} {:>10} {:>10}  status", "check", "checked", "violations"));
    let checks = [
        ("round-trip", &round_trip),
        ("code-shape", &shape),
        ("turn-bound", &turns),
        ("ijq-domination", &ijq),
    ];
    for (name, t) in checks {
        let status = if t.violations == 0 { "PASS" } else { "FAIL" };
        out.line(format!("{name:<16} {:>10} {:>10}  {status}", t.checked, t.violations));
        out.results.push(with_rigor(
            json!({
                "check": name,
                "checked": t.checked,
                "violations": t.violations,
                "pass": t.violations == 0,
                "first_violation": t.first,
            }),
            "exact",
        ));
        if t.violations > 0 {
            out.status = 1;
        }
    }
    Ok(out)
}

fn bound_line(out: &mut Outcome, r: &BoundReport) {
    out.line(r.to_string());
    out.results.push(serde_json::to_value(r).expect("bounds serialize"));
}

fn bounds(cli: &Cli, c: &BoundsCommand) -> Result<Outcome> {
    let decimals = cli.decimals;
    match c {
        BoundsCommand::Translate(a) => {
            let mut out = Outcome::new(json!({
                "from_growth_upper": a.from_growth_upper,
                "from_pc_upper": a.from_pc_upper,
                "d": a.d,
                "flavor": a.flavor,
                "decimals": decimals,
            }));
            let report = match (a.from_growth_upper, a.from_pc_upper) {
                (Some(g), _) => {
                    let input = GrowthBound::input(GrowthQuantity::for_flavor(a.flavor), a.d, g, Direction::Upper);
                    BoundReport::from_threshold(&pc_lower_from_growth_upper(&input)?, decimals)
                }
                (None, Some(p)) => {
                    let input = ThresholdBound::input(a.flavor, a.d, p, Direction::Upper);
                    BoundReport::from_growth(&growth_lower_from_pc_upper(&input)?, decimals)
                }
                (None, None) => return Err(invalid("from-growth-upper", "give a bound to translate")),
            };
            bound_line(&mut out, &report);
            Ok(out)
        }
        BoundsCommand::Lemma { d, x } => {
            let value = g_d(*d, *x)?;
            let mut out = Outcome::new(json!({ "d": d, "x": x }));
            out.line(format!("g_{d}({x}) = {}", significant(value, 12)));
            out.results.push(with_rigor(
                json!({ "quantity": "g_d", "d": d, "x": x, "value": value }),
                "rigorous",
            ));
            Ok(out)
        }
        BoundsCommand::Expansion { name, d } => {
            let mut out = Outcome::new(json!({ "name": name, "d": d }));
            let specs = match name {
                Some(name) => vec![expansion(name)?],
                None => expansions().iter().collect(),
            };
            for spec in specs {
                let value = match d {
                    Some(d) => Some(evaluate_expansion(spec, *d)?),
                    None => None,
                };
                out.line(match (d, value) {
                    (Some(d), Some(v)) => format!(
                        "{:<22} {}(Z^{d}) ~ {} + {} [{}]",
                        spec.name,
                        spec.target,
                        significant(v, 12),
                        spec.error_order,
                        spec.rigor
                    ),
                    _ => format!("{:<22} {:<8} {} [{}]", spec.name, spec.target, spec.error_order, spec.rigor),
                });
                out.results.push(json!({
                    "name": spec.name,
                    "target": spec.target,
                    "d": d,
                    "variable": spec.variable,
                    "value": value,
                    "error_order": spec.error_order,
                    "rigor": spec.rigor,
                }));
            }
            Ok(out)
        }
        BoundsCommand::Improved { d, c } => {
            let b = improved_upper_bound(*d, *c)?;
            let mut out = Outcome::new(json!({ "d": d, "C": c, "decimals": decimals }));
            let conservative = crate::bounds::conservative_decimal(b.bound, decimals, Direction::Upper);
            out.line(format!(
                "z = {}  bound a_dot(Z^{d}) <= {conservative} (value {}, conditional)",
                significant(b.z, 12),
                significant(b.bound, 12)
            ));
            let mut v = with_rigor(b, "conditional");
            v["conservative"] = Value::String(conservative);
            out.results.push(v);
            if let Ok(pc) = thm_pc_lower(*d, *c) {
                bound_line(&mut out, &BoundReport::from_threshold(&pc, decimals));
            }
            Ok(out)
        }
    }
}

fn estimate_row(e: &PercEstimate) -> Value {
    with_rigor(e, "monte-carlo")
}

fn percolate(cli: &Cli, a: &PercolateArgs) -> Result<Outcome> {
    let p = match (a.p, a.threshold) {
        (Some(p), false) => p,
        (None, true) => 0.5,
        _ => return Err(invalid("p", "give exactly one of --p and --threshold")),
    };
    let mut cfg = PercConfig::new(a.d, a.side, a.flavor, p, a.trials, cli.seed);
    cfg.threads = cli.threads;
    cfg.validate()?;
    let mode = match (a.threshold, a.tail) {
        (true, _) => "threshold",
        (false, Some(_)) => "tail",
        (false, None) => "crossing",
    };
    let mut out = Outcome::new(json!({
        "mode": mode,
        "d": a.d,
        "L": a.side,
        "flavor": a.flavor,
        "p": a.p,
        "tail": a.tail,
        "trials": a.trials,
        "seed": cli.seed,
    }));
    let header = format!("# d={} L={} {:?} trials={} seed={}", a.d, a.side, a.flavor, a.trials, cli.seed)
        .to_lowercase();
    out.line(header);
    match mode {
        "threshold" => {
            let e = estimate_threshold(&cfg)?;
            out.line(format!("threshold  {:.6} +/- {:.6}", e.value, e.half_width));
            out.results.push(estimate_row(&e));
        }
        "tail" => {
            let curve = cluster_tail_curve(&cfg, a.tail.unwrap_or(1))?;
            out.line(format!("{:>6}  {:>10}  {:>10}", "n", "P(|C|>=n)", "+/-"));
            for e in &curve {
                out.line(format!(
                    "{:>6}  {:>10.6}  {:>10.6}",
                    e.n.unwrap_or(0),
                    e.value,
                    e.half_width
                ));
                out.results.push(estimate_row(e));
            }
        }
        _ => {
            let e = crossing_probability(&cfg)?;
            out.line(format!("crossing  p={p}  {:.6} +/- {:.6}", e.value, e.half_width));
            out.results.push(estimate_row(&e));
        }
    }
    Ok(out)
}

fn cache(cli: &Cli, c: &CacheCommand) -> Result<Outcome> {
    let cache = Cache::resolve(cli.cache_dir.as_deref());
    let dir = display(cache.dir());
    let mut out = Outcome::new(json!({ "dir": dir }));
    match c {
        CacheCommand::Path => {
            out.line(&dir);
            out.results.push(json!({ "dir": dir }));
        }
        CacheCommand::Clear => {
            let removed = cache.clear()?;
            out.line(format!("removed {removed} file(s) from {dir}"));
            out.results.push(json!({ "dir": dir, "removed": removed }));
        }
        CacheCommand::List => {
            let entries = cache.list()?;
            if entries.is_empty() {
                out.line(format!("# {dir} is empty"));
            }
            for (file, e) in entries {
                out.line(format!(
                    "{file}  n_max={} generator={} schema={}",
                    e.n_max(),
                    e.generator.as_str(),
                    e.schema_version
                ));
                out.results.push(json!({
                    "file": file,
                    "d": e.d,
                    "kind": e.kind,
                    "rooting": e.rooting,
                    "n_max": e.n_max(),
                    "generator": e.generator,
                    "schema_version": e.schema_version,
                }));
            }
        }
    }
    Ok(out)
}

fn display(p: &Path) -> String {
    p.display().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let args: Vec<OsString> = std::iter::once("latgrowth").chain(args.iter().copied()).map(Into::into).collect();
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run_with(&args, &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn canonical_command_drops_execution_flags() {
        let args: Vec<OsString> = ["x", "--threads", "8", "enumerate", "--out=a.json", "--cache-dir", "/tmp/c", "--d", "2"]
            .iter()
            .map(Into::into)
            .collect();
        assert_eq!(canonical_command(&args), ["latgrowth", "enumerate", "--d", "2"]);
    }

    #[test]
    fn parse_animal_reports_lines() {
        let a = parse_animal("# L\n0,0\n\n1,0 # right\n", '\n').unwrap();
        assert_eq!(a.size(), 2);
        match parse_animal("0,0\n1,x\n", '\n') {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        match parse_animal("0,0\n0,1\n1\n", '\n') {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn encode_decode_trivial() {
        let (code, out, _) = run_args(&["eden", "encode", "--cells", "0,0"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("00"));
        let (code, out, _) = run_args(&["eden", "decode", "--d", "2", "--bits", "00"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "(0,0)");
    }

    #[test]
    fn zero_dimension_is_a_usage_error() {
        let (code, _, err) = run_args(&["enumerate", "--d", "0", "--n-max", "3", "--no-cache"]);
        assert_eq!(code, 2);
        assert!(err.contains("--d"), "{err}");
    }

    #[test]
    fn unknown_expansion_lists_names() {
        let (code, _, err) = run_args(&["bounds", "expansion", "--name", "nope", "--d", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("bond-threshold") && err.contains("tree-growth"), "{err}");
    }

    #[test]
    fn oversized_box_exits_3() {
        let (code, _, err) = run_args(&["percolate", "--d", "3", "--L", "1000", "--p", "0.5"]);
        assert_eq!(code, 3, "{err}");
    }
}
