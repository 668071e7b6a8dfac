//! Command-line surface: argument definitions and dispatch.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use frieze_core::counting::{bci_entry, cc_entry, CountingError};
use frieze_core::synthesis::{StepAVerdict, SynthesisError, DEFAULT_CAP};
use frieze_core::{
    psi, BigInt, FriezeView, PolygonTriangulation, QuiddityDescriptor, StripTriangulation, SynthesisOptions,
};
use serde_json::json;
use thiserror::Error;

use crate::json::{self, FormatError};
use crate::{corpus, render};

#[derive(Debug, Parser)]
#[command(name = "friezes", version, about = "Infinite friezes, polygon friezes and strip triangulations")]
#[command(after_help = "Settings resolve as: command-line flag, then FRIEZE_* environment variable, then default.")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quiddity descriptors.
    #[command(subcommand)]
    Quiddity(QuiddityCmd),
    /// Infinite frieze grids.
    #[command(subcommand)]
    Frieze(FriezeCmd),
    /// Triangulated polygons and their frieze patterns.
    #[command(subcommand)]
    Polygon(PolygonCmd),
    /// Strip triangulations.
    #[command(subcommand)]
    Strip(StripCmd),
    /// Build the strip triangulation of a quiddity sequence.
    Synthesize(SynthesizeArgs),
    /// Frieze entries counted on a strip triangulation.
    #[command(subcommand)]
    Count(CountCmd),
    /// Validate, synthesize, read back and cross-check a descriptor.
    Roundtrip(RoundtripArgs),
    /// Seeded random descriptors.
    #[command(subcommand)]
    Corpus(CorpusCmd),
}

#[derive(Debug, Subcommand)]
pub enum QuiddityCmd {
    /// Check that every frieze entry up to the given band is positive.
    Validate {
        file: PathBuf,
        #[arg(long, env = "FRIEZE_DEPTH", default_value_t = 64)]
        depth: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum FriezeCmd {
    /// Print `t(i, j)` for the given rows and columns.
    Print {
        file: PathBuf,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        rows: (i64, i64),
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        cols: (i64, i64),
    },
}

#[derive(Debug, Subcommand)]
pub enum PolygonCmd {
    /// The frieze pattern of a triangulated polygon, as JSON or as a grid.
    Frieze {
        #[arg(required_unless_present = "quiddity", conflicts_with = "quiddity")]
        file: Option<PathBuf>,
        /// Build the polygon from a quiddity such as 1,2,3,1,3,1,4 instead.
        #[arg(long, value_delimiter = ',')]
        quiddity: Option<Vec<u32>>,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true, requires = "cols")]
        rows: Option<(i64, i64)>,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true, requires = "rows")]
        cols: Option<(i64, i64)>,
    },
    /// Conway-Coxeter labels from a vertex.
    Cc {
        file: PathBuf,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: Option<u32>,
    },
    /// Triangle tuples along a boundary walk.
    Bci {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        walk: Vec<u32>,
    },
    /// Draw the polygon and its chords.
    Render(RenderArgs),
}

#[derive(Debug, Subcommand)]
pub enum StripCmd {
    /// The quiddity sequence read off the triangulation.
    Phi {
        file: PathBuf,
        /// Defaults to the stored window.
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        range: Option<(i64, i64)>,
    },
    /// Apply the Dehn twist `n` times.
    Dehn {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Noncrossing, maximal, admissible, no special upper points.
    Check { file: PathBuf },
    /// Draw the strip.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub scale: Option<f64>,
    /// Write here instead of standard output.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SynthesisArgs {
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub window: (i64, i64),
    #[arg(long, env = "FRIEZE_CAP", default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Defaults to twice the window width, at least 4.
    #[arg(long, env = "FRIEZE_MARGIN")]
    pub margin: Option<i64>,
    #[arg(long, env = "FRIEZE_DEPTH", default_value_t = 64)]
    pub depth: i64,
}

impl SynthesisArgs {
    fn options(&self) -> SynthesisOptions {
        let mut opts = SynthesisOptions::new(self.window);
        opts.cap = self.cap;
        opts.margin = self.margin;
        opts
    }
}

#[derive(Debug, Args)]
pub struct SynthesizeArgs {
    pub file: PathBuf,
    #[command(flatten)]
    pub synthesis: SynthesisArgs,
    /// Lower index where the upper labels are pinned.
    #[arg(long, allow_hyphen_values = true)]
    pub anchor: Option<i64>,
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CountCmd {
    Cc(CountArgs),
    Bci(CountArgs),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    pub file: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    pub i: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub j: i64,
}

#[derive(Debug, Args)]
pub struct RoundtripArgs {
    pub file: PathBuf,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "-8..8")]
    pub window: (i64, i64),
    #[arg(long, env = "FRIEZE_CAP", default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    #[arg(long, env = "FRIEZE_MARGIN")]
    pub margin: Option<i64>,
    #[arg(long, env = "FRIEZE_DEPTH", default_value_t = 64)]
    pub depth: i64,
}

#[derive(Debug, Subcommand)]
pub enum CorpusCmd {
    /// Write `count` validated descriptors into a directory.
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Inclusive `lo..hi`; an empty range is allowed.
pub fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let lo = a.trim().parse().map_err(|e| format!("bad lower bound {a:?}: {e}"))?;
    let hi = b.trim().parse().map_err(|e| format!("bad upper bound {b:?}: {e}"))?;
    Ok((lo, hi))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("{0}")]
    Usage(String),
    #[error("not a frieze: t({i}, {j}) = {value}")]
    InvalidFrieze { i: i64, j: i64, value: String },
    #[error("{0}")]
    Failed(String),
    #[error("{0}")]
    Inconclusive(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::InvalidFrieze { .. } | CliError::Failed(_) => 1,
            CliError::Inconclusive(_) => 2,
            CliError::Io { .. } | CliError::Format { .. } | CliError::Usage(_) => 3,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let kind = match self {
            CliError::Io { .. } => "io",
            CliError::Format { .. } => "format",
            CliError::Usage(_) => "usage",
            CliError::InvalidFrieze { .. } => "invalid_frieze",
            CliError::Failed(_) => "failed",
            CliError::Inconclusive(_) => "inconclusive",
        };
        let mut v = json!({ "error": kind, "message": self.to_string(), "exit_code": self.exit_code() });
        match self {
            CliError::InvalidFrieze { i, j, value } => {
                v["witness"] = json!({ "i": i, "j": j, "value": value });
            }
            CliError::Format { source: FormatError::Syntax { line, column, .. }, .. } => {
                v["line"] = json!(line);
                v["column"] = json!(column);
            }
            CliError::Format { source: FormatError::Invalid { field, .. }, .. } => {
                v["field"] = json!(field);
            }
            _ => {}
        }
        v
    }
}

impl From<SynthesisError> for CliError {
    fn from(e: SynthesisError) -> Self {
        match e {
            SynthesisError::InvalidQuiddity { i, j, value } => CliError::InvalidFrieze { i, j, value },
            SynthesisError::CapReached(_) => CliError::Inconclusive(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<CountingError> for CliError {
    fn from(e: CountingError) -> Self {
        match e {
            CountingError::NoCut(..) | CountingError::Truncated(..) => CliError::Inconclusive(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

/// What a run prints and how it exits. A failure that still produced a
/// report carries its error alongside.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
    pub error: Option<CliError>,
}

impl Outcome {
    fn print(stdout: String) -> Self {
        Outcome { stdout, code: 0, error: None }
    }

    fn failed(stdout: String, error: CliError) -> Self {
        Outcome { stdout, code: error.exit_code(), error: Some(error) }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load<T>(path: &Path, parse: fn(&str) -> Result<T, FormatError>) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|source| CliError::Format { path: path.to_path_buf(), source })
}

fn json_line(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json value");
    s.push('\n');
    s
}

fn check_depth(depth: i64) -> Result<(), CliError> {
    if depth < 2 {
        return Err(CliError::Usage(format!("depth must be at least 2, got {depth}")));
    }
    Ok(())
}

fn validate(q: &QuiddityDescriptor, depth: i64) -> Result<(), CliError> {
    check_depth(depth)?;
    let report = q.validate(depth).map_err(|e| CliError::Usage(e.to_string()))?;
    match report.witness {
        Some((i, j, value)) => Err(CliError::InvalidFrieze { i, j, value: value.to_string() }),
        None => Ok(()),
    }
}

type Counter = fn(&StripTriangulation, i64, i64) -> Result<u64, CountingError>;

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Quiddity(QuiddityCmd::Validate { file, depth }) => {
            let q = load(&file, json::parse_quiddity)?;
            validate(&q, depth)?;
            Ok(Outcome::print(json_line(json!({ "status": "valid", "depth": depth }))))
        }
        Command::Frieze(FriezeCmd::Print { file, rows, cols }) => {
            let q = load(&file, json::parse_quiddity)?;
            Ok(Outcome::print(render::render_frieze(&FriezeView::new(q), rows, cols)))
        }
        Command::Polygon(cmd) => polygon(cmd),
        Command::Strip(cmd) => strip(cmd),
        Command::Synthesize(args) => synthesize(args),
        Command::Count(cmd) => {
            let (args, f): (CountArgs, Counter) = match cmd {
                CountCmd::Cc(a) => (a, cc_entry),
                CountCmd::Bci(a) => (a, bci_entry),
            };
            let t = load(&args.file, json::parse_strip)?;
            Ok(Outcome::print(format!("{}\n", f(&t, args.i, args.j)?)))
        }
        Command::Roundtrip(args) => roundtrip(args),
        Command::Corpus(CorpusCmd::Generate { seed, count, out }) => {
            std::fs::create_dir_all(&out).map_err(|source| CliError::Io { path: out.clone(), source })?;
            for (k, q) in corpus::generate(seed, count).iter().enumerate() {
                write(&out.join(format!("{k:03}.quiddity.json")), &json::emit_quiddity(q))?;
            }
            Ok(Outcome::print(format!("{count}\n")))
        }
    }
}

fn polygon(cmd: PolygonCmd) -> Result<Outcome, CliError> {
    let failed = |e: frieze_core::PolygonError| CliError::Failed(e.to_string());
    match cmd {
        PolygonCmd::Frieze { file, quiddity, rows, cols } => {
            let p = match (file, quiddity) {
                (Some(file), _) => load(&file, json::parse_polygon)?,
                (None, Some(q)) => PolygonTriangulation::from_quiddity(&q).map_err(failed)?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            let pattern = p.frieze_pattern().map_err(failed)?;
            match (rows, cols) {
                (Some(rows), Some(cols)) => Ok(Outcome::print(render::render_pattern(&pattern, rows, cols))),
                _ => Ok(Outcome::print(json::emit_pattern(&pattern))),
            }
        }
        PolygonCmd::Cc { file, from, to } => {
            let p = load(&file, json::parse_polygon)?;
            match to {
                Some(to) => Ok(Outcome::print(format!("{}\n", p.cc(from, to).map_err(failed)?))),
                None => {
                    let labels = p.cc_labels(from).map_err(failed)?;
                    let map: serde_json::Map<String, serde_json::Value> =
                        labels.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
                    Ok(Outcome::print(json_line(json!({ "from": from, "labels": map }))))
                }
            }
        }
        PolygonCmd::Bci { file, walk } => {
            let p = load(&file, json::parse_polygon)?;
            Ok(Outcome::print(format!("{}\n", p.bci_count(&walk).map_err(failed)?)))
        }
        PolygonCmd::Render(args) => {
            let p = load(&args.file, json::parse_polygon)?;
            emit_svg(render::render_polygon(&p, args.scale.unwrap_or(100.0)), args.svg.as_deref())
        }
    }
}

fn emit_svg(svg: String, path: Option<&Path>) -> Result<Outcome, CliError> {
    match path {
        Some(path) => {
            write(path, &svg)?;
            Ok(Outcome::default())
        }
        None => Ok(Outcome::print(svg)),
    }
}

fn strip(cmd: StripCmd) -> Result<Outcome, CliError> {
    let failed = |e: frieze_core::StripError| match e {
        frieze_core::StripError::Truncated(_) => CliError::Inconclusive(e.to_string()),
        other => CliError::Failed(other.to_string()),
    };
    match cmd {
        StripCmd::Phi { file, range } => {
            let t = load(&file, json::parse_strip)?;
            let (lo, hi) = range.unwrap_or(t.window());
            let q = t.quiddity_on(lo, hi).map_err(failed)?;
            Ok(Outcome::print(json_line(json!({ "range": [lo, hi], "quiddity": q }))))
        }
        StripCmd::Dehn { file, n } => {
            let t = load(&file, json::parse_strip)?;
            Ok(Outcome::print(json::emit_strip(&t.dehn_twist(n).map_err(failed)?)))
        }
        StripCmd::Check { file } => {
            let t = load(&file, json::parse_strip)?;
            let crossing = t.crossing_pair();
            let addable = t.addable_arcs();
            let admissible = t.is_admissible_window();
            let special: Vec<i64> = t.special_upper_points().iter().map(|p| p.index).collect();
            let ok = crossing.is_none() && addable.is_empty() && admissible && special.is_empty();
            let report = json!({
                "noncrossing": crossing.is_none(),
                "maximal": addable.is_empty(),
                "admissible": admissible,
                "special_upper_points": special,
                "ok": ok,
            });
            if ok {
                Ok(Outcome::print(json_line(report)))
            } else {
                Ok(Outcome::failed(json_line(report), CliError::Failed("strip check failed".into())))
            }
        }
        StripCmd::Render(args) => {
            let t = load(&args.file, json::parse_strip)?;
            emit_svg(render::render_strip(&t, args.scale.unwrap_or(40.0)), args.svg.as_deref())
        }
    }
}

pub const EXIT_NONTERMINATING: i32 = 4;

fn synthesize(args: SynthesizeArgs) -> Result<Outcome, CliError> {
    let q = load(&args.file, json::parse_quiddity)?;
    validate(&q, args.synthesis.depth)?;
    let mut opts = args.synthesis.options();
    opts.anchor = args.anchor;
    let out = psi(&q, &opts)?;
    let strip_json = json::emit_strip(&out.triangulation);
    if let Some(svg) = &args.svg {
        write(svg, &render::render_strip(&out.triangulation, 40.0))?;
    }
    let code = match out.step_a {
        StepAVerdict::Terminated { .. } => 0,
        StepAVerdict::NonterminatingDetected { .. } => EXIT_NONTERMINATING,
        StepAVerdict::CapReached { .. } => 2,
    };
    let stdout = match &args.output {
        Some(path) => {
            write(path, &strip_json)?;
            let (verdict, passes) = match out.step_a {
                StepAVerdict::Terminated { passes } => ("terminated", passes),
                StepAVerdict::NonterminatingDetected { passes, .. } => ("nonterminating", passes),
                StepAVerdict::CapReached { passes } => ("cap_reached", passes),
            };
            json_line(json!({
                "step_a": verdict,
                "passes": passes,
                "m2_class": out.triangulation.m2_class().to_string(),
                "anchor": out.anchor,
            }))
        }
        None => strip_json,
    };
    Ok(Outcome { stdout, code, error: None })
}

fn roundtrip(args: RoundtripArgs) -> Result<Outcome, CliError> {
    let q = load(&args.file, json::parse_quiddity)?;
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    if let Err(e) = validate(&q, args.depth) {
        return match e {
            CliError::InvalidFrieze { .. } => Ok(Outcome::failed(format!("validate: FAIL {e}\nresult: FAIL\n"), e)),
            other => Err(other),
        };
    }
    lines.push(format!("validate: PASS positive to depth {}", args.depth));
    let mut opts = SynthesisOptions::new(args.window);
    opts.cap = args.cap;
    opts.margin = args.margin;
    let out = psi(&q, &opts)?;
    let t = &out.triangulation;
    lines.push(format!("synthesize: PASS {} arcs, m2 {}", t.arcs().len(), t.m2_class()));
    let (lo, hi) = args.window;
    let phi = t.quiddity_of().map_err(|e| CliError::Failed(e.to_string()))?;
    if phi == q.window(lo, hi) {
        lines.push(format!("phi: PASS quiddity agrees on {lo}..{hi}"));
    } else {
        lines.push(format!("phi: FAIL got {phi:?}, expected {:?}", q.window(lo, hi)));
        failures.push("phi");
    }
    let f = FriezeView::new(q.clone());
    let mut checked = 0usize;
    let mut mismatch = None;
    'pairs: for i in lo..=hi {
        for j in i..=(i + 8).min(hi) {
            let want = f.entry(i, j);
            let cc = cc_entry(t, i, j)?;
            let bci = bci_entry(t, i, j)?;
            checked += 1;
            if BigInt::from(cc) != want || BigInt::from(bci) != want {
                mismatch = Some((i, j, cc, bci, want));
                break 'pairs;
            }
        }
    }
    match mismatch {
        None => lines.push(format!("count: PASS cc = bci = t on {checked} pairs")),
        Some((i, j, cc, bci, want)) => {
            lines.push(format!("count: FAIL at ({i}, {j}): cc {cc}, bci {bci}, t {want}"));
            failures.push("count");
        }
    }
    lines.push(format!("result: {}", if failures.is_empty() { "PASS" } else { "FAIL" }));
    let stdout = lines.join("\n") + "\n";
    if failures.is_empty() {
        Ok(Outcome::print(stdout))
    } else {
        Ok(Outcome::failed(stdout, CliError::Failed(format!("roundtrip failed: {}", failures.join(", ")))))
    }
}
