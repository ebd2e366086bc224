//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 bound
//! exceeded, 4 I/O error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::crystal::{crystal_graph, decompose};
use crate::error::{Error, Result};
use crate::klcells::{cache_path, CellGraph, CellPartition, KlEngine};
use crate::symgroup::{Permutation, Side, DEFAULT_MAX_DEGREE, HARD_MAX_DEGREE};
use crate::tableaux::{rs_inverse, rs_pair, Tableau};
use crate::verify::{run_suite, Suite};

/// Environment variable that takes precedence over `--cache-dir`.
pub const CACHE_DIR_ENV: &str = "SCHENSTED_CACHE_DIR";

/// Cache directory used by `cache` subcommands when none is configured.
pub const DEFAULT_CACHE_DIR: &str = ".schensted-cache";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "schensted",
    version,
    about = "Robinson–Schensted, Kazhdan–Lusztig cells and crystals for S_n"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Directory for the persisted KL table (overridden by SCHENSTED_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Largest degree n accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DEGREE)]
    max_n: usize,
    /// Allow long-running verification sizes.
    #[arg(long, global = true)]
    long: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// P and Q symbols of a permutation.
    Rsk { w: String },
    /// The permutation with the given P and Q (JSON rows).
    RskInverse { p: String, q: String },
    /// Kazhdan–Lusztig polynomial P_{y,w}.
    Klpoly { y: String, w: String },
    /// mu(y, w) and mu(y|w).
    Mu { y: String, w: String },
    /// Left or right cells of S_n, one per line.
    Cells { n: usize, side: Side },
    /// Left-cell graph or crystal graph.
    Graph {
        n: usize,
        kind: GraphKind,
        /// Crystal rank (defaults to n).
        #[arg(long)]
        rank: Option<u32>,
    },
    /// Connected components of B^⊗n with their recording tableaux.
    Decompose { n: usize, r: Option<u32> },
    /// Run an exhaustive verification suite.
    Verify { suite: String, n: usize },
    /// Inspect or fill the persisted KL table.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphKind {
    Cells,
    Crystal,
}

#[derive(Debug, Subcommand)]
enum CacheAction {
    /// Number of stored entries per file.
    Info,
    /// Delete the stored tables.
    Clear,
    /// Compute every P_{y,w} for S_n and store the table.
    Warm { n: usize },
}

/// Resolved settings shared by all commands.
#[derive(Debug, Clone)]
pub struct Config {
    pub cache_dir: Option<PathBuf>,
    pub max_n: usize,
    pub long: bool,
    pub format: Format,
}

enum Failure {
    Error(Error),
    Verification,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Error(Error::Io(e))
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DegreeTooLarge { .. } | Error::TooManyWords { .. } => 3,
        Error::Io(_) | Error::CacheFormat { .. } => 4,
        _ => 2,
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let env_dir = std::env::var_os(CACHE_DIR_ENV).filter(|v| !v.is_empty());
    let config = Config {
        cache_dir: env_dir.map(PathBuf::from).or(cli.cache_dir),
        max_n: cli.max_n,
        long: cli.long,
        format: cli.format,
    };
    match dispatch(&cli.command, &config, out) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            3
        }
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn check_n(n: usize, config: &Config) -> Result<()> {
    let max = config.max_n.min(HARD_MAX_DEGREE);
    if n == 0 || n > max {
        return Err(Error::DegreeTooLarge { n, max });
    }
    Ok(())
}

fn parse_perm(s: &str) -> Result<Permutation> {
    s.parse()
}

/// Accepts `{"rows": [[...]]}` or a bare array of rows.
fn parse_tableau(s: &str) -> Result<Tableau> {
    let value: serde_json::Value =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("tableau {s:?}: {e}")))?;
    let value = if value.is_array() {
        json!({ "rows": value })
    } else {
        value
    };
    serde_json::from_value(value).map_err(|e| Error::Parse(format!("tableau {s:?}: {e}")))
}

fn unsupported(format: Format, command: &str) -> Failure {
    Failure::Error(Error::Parse(
        format!("--format {format:?} is not available for {command}").to_lowercase(),
    ))
}

/// A KL engine for `S_n`, preloaded from the cache directory if one is
/// configured and a table exists.
fn engine(n: usize, config: &Config) -> Result<(KlEngine, Option<PathBuf>)> {
    check_n(n, config)?;
    let engine = KlEngine::with_options(n, Side::Left, HARD_MAX_DEGREE)?;
    let path = config.cache_dir.as_ref().map(|d| cache_path(d, n, Side::Left));
    if let Some(p) = &path {
        if p.exists() {
            engine.load(p)?;
        }
    }
    Ok((engine, path))
}

/// Writes the table back when it grew.
fn persist(engine: &KlEngine, path: Option<PathBuf>, loaded: usize) -> Result<()> {
    if let Some(p) = path {
        if engine.cached_len() > loaded {
            engine.save(&p)?;
        }
    }
    Ok(())
}

fn with_engine<T>(
    n: usize,
    config: &Config,
    body: impl FnOnce(&KlEngine) -> Result<T, Failure>,
) -> Result<T, Failure> {
    let (e, path) = engine(n, config)?;
    let loaded = e.cached_len();
    let result = body(&e);
    persist(&e, path, loaded)?;
    result
}

fn dispatch(command: &Command, config: &Config, out: &mut dyn Write) -> Result<(), Failure> {
    let format = config.format;
    match command {
        Command::Rsk { w } => {
            let w = parse_perm(w)?;
            let (p, q) = rs_pair(&w);
            match format {
                Format::Text => writeln!(out, "P={p} Q={q}")?,
                Format::Json => writeln!(out, "{}", json!({"w": w, "P": p, "Q": q}))?,
                Format::Dot => return Err(unsupported(format, "rsk")),
            }
        }
        Command::RskInverse { p, q } => {
            let w = rs_inverse(&parse_tableau(p)?, &parse_tableau(q)?)?;
            match format {
                Format::Text => writeln!(out, "{w}")?,
                Format::Json => writeln!(out, "{}", json!({ "w": w }))?,
                Format::Dot => return Err(unsupported(format, "rsk-inverse")),
            }
        }
        Command::Klpoly { y, w } => {
            let (y, w) = (parse_perm(y)?, parse_perm(w)?);
            if y.n() != w.n() {
                return Err(Error::DegreeMismatch {
                    left: y.n(),
                    right: w.n(),
                }
                .into());
            }
            let p = with_engine(w.n(), config, |e| Ok(e.kl_polynomial(&y, &w)?))?;
            match format {
                Format::Text => writeln!(out, "{p}")?,
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"y": y, "w": w, "coefficients": p.coeffs(), "text": p.to_string()})
                )?,
                Format::Dot => return Err(unsupported(format, "klpoly")),
            }
        }
        Command::Mu { y, w } => {
            let (y, w) = (parse_perm(y)?, parse_perm(w)?);
            if y.n() != w.n() {
                return Err(Error::DegreeMismatch {
                    left: y.n(),
                    right: w.n(),
                }
                .into());
            }
            let (m, ms) = with_engine(w.n(), config, |e| Ok((e.mu(&y, &w)?, e.mu_sym(&y, &w)?)))?;
            match format {
                Format::Text => writeln!(out, "mu={m} mu_sym={ms}")?,
                Format::Json => writeln!(out, "{}", json!({"y": y, "w": w, "mu": m, "mu_sym": ms}))?,
                Format::Dot => return Err(unsupported(format, "mu")),
            }
        }
        Command::Cells { n, side } => {
            let part = with_engine(*n, config, |e| {
                Ok(CellPartition::from_graph(&CellGraph::build(e), *side))
            })?;
            match format {
                Format::Text => {
                    for cell in part.cells() {
                        let words: Vec<String> = cell.iter().map(|w| w.to_string()).collect();
                        writeln!(out, "{}", words.join(" "))?;
                    }
                }
                Format::Json => writeln!(out, "{}", serde_json::to_string(&part).map_err(Error::from)?)?,
                Format::Dot => return Err(unsupported(format, "cells")),
            }
        }
        Command::Graph {
            n,
            kind: GraphKind::Cells,
            ..
        } => {
            let graph = with_engine(*n, config, |e| Ok(CellGraph::build(e)))?;
            match format {
                Format::Text => {
                    for (x, y, m) in graph.edges() {
                        writeln!(out, "{} -> {} mu={m}", graph.elements()[x], graph.elements()[y])?;
                    }
                }
                Format::Json => writeln!(out, "{}", graph.to_json())?,
                Format::Dot => write!(out, "{}", graph.to_dot())?,
            }
        }
        Command::Graph {
            n,
            kind: GraphKind::Crystal,
            rank,
        } => {
            check_n(*n, config)?;
            let graph = crystal_graph(*n, rank.unwrap_or(*n as u32))?;
            match format {
                Format::Text => {
                    for &(from, i, to) in &graph.edges {
                        writeln!(out, "{} -f{i}-> {}", graph.words[from], graph.words[to])?;
                    }
                }
                Format::Json => writeln!(out, "{}", graph.to_json())?,
                Format::Dot => write!(out, "{}", graph.to_dot())?,
            }
        }
        Command::Decompose { n, r } => {
            check_n(*n, config)?;
            let comps = decompose(*n, r.unwrap_or(*n as u32))?;
            match format {
                Format::Text => {
                    for c in &comps {
                        let words: Vec<String> = c.words.iter().map(|b| b.to_string()).collect();
                        writeln!(
                            out,
                            "shape={} Q={} highest={} size={}: {}",
                            c.shape,
                            c.q,
                            c.highest_weight,
                            c.words.len(),
                            words.join(" ")
                        )?;
                    }
                }
                Format::Json => {
                    let all: Vec<_> = comps.iter().map(|c| c.to_json()).collect();
                    writeln!(out, "{}", serde_json::Value::Array(all))?;
                }
                Format::Dot => return Err(unsupported(format, "decompose")),
            }
        }
        Command::Verify { suite, n } => {
            let suite: Suite = suite.parse()?;
            check_n(*n, config)?;
            if *n >= suite.long_threshold() && !config.long {
                return Err(Failure::Usage(format!(
                    "{suite} at n={n} is a long run; pass --long (warm the cache first with `cache warm {n}`)"
                )));
            }
            let report = if suite.uses_kl() {
                with_engine(*n, config, |e| Ok(run_suite(suite, *n, Some(e))?))?
            } else {
                run_suite(suite, *n, None)?
            };
            match format {
                Format::Text => write!(out, "{report}")?,
                Format::Json => writeln!(out, "{}", serde_json::to_string(&report).map_err(Error::from)?)?,
                Format::Dot => return Err(unsupported(format, "verify")),
            }
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
        Command::Cache { action } => {
            let dir = config
                .cache_dir
                .clone()
                .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR));
            cache_command(action, &dir, config, out)?;
        }
    }
    Ok(())
}

fn cache_files(dir: &Path) -> Result<Vec<PathBuf>> {
    if !dir.exists() {
        return Ok(Vec::new());
    }
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.file_name()
                .and_then(|f| f.to_str())
                .is_some_and(|f| f.starts_with("kl-S") && f.ends_with(".tsv"))
        })
        .collect();
    files.sort();
    Ok(files)
}

fn count_lines(path: &Path) -> Result<usize> {
    Ok(fs::read_to_string(path)?
        .lines()
        .filter(|l| !l.trim().is_empty())
        .count())
}

fn cache_command(
    action: &CacheAction,
    dir: &Path,
    config: &Config,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    match action {
        CacheAction::Info => {
            let files = cache_files(dir)?;
            let mut total = 0;
            let mut per_file = Vec::new();
            for f in &files {
                let count = count_lines(f)?;
                total += count;
                let name = f
                    .file_name()
                    .and_then(|s| s.to_str())
                    .unwrap_or_default()
                    .to_string();
                per_file.push((name, count));
            }
            match config.format {
                Format::Json => {
                    let files: Vec<_> = per_file
                        .iter()
                        .map(|(f, c)| json!({"file": f, "entries": c}))
                        .collect();
                    writeln!(out, "{}", json!({"dir": dir, "entries": total, "files": files}))?;
                }
                _ => {
                    for (f, c) in &per_file {
                        writeln!(out, "{f}: {c} entries")?;
                    }
                    writeln!(out, "{total} entries")?;
                }
            }
        }
        CacheAction::Clear => {
            let files = cache_files(dir)?;
            for f in &files {
                fs::remove_file(f)?;
            }
            match config.format {
                Format::Json => writeln!(out, "{}", json!({"dir": dir, "removed": files.len()}))?,
                _ => writeln!(out, "removed {} files", files.len())?,
            }
        }
        CacheAction::Warm { n } => {
            check_n(*n, config)?;
            let engine = KlEngine::with_options(*n, Side::Left, HARD_MAX_DEGREE)?;
            let path = cache_path(dir, *n, Side::Left);
            if path.exists() {
                engine.load(&path)?;
            }
            engine.warm_all_pairs();
            let count = engine.save(&path)?;
            match config.format {
                Format::Json => writeln!(out, "{}", json!({"file": path, "entries": count}))?,
                _ => writeln!(out, "{}: {count} entries", path.display())?,
            }
        }
    }
    Ok(())
}
