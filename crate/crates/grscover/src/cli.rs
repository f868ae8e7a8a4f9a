//! Command-line surface.
//!
//! Exit codes: 0 success, 1 internal failure, 2 usage or invalid parameters,
//! 3 decoder limit (multiplicity cap, brute-force budget), 4 I/O.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use grscover_core::bounds::{BoundTables, TauScan};
use grscover_core::{Algorithm, GrsCode, PrimeField, Word};

use crate::experiments::{
    self, random_word, run_algorithm, ExperimentConfig, ExperimentError, DEFAULT_TRIALS,
};
use crate::manifest::{sidecar_path, RunManifest};
use crate::output::{bound_csv, punctures_csv, radius_csv, taumax_csv, write_atomic};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    DecoderLimit(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::DecoderLimit(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Io(format!("{}: {e}", path.display()))
    }
}

impl From<grscover_core::Error> for CliError {
    fn from(e: grscover_core::Error) -> Self {
        use grscover_core::Error::*;
        match e {
            MultiplicityOverflow { .. } | BudgetExceeded { .. } => CliError::DecoderLimit(e.to_string()),
            InversionOfZero | DivisionByZero | FieldMismatch { .. } => CliError::Failed(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ExperimentError> for CliError {
    fn from(e: ExperimentError) -> Self {
        match e {
            ExperimentError::Core(c) => c.into(),
            ExperimentError::InvalidConfig(m) => CliError::Usage(m),
            other => CliError::Failed(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "grscover", version, about = "Covering algorithms and coverage bounds for GRS codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Map one word to a codeword within distance d - 1; prints JSON.
    Cover(CoverArgs),
    /// Average punctures per k for BW and GS covering (CSV).
    Punctures(SweepArgs),
    /// Average achieved distance per k and algorithm on paired words (CSV).
    Radius(SweepArgs),
    /// Coverage bounds for every radius strictly between d/2 and d (CSV).
    Bound(BoundArgs),
    /// Best radius of the exact lower bound next to the GS radius, per k (CSV).
    Taumax(TaumaxArgs),
    /// Empirical constants of the puncture-count conjecture (JSON).
    Conjecture(ConjectureArgs),
    /// Re-run the command recorded in a manifest.
    Replay(ReplayArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgorithmArg {
    Bw,
    Gs,
    Map,
    Baseline,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Bw => Algorithm::Bw,
            AlgorithmArg::Gs => Algorithm::Gs,
            AlgorithmArg::Map => Algorithm::Map,
            AlgorithmArg::Baseline => Algorithm::Baseline,
        }
    }
}

/// Inclusive range of dimensions, written `a..b` or `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct KRange {
    pub start: usize,
    pub end: usize,
}

impl KRange {
    pub fn values(&self) -> Vec<usize> {
        (self.start..=self.end).collect()
    }
}

impl FromStr for KRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid k range `{s}`"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => (parse(s)?, parse(s)?),
        };
        if start == 0 || start > end {
            return Err(format!("invalid k range `{s}`: need 1 <= a <= b"));
        }
        Ok(Self { start, end })
    }
}

impl fmt::Display for KRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

impl TryFrom<String> for KRange {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

impl From<KRange> for String {
    fn from(r: KRange) -> String {
        r.to_string()
    }
}

fn default_ks(k_range: Option<KRange>, n: usize) -> Result<Vec<usize>, CliError> {
    match k_range {
        Some(r) if r.end >= n => Err(CliError::Usage(format!("--k-range: {r} must stay below n = {n}"))),
        Some(r) => Ok(r.values()),
        None if n >= 2 => Ok((1..n).collect()),
        None => Err(CliError::Usage(format!("--n: need n >= 2, got {n}"))),
    }
}

#[derive(Debug, Clone, Args)]
pub struct CoverArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Comma-separated residues; drawn at random from --seed when absent.
    #[arg(long)]
    pub y: Option<String>,
    /// Comma-separated distinct evaluation points (default 0, 1, ..., n - 1).
    #[arg(long)]
    pub alphas: Option<String>,
    /// Comma-separated nonzero column multipliers (default all 1).
    #[arg(long)]
    pub vs: Option<String>,
    #[arg(long, value_enum, default_value = "gs")]
    pub decoder: AlgorithmArg,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct SweepArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: usize,
    /// Inclusive `a..b`; defaults to 1..n-1.
    #[arg(long)]
    pub k_range: Option<KRange>,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated; defaults to bw,gs for punctures and all four for radius.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub decoders: Option<Vec<AlgorithmArg>>,
    #[arg(long)]
    pub out: PathBuf,
    /// Worker threads (results do not depend on it).
    #[arg(long)]
    #[serde(skip)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct BoundArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct TaumaxArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k_range: Option<KRange>,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    #[serde(skip)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct ConjectureArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k_range: Option<KRange>,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also write the report (and a manifest) to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    #[serde(skip)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct ReplayArgs {
    #[arg(long)]
    pub manifest: PathBuf,
    /// Write to this path instead of the one recorded in the manifest.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub threads: Option<usize>,
}

fn parse_list(flag: &str, s: &str) -> Result<Vec<u64>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("{flag}: `{t}` is not a nonnegative integer"))))
        .collect()
}

fn parse_residues(flag: &str, s: &str, field: PrimeField, n: usize) -> Result<Vec<u64>, CliError> {
    let v = parse_list(flag, s)?;
    if v.len() != n {
        return Err(CliError::Usage(format!("{flag}: expected {n} values, got {}", v.len())));
    }
    if let Some(x) = v.iter().find(|&&x| x >= field.order() as u64) {
        return Err(CliError::Usage(format!("{flag}: {x} is not a residue mod {}", field.order())));
    }
    Ok(v)
}

#[derive(Debug, Serialize)]
struct CoverOutput {
    q: u64,
    n: usize,
    k: usize,
    decoder: String,
    y: Vec<u32>,
    message_coeffs: Vec<u32>,
    codeword: Vec<u32>,
    distance: usize,
    punctures: usize,
}

fn cmd_cover(a: &CoverArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let field = PrimeField::new(a.q)?;
    let code = match (&a.alphas, &a.vs) {
        (None, None) => GrsCode::with_defaults(field, a.n, a.k)?,
        (alphas, vs) => {
            let alphas = match alphas {
                Some(s) => parse_residues("--alphas", s, field, a.n)?,
                None => (0..a.n as u64).collect(),
            };
            let vs = match vs {
                Some(s) => parse_residues("--vs", s, field, a.n)?,
                None => vec![1; a.n],
            };
            let to_elems = |v: &[u64]| v.iter().map(|&x| field.elem(x)).collect::<Vec<_>>();
            GrsCode::new(field, a.k, &to_elems(&alphas), &to_elems(&vs))?
        }
    };
    let y = match (&a.y, a.seed) {
        (Some(s), _) => Word::from_residues(field, &parse_residues("--y", s, field, a.n)?)?,
        (None, Some(seed)) => random_word(field, a.n, seed),
        (None, None) => return Err(CliError::Usage("--y: give a word or a --seed to draw one".into())),
    };
    let r = run_algorithm(&code, &y, a.decoder.into())?;
    let out = CoverOutput {
        q: a.q,
        n: a.n,
        k: a.k,
        decoder: r.algorithm.to_string(),
        y: y.residues().to_vec(),
        message_coeffs: r.message.padded_coeffs(a.k),
        codeword: r.codeword.residues().to_vec(),
        distance: r.distance,
        punctures: r.punctures,
    };
    let text = serde_json::to_string_pretty(&out).expect("serializes");
    writeln!(stdout, "{text}").map_err(|e| CliError::Io(e.to_string()))
}

fn sweep_config(a: &SweepArgs, default: &[AlgorithmArg]) -> Result<ExperimentConfig, CliError> {
    let decoders = a.decoders.as_deref().unwrap_or(default).iter().map(|&d| d.into()).collect();
    let mut cfg = ExperimentConfig::new(a.q, a.n, default_ks(a.k_range, a.n)?, a.trials, a.seed, decoders);
    cfg.threads = a.threads;
    Ok(cfg)
}

fn emit<T: Serialize>(command: &str, params: &T, seed: Option<u64>, out: &Path, bytes: &[u8]) -> Result<(), CliError> {
    write_atomic(out, bytes).map_err(|e| CliError::io(out, e))?;
    let params = serde_json::to_value(params).expect("params serialize");
    let manifest = RunManifest::new(command, params, seed, vec![out.to_path_buf()]);
    let side = sidecar_path(out);
    manifest.write(&side).map_err(|e| CliError::io(&side, e))
}

fn cmd_punctures(a: &SweepArgs) -> Result<(), CliError> {
    let cfg = sweep_config(a, &[AlgorithmArg::Bw, AlgorithmArg::Gs])?;
    let records = experiments::run_punctures(&cfg)?;
    emit("punctures", a, Some(a.seed), &a.out, &punctures_csv(&records))
}

fn cmd_radius(a: &SweepArgs) -> Result<(), CliError> {
    let all = [AlgorithmArg::Map, AlgorithmArg::Gs, AlgorithmArg::Bw, AlgorithmArg::Baseline];
    let cfg = sweep_config(a, &all)?;
    let records = experiments::run_radius(&cfg)?;
    emit("radius", a, Some(a.seed), &a.out, &radius_csv(&records))
}

fn check_code(q: u64, n: usize, k: usize) -> Result<(), CliError> {
    GrsCode::with_defaults(PrimeField::new(q)?, n, k)?;
    if k >= n {
        return Err(CliError::Usage(format!("--k: need k < n, got k = {k}, n = {n}")));
    }
    Ok(())
}

fn cmd_bound(a: &BoundArgs) -> Result<(), CliError> {
    check_code(a.q, a.n, a.k)?;
    let scan = BoundTables::new(a.q, a.n).tau_scan(a.k);
    emit("bound", a, None, &a.out, &bound_csv(&scan.bounds))
}

/// τ scans for every `k`, sharing one table of ball intersections.
pub fn taumax_scans(q: u64, n: usize, ks: &[usize]) -> Vec<TauScan> {
    let tables = BoundTables::with_intersections(q, n);
    ks.par_iter().map(|&k| tables.tau_scan(k)).collect()
}

fn with_threads<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match threads {
        None => Ok(job()),
        Some(0) => Err(CliError::Usage("--threads: need at least 1".into())),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map(|p| p.install(job))
            .map_err(|e| CliError::Failed(e.to_string())),
    }
}

fn cmd_taumax(a: &TaumaxArgs) -> Result<(), CliError> {
    let ks = default_ks(a.k_range, a.n)?;
    for &k in &ks {
        check_code(a.q, a.n, k)?;
    }
    let scans = with_threads(a.threads, || taumax_scans(a.q, a.n, &ks))?;
    emit("taumax", a, None, &a.out, &taumax_csv(&scans))
}

fn cmd_conjecture(a: &ConjectureArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let mut cfg = ExperimentConfig::new(a.q, a.n, default_ks(a.k_range, a.n)?, a.trials, a.seed, vec![]);
    cfg.threads = a.threads;
    let report = experiments::run_conjecture_check(&cfg)?;
    let mut text = serde_json::to_string_pretty(&report).expect("serializes");
    text.push('\n');
    stdout.write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string()))?;
    match &a.out {
        Some(out) => emit("conjecture", a, Some(a.seed), out, text.as_bytes()),
        None => Ok(()),
    }
}

fn from_params<T: serde::de::DeserializeOwned>(m: &RunManifest) -> Result<T, CliError> {
    serde_json::from_value(m.params.clone()).map_err(|e| CliError::Usage(format!("--manifest: bad params: {e}")))
}

fn cmd_replay(a: &ReplayArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let m = RunManifest::read(&a.manifest).map_err(|e| CliError::io(&a.manifest, e))?;
    let command = match m.command.as_str() {
        "punctures" | "radius" => {
            let mut s: SweepArgs = from_params(&m)?;
            s.threads = a.threads;
            if let Some(out) = &a.out {
                s.out = out.clone();
            }
            if m.command == "punctures" {
                Command::Punctures(s)
            } else {
                Command::Radius(s)
            }
        }
        "bound" => {
            let mut b: BoundArgs = from_params(&m)?;
            if let Some(out) = &a.out {
                b.out = out.clone();
            }
            Command::Bound(b)
        }
        "taumax" => {
            let mut t: TaumaxArgs = from_params(&m)?;
            t.threads = a.threads;
            if let Some(out) = &a.out {
                t.out = out.clone();
            }
            Command::Taumax(t)
        }
        "conjecture" => {
            let mut c: ConjectureArgs = from_params(&m)?;
            c.threads = a.threads;
            if a.out.is_some() {
                c.out = a.out.clone();
            }
            Command::Conjecture(c)
        }
        other => return Err(CliError::Usage(format!("--manifest: unknown command `{other}`"))),
    };
    run(command, stdout)
}

pub fn run(command: Command, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &command {
        Command::Cover(a) => cmd_cover(a, stdout),
        Command::Punctures(a) => cmd_punctures(a),
        Command::Radius(a) => cmd_radius(a),
        Command::Bound(a) => cmd_bound(a),
        Command::Taumax(a) => cmd_taumax(a),
        Command::Conjecture(a) => cmd_conjecture(a, stdout),
        Command::Replay(a) => cmd_replay(a, stdout),
    }
}

/// Parses `std::env::args`, runs the command and maps the outcome to an exit code.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command, &mut std::io::stdout().lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
