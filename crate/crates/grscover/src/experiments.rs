//! Monte Carlo harness for the covering algorithms.
//!
//! Each trial draws a uniform word from its own ChaCha stream, seeded by
//! [`trial_seed`] from `(master_seed, k, stream, trial)`. Trials run on a rayon
//! pool and are merged in trial order with exact integer sums, so results do not
//! depend on the number of workers.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use grscover_core::bounds::{to_decimal, to_f64, DECIMAL_DIGITS};
use grscover_core::code::BRUTEFORCE_BUDGET;
use grscover_core::{grs_cover, grs_cover_baseline, Algorithm, CoverResult, Decoder, GrsCode, PrimeField, Word};

/// Default number of simulated words per `k`.
pub const DEFAULT_TRIALS: u64 = 500;

#[derive(Debug, thiserror::Error)]
pub enum ExperimentError {
    #[error("invalid experiment configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Core(#[from] grscover_core::Error),
    #[error(
        "covering guarantee violated: q = {q}, n = {n}, k = {k}, {algorithm}, trial {trial}, seed {seed:#018x}, \
         y = {y:?}: distance {distance}, punctures {punctures}, d - 1 = {bound}"
    )]
    Guarantee {
        q: u64,
        n: usize,
        k: usize,
        algorithm: Algorithm,
        trial: u64,
        seed: u64,
        y: Vec<u32>,
        distance: usize,
        punctures: usize,
        bound: usize,
    },
    #[error("worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub q: u64,
    pub n: usize,
    pub k_values: Vec<usize>,
    pub trials: u64,
    pub master_seed: u64,
    pub decoders: Vec<Algorithm>,
    /// Worker threads; `None` uses the global rayon pool. Never affects results.
    pub threads: Option<usize>,
}

impl ExperimentConfig {
    pub fn new(q: u64, n: usize, k_values: Vec<usize>, trials: u64, master_seed: u64, decoders: Vec<Algorithm>) -> Self {
        Self { q, n, k_values, trials, master_seed, decoders, threads: None }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    fn validate(&self) -> Result<PrimeField, ExperimentError> {
        if self.trials == 0 {
            return Err(ExperimentError::InvalidConfig("trials must be at least 1".into()));
        }
        if self.k_values.is_empty() {
            return Err(ExperimentError::InvalidConfig("no k values".into()));
        }
        if self.decoders.is_empty() {
            return Err(ExperimentError::InvalidConfig("no decoders".into()));
        }
        if self.threads == Some(0) {
            return Err(ExperimentError::InvalidConfig("threads must be at least 1".into()));
        }
        let field = PrimeField::new(self.q)?;
        for &k in &self.k_values {
            GrsCode::with_defaults(field, self.n, k)?;
        }
        Ok(field)
    }

    fn codes(&self, field: PrimeField) -> Vec<GrsCode> {
        let mut ks = self.k_values.clone();
        ks.sort_unstable();
        ks.dedup();
        ks.into_iter().map(|k| GrsCode::with_defaults(field, self.n, k).expect("validated")).collect()
    }

    fn algorithms(&self) -> Vec<Algorithm> {
        let mut algs = self.decoders.clone();
        algs.sort_unstable();
        algs.dedup();
        algs
    }
}

/// Exact running sums of a nonnegative integer statistic.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub count: u64,
    pub sum: u64,
    pub sum_sq: u64,
    pub max: u64,
}

impl Tally {
    pub fn push(&mut self, x: u64) {
        self.count += 1;
        self.sum += x;
        self.sum_sq += x * x;
        self.max = self.max.max(x);
    }

    pub fn mean_exact(&self) -> BigRational {
        BigRational::new(BigInt::from(self.sum), BigInt::from(self.count.max(1)))
    }

    pub fn mean(&self) -> f64 {
        to_f64(&self.mean_exact())
    }

    /// Sample variance with the `count - 1` denominator; zero for fewer than two samples.
    pub fn variance_exact(&self) -> BigRational {
        if self.count < 2 {
            return BigRational::from_integer(BigInt::from(0));
        }
        let n = BigInt::from(self.count);
        let s = BigInt::from(self.sum);
        let num = &n * BigInt::from(self.sum_sq) - &s * &s;
        BigRational::new(num, &n * (&n - 1))
    }

    pub fn std(&self) -> f64 {
        to_f64(&self.variance_exact()).sqrt()
    }

    pub fn mean_decimal(&self) -> String {
        to_decimal(&self.mean_exact(), DECIMAL_DIGITS)
    }

    pub fn std_decimal(&self) -> String {
        let s = self.std();
        match BigRational::from_float(s) {
            Some(r) => to_decimal(&r, DECIMAL_DIGITS),
            None => s.to_string(),
        }
    }
}

/// Aggregated outcome for one `(k, algorithm)` cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentRecord {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub decoder: Algorithm,
    pub trials: u64,
    pub seed: u64,
    pub punctures: Tally,
    pub distance: Tally,
    pub runtime_ms: u64,
}

impl ExperimentRecord {
    pub fn d(&self) -> usize {
        self.n - self.k + 1
    }

    pub fn avg_punctures(&self) -> f64 {
        self.punctures.mean()
    }

    pub fn avg_distance(&self) -> f64 {
        self.distance.mean()
    }

    pub fn max_distance(&self) -> usize {
        self.distance.max as usize
    }
}

/// splitmix64 output function.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of one trial's RNG stream: the inputs are folded one at a time through splitmix64.
pub fn trial_seed(master_seed: u64, k: usize, stream: u64, trial: u64) -> u64 {
    [k as u64, stream, trial].iter().fold(splitmix64(master_seed), |h, &x| splitmix64(h ^ x))
}

/// Stream id of an algorithm when it draws its own words.
pub fn stream_id(algorithm: Algorithm) -> u64 {
    match algorithm {
        Algorithm::Bw => 1,
        Algorithm::Gs => 2,
        Algorithm::Map => 3,
        Algorithm::Baseline => 4,
    }
}

/// Stream shared by every algorithm in paired comparisons.
pub const PAIRED_STREAM: u64 = 0;

pub fn random_word(field: PrimeField, n: usize, seed: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = field.order() as u64;
    let symbols: Vec<u64> = (0..n).map(|_| rng.random_range(0..q)).collect();
    Word::from_residues(field, &symbols).expect("symbols are reduced")
}

pub fn run_algorithm(code: &GrsCode, y: &Word, algorithm: Algorithm) -> grscover_core::Result<CoverResult> {
    match algorithm {
        Algorithm::Bw => grs_cover(code, y, Decoder::Bw),
        Algorithm::Gs => grs_cover(code, y, Decoder::Gs),
        Algorithm::Map => grs_cover(code, y, Decoder::Map),
        Algorithm::Baseline => grs_cover_baseline(code, y),
    }
}

fn run_cell(
    config: &ExperimentConfig,
    code: &GrsCode,
    algorithm: Algorithm,
    stream: u64,
) -> Result<ExperimentRecord, ExperimentError> {
    let start = Instant::now();
    let (n, k, bound) = (code.n(), code.k(), code.d() - 1);
    let outcomes: Vec<(usize, usize)> = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let seed = trial_seed(config.master_seed, k, stream, trial);
            let y = random_word(code.field(), n, seed);
            let r = run_algorithm(code, &y, algorithm)?;
            if r.distance > bound || r.punctures > bound {
                return Err(ExperimentError::Guarantee {
                    q: config.q,
                    n,
                    k,
                    algorithm,
                    trial,
                    seed,
                    y: y.residues().to_vec(),
                    distance: r.distance,
                    punctures: r.punctures,
                    bound,
                });
            }
            Ok((r.punctures, r.distance))
        })
        .collect::<Result<_, _>>()?;
    let mut punctures = Tally::default();
    let mut distance = Tally::default();
    for (p, dist) in outcomes {
        punctures.push(p as u64);
        distance.push(dist as u64);
    }
    Ok(ExperimentRecord {
        q: config.q,
        n,
        k,
        decoder: algorithm,
        trials: config.trials,
        seed: config.master_seed,
        punctures,
        distance,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

fn in_pool<T: Send>(
    threads: Option<usize>,
    job: impl FnOnce() -> Result<T, ExperimentError> + Send,
) -> Result<T, ExperimentError> {
    match threads {
        None => job(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| ExperimentError::Pool(e.to_string()))?
            .install(job),
    }
}

/// Average punctures of [`grs_cover`] per `k` and decoder (BW and/or GS).
///
/// Every decoder draws its own words. Records come out ordered by `k`, then decoder.
pub fn run_punctures(config: &ExperimentConfig) -> Result<Vec<ExperimentRecord>, ExperimentError> {
    let field = config.validate()?;
    let algs = config.algorithms();
    if let Some(a) = algs.iter().find(|a| !matches!(a, Algorithm::Bw | Algorithm::Gs)) {
        return Err(ExperimentError::InvalidConfig(format!("puncture counts need BW or GS, got {a}")));
    }
    in_pool(config.threads, || {
        let mut out = Vec::new();
        for code in config.codes(field) {
            for &a in &algs {
                out.push(run_cell(config, &code, a, stream_id(a))?);
            }
        }
        Ok(out)
    })
}

/// Achieved distance per `k` and algorithm, on the same words for every algorithm.
pub fn run_radius(config: &ExperimentConfig) -> Result<Vec<ExperimentRecord>, ExperimentError> {
    let field = config.validate()?;
    let algs = config.algorithms();
    if algs.contains(&Algorithm::Map) {
        let q = config.q;
        for &k in &config.k_values {
            let fits = q.checked_pow(k as u32).is_some_and(|v| v <= BRUTEFORCE_BUDGET);
            if !fits {
                return Err(grscover_core::Error::BudgetExceeded { q: q as u32, k, budget: BRUTEFORCE_BUDGET }.into());
            }
        }
    }
    in_pool(config.threads, || {
        let mut out = Vec::new();
        for code in config.codes(field) {
            for &a in &algs {
                out.push(run_cell(config, &code, a, PAIRED_STREAM)?);
            }
        }
        Ok(out)
    })
}

/// Paired per-trial distances of two algorithms on the same words.
pub fn paired_distances(
    config: &ExperimentConfig,
    k: usize,
    a: Algorithm,
    b: Algorithm,
) -> Result<Vec<(usize, usize)>, ExperimentError> {
    let field = config.validate()?;
    let code = GrsCode::with_defaults(field, config.n, k)?;
    in_pool(config.threads, || {
        (0..config.trials)
            .into_par_iter()
            .map(|trial| {
                let y = random_word(field, config.n, trial_seed(config.master_seed, k, PAIRED_STREAM, trial));
                Ok((run_algorithm(&code, &y, a)?.distance, run_algorithm(&code, &y, b)?.distance))
            })
            .collect()
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureRow {
    pub k: usize,
    pub d: usize,
    /// Average BW punctures divided by `d - 1`.
    pub c1: Option<f64>,
    /// Average GS punctures.
    pub c2: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureReport {
    pub q: u64,
    pub n: usize,
    pub rows: Vec<ConjectureRow>,
    pub max_c1: Option<f64>,
    pub max_c2: Option<f64>,
    pub c1_below_one: bool,
    pub c2_below_one: bool,
}

pub fn conjecture_report(records: &[ExperimentRecord]) -> ConjectureReport {
    let mut rows: Vec<ConjectureRow> = Vec::new();
    for r in records {
        let row = match rows.iter_mut().find(|row| row.k == r.k) {
            Some(row) => row,
            None => {
                rows.push(ConjectureRow { k: r.k, d: r.d(), c1: None, c2: None });
                rows.last_mut().unwrap()
            }
        };
        match r.decoder {
            Algorithm::Bw => row.c1 = Some(r.avg_punctures() / (r.d() - 1) as f64),
            Algorithm::Gs => row.c2 = Some(r.avg_punctures()),
            _ => {}
        }
    }
    rows.sort_by_key(|r| r.k);
    let max = |f: fn(&ConjectureRow) -> Option<f64>| rows.iter().filter_map(f).reduce(f64::max);
    let max_c1 = max(|r| r.c1);
    let max_c2 = max(|r| r.c2);
    let (q, n) = records.first().map_or((0, 0), |r| (r.q, r.n));
    ConjectureReport {
        q,
        n,
        max_c1,
        max_c2,
        c1_below_one: max_c1.is_some_and(|c| c < 1.0),
        c2_below_one: max_c2.is_some_and(|c| c < 1.0),
        rows,
    }
}

/// Runs BW and GS puncture counts and summarizes the empirical constants.
pub fn run_conjecture_check(config: &ExperimentConfig) -> Result<ConjectureReport, ExperimentError> {
    let mut cfg = config.clone();
    cfg.decoders = vec![Algorithm::Bw, Algorithm::Gs];
    Ok(conjecture_report(&run_punctures(&cfg)?))
}
