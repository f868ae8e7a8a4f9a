//! CSV rendering for the sweep commands, plus atomic file writes.
//!
//! Column order and header names are fixed; downstream plotting reads them by name.

use std::io::{self, Write};
use std::path::Path;

use grscover_core::bounds::{to_decimal, BoundReport, TauScan, DECIMAL_DIGITS};

use crate::experiments::ExperimentRecord;

pub const PUNCTURES_HEADER: [&str; 8] = ["q", "n", "k", "decoder", "trials", "seed", "avg_punctures", "std_punctures"];
pub const RADIUS_HEADER: [&str; 9] =
    ["q", "n", "k", "algorithm", "trials", "seed", "avg_distance", "std_distance", "max_distance"];
pub const BOUND_HEADER: [&str; 8] = ["q", "n", "k", "d", "tau", "lower_exact", "lower_corollary", "upper"];
pub const TAUMAX_HEADER: [&str; 7] = ["q", "n", "k", "d", "tau_gs", "tau_max", "best_lower_bound"];

fn render<const N: usize>(header: [&str; N], rows: impl IntoIterator<Item = [String; N]>) -> Vec<u8> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

pub fn punctures_csv(records: &[ExperimentRecord]) -> Vec<u8> {
    render(
        PUNCTURES_HEADER,
        records.iter().map(|r| {
            [
                r.q.to_string(),
                r.n.to_string(),
                r.k.to_string(),
                r.decoder.to_string(),
                r.trials.to_string(),
                r.seed.to_string(),
                r.punctures.mean_decimal(),
                r.punctures.std_decimal(),
            ]
        }),
    )
}

pub fn radius_csv(records: &[ExperimentRecord]) -> Vec<u8> {
    render(
        RADIUS_HEADER,
        records.iter().map(|r| {
            [
                r.q.to_string(),
                r.n.to_string(),
                r.k.to_string(),
                r.decoder.to_string(),
                r.trials.to_string(),
                r.seed.to_string(),
                r.distance.mean_decimal(),
                r.distance.std_decimal(),
                r.max_distance().to_string(),
            ]
        }),
    )
}

pub fn bound_csv(reports: &[BoundReport]) -> Vec<u8> {
    render(
        BOUND_HEADER,
        reports.iter().map(|b| {
            [
                b.q.to_string(),
                b.n.to_string(),
                b.k.to_string(),
                b.d.to_string(),
                b.tau.to_string(),
                b.lower_exact_decimal(),
                b.lower_corollary_decimal(),
                b.upper_decimal(),
            ]
        }),
    )
}

/// One row per scan; `tau_max` and `best_lower_bound` are empty when the radius range is empty.
pub fn taumax_csv(scans: &[TauScan]) -> Vec<u8> {
    render(
        TAUMAX_HEADER,
        scans.iter().map(|s| {
            let best = s.best();
            [
                s.q.to_string(),
                s.n.to_string(),
                s.k.to_string(),
                (s.n - s.k + 1).to_string(),
                s.tau_gs.to_string(),
                s.tau_max.map(|t| t.to_string()).unwrap_or_default(),
                best.map(|b| to_decimal(&b.lower_exact, DECIMAL_DIGITS)).unwrap_or_default(),
            ]
        }),
    )
}

/// Writes `bytes` to a temporary file next to `path`, then renames it into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
