//! Experiments, file formats and the command-line interface on top of `grscover-core`.
//!
//! The sweep commands write CSV files with fixed headers and a
//! `<out>.manifest.json` sidecar from which `grscover replay` regenerates the
//! same bytes.

pub mod cli;
pub mod experiments;
pub mod manifest;
pub mod output;

pub use grscover_core as core;
