//! Covering algorithms for generalized Reed–Solomon (GRS) codes over prime fields.
//!
//! Given any word `y` of the ambient space `GF(q)^n`, [`cover::grs_cover`] returns a
//! codeword within the covering radius `d - 1` by alternating an off-the-shelf decoder
//! (Berlekamp–Welch, Guruswami–Sudan, or exhaustive MAP search) with puncturing of the
//! last coordinate. The [`bounds`] module evaluates, in exact arithmetic, how much of
//! the ambient space Hamming balls of a given radius around the codewords cover.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bounds;
pub mod code;
pub mod cover;
pub mod decode;
mod error;
pub mod field;
mod linalg;

pub use code::{GrsCode, Word};
pub use cover::{grs_cover, grs_cover_baseline, Algorithm, CoverResult, Decoder};
pub use decode::{bw_decode, gs_decode, gs_tau, rate1_decode, DecodeOutcome, GsParams};
pub use error::{Error, Result};
pub use field::{BiPoly, FieldElement, Poly, PrimeField};
