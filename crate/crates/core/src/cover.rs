//! Covering algorithms: map any ambient word to a codeword within distance `d - 1`.
//!
//! [`grs_cover`] tries to decode, and on failure punctures the last coordinate of
//! the code (and the word) and tries again. Each puncture lowers the minimum
//! distance by one, so by the time the code has rate 1 every word is a codeword
//! and the loop must stop. Dropping coordinates never increases the distance of a
//! fixed codeword, so whatever is decoded is within `d - 1` of the original word.

use alloc::vec::Vec;
use core::fmt;

use crate::code::{distance_residues, nearest_codeword_bruteforce, GrsCode, Word};
use crate::decode::{bw_decode, gs_decode, gs_tau, rate1_decode};
use crate::error::Result;
use crate::field::Poly;

/// Decoder plugged into [`grs_cover`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoder {
    /// Berlekamp–Welch unique decoding.
    Bw,
    /// Guruswami–Sudan list decoding at the full GS radius.
    Gs,
    /// Exhaustive nearest-codeword search; no puncturing needed.
    Map,
}

/// Covering strategies reported by [`CoverResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Bw,
    Gs,
    Map,
    /// Puncture `d - 1` coordinates at once and interpolate.
    Baseline,
}

impl From<Decoder> for Algorithm {
    fn from(d: Decoder) -> Self {
        match d {
            Decoder::Bw => Algorithm::Bw,
            Decoder::Gs => Algorithm::Gs,
            Decoder::Map => Algorithm::Map,
        }
    }
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Bw => "BW",
            Algorithm::Gs => "GS",
            Algorithm::Map => "MAP",
            Algorithm::Baseline => "BASELINE",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Decoder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Algorithm::from(*self).fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverResult {
    pub message: Poly,
    /// Codeword of the original, unpunctured code.
    pub codeword: Word,
    /// Hamming distance from the input word to `codeword`; at most `d - 1`.
    pub distance: usize,
    /// Puncture steps taken before the decoder succeeded.
    pub punctures: usize,
    pub algorithm: Algorithm,
}

/// Finds a codeword within distance `d - 1` of `y` by decoding and successive
/// puncturing of the last coordinate.
///
/// Guruswami–Sudan may return roots beyond its decoding radius; any of them within
/// `d - 1` of the original `y` is accepted. When several messages qualify, the one
/// closest to `y` wins, with ties going to the lexicographically smallest
/// coefficient vector.
pub fn grs_cover(code: &GrsCode, y: &Word, decoder: Decoder) -> Result<CoverResult> {
    code.check_word(y)?;
    if decoder == Decoder::Map {
        let (message, distance) = nearest_codeword_bruteforce(code, y)?;
        let codeword = code.encode_unchecked(&message);
        return Ok(CoverResult { message, codeword, distance, punctures: 0, algorithm: Algorithm::Map });
    }
    let k = code.k();
    let mut current = code.clone();
    let mut word = y.clone();
    let mut punctures = 0;
    loop {
        let candidates = if current.n() == k {
            rate1_decode(&current, &word)?.polys
        } else {
            match decoder {
                Decoder::Bw => bw_decode(&current, &word)?.polys,
                Decoder::Gs => gs_decode(&current, &word, gs_tau(current.n(), k))?.polys,
                Decoder::Map => unreachable!("handled above"),
            }
        };
        if let Some(best) = closest(code, y, candidates) {
            return Ok(CoverResult { punctures, algorithm: decoder.into(), ..best });
        }
        current = current.puncture_last()?;
        word = word.truncated(current.n());
        punctures += 1;
    }
}

fn closest(code: &GrsCode, y: &Word, candidates: Vec<Poly>) -> Option<CoverResult> {
    let k = code.k();
    candidates
        .into_iter()
        .map(|message| {
            let codeword = code.encode_unchecked(&message);
            let distance = distance_residues(codeword.residues(), y.residues());
            (distance, message.padded_coeffs(k), message, codeword)
        })
        .filter(|c| c.0 < code.d())
        .min_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)))
        .map(|(distance, _, message, codeword)| CoverResult {
            message,
            codeword,
            distance,
            punctures: 0,
            algorithm: Algorithm::Baseline,
        })
}

/// Punctures the last `d - 1` coordinates in one step and interpolates the first `k` symbols.
pub fn grs_cover_baseline(code: &GrsCode, y: &Word) -> Result<CoverResult> {
    code.check_word(y)?;
    let k = code.k();
    let mut rate1 = code.clone();
    while rate1.n() > k {
        rate1 = rate1.puncture_last()?;
    }
    let message = rate1_decode(&rate1, &y.truncated(k))?.polys.remove(0);
    let codeword = code.encode_unchecked(&message);
    let distance = distance_residues(codeword.residues(), y.residues());
    Ok(CoverResult { message, codeword, distance, punctures: code.d() - 1, algorithm: Algorithm::Baseline })
}

/// Distances `d_H(y[1..n-i], C_i(f))` for puncture depths `i = 0, …, d - 1`.
pub fn truncated_distances(code: &GrsCode, y: &Word, f: &Poly) -> Result<Vec<usize>> {
    code.check_word(y)?;
    let c = code.encode(f)?;
    Ok((0..code.d())
        .map(|i| {
            let len = code.n() - i;
            distance_residues(&c.residues()[..len], &y.residues()[..len])
        })
        .collect())
}

/// Checks that puncturing never increases the distance between `y` and the codeword of `f`.
pub fn cover_distance_monotonicity_check(code: &GrsCode, y: &Word, f: &Poly) -> Result<bool> {
    let dists = truncated_distances(code, y, f)?;
    Ok(dists.windows(2).all(|w| w[1] <= w[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn gf7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn codeword_input_needs_no_punctures() {
        let f7 = gf7();
        let code = GrsCode::with_defaults(f7, 6, 2).unwrap();
        let y = Word::from_residues(f7, &[0, 1, 2, 3, 4, 5]).unwrap();
        for dec in [Decoder::Bw, Decoder::Gs, Decoder::Map] {
            let r = grs_cover(&code, &y, dec).unwrap();
            assert_eq!((r.distance, r.punctures), (0, 0), "{dec}");
            assert_eq!(r.message, Poly::x(f7));
        }
        assert_eq!(grs_cover_baseline(&code, &y).unwrap().distance, 0);
    }

    #[test]
    fn baseline_ignores_corruption_in_dropped_coordinates() {
        let f7 = gf7();
        let code = GrsCode::with_defaults(f7, 6, 2).unwrap();
        let y = Word::from_residues(f7, &[0, 1, 2, 3, 4, 0]).unwrap();
        let r = grs_cover_baseline(&code, &y).unwrap();
        assert_eq!((r.message, r.distance, r.punctures), (Poly::x(f7), 1, 4));
    }

    #[test]
    fn baseline_interpolates_through_corrupted_symbol() {
        let f7 = gf7();
        let code = GrsCode::with_defaults(f7, 6, 2).unwrap();
        let y = Word::from_residues(f7, &[3, 1, 2, 3, 4, 5]).unwrap();
        let r = grs_cover_baseline(&code, &y).unwrap();
        assert_ne!(r.message, Poly::x(f7));
        assert!(r.distance <= 4);
        assert!(grs_cover(&code, &y, Decoder::Bw).unwrap().distance <= r.distance);
    }

    #[test]
    fn monotone_distance_profile() {
        let f7 = gf7();
        let code = GrsCode::with_defaults(f7, 6, 2).unwrap();
        let y = Word::from_residues(f7, &[0, 1, 2, 3, 4, 6]).unwrap();
        assert_eq!(truncated_distances(&code, &y, &Poly::x(f7)).unwrap(), alloc::vec![1, 0, 0, 0, 0]);
        assert!(cover_distance_monotonicity_check(&code, &y, &Poly::x(f7)).unwrap());
    }
}
