//! Decoders used as the black box of the covering algorithms.
//!
//! All decoders take a GRS code and reduce to plain RS by dividing each received
//! symbol by its column multiplier, so they share one code path for both settings.

mod bw;
mod gs;

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Roots;

use crate::code::{GrsCode, Word};
use crate::error::{Error, Result};
use crate::field::poly::interpolate_residues;
use crate::field::Poly;

pub use bw::bw_decode;
pub use gs::{gs_decode, gs_decode_with, gs_interpolate, gs_roots, Interpolator};

/// Largest interpolation multiplicity `decide_gs_params` will consider by default.
pub const DEFAULT_MULTIPLICITY_CAP: u32 = 64;

/// Result of one decoder invocation.
///
/// An empty `polys` list means the decoder found nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub polys: Vec<Poly>,
    /// Radius up to which this invocation is guaranteed to find every codeword.
    pub radius_used: usize,
}

impl DecodeOutcome {
    pub fn is_success(&self) -> bool {
        !self.polys.is_empty()
    }

    pub(crate) fn failure(radius_used: usize) -> Self {
        Self { polys: Vec::new(), radius_used }
    }
}

/// Guruswami–Sudan decoding radius `n - 1 - ⌊√((k - 1) n)⌋`.
pub fn gs_tau(n: usize, k: usize) -> usize {
    assert!(1 <= k && k <= n, "need 1 <= k <= n, got n = {n}, k = {k}");
    n - 1 - ((k - 1) * n).sqrt()
}

/// Interpolation parameters for one Guruswami–Sudan run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GsParams {
    /// Multiplicity `s` with which `Q` vanishes at every received point.
    pub s: u32,
    /// Largest allowed `(1, k - 1)`-weighted degree of `Q`.
    pub wdeg_cap: usize,
}

impl GsParams {
    /// Number of linear constraints, `n s (s + 1) / 2`.
    pub fn constraints(&self, n: usize) -> usize {
        let s = self.s as usize;
        n * s * (s + 1) / 2
    }
}

/// Number of monomials `X^i Y^j` with `i + j w <= wdeg`.
pub fn weighted_monomial_count(wdeg: usize, w: usize) -> u128 {
    assert!(w > 0, "weight must be positive");
    let wdeg = wdeg as u128;
    let w = w as u128;
    (0..=wdeg / w).map(|j| wdeg - j * w + 1).sum()
}

/// Smallest multiplicity `s` for which a nonzero `Q` with weighted degree at most
/// `s (n - tau) - 1` exists, using the default cap.
pub fn decide_gs_params(n: usize, k: usize, tau: usize) -> Result<GsParams> {
    decide_gs_params_capped(n, k, tau, DEFAULT_MULTIPLICITY_CAP)
}

/// Like [`decide_gs_params`] with an explicit multiplicity cap.
///
/// With `t = n - tau` agreements and `D = s t - 1`, any message agreeing with the
/// received word in `t` places makes `Q(X, f(X))` (degree `<= D`) vanish to order `s`
/// at `t` points, hence identically. `s` is the smallest value for which the exact
/// count of monomials of weighted degree `<= D` exceeds the `n s (s + 1) / 2`
/// constraints, so the interpolation system always has a nonzero solution.
pub fn decide_gs_params_capped(n: usize, k: usize, tau: usize, cap: u32) -> Result<GsParams> {
    if k < 2 || k > n {
        return Err(Error::InvalidCode(alloc::format!(
            "interpolation parameters need 2 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let max = gs_tau(n, k);
    if tau > max {
        return Err(Error::RadiusTooLarge { n, k, tau, max });
    }
    let t = n - tau;
    for s in 1..=cap {
        let wdeg_cap = s as usize * t - 1;
        let params = GsParams { s, wdeg_cap };
        if weighted_monomial_count(wdeg_cap, k - 1) > params.constraints(n) as u128 {
            return Ok(params);
        }
    }
    Err(Error::MultiplicityOverflow { n, k, tau, cap })
}

/// Decodes in a rate-1 (`n = k`) code by interpolation; always succeeds.
pub fn rate1_decode(code: &GrsCode, y: &Word) -> Result<DecodeOutcome> {
    code.check_word(y)?;
    if code.n() != code.k() {
        return Err(Error::NotRateOne { n: code.n(), k: code.k() });
    }
    let ys = code.unscale(y);
    let f = interpolate_residues(code.field(), code.alpha_residues(), &ys)?;
    Ok(DecodeOutcome { polys: vec![f], radius_used: 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn gs_tau_examples() {
        assert_eq!(gs_tau(6, 1), 5);
        assert_eq!(gs_tau(14, 2), 10);
        assert_eq!(gs_tau(46, 2), 39);
    }

    #[test]
    fn gs_tau_dominates_unique_radius() {
        for n in 2..=64 {
            for k in 1..n {
                let unique = (n - k) / 2;
                assert!(gs_tau(n, k) >= unique, "n = {n}, k = {k}");
                assert!(gs_tau(n, k) < n - k + 1);
            }
            assert!(gs_tau(n, n - 1) <= 1);
        }
    }

    // Oracle: scan s upward, counting monomials by direct enumeration.
    fn smallest_s_by_enumeration(n: usize, k: usize, tau: usize) -> (u32, usize) {
        let t = n - tau;
        for s in 1u32.. {
            let wdeg = s as usize * t - 1;
            let mut count = 0usize;
            for j in 0..=wdeg {
                for i in 0..=wdeg {
                    if i + j * (k - 1) <= wdeg {
                        count += 1;
                    }
                }
            }
            if count > n * (s as usize) * (s as usize + 1) / 2 {
                return (s, wdeg);
            }
        }
        unreachable!()
    }

    #[test]
    fn decide_gs_params_examples() {
        // Values frozen from `smallest_s_by_enumeration`.
        assert_eq!(smallest_s_by_enumeration(6, 2, 3), (2, 5));
        assert_eq!(decide_gs_params(6, 2, 3).unwrap(), GsParams { s: 2, wdeg_cap: 5 });
        assert_eq!(smallest_s_by_enumeration(46, 2, 39), (14, 97));
        assert_eq!(decide_gs_params(46, 2, 39).unwrap(), GsParams { s: 14, wdeg_cap: 97 });
        // n = 10, k = 9 sits right at the radius boundary: t^2 = 81 = (k - 1) n + 1.
        assert_eq!(smallest_s_by_enumeration(10, 9, 1), (9, 80));
        assert_eq!(decide_gs_params(10, 9, 1).unwrap(), GsParams { s: 9, wdeg_cap: 80 });
        // Unique-decoding radius needs no multiplicity.
        assert_eq!(decide_gs_params(6, 2, 2).unwrap().s, 1);
    }

    #[test]
    fn decide_gs_params_agrees_with_enumeration() {
        for n in 2..=16 {
            for k in 2..=n {
                for tau in 0..=gs_tau(n, k) {
                    let p = decide_gs_params(n, k, tau).unwrap();
                    assert_eq!((p.s, p.wdeg_cap), smallest_s_by_enumeration(n, k, tau), "n={n} k={k} tau={tau}");
                }
            }
        }
    }

    #[test]
    fn decide_gs_params_errors() {
        assert!(matches!(decide_gs_params(6, 2, 4), Err(Error::RadiusTooLarge { max: 3, .. })));
        assert!(matches!(decide_gs_params(6, 1, 0), Err(Error::InvalidCode(_))));
        assert_eq!(
            decide_gs_params_capped(10, 9, 1, 8),
            Err(Error::MultiplicityOverflow { n: 10, k: 9, tau: 1, cap: 8 })
        );
    }

    #[test]
    fn rate1_examples() {
        let f7 = PrimeField::new(7).unwrap();
        let code = GrsCode::with_defaults(f7, 2, 2).unwrap();
        let y = Word::from_residues(f7, &[3, 5]).unwrap();
        let out = rate1_decode(&code, &y).unwrap();
        assert_eq!(out.polys, vec![Poly::from_coeffs(f7, &[3, 2])]);
        assert_eq!(code.encode(&out.polys[0]).unwrap(), y);

        let bigger = GrsCode::with_defaults(f7, 3, 2).unwrap();
        let y3 = Word::from_residues(f7, &[1, 2, 3]).unwrap();
        assert_eq!(rate1_decode(&bigger, &y3), Err(Error::NotRateOne { n: 3, k: 2 }));
    }

    #[test]
    fn rate1_inverts_grs_encoding() {
        let f11 = PrimeField::new(11).unwrap();
        let alphas: Vec<_> = [3u64, 7, 1, 9].iter().map(|&a| f11.elem(a)).collect();
        let vs: Vec<_> = [2u64, 5, 10, 4].iter().map(|&v| f11.elem(v)).collect();
        let code = GrsCode::new(f11, 4, &alphas, &vs).unwrap();
        let f = Poly::from_coeffs(f11, &[6, 0, 3, 8]);
        let out = rate1_decode(&code, &code.encode(&f).unwrap()).unwrap();
        assert_eq!(out.polys, vec![f]);
    }
}
