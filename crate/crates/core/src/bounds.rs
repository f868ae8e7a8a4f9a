//! Exact counting bounds on how much of `GF(q)^n` the radius-`τ` Hamming balls
//! around the codewords of an `[n, k, d]_q` MDS code cover.
//!
//! Everything is computed with arbitrary-precision integers and rationals: for
//! `q = 47, n = 46` the ambient space already has about `10^77` points.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::decode::gs_tau;

/// Significant digits used when rendering bound values as decimals.
pub const DECIMAL_DIGITS: usize = 12;

/// Binomials, powers and ball volumes for one `(q, n)`, shared by every bound evaluation.
#[derive(Debug, Clone)]
pub struct BoundTables {
    q: u64,
    n: usize,
    binom: Vec<Vec<BigUint>>,
    pow_q: Vec<BigUint>,
    pow_q1: Vec<BigUint>,
    // vols[m][t] = Vol_q(t, m) for 0 <= t <= m.
    vols: Vec<Vec<BigUint>>,
    // mixed[m][v] = Σ_{v' <= v} C(m, v') (q - 2)^(m - v').
    mixed: Vec<Vec<BigUint>>,
    // intersections[w][tau], filled by `precompute_intersections`.
    intersections: Option<Vec<Vec<BigUint>>>,
}

impl BoundTables {
    pub fn new(q: u64, n: usize) -> Self {
        assert!(q >= 2, "alphabet size must be at least 2");
        let mut binom: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut row = vec![BigUint::one(); i + 1];
            for j in 1..i {
                row[j] = &binom[i - 1][j - 1] + &binom[i - 1][j];
            }
            binom.push(row);
        }
        let powers = |base: u64| -> Vec<BigUint> {
            let mut v = Vec::with_capacity(n + 1);
            let mut acc = BigUint::one();
            for _ in 0..=n {
                v.push(acc.clone());
                acc *= base;
            }
            v
        };
        let pow_q = powers(q);
        let pow_q1 = powers(q - 1);
        let pow_q2 = powers(q - 2);
        let prefix = |weight: &dyn Fn(usize, usize) -> BigUint| -> Vec<Vec<BigUint>> {
            (0..=n)
                .map(|m| {
                    let mut acc = BigUint::zero();
                    (0..=m)
                        .map(|t| {
                            acc += weight(m, t);
                            acc.clone()
                        })
                        .collect()
                })
                .collect()
        };
        let vols = prefix(&|m, t| &binom[m][t] * &pow_q1[t]);
        let mixed = prefix(&|m, v| &binom[m][v] * &pow_q2[m - v]);
        Self { q, n, binom, pow_q, pow_q1, vols, mixed, intersections: None }
    }

    /// Tables with every `I(w, τ)` precomputed, for sweeps over many `k` and `τ`.
    pub fn with_intersections(q: u64, n: usize) -> Self {
        let mut t = Self::new(q, n);
        let all = (0..=n).map(|w| (0..=n).map(|tau| t.compute_intersection(w, tau)).collect()).collect();
        t.intersections = Some(all);
        t
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Vol_q(τ, m) = Σ_{j <= τ} C(m, j) (q - 1)^j`; zero for negative `τ`, `q^m` for `τ >= m`.
    pub fn vol_in(&self, tau: i64, m: usize) -> BigUint {
        if tau < 0 {
            return BigUint::zero();
        }
        let t = (tau as usize).min(m);
        self.vols[m][t].clone()
    }

    pub fn vol(&self, tau: usize) -> BigUint {
        self.vol_in(tau as i64, self.n)
    }

    /// Number of weight-`w` codewords of an `[n, k]` MDS code.
    pub fn weight_distribution(&self, k: usize, w: usize) -> BigUint {
        let n = self.n;
        let d = n - k + 1;
        if w == 0 {
            return BigUint::one();
        }
        if w < d || w > n {
            return BigUint::zero();
        }
        let mut pos = BigInt::zero();
        for j in 0..=(w - d) {
            let term = BigInt::from(self.binom[w][j].clone()) * (BigInt::from(self.pow_q[w - d + 1 - j].clone()) - 1);
            if j % 2 == 0 {
                pos += term;
            } else {
                pos -= term;
            }
        }
        let total = BigInt::from(self.binom[n][w].clone()) * pos;
        total.to_biguint().expect("weight distribution is nonnegative")
    }

    /// `|B(c_1, τ) ∩ B(c_2, τ)|` for two words at Hamming distance `w`.
    pub fn intersection(&self, w: usize, tau: usize) -> BigUint {
        match &self.intersections {
            Some(all) if w <= self.n && tau <= self.n => all[w][tau].clone(),
            _ => self.compute_intersection(w, tau),
        }
    }

    // z counts positions outside the support of c_1 - c_2 where y agrees with both;
    // u (resp. v) counts support positions where y agrees with c_1 (resp. c_2).
    fn compute_intersection(&self, w: usize, tau: usize) -> BigUint {
        let n = self.n;
        assert!(w <= n, "distance {w} exceeds length {n}");
        let tau = tau.min(n);
        let mut total = BigUint::zero();
        for z in 0..=(n - w) {
            let lo = (n as i64 - tau as i64 - z as i64).max(0) as usize;
            let mut inner = BigUint::zero();
            for u in lo..=tau.min(w) {
                let m = w - u;
                let hi = tau.min(m);
                if lo > hi {
                    continue;
                }
                let upto = &self.mixed[m][hi];
                let below = if lo == 0 { BigUint::zero() } else { self.mixed[m][lo - 1].clone() };
                inner += &self.binom[w][u] * (upto - below);
            }
            if !inner.is_zero() {
                total += &self.binom[n - w][z] * &self.pow_q1[n - w - z] * inner;
            }
        }
        total
    }

    /// Inclusion–exclusion lower bound on the size of the union of all radius-`τ` balls.
    pub fn union_lower_bound(&self, k: usize, tau: usize) -> BigInt {
        let n = self.n;
        let d = n - k + 1;
        let mut overlap = BigUint::zero();
        for w in d..=(2 * tau).min(n) {
            overlap += self.weight_distribution(k, w) * self.intersection(w, tau);
        }
        let qk = BigInt::from(self.pow_q[k].clone());
        let twice: BigInt = qk.clone() * BigInt::from(self.vol(tau)) * 2 - qk * BigInt::from(overlap);
        let (half, rem) = twice.div_rem(&BigInt::from(2));
        debug_assert!(rem.is_zero(), "ordered pair count is even");
        half
    }

    /// Exact, closed-form and union bounds on the covered fraction for one radius.
    ///
    /// The closed form replaces `A_w` by `(q - 1) C(n, w) q^(w - d)` and `I(w, τ)` by
    /// `q^(n - w) [Vol_q(τ, w) - Vol_q(w - τ - 1, w)]`, both termwise upper bounds,
    /// so it never exceeds `lower_exact`. Dropping the `(q - 1)` factor gives the
    /// expression kept in `lower_corollary_unweighted`, which overshoots `lower_exact`
    /// (and even 1) for some parameters.
    pub fn corollary_bounds(&self, k: usize, tau: usize) -> BoundReport {
        let n = self.n;
        let d = n - k + 1;
        let q = BigInt::from(self.q);
        let vol = BigRational::from_integer(BigInt::from(self.vol(tau)));
        let upper = rational_pow(&q, k as i64 - n as i64) * &vol;
        let mut sum = BigInt::zero();
        for w in d..=(2 * tau).min(n) {
            let diff = BigInt::from(self.vol_in(tau as i64, w)) - BigInt::from(self.vol_in(w as i64 - tau as i64 - 1, w));
            sum += BigInt::from(self.binom[n][w].clone()) * diff;
        }
        let overlap = rational_pow(&q, k as i64 - d as i64) * BigRational::from_integer(sum) / BigInt::from(2);
        let lower_corollary_unweighted = &upper - &overlap;
        let lower_corollary = &upper - overlap * BigInt::from(self.q - 1);
        let lower_exact = BigRational::new(self.union_lower_bound(k, tau), BigInt::from(self.pow_q[n].clone()));
        BoundReport { q: self.q, n, k, d, tau, lower_exact, lower_corollary, lower_corollary_unweighted, upper }
    }

    /// Evaluates the bounds for every integer `τ` with `d/2 < τ < d`.
    pub fn tau_scan(&self, k: usize) -> TauScan {
        let n = self.n;
        assert!(1 <= k && k < n, "need 1 <= k < n, got n = {n}, k = {k}");
        let d = n - k + 1;
        let taus: Vec<usize> = (d / 2 + 1..d).collect();
        let bounds: Vec<BoundReport> = taus.iter().map(|&tau| self.corollary_bounds(k, tau)).collect();
        let mut tau_max: Option<(usize, &BigRational)> = None;
        for b in &bounds {
            match tau_max {
                Some((_, best)) if b.lower_exact <= *best => {}
                _ => tau_max = Some((b.tau, &b.lower_exact)),
            }
        }
        let tau_max = tau_max.map(|(t, _)| t);
        TauScan { q: self.q, n, k, taus, tau_max, tau_gs: gs_tau(n, k), bounds }
    }
}

fn rational_pow(base: &BigInt, exp: i64) -> BigRational {
    let p = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// `Vol_q(τ, n)`, the size of a Hamming ball of radius `τ` in `GF(q)^n`.
pub fn vol(q: u64, tau: usize, n: usize) -> BigUint {
    BoundTables::new(q, n).vol(tau)
}

/// Number of codewords of weight `w` in an `[n, k, n - k + 1]_q` MDS code.
pub fn weight_distribution(q: u64, n: usize, k: usize, w: usize) -> BigUint {
    assert!(1 <= k && k <= n, "need 1 <= k <= n");
    if w > n {
        return BigUint::zero();
    }
    BoundTables::new(q, n).weight_distribution(k, w)
}

/// Size of the intersection of two radius-`τ` balls in `GF(q)^n` whose centers are `w` apart.
pub fn ball_intersection(q: u64, n: usize, w: usize, tau: usize) -> BigUint {
    BoundTables::new(q, n).intersection(w, tau)
}

/// Lower bound on `|⋃_c B(c, τ)|` from the sizes of single balls and pairwise intersections.
pub fn union_lower_bound(q: u64, n: usize, k: usize, tau: usize) -> BigInt {
    BoundTables::new(q, n).union_lower_bound(k, tau)
}

pub fn corollary_bounds(q: u64, n: usize, k: usize, tau: usize) -> BoundReport {
    BoundTables::new(q, n).corollary_bounds(k, tau)
}

pub fn tau_scan(q: u64, n: usize, k: usize) -> TauScan {
    BoundTables::with_intersections(q, n).tau_scan(k)
}

/// Bounds on the covered fraction `q^{-n} |⋃_c B(c, τ)|` for one radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub tau: usize,
    /// Pairwise inclusion–exclusion bound divided by `q^n`; may be negative.
    pub lower_exact: BigRational,
    /// Weaker closed-form lower bound; may be negative.
    pub lower_corollary: BigRational,
    /// The closed form without the `(q - 1)` factor on the weight bound. Not a valid
    /// lower bound in general; kept for comparison.
    pub lower_corollary_unweighted: BigRational,
    /// Union bound `q^{k-n} Vol_q(τ, n)`; may exceed 1.
    pub upper: BigRational,
}

impl BoundReport {
    pub fn lower_exact_decimal(&self) -> String {
        to_decimal(&self.lower_exact, DECIMAL_DIGITS)
    }

    pub fn lower_corollary_decimal(&self) -> String {
        to_decimal(&self.lower_corollary, DECIMAL_DIGITS)
    }

    pub fn lower_corollary_unweighted_decimal(&self) -> String {
        to_decimal(&self.lower_corollary_unweighted, DECIMAL_DIGITS)
    }

    pub fn upper_decimal(&self) -> String {
        to_decimal(&self.upper, DECIMAL_DIGITS)
    }
}

/// Bound evaluations over the radii strictly between `d/2` and `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauScan {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub taus: Vec<usize>,
    pub bounds: Vec<BoundReport>,
    /// Smallest radius attaining the largest `lower_exact`; `None` when the range is empty.
    pub tau_max: Option<usize>,
    pub tau_gs: usize,
}

impl TauScan {
    pub fn best(&self) -> Option<&BoundReport> {
        let t = self.tau_max?;
        self.bounds.iter().find(|b| b.tau == t)
    }
}

/// Renders `x` with `digits` significant digits, rounding half away from zero.
///
/// Moderate magnitudes use positional notation (`0.000123456789012`, `3.83600000000`),
/// everything else scientific (`1.23456789012e-70`).
pub fn to_decimal(x: &BigRational, digits: usize) -> String {
    assert!(digits >= 1);
    if x.is_zero() {
        return String::from("0");
    }
    let negative = x.is_negative();
    let num = x.numer().abs().to_biguint().expect("absolute value");
    let den = x.denom().abs().to_biguint().expect("absolute value");

    // exponent e with 10^e <= |x| < 10^(e+1)
    let ten = BigUint::from(10u32);
    let mut e = num.to_str_radix(10).len() as i64 - den.to_str_radix(10).len() as i64;
    let scaled_cmp = |e: i64| -> Ordering {
        // compare num / den with 10^e
        if e >= 0 {
            num.cmp(&(&den * ten.pow(e as u32)))
        } else {
            (&num * ten.pow((-e) as u32)).cmp(&den)
        }
    };
    while scaled_cmp(e) == Ordering::Less {
        e -= 1;
    }
    while scaled_cmp(e + 1) != Ordering::Less {
        e += 1;
    }

    // mantissa = round(|x| * 10^(digits - 1 - e))
    let shift = digits as i64 - 1 - e;
    let (mut top, bottom) = if shift >= 0 {
        (&num * ten.pow(shift as u32), den.clone())
    } else {
        (num.clone(), &den * ten.pow((-shift) as u32))
    };
    top = top * 2u32 + &bottom;
    let mut mantissa = top / (bottom * 2u32);
    if mantissa == ten.pow(digits as u32) {
        mantissa /= 10u32;
        e += 1;
    }
    let m = mantissa.to_str_radix(10);
    debug_assert_eq!(m.len(), digits);

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if (-5..12).contains(&e) {
        if e >= 0 {
            let int_len = e as usize + 1;
            if int_len >= digits {
                out.push_str(&m);
                out.extend(core::iter::repeat_n('0', int_len - digits));
            } else {
                out.push_str(&m[..int_len]);
                out.push('.');
                out.push_str(&m[int_len..]);
            }
        } else {
            out.push_str("0.");
            out.extend(core::iter::repeat_n('0', (-e - 1) as usize));
            out.push_str(&m);
        }
    } else {
        out.push_str(&m[..1]);
        if digits > 1 {
            out.push('.');
            out.push_str(&m[1..]);
        }
        out.push('e');
        out.push_str(&alloc::format!("{e}"));
    }
    out
}

/// Lossy conversion for display and plotting.
pub fn to_f64(x: &BigRational) -> f64 {
    to_decimal(x, 17).parse().unwrap_or(f64::NAN)
}
