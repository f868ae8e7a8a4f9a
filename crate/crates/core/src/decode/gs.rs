//! Guruswami–Sudan list decoding.
//!
//! Interpolation finds a nonzero `Q(X, Y)` of bounded `(1, k - 1)`-weighted degree
//! vanishing with multiplicity `s` at every point `(α_i, y_i / v_i)`; the messages
//! within the decoding radius are then among the `Y`-roots of `Q`, which are
//! extracted with the Roth–Ruckenstein recursion.

use alloc::vec;
use alloc::vec::Vec;

use super::{decide_gs_params, gs_tau, DecodeOutcome, GsParams};
use crate::code::{GrsCode, Word};
use crate::error::{Error, Result};
use crate::field::{BiPoly, BinomialTable, Poly, PrimeField};
use crate::linalg::nullspace_vector;

/// How the interpolation polynomial is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Interpolator {
    /// Kötter's iterative algorithm over `F[X]`-modules.
    #[default]
    Kotter,
    /// Dense Gaussian elimination on the full linear system.
    Nullspace,
}

/// List-decodes `y` up to `tau` errors (`tau <= gs_tau(n, k)`).
///
/// The list holds every message within distance `tau`, and possibly further
/// `Y`-roots of the interpolation polynomial that lie farther away.
pub fn gs_decode(code: &GrsCode, y: &Word, tau: usize) -> Result<DecodeOutcome> {
    gs_decode_with(code, y, tau, Interpolator::default())
}

pub fn gs_decode_with(code: &GrsCode, y: &Word, tau: usize, interpolator: Interpolator) -> Result<DecodeOutcome> {
    code.check_word(y)?;
    let (n, k) = (code.n(), code.k());
    let max = gs_tau(n, k);
    if tau > max {
        return Err(Error::RadiusTooLarge { n, k, tau, max });
    }
    if k == 1 {
        return Ok(scan_constants(code, y, tau));
    }
    let params = decide_gs_params(n, k, tau)?;
    let q = gs_interpolate(code, y, params, interpolator)?;
    Ok(DecodeOutcome { polys: gs_roots(&q, k), radius_used: tau })
}

// For k = 1 the codewords are the q constant vectors, so a direct scan is exact.
fn scan_constants(code: &GrsCode, y: &Word, tau: usize) -> DecodeOutcome {
    let f = code.field();
    let r = code.unscale(y);
    let need = code.n() - tau;
    let polys = (0..f.order())
        .filter(|&c| r.iter().filter(|&&s| s == c).count() >= need)
        .map(|c| Poly::from_residues(f, vec![c]))
        .collect();
    DecodeOutcome { polys, radius_used: tau }
}

/// Builds the interpolation polynomial for `(α_i, y_i / v_i)` with the given parameters.
pub fn gs_interpolate(code: &GrsCode, y: &Word, params: GsParams, interpolator: Interpolator) -> Result<BiPoly> {
    code.check_word(y)?;
    if code.k() < 2 {
        return Err(Error::InvalidCode(alloc::format!("interpolation needs k >= 2, got {}", code.k())));
    }
    let points: Vec<(u32, u32)> = code.alpha_residues().iter().copied().zip(code.unscale(y)).collect();
    let weight = code.k() - 1;
    let rows = match interpolator {
        Interpolator::Kotter => kotter(code.field(), &points, params, weight),
        Interpolator::Nullspace => nullspace(code.field(), &points, params, weight),
    };
    Ok(BiPoly::from_rows(code.field(), &rows))
}

/// Dense bivariate polynomial: `rows[j]` holds the X-coefficients of `Y^j`.
type Rows = Vec<Vec<u32>>;

// Constraint order within one point: (r, u) with r ascending for each u, so the
// constraint (r - 1, u) always precedes (r, u). Multiplying by (X - a) then keeps
// every processed constraint satisfied.
fn constraint_order(s: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..s).flat_map(move |u| (0..s - u).map(move |r| (r, u)))
}

fn kotter(f: PrimeField, points: &[(u32, u32)], params: GsParams, weight: usize) -> Rows {
    let s = params.s as usize;
    let ymax = params.wdeg_cap / weight;
    let total = params.constraints(points.len());
    let xmax = total + 1;
    let binom = BinomialTable::with_lower_limit(f, xmax.max(ymax), s);

    let mut polys: Vec<Rows> = (0..=ymax)
        .map(|j| {
            let mut rows = vec![Vec::new(); j + 1];
            rows[j] = vec![1];
            rows
        })
        .collect();
    // Weighted degree of the leading monomial of each g_j; its Y-degree is always j.
    let mut wdeg: Vec<usize> = (0..=ymax).map(|j| j * weight).collect();
    let mut deltas = vec![0u32; ymax + 1];

    let mut apow = vec![1u32; xmax + 1];
    let mut bpow = vec![1u32; ymax + 1];
    for &(a, b) in points {
        for i in 1..apow.len() {
            apow[i] = f.mul(apow[i - 1], a);
        }
        for j in 1..bpow.len() {
            bpow[j] = f.mul(bpow[j - 1], b);
        }
        for (r, u) in constraint_order(s) {
            for (delta, g) in deltas.iter_mut().zip(&polys) {
                *delta = hasse_dense(f, g, r, u, &apow, &bpow, &binom);
            }
            let Some(star) = (0..=ymax).filter(|&j| deltas[j] != 0).min_by_key(|&j| (wdeg[j], j)) else {
                continue;
            };
            let inv = f.inv(deltas[star]).expect("nonzero discrepancy");
            let pivot = core::mem::take(&mut polys[star]);
            for j in 0..=ymax {
                if j == star || deltas[j] == 0 {
                    continue;
                }
                let factor = f.mul(deltas[j], inv);
                sub_scaled(f, &mut polys[j], &pivot, factor);
            }
            polys[star] = times_x_minus(f, pivot, a);
            wdeg[star] += 1;
        }
    }
    let best = (0..=ymax).min_by_key(|&j| (wdeg[j], j)).expect("at least one candidate");
    debug_assert!(wdeg[best] <= params.wdeg_cap, "interpolation exceeded the weighted degree bound");
    polys.swap_remove(best)
}

fn hasse_dense(f: PrimeField, g: &Rows, r: usize, u: usize, apow: &[u32], bpow: &[u32], binom: &BinomialTable) -> u32 {
    let mut acc = 0;
    for (j, row) in g.iter().enumerate().skip(u) {
        let cy = binom.get(j, u);
        if cy == 0 || row.len() <= r {
            continue;
        }
        let mut inner = 0;
        for (i, &c) in row.iter().enumerate().skip(r) {
            if c != 0 {
                inner = f.add(inner, f.mul(f.mul(binom.get(i, r), c), apow[i - r]));
            }
        }
        acc = f.add(acc, f.mul(f.mul(cy, bpow[j - u]), inner));
    }
    acc
}

// target -= factor * src
fn sub_scaled(f: PrimeField, target: &mut Rows, src: &Rows, factor: u32) {
    if target.len() < src.len() {
        target.resize(src.len(), Vec::new());
    }
    for (trow, srow) in target.iter_mut().zip(src) {
        if trow.len() < srow.len() {
            trow.resize(srow.len(), 0);
        }
        for (t, &s) in trow.iter_mut().zip(srow) {
            if s != 0 {
                *t = f.sub(*t, f.mul(factor, s));
            }
        }
    }
}

fn times_x_minus(f: PrimeField, g: Rows, a: u32) -> Rows {
    g.into_iter()
        .map(|row| {
            if row.is_empty() {
                return row;
            }
            let mut out = vec![0u32; row.len() + 1];
            for (i, &c) in row.iter().enumerate() {
                out[i + 1] = f.add(out[i + 1], c);
                out[i] = f.sub(out[i], f.mul(a, c));
            }
            out
        })
        .collect()
}

fn nullspace(f: PrimeField, points: &[(u32, u32)], params: GsParams, weight: usize) -> Rows {
    let s = params.s as usize;
    let cap = params.wdeg_cap;
    let monomials: Vec<(usize, usize)> = (0..=cap / weight)
        .flat_map(|j| (0..=cap - j * weight).map(move |i| (i, j)))
        .collect();
    let binom = BinomialTable::with_lower_limit(f, cap, s);
    let mut rows = Vec::with_capacity(params.constraints(points.len()));
    for &(a, b) in points {
        for (r, u) in constraint_order(s) {
            rows.push(
                monomials
                    .iter()
                    .map(|&(i, j)| {
                        if i < r || j < u {
                            return 0;
                        }
                        let c = f.mul(binom.get(i, r), binom.get(j, u));
                        f.mul(c, f.mul(f.pow(a, (i - r) as u64), f.pow(b, (j - u) as u64)))
                    })
                    .collect(),
            );
        }
    }
    let sol = nullspace_vector(f, rows, monomials.len()).expect("more unknowns than constraints");
    let mut out: Rows = vec![Vec::new(); cap / weight + 1];
    for (&(i, j), &c) in monomials.iter().zip(&sol) {
        if c != 0 {
            if out[j].len() <= i {
                out[j].resize(i + 1, 0);
            }
            out[j][i] = c;
        }
    }
    out
}

/// All polynomials `f` with `deg f < k` and `Q(X, f(X)) = 0`, sorted by coefficient vector.
pub fn gs_roots(q: &BiPoly, k: usize) -> Vec<Poly> {
    let f = q.field();
    if q.is_zero() || k == 0 {
        return Vec::new();
    }
    let rows = strip_x_power(trim(q.to_rows()));
    let ymax = rows.len() - 1;
    let binom = BinomialTable::new(f, ymax);
    let mut found: Vec<Vec<u32>> = Vec::new();
    let mut prefix = Vec::with_capacity(k);
    roth_ruckenstein(f, rows, k, &binom, &mut prefix, &mut found);
    found.sort();
    found.dedup();
    found
        .into_iter()
        .map(|c| Poly::from_residues(f, c))
        .filter(|p| q.compose_y(p).map(|v| v.is_zero()).unwrap_or(false))
        .collect()
}

fn roth_ruckenstein(f: PrimeField, rows: Rows, k: usize, binom: &BinomialTable, prefix: &mut Vec<u32>, found: &mut Vec<Vec<u32>>) {
    // Y divides the current polynomial: the prefix, padded with zeros, is a root.
    if rows[0].iter().all(|&c| c == 0) {
        let mut cand = prefix.clone();
        cand.resize(k, 0);
        found.push(cand);
    }
    if prefix.len() == k {
        return;
    }
    let at_zero: Vec<u32> = rows.iter().map(|row| row.first().copied().unwrap_or(0)).collect();
    for gamma in 0..f.order() {
        if eval_univariate(f, &at_zero, gamma) != 0 {
            continue;
        }
        let next = strip_x_power(shift_substitute(f, &rows, gamma, binom));
        prefix.push(gamma);
        roth_ruckenstein(f, next, k, binom, prefix, found);
        prefix.pop();
    }
}

fn eval_univariate(f: PrimeField, coeffs: &[u32], x: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

// Q(X, XY + γ): the coefficient of Y^l is X^l Σ_{j >= l} C(j, l) γ^(j - l) q_j(X).
fn shift_substitute(f: PrimeField, rows: &Rows, gamma: u32, binom: &BinomialTable) -> Rows {
    let ymax = rows.len() - 1;
    let mut gpow = vec![1u32; ymax + 1];
    for i in 1..=ymax {
        gpow[i] = f.mul(gpow[i - 1], gamma);
    }
    let mut out: Rows = Vec::with_capacity(ymax + 1);
    for l in 0..=ymax {
        let width = rows[l..].iter().map(Vec::len).max().unwrap_or(0);
        let mut h = vec![0u32; l + width];
        for (j, row) in rows.iter().enumerate().skip(l) {
            let c = f.mul(binom.get(j, l), gpow[j - l]);
            if c == 0 {
                continue;
            }
            for (i, &v) in row.iter().enumerate() {
                if v != 0 {
                    h[l + i] = f.add(h[l + i], f.mul(c, v));
                }
            }
        }
        out.push(h);
    }
    trim(out)
}

fn trim(mut rows: Rows) -> Rows {
    for row in rows.iter_mut() {
        while row.last() == Some(&0) {
            row.pop();
        }
    }
    while rows.len() > 1 && rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    rows
}

// Divides by the largest power of X dividing every row.
fn strip_x_power(rows: Rows) -> Rows {
    let m = rows
        .iter()
        .filter_map(|row| row.iter().position(|&c| c != 0))
        .min()
        .unwrap_or(0);
    if m == 0 {
        return rows;
    }
    rows.into_iter()
        .map(|row| if row.len() > m { row[m..].to_vec() } else { Vec::new() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    #[test]
    fn repetition_code_scan() {
        let f7 = gf(7);
        let code = GrsCode::with_defaults(f7, 6, 1).unwrap();
        let y = Word::from_residues(f7, &[1, 1, 2, 3, 4, 5]).unwrap();
        let out = gs_decode(&code, &y, 5).unwrap();
        let consts: Vec<u32> = out.polys.iter().map(|p| p.coeff(0).value()).collect();
        assert_eq!(consts, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn clean_codeword_is_in_list() {
        let f7 = gf(7);
        let code = GrsCode::with_defaults(f7, 6, 2).unwrap();
        let msg = Poly::from_coeffs(f7, &[4, 3]);
        let out = gs_decode(&code, &code.encode(&msg).unwrap(), 3).unwrap();
        assert!(out.polys.contains(&msg));
        assert_eq!(out.radius_used, 3);
    }

    #[test]
    fn interpolation_polynomial_has_required_multiplicity() {
        let f11 = gf(11);
        let code = GrsCode::with_defaults(f11, 10, 3).unwrap();
        let y = Word::from_residues(f11, &[3, 1, 4, 1, 5, 9, 2, 6, 5, 3]).unwrap();
        let params = decide_gs_params(10, 3, gs_tau(10, 3)).unwrap();
        for interp in [Interpolator::Kotter, Interpolator::Nullspace] {
            let q = gs_interpolate(&code, &y, params, interp).unwrap();
            assert!(!q.is_zero());
            assert!(q.weighted_degree(2).unwrap() <= params.wdeg_cap);
            for (a, b) in code.alphas().zip((0..10).map(|i| y.symbol(i))) {
                for r in 0..params.s as usize {
                    for u in 0..params.s as usize - r {
                        assert!(q.hasse_derivative_at(r, u, a, b).unwrap().is_zero(), "{interp:?} ({r},{u})");
                    }
                }
            }
        }
    }

    #[test]
    fn roots_of_product_of_linear_factors() {
        // Q = (Y - (1 + 2X)) (Y - 3X^2) (Y - 5)
        let f7 = gf(7);
        let roots = [Poly::from_coeffs(f7, &[1, 2]), Poly::from_coeffs(f7, &[0, 0, 3]), Poly::from_coeffs(f7, &[5])];
        let mut q = BiPoly::from_terms(f7, [((0, 0), f7.one())]).unwrap();
        for r in &roots {
            q = mul_linear(&q, r);
        }
        let mut expected = roots.to_vec();
        expected.sort_by_key(|a| a.padded_coeffs(3));
        assert_eq!(gs_roots(&q, 3), expected);
        // With k = 2 the quadratic root is out of range.
        assert_eq!(gs_roots(&q, 2).len(), 2);
    }

    // q * (Y - r(X))
    fn mul_linear(q: &BiPoly, r: &Poly) -> BiPoly {
        let f = q.field();
        let mut terms = Vec::new();
        for ((i, j), c) in q.terms() {
            terms.push(((i, j + 1), c));
            for (d, &rc) in r.coeffs().iter().enumerate() {
                terms.push(((i + d, j), -(c * f.elem(u64::from(rc)))));
            }
        }
        BiPoly::from_terms(f, terms).unwrap()
    }

    #[test]
    fn radius_beyond_gs_is_rejected() {
        let f7 = gf(7);
        let code = GrsCode::with_defaults(f7, 6, 2).unwrap();
        let y = Word::from_residues(f7, &[0; 6]).unwrap();
        assert!(matches!(gs_decode(&code, &y, 4), Err(Error::RadiusTooLarge { max: 3, .. })));
    }
}
