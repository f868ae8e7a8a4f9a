use alloc::vec::Vec;

use super::DecodeOutcome;
use crate::code::{distance_residues, GrsCode, Word};
use crate::error::Result;
use crate::field::Poly;
use crate::linalg::nullspace_vector;

/// Berlekamp–Welch unique decoding up to `⌊(d - 1) / 2⌋` errors.
///
/// Solves the key equation `E(α_i) y_i / v_i = N(α_i)` with `deg E <= e` and
/// `deg N <= k - 1 + e`, then accepts `N / E` only if the division is exact and
/// the re-encoded codeword really lies within distance `e` of `y`.
pub fn bw_decode(code: &GrsCode, y: &Word) -> Result<DecodeOutcome> {
    code.check_word(y)?;
    let f = code.field();
    let (n, k) = (code.n(), code.k());
    let e = (code.d() - 1) / 2;
    let r = code.unscale(y);
    let alphas = code.alpha_residues();

    let e_len = e + 1;
    let n_len = k + e;
    let rows: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let a = alphas[i];
            let mut row = Vec::with_capacity(e_len + n_len);
            let mut pow = 1;
            let mut powers = Vec::with_capacity(n_len);
            for _ in 0..n_len.max(e_len) {
                powers.push(pow);
                pow = f.mul(pow, a);
            }
            row.extend(powers[..e_len].iter().map(|&p| f.mul(r[i], p)));
            row.extend(powers[..n_len].iter().map(|&p| f.neg(p)));
            row
        })
        .collect();

    let Some(sol) = nullspace_vector(f, rows, e_len + n_len) else {
        return Ok(DecodeOutcome::failure(e));
    };
    let locator = Poly::from_residues(f, sol[..e_len].to_vec());
    let numerator = Poly::from_residues(f, sol[e_len..].to_vec());
    if locator.is_zero() {
        return Ok(DecodeOutcome::failure(e));
    }
    let (msg, rem) = numerator.div_rem(&locator)?;
    if !rem.is_zero() || msg.degree() >= k as isize {
        return Ok(DecodeOutcome::failure(e));
    }
    let c = code.encode_unchecked(&msg);
    if distance_residues(c.residues(), y.residues()) > e {
        return Ok(DecodeOutcome::failure(e));
    }
    Ok(DecodeOutcome { polys: alloc::vec![msg], radius_used: e })
}
