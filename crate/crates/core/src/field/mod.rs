//! Prime-field arithmetic and the univariate/bivariate polynomials built on it.

use alloc::vec;
use alloc::vec::Vec;

mod bipoly;
pub(crate) mod poly;
mod prime;

pub use bipoly::{monomial_weighted_degree, BiPoly};
pub use poly::{lagrange_interpolate, poly_eval, Poly};
pub use prime::{fe_inv, FieldElement, PrimeField};

/// Binomial coefficients `C(i, j) mod q` for `i <= size` and `j <= max_lower`,
/// built from Pascal's rule.
#[derive(Debug, Clone)]
pub(crate) struct BinomialTable {
    rows: Vec<Vec<u32>>,
}

impl BinomialTable {
    pub(crate) fn new(field: PrimeField, size: usize) -> Self {
        Self::with_lower_limit(field, size, size)
    }

    pub(crate) fn with_lower_limit(field: PrimeField, size: usize, max_lower: usize) -> Self {
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(size + 1);
        for i in 0..=size {
            let width = i.min(max_lower) + 1;
            let mut row = vec![0u32; width];
            row[0] = 1;
            for j in 1..width {
                let prev = &rows[i - 1];
                let left = prev[j - 1];
                let up = prev.get(j).copied().unwrap_or(0);
                row[j] = field.add(left, up);
            }
            rows.push(row);
        }
        Self { rows }
    }

    /// `C(i, j) mod q`; zero when `j > i`. Panics if `j` exceeds the lower limit.
    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> u32 {
        if j > i {
            0
        } else {
            self.rows[i][j]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_mod_prime() {
        let f = PrimeField::new(7).unwrap();
        let t = BinomialTable::new(f, 10);
        assert_eq!(t.get(5, 2), 3); // 10 mod 7
        assert_eq!(t.get(7, 3), 0); // 35 mod 7
        assert_eq!(t.get(3, 5), 0);
        let capped = BinomialTable::with_lower_limit(f, 10, 2);
        for i in 0..=10 {
            for j in 0..=2 {
                assert_eq!(capped.get(i, j), t.get(i, j));
            }
        }
    }
}
