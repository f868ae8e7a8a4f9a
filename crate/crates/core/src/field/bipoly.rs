use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{BinomialTable, FieldElement, Poly, PrimeField};
use crate::error::Result;

/// `(1, w)`-weighted degree of the monomial `X^i Y^j`.
///
/// With `w = k - 1` this is the degree of `X^i f(X)^j` for a message `f` of degree `k - 1`.
#[inline]
pub fn monomial_weighted_degree(i: usize, j: usize, w: usize) -> usize {
    i + j * w
}

/// Sparse bivariate polynomial `Σ c_ij X^i Y^j` over a prime field.
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    field: PrimeField,
    terms: BTreeMap<(usize, usize), u32>,
}

impl BiPoly {
    pub fn zero(field: PrimeField) -> Self {
        Self { field, terms: BTreeMap::new() }
    }

    /// Builds `Σ c X^i Y^j` from `((i, j), c)` triples; repeated monomials are summed.
    pub fn from_terms(field: PrimeField, terms: impl IntoIterator<Item = ((usize, usize), FieldElement)>) -> Result<Self> {
        let mut p = Self::zero(field);
        for ((i, j), c) in terms {
            field.check(&c.field())?;
            p.add_residue(i, j, c.value());
        }
        Ok(p)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> FieldElement {
        self.field.elem(u64::from(self.terms.get(&(i, j)).copied().unwrap_or(0)))
    }

    /// Nonzero terms as `((i, j), c)`, ordered by `(i, j)`.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), FieldElement)> + '_ {
        self.terms.iter().map(|(&ij, &c)| (ij, self.field.elem(u64::from(c))))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn add_residue(&mut self, i: usize, j: usize, c: u32) {
        if c == 0 {
            return;
        }
        let f = self.field;
        let entry = self.terms.entry((i, j)).or_insert(0);
        *entry = f.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&(i, j));
        }
    }

    /// Largest `(1, w)`-weighted degree of a nonzero term, `None` for the zero polynomial.
    pub fn weighted_degree(&self, w: usize) -> Option<usize> {
        self.terms.keys().map(|&(i, j)| monomial_weighted_degree(i, j, w)).max()
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn eval(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement> {
        self.hasse_derivative_at(0, 0, x, y)
    }

    /// Hasse derivative `D_{r,s} Q` evaluated at `(a, b)`:
    /// `Σ C(i, r) C(j, s) c_ij a^(i-r) b^(j-s)`.
    ///
    /// `Q` vanishes with multiplicity `m` at `(a, b)` iff this is zero for all `r + s < m`.
    pub fn hasse_derivative_at(&self, r: usize, s: usize, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.field.check(&a.field())?;
        self.field.check(&b.field())?;
        let f = self.field;
        let size = self.x_degree().unwrap_or(0).max(self.y_degree().unwrap_or(0));
        let binom = BinomialTable::new(f, size);
        let mut acc = 0;
        for (&(i, j), &c) in &self.terms {
            if i < r || j < s {
                continue;
            }
            let term = f.mul(
                f.mul(binom.get(i, r), binom.get(j, s)),
                f.mul(c, f.mul(f.pow(a.value(), (i - r) as u64), f.pow(b.value(), (j - s) as u64))),
            );
            acc = f.add(acc, term);
        }
        Ok(f.elem(u64::from(acc)))
    }

    /// The univariate polynomial `Q(X, g(X))`.
    pub fn compose_y(&self, g: &Poly) -> Result<Poly> {
        self.field.check(&g.field())?;
        let rows = self.to_rows();
        // Horner in Y: Q(X, g) = (...(q_L g + q_{L-1}) g + ...) g + q_0.
        let mut acc = Poly::zero(self.field);
        for row in rows.iter().rev() {
            acc = &(&acc * g) + &Poly::from_residues(self.field, row.clone());
        }
        Ok(acc)
    }

    /// Dense rows indexed by Y-degree, each holding X-coefficients lowest first.
    pub(crate) fn to_rows(&self) -> Vec<Vec<u32>> {
        let ydeg = match self.y_degree() {
            Some(d) => d,
            None => return Vec::new(),
        };
        let mut rows = vec![Vec::new(); ydeg + 1];
        for (&(i, j), &c) in &self.terms {
            let row = &mut rows[j];
            if row.len() <= i {
                row.resize(i + 1, 0);
            }
            row[i] = c;
        }
        rows
    }

    pub(crate) fn from_rows(field: PrimeField, rows: &[Vec<u32>]) -> Self {
        let mut p = Self::zero(field);
        for (j, row) in rows.iter().enumerate() {
            for (i, &c) in row.iter().enumerate() {
                p.add_residue(i, j, c);
            }
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn zero_terms_are_not_stored() {
        let f = gf7();
        let p = BiPoly::from_terms(f, [((1, 2), f.elem(3)), ((1, 2), f.elem(4)), ((0, 0), f.elem(0))]).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(p.weighted_degree(3), None);
    }

    #[test]
    fn weighted_degree_query() {
        let f = gf7();
        let p = BiPoly::from_terms(f, [((4, 0), f.one()), ((1, 2), f.one())]).unwrap();
        assert_eq!(monomial_weighted_degree(1, 2, 3), 7);
        assert_eq!(p.weighted_degree(3), Some(7));
        assert_eq!(p.weighted_degree(1), Some(4));
    }

    #[test]
    fn hasse_derivatives_detect_multiplicity() {
        // (Y - X)^2 vanishes to order 2 at every point on the diagonal.
        let f = gf7();
        let p = BiPoly::from_terms(
            f,
            [((0, 2), f.one()), ((1, 1), f.elem(5)), ((2, 0), f.one())],
        )
        .unwrap();
        let (a, b) = (f.elem(3), f.elem(3));
        for (r, s) in [(0, 0), (1, 0), (0, 1)] {
            assert!(p.hasse_derivative_at(r, s, a, b).unwrap().is_zero());
        }
        assert!(!p.hasse_derivative_at(0, 2, a, b).unwrap().is_zero());
    }

    #[test]
    fn compose_y_substitutes_polynomial() {
        // Q = Y - (1 + 2X) has Q(X, 1 + 2X) = 0.
        let f = gf7();
        let q = BiPoly::from_terms(f, [((0, 1), f.one()), ((0, 0), f.elem(6)), ((1, 0), f.elem(5))]).unwrap();
        let g = Poly::from_coeffs(f, &[1, 2]);
        assert!(q.compose_y(&g).unwrap().is_zero());
        assert_eq!(q.compose_y(&Poly::zero(f)).unwrap(), Poly::from_coeffs(f, &[6, 5]));
    }
}
