use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use super::{FieldElement, PrimeField};
use crate::error::{Error, Result};

/// A univariate polynomial over a prime field, lowest-degree coefficient first.
///
/// Coefficients are kept normalized (no trailing zeros), so two polynomials are
/// equal exactly when their coefficient vectors are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn zero(field: PrimeField) -> Self {
        Self { field, coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::from_residues(c.field(), vec![c.value()])
    }

    /// The identity polynomial `X`.
    pub fn x(field: PrimeField) -> Self {
        Self::from_residues(field, vec![0, 1])
    }

    /// Builds a polynomial from residues, reducing each one modulo `q`.
    pub fn from_coeffs(field: PrimeField, coeffs: &[u64]) -> Self {
        Self::from_residues(field, coeffs.iter().map(|&c| field.elem(c).value()).collect())
    }

    pub fn from_elements(field: PrimeField, coeffs: &[FieldElement]) -> Result<Self> {
        let mut raw = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            field.check(&c.field())?;
            raw.push(c.value());
        }
        Ok(Self::from_residues(field, raw))
    }

    /// `coeffs` must already be reduced modulo `q`.
    pub(crate) fn from_residues(field: PrimeField, mut coeffs: Vec<u32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < field.order()));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient residues, lowest degree first, without trailing zeros.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient residues padded with zeros to exactly `len` entries.
    ///
    /// Panics if the polynomial has more than `len` coefficients.
    pub fn padded_coeffs(&self, len: usize) -> Vec<u32> {
        assert!(self.coeffs.len() <= len, "polynomial does not fit in {len} coefficients");
        let mut out = self.coeffs.clone();
        out.resize(len, 0);
        out
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field.elem(u64::from(self.coeffs.get(i).copied().unwrap_or(0)))
    }

    pub fn eval(&self, x: FieldElement) -> Result<FieldElement> {
        self.field.check(&x.field())?;
        Ok(self.field.elem(u64::from(self.eval_residue(x.value()))))
    }

    /// Horner evaluation at a reduced residue.
    #[inline]
    pub(crate) fn eval_residue(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        assert_eq!(self.field, c.field(), "arithmetic between elements of different fields");
        self.scale_residue(c.value())
    }

    pub(crate) fn scale_residue(&self, c: u32) -> Self {
        let f = self.field;
        Self::from_residues(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.field.check(&divisor.field)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = self.field;
        let mut rem = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        if rem.len() < dlen {
            return Ok((Poly::zero(f), self.clone()));
        }
        let lead_inv = f.inv(*divisor.coeffs.last().unwrap()).expect("normalized leading coefficient");
        let mut quot = vec![0u32; rem.len() - dlen + 1];
        for shift in (0..quot.len()).rev() {
            let top = rem[shift + dlen - 1];
            if top == 0 {
                continue;
            }
            let factor = f.mul(top, lead_inv);
            quot[shift] = factor;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, dc));
            }
        }
        Ok((Poly::from_residues(f, quot), Poly::from_residues(f, rem)))
    }

    fn same_field(&self, rhs: &Poly) -> PrimeField {
        assert_eq!(self.field, rhs.field, "arithmetic between polynomials over different fields");
        self.field
    }
}

/// Evaluates `f(x)` by Horner's rule.
pub fn poly_eval(f: &Poly, x: FieldElement) -> Result<FieldElement> {
    f.eval(x)
}

/// The unique polynomial of degree `< points.len()` through all `points`.
pub fn lagrange_interpolate(points: &[(FieldElement, FieldElement)]) -> Result<Poly> {
    let (first, _) = points.first().ok_or(Error::NoPoints)?;
    let field = first.field();
    let mut xs = Vec::with_capacity(points.len());
    let mut ys = Vec::with_capacity(points.len());
    for (x, y) in points {
        field.check(&x.field())?;
        field.check(&y.field())?;
        xs.push(x.value());
        ys.push(y.value());
    }
    interpolate_residues(field, &xs, &ys)
}

/// Newton-form interpolation on raw residues.
pub(crate) fn interpolate_residues(field: PrimeField, xs: &[u32], ys: &[u32]) -> Result<Poly> {
    if xs.is_empty() {
        return Err(Error::NoPoints);
    }
    let f = field;
    let n = xs.len();
    for i in 0..n {
        if xs[..i].contains(&xs[i]) {
            return Err(Error::DuplicateNode(xs[i]));
        }
    }
    // Divided differences in place.
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = f.sub(dd[i], dd[i - 1]);
            let den = f.sub(xs[i], xs[i - level]);
            dd[i] = f.mul(num, f.inv(den).expect("distinct nodes"));
        }
    }
    // Expand the Newton form from the innermost term outward.
    let mut acc = vec![dd[n - 1]];
    for i in (0..n - 1).rev() {
        // acc = acc * (X - xs[i]) + dd[i]
        let mut next = vec![0u32; acc.len() + 1];
        for (j, &a) in acc.iter().enumerate() {
            next[j + 1] = f.add(next[j + 1], a);
            next[j] = f.sub(next[j], f.mul(a, xs[i]));
        }
        next[0] = f.add(next[0], dd[i]);
        acc = next;
    }
    Ok(Poly::from_residues(f, acc))
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let f = self.same_field(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                f.add(a, b)
            })
            .collect();
        Poly::from_residues(f, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let f = self.same_field(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                f.sub(a, b)
            })
            .collect();
        Poly::from_residues(f, coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let f = self.same_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![0u32; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_residues(f, out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}X")?,
                _ => write!(f, "{c}X^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    #[test]
    fn eval_examples() {
        let f7 = gf(7);
        assert_eq!(poly_eval(&Poly::x(f7), f7.elem(4)).unwrap().value(), 4);
        assert_eq!(poly_eval(&Poly::constant(f7.elem(3)), f7.elem(6)).unwrap().value(), 3);
        let f = Poly::from_coeffs(f7, &[1, 2, 1]);
        assert_eq!(poly_eval(&f, f7.elem(3)).unwrap().value(), 2);
    }

    #[test]
    fn eval_rejects_foreign_point() {
        assert!(matches!(
            Poly::x(gf(7)).eval(gf(11).elem(1)),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn zero_polynomial_has_degree_minus_one() {
        let f7 = gf(7);
        assert_eq!(Poly::zero(f7).degree(), -1);
        assert_eq!(Poly::from_coeffs(f7, &[0, 0, 7]).degree(), -1);
        assert_eq!(Poly::from_coeffs(f7, &[3, 0, 0]).degree(), 0);
    }

    #[test]
    fn interpolation_examples() {
        let f7 = gf(7);
        let pts = |v: &[(u64, u64)]| v.iter().map(|&(x, y)| (f7.elem(x), f7.elem(y))).collect::<Vec<_>>();
        assert_eq!(lagrange_interpolate(&pts(&[(0, 5), (1, 5)])).unwrap(), Poly::constant(f7.elem(5)));
        assert_eq!(lagrange_interpolate(&pts(&[(0, 0), (1, 1), (2, 2)])).unwrap(), Poly::x(f7));

        let f5 = gf(5);
        let points: Vec<_> = [(0, 1), (1, 2), (2, 0)].iter().map(|&(x, y)| (f5.elem(x), f5.elem(y))).collect();
        let p = lagrange_interpolate(&points).unwrap();
        assert!(p.degree() < 3);
        for (x, y) in points {
            assert_eq!(p.eval(x).unwrap(), y);
        }
    }

    #[test]
    fn interpolation_errors() {
        let f7 = gf(7);
        assert_eq!(
            lagrange_interpolate(&[(f7.elem(2), f7.elem(1)), (f7.elem(2), f7.elem(3))]),
            Err(Error::DuplicateNode(2))
        );
        assert_eq!(lagrange_interpolate(&[]), Err(Error::NoPoints));
    }

    #[test]
    fn div_rem_reconstructs_dividend() {
        let f7 = gf(7);
        let a = Poly::from_coeffs(f7, &[3, 1, 4, 1, 5]);
        let b = Poly::from_coeffs(f7, &[2, 6, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree() < b.degree());
        assert_eq!(&(&q * &b) + &r, a);
        assert_eq!(a.div_rem(&Poly::zero(f7)), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_is_readable() {
        let f7 = gf(7);
        assert_eq!(alloc::format!("{}", Poly::from_coeffs(f7, &[1, 0, 3])), "1 + 3X^2");
        assert_eq!(alloc::format!("{}", Poly::zero(f7)), "0");
    }
}
