//! Generalized Reed–Solomon codes, words of the ambient space, and the Hamming metric.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, Poly, PrimeField};

/// Largest message space `nearest_codeword_bruteforce` will enumerate.
pub const BRUTEFORCE_BUDGET: u64 = 100_000_000;

/// An `[n, k, n - k + 1]_q` GRS code: `f ↦ (v_1 f(α_1), …, v_n f(α_n))` for `deg f < k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrsCode {
    field: PrimeField,
    k: usize,
    alphas: Vec<u32>,
    vs: Vec<u32>,
    // Residues of 1 / v_i, cached for the GRS -> RS reduction.
    vs_inv: Vec<u32>,
}

impl GrsCode {
    /// Builds a GRS code from explicit evaluation points and column multipliers.
    pub fn new(field: PrimeField, k: usize, alphas: &[FieldElement], vs: &[FieldElement]) -> Result<Self> {
        let n = alphas.len();
        if vs.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: vs.len() });
        }
        let mut a = Vec::with_capacity(n);
        for (i, x) in alphas.iter().enumerate() {
            field.check(&x.field())?;
            if a.contains(&x.value()) {
                return Err(Error::InvalidCode(format!("evaluation point {} repeated at position {}", x, i + 1)));
            }
            a.push(x.value());
        }
        let mut v = Vec::with_capacity(n);
        for (i, x) in vs.iter().enumerate() {
            field.check(&x.field())?;
            if x.is_zero() {
                return Err(Error::InvalidCode(format!("column multiplier at position {} is zero", i + 1)));
            }
            v.push(x.value());
        }
        Self::from_residues(field, k, a, v)
    }

    /// The code with `α_i = i - 1` and `v_i = 1`, i.e. plain RS on the first `n` field elements.
    pub fn with_defaults(field: PrimeField, n: usize, k: usize) -> Result<Self> {
        if n as u64 > u64::from(field.order()) {
            return Err(Error::InvalidCode(format!("n = {n} exceeds q = {}", field.order())));
        }
        Self::from_residues(field, k, (0..n as u32).collect(), vec![1; n])
    }

    fn from_residues(field: PrimeField, k: usize, alphas: Vec<u32>, vs: Vec<u32>) -> Result<Self> {
        let n = alphas.len();
        if k < 1 || k > n {
            return Err(Error::InvalidCode(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
        }
        if n as u64 > u64::from(field.order()) {
            return Err(Error::InvalidCode(format!("n = {n} exceeds q = {}", field.order())));
        }
        let vs_inv = vs.iter().map(|&v| field.inv(v).expect("nonzero multiplier")).collect();
        Ok(Self { field, k, alphas, vs, vs_inv })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Minimum distance `n - k + 1`.
    pub fn d(&self) -> usize {
        self.n() - self.k + 1
    }

    pub fn alphas(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.alphas.iter().map(|&a| self.field.elem(u64::from(a)))
    }

    pub fn vs(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.vs.iter().map(|&v| self.field.elem(u64::from(v)))
    }

    pub(crate) fn alpha_residues(&self) -> &[u32] {
        &self.alphas
    }

    pub fn encode(&self, f: &Poly) -> Result<Word> {
        self.field.check(&f.field())?;
        if f.degree() >= self.k as isize {
            return Err(Error::MessageTooLong { degree: f.degree() as usize, k: self.k });
        }
        Ok(self.encode_unchecked(f))
    }

    pub(crate) fn encode_unchecked(&self, f: &Poly) -> Word {
        let fld = self.field;
        let symbols = self
            .alphas
            .iter()
            .zip(&self.vs)
            .map(|(&a, &v)| fld.mul(v, f.eval_residue(a)))
            .collect();
        Word { field: fld, symbols }
    }

    /// Drops the last coordinate, giving an `[n - 1, k, d - 1]` GRS code.
    pub fn puncture_last(&self) -> Result<GrsCode> {
        let n = self.n();
        if n <= self.k {
            return Err(Error::CannotPuncture { n, k: self.k });
        }
        Ok(GrsCode {
            field: self.field,
            k: self.k,
            alphas: self.alphas[..n - 1].to_vec(),
            vs: self.vs[..n - 1].to_vec(),
            vs_inv: self.vs_inv[..n - 1].to_vec(),
        })
    }

    /// `y_i / v_i`: maps a word of this code's ambient space to the RS setting.
    pub(crate) fn unscale(&self, y: &Word) -> Vec<u32> {
        y.symbols.iter().zip(&self.vs_inv).map(|(&s, &vi)| self.field.mul(s, vi)).collect()
    }

    pub(crate) fn check_word(&self, y: &Word) -> Result<()> {
        self.field.check(&y.field)?;
        if y.len() != self.n() {
            return Err(Error::LengthMismatch { expected: self.n(), found: y.len() });
        }
        Ok(())
    }
}

impl fmt::Display for GrsCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]_{}", self.n(), self.k, self.d(), self.field.order())
    }
}

/// A vector of the ambient space `GF(q)^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    field: PrimeField,
    symbols: Vec<u32>,
}

impl Word {
    /// Builds a word from residues, rejecting values `>= q`.
    pub fn from_residues(field: PrimeField, symbols: &[u64]) -> Result<Self> {
        let symbols = symbols.iter().map(|&s| field.try_elem(s).map(|e| e.value())).collect::<Result<_>>()?;
        Ok(Self { field, symbols })
    }

    pub fn from_elements(field: PrimeField, symbols: &[FieldElement]) -> Result<Self> {
        let mut out = Vec::with_capacity(symbols.len());
        for s in symbols {
            field.check(&s.field())?;
            out.push(s.value());
        }
        Ok(Self { field, symbols: out })
    }

    #[cfg(test)]
    pub(crate) fn from_raw(field: PrimeField, symbols: Vec<u32>) -> Self {
        Self { field, symbols }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, i: usize) -> FieldElement {
        self.field.elem(u64::from(self.symbols[i]))
    }

    pub fn residues(&self) -> &[u32] {
        &self.symbols
    }

    /// The prefix `y[1..len]`.
    pub fn truncated(&self, len: usize) -> Word {
        Word { field: self.field, symbols: self.symbols[..len.min(self.len())].to_vec() }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

pub fn hamming_distance(a: &Word, b: &Word) -> Result<usize> {
    a.field.check(&b.field)?;
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), found: b.len() });
    }
    Ok(distance_residues(&a.symbols, &b.symbols))
}

#[inline]
pub(crate) fn distance_residues(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Exhaustive nearest-codeword (MAP) search over all `q^k` messages.
///
/// Among equidistant minimizers the lexicographically smallest coefficient
/// vector `(f_0, f_1, …, f_{k-1})` wins.
pub fn nearest_codeword_bruteforce(code: &GrsCode, y: &Word) -> Result<(Poly, usize)> {
    code.check_word(y)?;
    let q = code.field.order();
    let k = code.k;
    let space = u64::from(q).checked_pow(k as u32).filter(|&s| s <= BRUTEFORCE_BUDGET);
    if space.is_none() {
        return Err(Error::BudgetExceeded { q, k, budget: BRUTEFORCE_BUDGET });
    }
    let f = code.field;
    let n = code.n();
    // basis[j][i] = v_i * α_i^j, so a codeword is Σ_j f_j basis[j].
    let basis: Vec<Vec<u32>> = (0..k)
        .map(|j| {
            code.alphas
                .iter()
                .zip(&code.vs)
                .map(|(&a, &v)| f.mul(v, f.pow(a, j as u64)))
                .collect()
        })
        .collect();
    let mut search = MapSearch {
        field: f,
        basis: &basis,
        target: &y.symbols,
        coeffs: vec![0; k],
        best: vec![0; k],
        best_dist: usize::MAX,
    };
    search.descend(0, vec![0; n]);
    Ok((Poly::from_residues(f, search.best), search.best_dist))
}

struct MapSearch<'a> {
    field: PrimeField,
    basis: &'a [Vec<u32>],
    target: &'a [u32],
    coeffs: Vec<u32>,
    best: Vec<u32>,
    best_dist: usize,
}

impl MapSearch<'_> {
    // Visits messages in lexicographic order of (f_0, …, f_{k-1}), so the first
    // minimizer found is the lexicographically smallest one.
    fn descend(&mut self, j: usize, partial: Vec<u32>) {
        if j == self.basis.len() {
            let dist = distance_residues(&partial, self.target);
            if dist < self.best_dist {
                self.best_dist = dist;
                self.best.clone_from(&self.coeffs);
            }
            return;
        }
        let f = self.field;
        let mut cur = partial;
        for c in 0..f.order() {
            self.coeffs[j] = c;
            self.descend(j + 1, cur.clone());
            if self.best_dist == 0 {
                return;
            }
            for (s, &b) in cur.iter_mut().zip(&self.basis[j]) {
                *s = f.add(*s, b);
            }
        }
        self.coeffs[j] = 0;
    }
}
