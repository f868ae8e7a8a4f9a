//! Dense linear algebra over a prime field.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::PrimeField;

/// A nonzero vector `x` with `A x = 0`, or `None` if `A` has full column rank.
///
/// `rows` is consumed and reduced in place. Free variables other than the chosen
/// one are set to zero, so the result is deterministic.
pub(crate) fn nullspace_vector(field: PrimeField, mut rows: Vec<Vec<u32>>, ncols: usize) -> Option<Vec<u32>> {
    let f = field;
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = f.inv(rows[rank][col]).expect("nonzero pivot");
        for x in &mut rows[rank][col..ncols] {
            *x = f.mul(*x, inv);
        }
        let (above, rest) = rows.split_at_mut(rank);
        let (pivot, below) = rest.split_first_mut().expect("pivot row");
        for row in above.iter_mut().chain(below.iter_mut()) {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for c in col..ncols {
                if pivot[c] != 0 {
                    row[c] = f.sub(row[c], f.mul(factor, pivot[c]));
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    let free = (0..ncols).find(|c| !pivot_cols.contains(c))?;
    let mut x = vec![0u32; ncols];
    x[free] = 1;
    for (r, &pc) in pivot_cols.iter().enumerate() {
        // pivot variable = -(row[free]) since the row is in reduced form.
        x[pc] = f.neg(rows[r][free]);
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn apply(f: PrimeField, rows: &[Vec<u32>], x: &[u32]) -> Vec<u32> {
        rows.iter()
            .map(|row| row.iter().zip(x).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect()
    }

    #[test]
    fn finds_kernel_of_wide_matrix() {
        let f = PrimeField::new(7).unwrap();
        let rows = vec![vec![1, 2, 3, 4], vec![2, 4, 6, 1], vec![0, 1, 5, 5]];
        let x = nullspace_vector(f, rows.clone(), 4).unwrap();
        assert!(x.iter().any(|&v| v != 0));
        assert!(apply(f, &rows, &x).iter().all(|&v| v == 0));
    }

    #[test]
    fn full_rank_square_has_trivial_kernel() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(nullspace_vector(f, vec![vec![1, 0], vec![0, 1]], 2), None);
    }

    #[test]
    fn rank_deficient_square_has_kernel() {
        let f = PrimeField::new(5).unwrap();
        let rows = vec![vec![1, 2], vec![2, 4]];
        let x = nullspace_vector(f, rows.clone(), 2).unwrap();
        assert_eq!(apply(f, &rows, &x), vec![0, 0]);
    }
}
