//! Dense matrices over an exact field, Gaussian elimination and subspace
//! enumeration over prime fields.

use alloc::vec::Vec;

use super::field::{Field, PrimeField};

/// Row-major `rows x cols` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Self { rows, cols, data: alloc::vec![value; rows * cols] }
    }

    /// `None` if the rows are ragged or do not match `cols`.
    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Option<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        let n = rows.len();
        Some(Self { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}

impl<E: Clone> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, field.zero())
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn apply<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        debug_assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b))))
            .collect()
    }
}

/// Reduced row echelon form of a list of vectors; returns the nonzero rows
/// and their pivot columns.
pub fn rref<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>, width: usize) -> (Vec<Vec<F::Elem>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..width {
        let Some(found) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = field.inv(&rows[rank][col]).expect("pivot is nonzero");
        for x in rows[rank].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(x, &field.mul(&factor, p));
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    rref(field, m.to_rows(), m.cols()).1.len()
}

/// Every subspace of `F_p^dim`, each given by its RREF basis, in order of
/// increasing dimension.
pub fn enumerate_subspaces(field: &PrimeField, dim: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for k in 0..=dim {
        for pivots in combinations(dim, k) {
            // free slots: (row, col) with col > pivot of row and col not a pivot
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &pc)| (pc + 1..dim).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
                .collect();
            let q = field.order() as usize;
            let total = q.pow(free.len() as u32);
            for mut code in 0..total {
                let mut basis = alloc::vec![alloc::vec![0u32; dim]; k];
                for (r, &pc) in pivots.iter().enumerate() {
                    basis[r][pc] = 1;
                }
                for &(r, c) in &free {
                    basis[r][c] = (code % q) as u32;
                    code /= q;
                }
                out.push(basis);
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::field::Rationals;

    /// Gaussian binomial coefficient `[n choose k]_q`.
    fn gaussian_binomial(n: u64, k: u64, q: u64) -> u64 {
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..k {
            num *= q.pow((n - i) as u32) - 1;
            den *= q.pow((i + 1) as u32) - 1;
        }
        num / den
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        for q in [2u32, 3, 5] {
            let f = PrimeField::new(q).unwrap();
            for dim in 0..=3usize {
                let all = enumerate_subspaces(&f, dim);
                let expected: u64 = (0..=dim as u64).map(|k| gaussian_binomial(dim as u64, k, u64::from(q))).sum();
                assert_eq!(all.len() as u64, expected, "q={q} dim={dim}");
            }
        }
    }

    #[test]
    fn enumerated_bases_are_reduced_and_distinct() {
        let f = PrimeField::new(3).unwrap();
        let all = enumerate_subspaces(&f, 3);
        for basis in &all {
            let (reduced, _) = rref(&f, basis.clone(), 3);
            assert_eq!(&reduced, basis);
        }
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }

    #[test]
    fn rank_over_rationals_and_f2() {
        let qf = Rationals;
        let m = Matrix::from_rows(
            alloc::vec![alloc::vec![qf.from_i64(1), qf.from_i64(2)], alloc::vec![qf.from_i64(2), qf.from_i64(4)],],
            2,
        )
        .unwrap();
        assert_eq!(rank(&qf, &m), 1);
        let f2 = PrimeField::new(2).unwrap();
        let m = Matrix::from_rows(alloc::vec![alloc::vec![1, 1], alloc::vec![1, 0]], 2).unwrap();
        assert_eq!(rank(&f2, &m), 2);
        let m = Matrix::from_rows(alloc::vec![alloc::vec![1, 1], alloc::vec![1, 1]], 2).unwrap();
        assert_eq!(rank(&f2, &m), 1);
        assert_eq!(rank(&f2, &Matrix::identity(&f2, 3)), 3);
    }

    #[test]
    fn ragged_rows_are_rejected() {
        assert!(Matrix::from_rows(alloc::vec![alloc::vec![1u32], alloc::vec![1, 2]], 1).is_none());
    }
}
