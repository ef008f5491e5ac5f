//! Dense exact rational matrices, just large enough for the linear algebra
//! here (dimension <= 66 systems over so_12).

use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigRational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = QMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c) + a * b;
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> QMatrix {
        let mut out = QMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn commutator(&self, other: &QMatrix) -> QMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace_product(&self, other: &QMatrix) -> BigRational {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.rows, other.cols);
        let mut acc = BigRational::zero();
        for r in 0..self.rows {
            for k in 0..self.cols {
                acc += self.get(r, k) * other.get(k, r);
            }
        }
        acc
    }

    pub fn is_diagonal(&self) -> bool {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if r != c && !self.get(r, c).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn diagonal(&self) -> Vec<BigRational> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = QMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                swap_rows(&mut a, pivot, col);
                swap_rows(&mut inv, pivot, col);
            }
            let p = a.get(col, col).clone();
            let pinv = p.recip();
            scale_row(&mut a, col, &pinv);
            scale_row(&mut inv, col, &pinv);
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                axpy_row(&mut a, r, col, &f);
                axpy_row(&mut inv, r, col, &f);
            }
        }
        Some(inv)
    }
}

// row_r -= f * row_src
fn axpy_row(m: &mut QMatrix, r: usize, src: usize, f: &BigRational) {
    for c in 0..m.cols {
        let v = m.get(r, c) - f * m.get(src, c);
        m.set(r, c, v);
    }
}

fn scale_row(m: &mut QMatrix, r: usize, f: &BigRational) {
    for c in 0..m.cols {
        let v = m.get(r, c) * f;
        m.set(r, c, v);
    }
}

fn swap_rows(m: &mut QMatrix, r1: usize, r2: usize) {
    for c in 0..m.cols {
        let a = m.get(r1, c).clone();
        let b = m.get(r2, c).clone();
        m.set(r1, c, b);
        m.set(r2, c, a);
    }
}

/// Basis of the nullspace of `m` (viewed as a linear map on column
/// vectors), via exact reduced row echelon form. Deterministic: free
/// columns are processed in increasing order.
pub fn nullspace(m: &QMatrix) -> Vec<Vec<BigRational>> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut rank = 0usize;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| !a.get(r, col).is_zero());
        let Some(p) = pivot else { continue };
        if p != rank {
            swap_rows(&mut a, p, rank);
        }
        let inv = a.get(rank, col).clone().recip();
        scale_row(&mut a, rank, &inv);
        for r in 0..rows {
            if r != rank && !a.get(r, col).is_zero() {
                let f = a.get(r, col).clone();
                axpy_row(&mut a, r, rank, &f);
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    // handle remaining columns once rank == rows (all are free)
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (col, piv) in pivot_of_col.iter().enumerate() {
            if let Some(r) = piv {
                v[col] = -a.get(*r, free).clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Rank of a list of row vectors, by exact elimination.
pub fn row_rank(rows: &[Vec<BigRational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut work: Vec<Vec<BigRational>> = rows.to_vec();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(p) = (rank..work.len()).find(|&r| !work[r][col].is_zero()) else { continue };
        work.swap(p, rank);
        let inv = work[rank][col].clone().recip();
        for x in work[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..work.len() {
            if r != rank && !work[r][col].is_zero() {
                let f = work[r][col].clone();
                for c in 0..cols {
                    let v = &work[r][c] - &f * &work[rank][c];
                    work[r][c] = v;
                }
            }
        }
        rank += 1;
        if rank == work.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_int;

    #[test]
    fn inverse_roundtrip() {
        let mut m = QMatrix::zero(3, 3);
        m.set(0, 0, rat_int(2));
        m.set(0, 1, rat_int(1));
        m.set(1, 1, rat_int(1));
        m.set(1, 2, rat_int(3));
        m.set(2, 0, rat_int(1));
        m.set(2, 2, rat_int(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMatrix::identity(3));
    }

    #[test]
    fn nullspace_of_rank_one() {
        // [1 1 1] has a 2-dimensional kernel
        let mut m = QMatrix::zero(1, 3);
        for c in 0..3 {
            m.set(0, c, rat_int(1));
        }
        let ker = nullspace(&m);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            let s: BigRational = v.iter().cloned().sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn row_rank_counts_independent_rows() {
        let rows = vec![
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(2), rat_int(0)],
            vec![rat_int(0), rat_int(5)],
        ];
        assert_eq!(row_rank(&rows), 2);
    }
}
