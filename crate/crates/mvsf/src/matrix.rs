//! Dense matrices over exact rationals.
//!
//! Sizes here are tiny ((ell+1) x (ell+1), ell <= ~10), so a dense row-major
//! `Vec<Rat>` with straightforward O(n^3) kernels is the right tool. All
//! operations are exact; there is no pivot-magnitude heuristics, only
//! zero/nonzero pivoting.

use crate::rat::{rat, Rat};
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Index, IndexMut};

/// Dense matrix with `Rat` entries, row-major storage.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Builds an `n x n` matrix entry by entry from `f(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = QMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn diagonal(entries: &[Rat]) -> Self {
        let n = entries.len();
        let mut m = QMatrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = self.clone();
        for x in &mut out.data {
            *x *= c;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x += y;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x -= y;
        }
        out
    }

    /// `self + c I`.
    pub fn add_scalar(&self, c: &Rat) -> Self {
        assert!(self.is_square());
        let mut out = self.clone();
        for i in 0..self.rows {
            out[(i, i)] += c;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other[(k, j)].is_zero() {
                        continue;
                    }
                    let prod = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc += &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Exact inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = QMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] /= &p;
                inv[(col, j)] /= &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for j in 0..n {
                    let t = &factor * &a[(col, j)];
                    a[(r, j)] -= t;
                    let t = &factor * &inv[(col, j)];
                    inv[(r, j)] -= t;
                }
            }
        }
        Some(inv)
    }

    /// Exact determinant by fraction-full Gaussian elimination.
    pub fn determinant(&self) -> Rat {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !a[(r, col)].is_zero()) {
                Some(p) => p,
                None => return Rat::zero(),
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            det *= &a[(col, col)];
            let p = a[(col, col)].clone();
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] / &p;
                for j in col..n {
                    let t = &factor * &a[(col, j)];
                    a[(r, j)] -= t;
                }
            }
        }
        det
    }

    /// Rank by exact row reduction.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            let pivot = match (rank..a.rows).find(|&r| !a[(r, col)].is_zero()) {
                Some(p) => p,
                None => continue,
            };
            a.swap_rows(pivot, rank);
            let p = a[(rank, col)].clone();
            for r in 0..a.rows {
                if r == rank || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] / &p;
                for j in col..a.cols {
                    let t = &factor * &a[(rank, j)];
                    a[(r, j)] -= t;
                }
            }
            rank += 1;
            if rank == a.rows {
                break;
            }
        }
        rank
    }

    /// Basis of the right nullspace `{x : A x = 0}`, one `Vec<Rat>` per basis
    /// vector. Free variables are set to one in turn.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let mut a = self.clone();
        let n = a.cols;
        let mut pivot_col_of_row: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let pivot = match (row..a.rows).find(|&r| !a[(r, col)].is_zero()) {
                Some(p) => p,
                None => continue,
            };
            a.swap_rows(pivot, row);
            let p = a[(row, col)].clone();
            for j in col..n {
                a[(row, j)] /= &p;
            }
            for r in 0..a.rows {
                if r == row || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for j in col..n {
                    let t = &factor * &a[(row, j)];
                    a[(r, j)] -= t;
                }
            }
            pivot_col_of_row.push(col);
            row += 1;
            if row == a.rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
        let is_pivot = |c: usize| pivot_cols.contains(&c);
        let mut basis = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot(c)) {
            let mut v = vec![Rat::zero(); n];
            v[free] = Rat::one();
            for (r, &pc) in pivot_col_of_row.iter().enumerate() {
                v[pc] = -a[(r, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Largest absolute value among the entries.
    pub fn max_abs(&self) -> Rat {
        let mut best = Rat::zero();
        for x in &self.data {
            let a = x.abs();
            if a > best {
                best = a;
            }
        }
        best
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| crate::rat::rat_str(&self[(i, j)]))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Characteristic polynomial `det(x I - M)` by the Faddeev-LeVerrier
/// recurrence, coefficients in ascending degree order.
pub fn char_poly(m: &QMatrix) -> Vec<Rat> {
    assert!(m.is_square());
    let n = m.rows();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut aux = QMatrix::identity(n);
    for k in 1..=n {
        let prod = m.mul(&aux);
        let c = -prod.trace() / rat(k as i64);
        coeffs[n - k] = c.clone();
        aux = prod.add_scalar(&c);
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::frac;

    fn m2(a: i64, b: i64, c: i64, d: i64) -> QMatrix {
        QMatrix::from_fn(2, 2, |i, j| rat([[a, b], [c, d]][i][j]))
    }

    #[test]
    fn inverse_round_trip() {
        let m = m2(2, 1, 7, 4);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMatrix::identity(2));
        assert_eq!(inv[(0, 0)], rat(4));
        assert!(m2(1, 2, 2, 4).inverse().is_none());
    }

    #[test]
    fn determinant_and_rank() {
        assert_eq!(m2(2, 1, 7, 4).determinant(), rat(1));
        assert_eq!(m2(1, 2, 2, 4).determinant(), rat(0));
        assert_eq!(m2(1, 2, 2, 4).rank(), 1);
        let m = QMatrix::from_fn(3, 3, |i, j| frac((i + 2 * j + 1) as i64, (i + j + 1) as i64));
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = m2(1, 2, 2, 4);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn char_poly_matches_trace_and_det() {
        let m = m2(2, 1, 7, 4);
        // x^2 - 6x + 1
        assert_eq!(char_poly(&m), vec![rat(1), rat(-6), rat(1)]);
    }
}
