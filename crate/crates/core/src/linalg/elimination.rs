//! Gaussian elimination over ℍ.
//!
//! Row operations multiply rows from the left, which keeps the solution set
//! of `A·x = b` intact for the entry-times-component action.

use alloc::vec::Vec;

use super::matrix::QMatrix;
use super::vector::QVector;
use super::PIVOT_THRESHOLD;
use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

/// Row index in `start..rows` with the largest modulus in column `col`.
fn pivot_row(a: &QMatrix, col: usize, start: usize) -> (usize, f64) {
    (start..a.rows())
        .map(|r| (r, a[(r, col)].modulus()))
        .fold((start, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best })
}

/// `row[target] -= factor · row[source]`, columns from `from` on.
fn eliminate(a: &mut QMatrix, target: usize, source: usize, factor: Quaternion, from: usize) {
    let src: Vec<Quaternion> = a.row(source)[from..].to_vec();
    for (dst, s) in a.row_mut(target)[from..].iter_mut().zip(src) {
        *dst -= factor * s;
    }
}

impl QMatrix {
    /// Solves `A·x = b` for square `A` by elimination with partial pivoting
    /// on entry modulus.
    pub fn solve(&self, b: &QVector) -> Result<QVector> {
        let x = self.solve_many(&QMatrix::from_columns(core::slice::from_ref(b))?)?;
        Ok(x.column(0))
    }

    /// `A⁻¹`, column by column from `A·X = 𝕀`.
    pub fn inverse(&self) -> Result<QMatrix> {
        self.solve_many(&QMatrix::identity(self.rows()))
    }

    /// Solves `A·X = B` for every column of `B` at once.
    pub fn solve_many(&self, rhs: &QMatrix) -> Result<QMatrix> {
        let n = self.rows();
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: n, found: self.cols() });
        }
        if rhs.rows() != n {
            return Err(Error::DimensionMismatch { expected: n, found: rhs.rows() });
        }
        let k = rhs.cols();
        let threshold = PIVOT_THRESHOLD * self.max_entry_modulus();
        // Augmented [A | B].
        let mut aug = QMatrix::from_fn(n, n + k, |r, c| if c < n { self[(r, c)] } else { rhs[(r, c - n)] });

        for col in 0..n {
            let (p, modulus) = pivot_row(&aug, col, col);
            if modulus <= threshold || modulus == 0.0 {
                return Err(Error::Singular);
            }
            aug.swap_rows(col, p);
            let inv = aug[(col, col)].inverse()?;
            for r in col + 1..n {
                let f = aug[(r, col)] * inv;
                if !f.is_zero() {
                    eliminate(&mut aug, r, col, f, col);
                }
            }
        }

        // Back substitution: x_i = a_ii⁻¹ (b_i − Σ_{j>i} a_ij x_j).
        let mut x = QMatrix::zeros(n, k);
        for c in 0..k {
            for i in (0..n).rev() {
                let mut acc = aug[(i, n + c)];
                for j in i + 1..n {
                    acc -= aug[(i, j)] * x[(j, c)];
                }
                x[(i, c)] = aug[(i, i)].inverse()? * acc;
            }
        }
        Ok(x)
    }

    /// Reduced row echelon form and its pivot columns. Pivots whose modulus
    /// falls below `rel_tol · max |entry|` are treated as zero.
    pub fn row_echelon(&self, rel_tol: f64) -> (QMatrix, Vec<usize>) {
        let mut a = self.clone();
        let threshold = rel_tol * self.max_entry_modulus();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols() {
            if row == a.rows() {
                break;
            }
            let (p, modulus) = pivot_row(&a, col, row);
            if modulus <= threshold || modulus == 0.0 {
                for r in row..a.rows() {
                    a[(r, col)] = Quaternion::ZERO;
                }
                continue;
            }
            a.swap_rows(row, p);
            let inv = a[(row, col)].inverse().expect("pivot is nonzero");
            for x in a.row_mut(row)[col..].iter_mut() {
                *x = inv * *x;
            }
            a[(row, col)] = Quaternion::ONE;
            for r in 0..a.rows() {
                if r != row {
                    let f = a[(r, col)];
                    if !f.is_zero() {
                        eliminate(&mut a, r, row, f, col);
                        a[(r, col)] = Quaternion::ZERO;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self, rel_tol: f64) -> usize {
        self.row_echelon(rel_tol).1.len()
    }

    /// A basis of `ker A = {x : A·x = 0}`, one vector per free column of
    /// the echelon form: the free coordinate is 1, the others are 0, and
    /// the pivot coordinates come from back-substitution.
    pub fn kernel_basis(&self, rel_tol: f64) -> Vec<QVector> {
        let (r, pivots) = self.row_echelon(rel_tol);
        let free = (0..self.cols()).filter(|c| !pivots.contains(c));
        free.map(|f| {
            let mut x = QVector::zeros(self.cols());
            x[f] = Quaternion::ONE;
            for (k, &pc) in pivots.iter().enumerate() {
                x[pc] = -r[(k, f)];
            }
            x
        })
        .collect()
    }
}
