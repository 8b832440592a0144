use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;

use super::matrix::QMatrix;
use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

/// Dense complex matrix, row-major. Mostly the image of a [`QMatrix`] under
/// the complex adjoint embedding.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Complex64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub(crate) fn embed(a: &QMatrix) -> Self {
        let mut m = Self::zeros(2 * a.rows(), 2 * a.cols());
        for r in 0..a.rows() {
            for c in 0..a.cols() {
                let [x0, x1, x2, x3] = a[(r, c)].to_array();
                m[(2 * r, 2 * c)] = Complex64::new(x0, x1);
                m[(2 * r, 2 * c + 1)] = Complex64::new(x2, x3);
                m[(2 * r + 1, 2 * c)] = Complex64::new(-x2, x3);
                m[(2 * r + 1, 2 * c + 1)] = Complex64::new(x0, -x1);
            }
        }
        m
    }

    /// Recovers the quaternion matrix, checking every 2×2 block against the
    /// embedding pattern to within `tol · max(1, max |entry|)`.
    pub fn unembed(&self, tol: f64) -> Result<QMatrix> {
        if !self.rows.is_multiple_of(2) || !self.cols.is_multiple_of(2) || self.rows == 0 || self.cols == 0 {
            return Err(Error::StructureViolation { deviation: f64::INFINITY });
        }
        let scale = self.data.iter().fold(1f64, |m, z| m.max(z.norm()));
        let mut deviation = 0f64;
        let out = QMatrix::from_fn(self.rows / 2, self.cols / 2, |r, c| {
            let p = self[(2 * r, 2 * c)];
            let q = self[(2 * r, 2 * c + 1)];
            let s = self[(2 * r + 1, 2 * c)];
            let t = self[(2 * r + 1, 2 * c + 1)];
            // s should be −conj(q) and t should be conj(p).
            deviation = deviation.max((s + q.conj()).norm()).max((t - p.conj()).norm());
            Quaternion::raw(
                0.5 * (p.re + t.re),
                0.5 * (p.im - t.im),
                0.5 * (q.re - s.re),
                0.5 * (q.im + s.im),
            )
        });
        if deviation > tol * scale {
            return Err(Error::StructureViolation { deviation });
        }
        Ok(out)
    }

    pub fn conj_transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(c, r)] = self[(r, c)].conj();
            }
        }
        m
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: o.rows });
        }
        let mut m = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                for c in 0..o.cols {
                    m.data[r * o.cols + c] += a * o[(k, c)];
                }
            }
        }
        Ok(m)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: o.rows * o.cols });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|z| z.norm_sqr()).sum())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.cols + c]
    }
}

/// Spectrum of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    /// Nondecreasing.
    pub values: Vec<f64>,
    /// Column `k` is the unit eigenvector of `values[k]`, when requested.
    pub vectors: Option<ComplexMatrix>,
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi eigensolver for a Hermitian matrix.
///
/// Each rotation first removes the phase of the off-diagonal pivot with a
/// diagonal unitary, then applies a real Givens rotation. The input is
/// symmetrized as `(M + Mᴴ)/2` before iterating.
pub fn hermitian_eigen(m: &ComplexMatrix, want_vectors: bool) -> Result<HermitianEigen> {
    if m.rows != m.cols {
        return Err(Error::DimensionMismatch { expected: m.rows, found: m.cols });
    }
    let n = m.rows;
    let mut a = ComplexMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            a[(r, c)] = 0.5 * (m[(r, c)] + m[(c, r)].conj());
        }
    }
    let mut v = want_vectors.then(|| ComplexMatrix::identity(n));
    let total = a.frobenius_norm();

    let off = |a: &ComplexMatrix| -> f64 {
        let mut s = 0.0;
        for r in 0..n {
            for c in r + 1..n {
                s += a[(r, c)].norm_sqr();
            }
        }
        libm::sqrt(s)
    };

    let mut converged = total == 0.0;
    for _ in 0..MAX_SWEEPS {
        if converged || off(&a) <= f64::EPSILON * total {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, v.as_mut(), p, q, total);
            }
        }
    }
    if !converged && off(&a) > 1e2 * f64::EPSILON * total {
        return Err(Error::NoConvergence);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = v.map(|v| {
        let mut sorted = ComplexMatrix::zeros(n, n);
        for (k, &i) in order.iter().enumerate() {
            for r in 0..n {
                sorted[(r, k)] = v[(r, i)];
            }
        }
        sorted
    });
    Ok(HermitianEigen { values, vectors })
}

/// One Jacobi step annihilating `a[p,q]`, with `a ← Gᴴ a G`, `v ← v G`.
fn rotate(a: &mut ComplexMatrix, v: Option<&mut ComplexMatrix>, p: usize, q: usize, total: f64) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r <= 1e-300_f64.max(f64::EPSILON * 1e-3 * total) {
        return;
    }
    let phase = apq / r;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta >= 0.0 {
        1.0 / (theta + libm::sqrt(1.0 + theta * theta))
    } else {
        -1.0 / (-theta + libm::sqrt(1.0 + theta * theta))
    };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = t * c;

    // G = diag(1, conj(phase)) · [[c, s], [−s, c]] on coordinates (p, q).
    let gpp = Complex64::new(c, 0.0);
    let gpq = Complex64::new(s, 0.0);
    let gqp = -phase.conj() * s;
    let gqq = phase.conj() * c;

    let n = a.rows;
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * gpp + akq * gqp;
        a[(k, q)] = akp * gpq + akq * gqq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = gpp.conj() * apk + gqp.conj() * aqk;
        a[(q, k)] = gpq.conj() * apk + gqq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[(k, p)];
            let vkq = v[(k, q)];
            v[(k, p)] = vkp * gpp + vkq * gqp;
            v[(k, q)] = vkp * gpq + vkq * gqq;
        }
    }
}
