use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

use super::complex::{hermitian_eigen, ComplexMatrix};
use super::vector::QVector;
use super::PAIRING_TOLERANCE;
use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::DEFAULT_TOLERANCE;

/// Dense `rows × cols` quaternion matrix, stored row-major.
///
/// A matrix is a right-linear operator: `(A·v)ᵣ = Σ_c A[r,c]·v[c]`.
#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Quaternion>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyInput);
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "QMatrix dimensions must be positive");
        Self { rows, cols, data: vec![Quaternion::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Quaternion::ONE)
    }

    /// `q·𝕀`.
    pub fn scalar(n: usize, q: Quaternion) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = q;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        assert!(rows > 0 && cols > 0, "QMatrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Real diagonal matrix.
    pub fn from_real_diagonal(diag: &[f64]) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Quaternion::from_real(d)?;
        }
        Ok(m)
    }

    /// Stacks vectors as columns, the synthesis matrix of a family.
    pub fn from_columns(columns: &[QVector]) -> Result<Self> {
        let first = columns.first().ok_or(Error::EmptyInput)?;
        let n = first.len();
        if let Some(bad) = columns.iter().find(|c| c.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        Ok(Self::from_fn(n, columns.len(), |r, c| columns[c][r]))
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Quaternion] {
        &self.data
    }

    pub fn column(&self, c: usize) -> QVector {
        QVector::new((0..self.rows).map(|r| self[(r, c)]).collect())
            .expect("matrix has at least one row")
    }

    pub fn columns(&self) -> Vec<QVector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row(&self, r: usize) -> &[Quaternion] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub(crate) fn row_mut(&mut self, r: usize) -> &mut [Quaternion] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// `adjoint(A)[r,c] = conj(A[c,r])`.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    /// Matrix-vector action with entry-times-component products.
    pub fn apply(&self, v: &QVector) -> Result<QVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let out = (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, x)| *a * *x).sum())
            .collect();
        Ok(QVector::new(out).expect("matrix has at least one row"))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    out.data[r * other.cols + c] += a * other[(k, c)];
                }
            }
        }
        Ok(out)
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            let found = if self.rows != other.rows { other.rows } else { other.cols };
            let expected = if self.rows != other.rows { self.rows } else { self.cols };
            return Err(Error::DimensionMismatch { expected, found });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Quaternion, Quaternion) -> Quaternion) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(*a, *b)).collect(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|q| q.scale(s)).collect() }
    }

    /// Sum of the diagonal.
    pub fn trace(&self) -> Quaternion {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn max_entry_modulus(&self) -> f64 {
        self.data.iter().map(|q| q.modulus()).fold(0.0, f64::max)
    }

    /// `(Σ |A[r,c]|²)^½`.
    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|q| q.norm_sqr()).sum())
    }

    /// Largest entrywise deviation `|A[r,c] − conj(A[c,r])|`.
    pub fn self_adjoint_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut dev = 0f64;
        for r in 0..self.rows {
            for c in r..self.cols {
                dev = dev.max((self[(r, c)] - self[(c, r)].conj()).modulus());
            }
        }
        dev
    }

    /// Self-adjoint when the deviation is at most `tol · max(1, max entry)`.
    pub fn is_self_adjoint(&self, tol: f64) -> bool {
        self.is_square() && self.self_adjoint_deviation() <= tol * self.max_entry_modulus().max(1.0)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.approx_eq(*b, tol))
    }

    /// The `2m × 2n` complex adjoint image, each entry `a + bi + cj + dk`
    /// becoming the block `[[a+bi, c+di], [−c+di, a−bi]]`.
    pub fn embed(&self) -> ComplexMatrix {
        ComplexMatrix::embed(self)
    }

    /// Inverse of [`QMatrix::embed`]; fails when `m` is not a block image.
    pub fn unembed(m: &ComplexMatrix) -> Result<Self> {
        m.unembed(DEFAULT_TOLERANCE)
    }

    /// Eigenvalues of a self-adjoint matrix, in nondecreasing order.
    ///
    /// The spectrum of the `2n × 2n` Hermitian embedding consists of the
    /// quaternionic eigenvalues, each repeated twice. Every pair is checked
    /// and collapsed to one value.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        if !self.is_self_adjoint(DEFAULT_TOLERANCE) {
            return Err(Error::NotSelfAdjoint { deviation: self.self_adjoint_deviation() });
        }
        let doubled = hermitian_eigen(&self.embed(), false)?.values;
        let scale = doubled.iter().fold(0f64, |m, v| m.max(v.abs()));
        let tol = PAIRING_TOLERANCE * scale.max(f64::MIN_POSITIVE);
        doubled
            .chunks_exact(2)
            .map(|p| {
                let gap = (p[1] - p[0]).abs();
                if gap > tol {
                    Err(Error::PairingViolation { gap })
                } else {
                    Ok(0.5 * (p[0] + p[1]))
                }
            })
            .collect()
    }

    /// Spectral norm `max |λ|` of a self-adjoint matrix.
    pub fn hermitian_spectral_norm(&self) -> Result<f64> {
        Ok(self.hermitian_eigenvalues()?.iter().fold(0f64, |m, v| m.max(v.abs())))
    }

    /// Size of an operator that should vanish: the spectral norm when the
    /// matrix is self-adjoint, the Frobenius norm otherwise.
    pub fn residual_norm(&self) -> f64 {
        if self.is_self_adjoint(DEFAULT_TOLERANCE) {
            if let Ok(n) = self.hermitian_spectral_norm() {
                return n;
            }
        }
        self.frobenius_norm()
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Quaternion;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Quaternion {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Quaternion {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

/// Panics on shape mismatch; see [`QMatrix::try_mul`].
impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, o: &QMatrix) -> QMatrix {
        self.try_mul(o).expect("QMatrix shape mismatch")
    }
}

/// Panics on shape mismatch; see [`QMatrix::apply`].
impl Mul<&QVector> for &QMatrix {
    type Output = QVector;
    fn mul(self, v: &QVector) -> QVector {
        self.apply(v).expect("QMatrix/QVector shape mismatch")
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, o: &QMatrix) -> QMatrix {
        self.try_add(o).expect("QMatrix shape mismatch")
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, o: &QMatrix) -> QMatrix {
        self.try_sub(o).expect("QMatrix shape mismatch")
    }
}

/// Serialized as a list of rows, each a list of `[x0, x1, x2, x3]` arrays.
#[cfg(feature = "serde")]
impl serde::Serialize for QMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            seq.serialize_element(self.row(r))?;
        }
        seq.end()
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for QMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Quaternion>>::deserialize(d)?;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        let n = rows.len();
        QMatrix::new(n, cols, rows.into_iter().flatten().collect()).map_err(serde::de::Error::custom)
    }
}
