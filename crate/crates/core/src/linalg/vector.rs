use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Neg, Sub};

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

/// An element of the right module ℍⁿ.
///
/// Scalars act from the right (`v·q`), and the inner product
/// `⟨u|v⟩ = Σ ūᵢ vᵢ` is conjugate-linear in the first slot and right-linear
/// in the second.
#[derive(Clone, Debug, PartialEq)]
pub struct QVector {
    entries: Vec<Quaternion>,
}

impl QVector {
    pub fn new(entries: Vec<Quaternion>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self { entries })
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "QVector dimension must be positive");
        Self { entries: vec![Quaternion::ZERO; n] }
    }

    /// The coordinate vector `e_k` of ℍⁿ.
    pub fn basis(n: usize, k: usize) -> Self {
        assert!(k < n, "basis index {k} out of range for dimension {n}");
        let mut v = Self::zeros(n);
        v.entries[k] = Quaternion::ONE;
        v
    }

    pub fn from_reals(xs: &[f64]) -> Result<Self> {
        xs.iter()
            .map(|&x| Quaternion::from_real(x))
            .collect::<Result<Vec<_>>>()
            .and_then(Self::new)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false: vectors have at least one entry.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    #[inline]
    pub fn entries(&self) -> &[Quaternion] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Quaternion> {
        self.entries
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Quaternion> {
        self.entries.iter()
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), found: other.len() });
        }
        Ok(())
    }

    /// `⟨self|other⟩ = Σ conj(selfᵢ)·otherᵢ`.
    pub fn inner(&self, other: &Self) -> Result<Quaternion> {
        self.check_len(other)?;
        Ok(self.inner_unchecked(other))
    }

    pub(crate) fn inner_unchecked(&self, other: &Self) -> Quaternion {
        self.entries.iter().zip(&other.entries).map(|(a, b)| a.conj() * *b).sum()
    }

    /// `Σ |vᵢ|²`, the real part of `⟨v|v⟩`.
    pub fn norm_sqr(&self) -> f64 {
        self.entries.iter().map(|q| q.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    /// Right scalar multiplication `v·q`.
    pub fn mul_right(&self, q: Quaternion) -> Self {
        Self { entries: self.entries.iter().map(|&x| x * q).collect() }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { entries: self.entries.iter().map(|&x| x.scale(s)).collect() }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self - other)
    }

    /// `self += v·q`, the accumulation step of every synthesis sum.
    pub(crate) fn axpy_right(&mut self, v: &Self, q: Quaternion) {
        debug_assert_eq!(self.len(), v.len());
        for (s, &x) in self.entries.iter_mut().zip(&v.entries) {
            *s += x * q;
        }
    }

    /// `‖self − other‖`.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        Ok(self.try_sub(other)?.norm())
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.len() == other.len()
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a.approx_eq(*b, tol))
    }
}

impl Index<usize> for QVector {
    type Output = Quaternion;
    #[inline]
    fn index(&self, i: usize) -> &Quaternion {
        &self.entries[i]
    }
}

impl IndexMut<usize> for QVector {
    #[inline]
    fn index_mut(&mut self, i: usize) -> &mut Quaternion {
        &mut self.entries[i]
    }
}

impl<'a> IntoIterator for &'a QVector {
    type Item = &'a Quaternion;
    type IntoIter = core::slice::Iter<'a, Quaternion>;
    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// Panics on length mismatch; see [`QVector::try_add`].
impl Add for &QVector {
    type Output = QVector;
    fn add(self, o: &QVector) -> QVector {
        assert_eq!(self.len(), o.len(), "QVector length mismatch");
        QVector { entries: self.entries.iter().zip(&o.entries).map(|(a, b)| *a + *b).collect() }
    }
}

/// Panics on length mismatch; see [`QVector::try_sub`].
impl Sub for &QVector {
    type Output = QVector;
    fn sub(self, o: &QVector) -> QVector {
        assert_eq!(self.len(), o.len(), "QVector length mismatch");
        QVector { entries: self.entries.iter().zip(&o.entries).map(|(a, b)| *a - *b).collect() }
    }
}

impl Neg for &QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        QVector { entries: self.entries.iter().map(|&a| -a).collect() }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for QVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for QVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let entries = Vec::<Quaternion>::deserialize(d)?;
        QVector::new(entries).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Quaternion as Q;

    #[test]
    fn inner_of_units() {
        let u = QVector::new(vec![Q::I, Q::ZERO]).unwrap();
        let v = QVector::new(vec![Q::J, Q::ZERO]).unwrap();
        // conj(i)·j = −ij = −k
        assert_eq!(u.inner(&v).unwrap(), -Q::K);
    }

    #[test]
    fn inner_self_is_real() {
        let v = QVector::new(vec![Q::ONE, Q::I]).unwrap();
        assert_eq!(v.inner(&v).unwrap(), Q::from_real(2.0).unwrap());
        assert_eq!(v.norm(), 2f64.sqrt());
    }

    #[test]
    fn basis_vectors_are_orthonormal() {
        for a in 0..3 {
            for b in 0..3 {
                let ip = QVector::basis(3, a).inner(&QVector::basis(3, b)).unwrap();
                assert_eq!(ip, if a == b { Q::ONE } else { Q::ZERO });
            }
        }
    }

    #[test]
    fn length_checks() {
        let u = QVector::zeros(2);
        let v = QVector::zeros(3);
        assert_eq!(u.inner(&v), Err(Error::DimensionMismatch { expected: 2, found: 3 }));
        assert!(u.try_add(&v).is_err());
        assert_eq!(QVector::new(Vec::new()), Err(Error::EmptyInput));
    }

    #[test]
    fn right_homogeneity() {
        let u = QVector::new(vec![Q::new(1., 2., 0., -1.).unwrap(), Q::J]).unwrap();
        let v = QVector::new(vec![Q::K, Q::new(0.5, 0., 3., 1.).unwrap()]).unwrap();
        let q = Q::new(0.2, -0.7, 1.1, 0.4).unwrap();
        let lhs = u.inner(&v.mul_right(q)).unwrap();
        let rhs = u.inner(&v).unwrap() * q;
        assert!(lhs.approx_eq(rhs, 1e-14));
    }
}
