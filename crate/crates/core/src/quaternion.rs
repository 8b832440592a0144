//! The quaternion division ring ℍ.

use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// A quaternion `x0 + x1·i + x2·j + x3·k` with finite `f64` components.
///
/// Multiplication follows the Hamilton relations `i² = j² = k² = ijk = −1`
/// and is not commutative.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion {
    x0: f64,
    x1: f64,
    x2: f64,
    x3: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::raw(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::raw(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::raw(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::raw(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::raw(0.0, 0.0, 0.0, 1.0);

    pub(crate) const fn raw(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self { x0, x1, x2, x3 }
    }

    /// Builds a quaternion, rejecting NaN and infinite components.
    pub fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Result<Self> {
        if x0.is_finite() && x1.is_finite() && x2.is_finite() && x3.is_finite() {
            Ok(Self::raw(x0, x1, x2, x3))
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn from_real(x: f64) -> Result<Self> {
        Self::new(x, 0.0, 0.0, 0.0)
    }

    pub fn from_array(c: [f64; 4]) -> Result<Self> {
        Self::new(c[0], c[1], c[2], c[3])
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.x0, self.x1, self.x2, self.x3]
    }

    #[inline]
    pub const fn real(self) -> f64 {
        self.x0
    }

    /// The `(i, j, k)` coefficients.
    #[inline]
    pub const fn imag(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.x0 == 0.0 && self.x1 == 0.0 && self.x2 == 0.0 && self.x3 == 0.0
    }

    #[inline]
    pub fn is_real(self) -> bool {
        self.x1 == 0.0 && self.x2 == 0.0 && self.x3 == 0.0
    }

    #[inline]
    pub const fn conj(self) -> Self {
        Self::raw(self.x0, -self.x1, -self.x2, -self.x3)
    }

    /// `|q|²`, computed directly. Can overflow for components beyond ~1e154;
    /// use [`Quaternion::modulus`] when the magnitude is what matters.
    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
    }

    /// `|q| = (q̄q)^½`, scaled by the largest component so that extreme
    /// magnitudes neither overflow nor underflow.
    pub fn modulus(self) -> f64 {
        let scale = self
            .x0
            .abs()
            .max(self.x1.abs())
            .max(self.x2.abs())
            .max(self.x3.abs());
        if scale == 0.0 {
            return 0.0;
        }
        let (a, b, c, d) = (self.x0 / scale, self.x1 / scale, self.x2 / scale, self.x3 / scale);
        scale * libm::sqrt(a * a + b * b + c * c + d * d)
    }

    /// `q⁻¹ = q̄ / |q|²`.
    pub fn inverse(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        // Divide twice by |q| instead of once by |q|² to stay in range.
        let m = self.modulus();
        Ok(self.conj().scale(1.0 / m).scale(1.0 / m))
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Self::raw(self.x0 * s, self.x1 * s, self.x2 * s, self.x3 * s)
    }

    /// Component-wise `|a − b| ≤ tol · max(1, |a|, |b|)`.
    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        self.to_array()
            .iter()
            .zip(other.to_array().iter())
            .all(|(&a, &b)| (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs()))
    }
}

impl Add for Quaternion {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::raw(self.x0 + o.x0, self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::raw(self.x0 - o.x0, self.x1 - o.x1, self.x2 - o.x2, self.x3 - o.x3)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::raw(-self.x0, -self.x1, -self.x2, -self.x3)
    }
}

impl AddAssign for Quaternion {
    #[inline]
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl SubAssign for Quaternion {
    #[inline]
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Self;
    #[inline]
    fn mul(self, o: Self) -> Self {
        let (a1, b1, c1, d1) = (self.x0, self.x1, self.x2, self.x3);
        let (a2, b2, c2, d2) = (o.x0, o.x1, o.x2, o.x3);
        Self::raw(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    #[inline]
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Div<f64> for Quaternion {
    type Output = Self;
    #[inline]
    fn div(self, s: f64) -> Self {
        self.scale(1.0 / s)
    }
}

impl Sum for Quaternion {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.x0)?;
        for (c, unit) in self.imag().iter().zip(["i", "j", "k"]) {
            if c.is_sign_negative() {
                write!(f, " - {}{unit}", -c)?;
            } else {
                write!(f, " + {c}{unit}")?;
            }
        }
        Ok(())
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Quaternion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        self.to_array().serialize(s)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Quaternion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let c = <[f64; 4]>::deserialize(d)?;
        Quaternion::from_array(c).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: f64, b: f64, c: f64, d: f64) -> Quaternion {
        Quaternion::new(a, b, c, d).unwrap()
    }

    #[test]
    fn hamilton_relations() {
        use Quaternion as Q;
        assert_eq!(Q::I * Q::J, Q::K);
        assert_eq!(Q::J * Q::I, -Q::K);
        assert_eq!(Q::J * Q::K, Q::I);
        assert_eq!(Q::K * Q::J, -Q::I);
        assert_eq!(Q::K * Q::I, Q::J);
        for u in [Q::I, Q::J, Q::K] {
            assert_eq!(u * u, -Q::ONE);
        }
        assert_eq!(Q::I * Q::J * Q::K, -Q::ONE);
    }

    #[test]
    fn product_by_hand() {
        // (1+i)(1+j) = 1 + j + i + ij = 1 + i + j + k
        assert_eq!(q(1., 1., 0., 0.) * q(1., 0., 1., 0.), q(1., 1., 1., 1.));
        let p = q(0.3, -1.2, 4.0, 2.5);
        assert_eq!(p * Quaternion::ONE, p);
        assert_eq!(Quaternion::ONE * p, p);
    }

    #[test]
    fn conjugate() {
        assert_eq!(q(1., 2., 3., 4.).conj(), q(1., -2., -3., -4.));
        assert_eq!(q(5., 0., 0., 0.).conj(), q(5., 0., 0., 0.));
        let (i, j) = (Quaternion::I, Quaternion::J);
        assert_eq!((i * j).conj(), -Quaternion::K);
        assert_eq!((i * j).conj(), j.conj() * i.conj());
    }

    #[test]
    fn modulus_values() {
        assert_eq!(q(1., 1., 1., 1.).modulus(), 2.0);
        assert_eq!(Quaternion::ZERO.modulus(), 0.0);
        assert_eq!(Quaternion::I.modulus(), 1.0);
        let huge = q(1e300, 1e300, 1e300, 1e300);
        assert!((huge.modulus() / 2e300 - 1.0).abs() < 1e-15);
        let tiny = q(1e-300, -1e-300, 1e-300, 1e-300);
        assert!((tiny.modulus() / 2e-300 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn inverse_values() {
        let inv = q(1., 1., 1., 1.).inverse().unwrap();
        assert!(inv.approx_eq(q(0.25, -0.25, -0.25, -0.25), 1e-15));
        assert_eq!(Quaternion::ONE.inverse().unwrap(), Quaternion::ONE);
        let inv = q(0., 2., 0., 0.).inverse().unwrap();
        assert!(inv.approx_eq(q(0., -0.5, 0., 0.), 1e-15));
        assert_eq!(Quaternion::ZERO.inverse(), Err(Error::ZeroDivision));
    }

    #[test]
    fn rejects_non_finite() {
        assert_eq!(Quaternion::new(f64::NAN, 0., 0., 0.), Err(Error::NonFinite));
        assert_eq!(Quaternion::new(0., 0., f64::INFINITY, 0.), Err(Error::NonFinite));
        assert!(Quaternion::from_array([0., 0., 0., f64::NEG_INFINITY]).is_err());
    }

    #[test]
    fn approx_eq_is_relative_for_large_values() {
        let a = q(1e6, 0., 0., 0.);
        let b = q(1e6 + 1e-4, 0., 0., 0.);
        assert!(a.approx_eq(b, 1e-9));
        assert!(!q(0., 0., 0., 1e-3).approx_eq(Quaternion::ZERO, 1e-9));
    }
}
