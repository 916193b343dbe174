//! Exact scalar field Q(sqrt d), complex numbers over it, and quaternions.

mod complex;
mod quaternion;
mod scalar;

pub use complex::Complex;
pub use quaternion::{normalized_component, quat_inner, quat_product, try_quat_inner, Quaternion};
pub use scalar::Scalar;

/// Coefficient ring interface used by the generic polynomial type.
///
/// Multiplication need not commute; `inv` returns `None` only for zero.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, k: &Scalar) -> Self;
    fn conj(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// The scalar parts of the coefficient, for base checks.
    fn scalars(&self) -> Vec<&Scalar>;
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, k: &Scalar) -> Self {
        self * k
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn inv(&self) -> Option<Self> {
        Scalar::inv(self).ok()
    }
    fn scalars(&self) -> Vec<&Scalar> {
        vec![self]
    }
}

impl Coeff for Complex {
    fn zero() -> Self {
        Complex::zero()
    }
    fn one() -> Self {
        Complex::one()
    }
    fn is_zero(&self) -> bool {
        Complex::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, k: &Scalar) -> Self {
        Complex::scale(self, k)
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn inv(&self) -> Option<Self> {
        Complex::inv(self).ok()
    }
    fn scalars(&self) -> Vec<&Scalar> {
        vec![&self.re, &self.im]
    }
}

impl Coeff for Quaternion {
    fn zero() -> Self {
        Quaternion::zero()
    }
    fn one() -> Self {
        Quaternion::one()
    }
    fn is_zero(&self) -> bool {
        Quaternion::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, k: &Scalar) -> Self {
        Quaternion::scale(self, k)
    }
    fn conj(&self) -> Self {
        Quaternion::conj(self)
    }
    fn inv(&self) -> Option<Self> {
        Quaternion::inv(self).ok()
    }
    fn scalars(&self) -> Vec<&Scalar> {
        self.components().to_vec()
    }
}
