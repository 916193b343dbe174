use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Scalar;
use crate::error::{Error, Result};

/// `re + im*i` with exact components.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Complex {
    pub re: Scalar,
    pub im: Scalar,
}

impl Complex {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        Complex { re, im }
    }

    pub fn real(re: Scalar) -> Self {
        Complex { re, im: Scalar::zero() }
    }

    pub fn zero() -> Self {
        Complex::default()
    }

    pub fn one() -> Self {
        Complex::real(Scalar::one())
    }

    pub fn i() -> Self {
        Complex::new(Scalar::zero(), Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sq(&self) -> Scalar {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq().inv()?;
        Ok(Complex::new(&self.re * &n, -(&self.im * &n)))
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Complex::new(&self.re * k, &self.im * k)
    }
}

impl Add for &Complex {
    type Output = Complex;
    fn add(self, r: &Complex) -> Complex {
        Complex::new(&self.re + &r.re, &self.im + &r.im)
    }
}

impl Sub for &Complex {
    type Output = Complex;
    fn sub(self, r: &Complex) -> Complex {
        Complex::new(&self.re - &r.re, &self.im - &r.im)
    }
}

impl Mul for &Complex {
    type Output = Complex;
    fn mul(self, r: &Complex) -> Complex {
        Complex::new(
            &self.re * &r.re - &self.im * &r.im,
            &self.re * &r.im + &self.im * &r.re,
        )
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i)", self.re, self.im)
    }
}
