use std::fmt;

use super::{gcd_real, RealPoly};
use crate::algebra::Scalar;
use crate::error::{Error, Result};

/// A ratio of real polynomials in lowest terms with a monic denominator.
///
/// Because the form is canonical, two rational functions are equal exactly
/// when their fields are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: RealPoly,
    den: RealPoly,
}

/// Reduce `n / d`: divide out the gcd and make the denominator monic.
pub fn reduce_fraction(n: &RealPoly, d: &RealPoly) -> Result<RationalFunction> {
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if n.is_zero() {
        return Ok(RationalFunction::zero());
    }
    let g = gcd_real(&[n.clone(), d.clone()])?;
    let (n, d) = (n.exact_div_right(&g)?, d.exact_div_right(&g)?);
    let lead = d.leading().expect("nonzero denominator").clone();
    Ok(RationalFunction { num: n.div_scalar(&lead)?, den: d.div_scalar(&lead)? })
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: RealPoly::zero(), den: RealPoly::one() }
    }

    pub fn from_poly(p: RealPoly) -> Self {
        RationalFunction { num: p, den: RealPoly::one() }
    }

    pub fn new(n: &RealPoly, d: &RealPoly) -> Result<Self> {
        reduce_fraction(n, d)
    }

    pub fn numerator(&self) -> &RealPoly {
        &self.num
    }

    pub fn denominator(&self) -> &RealPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        reduce_fraction(&n, &self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        reduce_fraction(&self.num.mul(&o.num), &self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(k), den: self.den.clone() }
    }

    pub fn derivative(&self) -> Self {
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        reduce_fraction(&n, &self.den.mul(&self.den)).expect("nonzero denominator")
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        RationalFunction::zero()
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}
