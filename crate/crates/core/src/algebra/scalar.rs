//! Exact elements of the quadratic field Q(sqrt d).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact number `r + s*sqrt(d)`.
///
/// `d` is either 0 (the value is rational) or a squarefree integer >= 2.
/// The representation is canonical: whenever `s == 0` the base is stored
/// as 0, so a rational value compares equal no matter which field it was
/// computed in. Two values with nonzero surd parts over different bases
/// cannot be combined.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    rational: BigRational,
    surd: BigRational,
    base: u32,
}

pub(crate) fn is_squarefree(d: u32) -> bool {
    if d < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= d as u64 {
        if (d as u64).is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

fn combine_base(a: u32, b: u32) -> Result<u32> {
    match (a, b) {
        (0, x) | (x, 0) => Ok(x),
        (x, y) if x == y => Ok(x),
        (x, y) => Err(Error::MismatchedBase { left: x, right: y }),
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { rational: BigRational::zero(), surd: BigRational::zero(), base: 0 }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as a rational scalar. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar { rational: r, surd: BigRational::zero(), base: 0 }
    }

    /// `rational + surd*sqrt(base)`, validating the base.
    pub fn new(rational: BigRational, surd: BigRational, base: u32) -> Result<Self> {
        if surd.is_zero() {
            if base != 0 && !is_squarefree(base) {
                return Err(Error::InvalidBase(base));
            }
            return Ok(Self::from_rational(rational));
        }
        if !is_squarefree(base) {
            return Err(Error::InvalidBase(base));
        }
        Ok(Scalar { rational, surd, base })
    }

    /// `sqrt(d)` for a squarefree `d >= 2`.
    pub fn sqrt_of(d: u32) -> Result<Self> {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.surd
    }

    /// The surd base; 0 for rational values.
    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.surd.is_zero() && self.rational.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    fn normalized(rational: BigRational, surd: BigRational, base: u32) -> Self {
        if surd.is_zero() {
            Scalar { rational, surd, base: 0 }
        } else {
            Scalar { rational, surd, base }
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar> {
        let base = combine_base(self.base, rhs.base)?;
        Ok(Self::normalized(&self.rational + &rhs.rational, &self.surd + &rhs.surd, base))
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        let base = combine_base(self.base, rhs.base)?;
        Ok(Self::normalized(&self.rational - &rhs.rational, &self.surd - &rhs.surd, base))
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        let base = combine_base(self.base, rhs.base)?;
        if self.surd.is_zero() && rhs.surd.is_zero() {
            return Ok(Self::from_rational(&self.rational * &rhs.rational));
        }
        let d = BigRational::from_integer(BigInt::from(base));
        let r = &self.rational * &rhs.rational + &self.surd * &rhs.surd * d;
        let s = &self.rational * &rhs.surd + &self.surd * &rhs.rational;
        Ok(Self::normalized(r, s, base))
    }

    /// Field conjugate `r - s*sqrt(d)`.
    pub fn field_conjugate(&self) -> Scalar {
        Self::normalized(self.rational.clone(), -self.surd.clone(), self.base)
    }

    /// `r^2 - s^2 d`, the field norm down to Q.
    pub fn field_norm(&self) -> BigRational {
        let d = BigRational::from_integer(BigInt::from(self.base));
        &self.rational * &self.rational - &self.surd * &self.surd * d
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.surd.is_zero() {
            return Ok(Self::from_rational(self.rational.recip()));
        }
        // The norm is nonzero because d is squarefree, so sqrt(d) is irrational.
        let n = self.field_norm();
        let c = self.field_conjugate();
        Ok(Self::normalized(c.rational / &n, c.surd / n, self.base))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.checked_mul(&rhs.inv()?)
    }

    pub fn scale_rational(&self, k: &BigRational) -> Scalar {
        Self::normalized(&self.rational * k, &self.surd * k, self.base)
    }

    /// Exact sign of `r + s*sqrt(d)`, without floating point.
    pub fn signum(&self) -> Ordering {
        let sr = self.rational.cmp(&BigRational::zero());
        let ss = self.surd.cmp(&BigRational::zero());
        match (sr, ss) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            _ => {
                // opposite signs: compare r^2 with s^2 d
                let d = BigRational::from_integer(BigInt::from(self.base));
                let r2 = &self.rational * &self.rational;
                let s2d = &self.surd * &self.surd * d;
                match r2.cmp(&s2d) {
                    Ordering::Greater => sr,
                    Ordering::Less => ss,
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.rational.to_f64().unwrap_or(f64::NAN);
        if self.surd.is_zero() {
            return r;
        }
        r + self.surd.to_f64().unwrap_or(f64::NAN) * (self.base as f64).sqrt()
    }

    /// Closest rational with denominator at most `max_den` (continued fractions).
    pub fn approximate_f64(x: f64, max_den: i64) -> Option<Scalar> {
        if !x.is_finite() {
            return None;
        }
        let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
        let mut rem = x;
        for _ in 0..64 {
            let a = rem.floor();
            if a.abs() > 1e15 {
                break;
            }
            let ai = a as i128;
            let p2 = ai * p1 + p0;
            let q2 = ai * q1 + q0;
            if q2 > max_den as i128 {
                break;
            }
            p0 = p1;
            q0 = q1;
            p1 = p2;
            q1 = q2;
            let frac = rem - a;
            if frac.abs() < 1e-12 {
                break;
            }
            rem = 1.0 / frac;
        }
        if q1 == 0 {
            return None;
        }
        Some(Scalar::from_rational(BigRational::new(BigInt::from(p1), BigInt::from(q1))))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_integer(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::normalized(-self.rational.clone(), -self.surd.clone(), self.base)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.checked_sub(other).ok().map(|d| d.signum())
    }
}

fn fmt_ratio(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Text form `a/b` or `a/b+c/e*sqrt(d)`; integer parts drop the `/1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            return f.write_str(&fmt_ratio(&self.rational));
        }
        let surd = fmt_ratio(&self.surd.abs());
        let sign = if self.surd.is_negative() { "-" } else { "+" };
        if self.rational.is_zero() {
            let lead = if self.surd.is_negative() { "-" } else { "" };
            write!(f, "{lead}{surd}*sqrt({})", self.base)
        } else {
            write!(f, "{}{sign}{surd}*sqrt({})", fmt_ratio(&self.rational), self.base)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_ratio(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("malformed rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

fn parse_surd_term(s: &str) -> Result<(BigRational, u32)> {
    let bad = || Error::Parse(format!("malformed surd term `{s}`"));
    let idx = s.find("sqrt(").ok_or_else(bad)?;
    let coeff = &s[..idx];
    let rest = s[idx + 5..].strip_suffix(')').ok_or_else(bad)?;
    let d: u32 = rest.parse().map_err(|_| bad())?;
    let coeff = match coeff {
        "" | "+" => BigRational::one(),
        "-" => -BigRational::one(),
        c => {
            let c = c.strip_suffix('*').ok_or_else(bad)?;
            match c {
                "" | "+" => BigRational::one(),
                "-" => -BigRational::one(),
                c => parse_ratio(c.strip_prefix('+').unwrap_or(c))?,
            }
        }
    };
    Ok((coeff, d))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s.contains(char::is_whitespace) {
            return Err(Error::Parse(format!("malformed scalar `{s}`")));
        }
        if !s.contains("sqrt(") {
            return Ok(Scalar::from_rational(parse_ratio(s)?));
        }
        // split at the sign that starts the surd term (not a leading sign)
        let split = s
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .find(|&i| s[i..].contains("sqrt("));
        let (rat, surd) = match split {
            Some(i) => (parse_ratio(&s[..i])?, &s[i..]),
            None => (BigRational::zero(), s),
        };
        let (coeff, d) = parse_surd_term(surd)?;
        if !is_squarefree(d) {
            return Err(Error::InvalidBase(d));
        }
        Scalar::new(rat, coeff, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(s("3").to_string(), "3");
        assert_eq!(s("6/4").to_string(), "3/2");
        assert_eq!(s("1/2+3/4*sqrt(15)").to_string(), "1/2+3/4*sqrt(15)");
        assert_eq!(s("-2*sqrt(15)").to_string(), "-2*sqrt(15)");
        assert_eq!(s("5-sqrt(3)").to_string(), "5-1*sqrt(3)");
        assert_eq!(s("0/7+0*sqrt(15)"), Scalar::zero());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("1+2*sqrt(12)".parse::<Scalar>().is_err());
        assert!("1 + 2".parse::<Scalar>().is_err());
    }

    #[test]
    fn canonical_base_for_rationals() {
        let r = s("2+3*sqrt(15)") - s("3*sqrt(15)");
        assert_eq!(r, Scalar::from_integer(2));
        assert_eq!(r.base(), 0);
    }

    #[test]
    fn mismatched_bases_error() {
        let a = s("sqrt(2)");
        let b = s("sqrt(3)");
        assert_eq!(a.checked_add(&b), Err(Error::MismatchedBase { left: 2, right: 3 }));
        // rationals embed in every field
        assert!(a.checked_mul(&Scalar::ratio(1, 3)).is_ok());
    }

    #[test]
    fn inverse_and_sign() {
        let x = s("1+sqrt(15)");
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Scalar::one());
        assert_eq!(s("4-sqrt(15)").signum(), Ordering::Greater);
        assert_eq!(s("3-sqrt(15)").signum(), Ordering::Less);
        assert_eq!(s("-4+sqrt(15)").signum(), Ordering::Less);
        assert!(Scalar::zero().inv().is_err());
        assert!((s("3*sqrt(15)").to_f64() - 3.0 * 15f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn rational_approximation() {
        assert_eq!(Scalar::approximate_f64(0.75, 100), Some(Scalar::ratio(3, 4)));
        assert_eq!(Scalar::approximate_f64(-22.0 / 7.0, 100), Some(Scalar::ratio(-22, 7)));
    }
}
