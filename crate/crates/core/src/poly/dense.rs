use std::fmt;

use crate::algebra::{Coeff, Complex, Quaternion, Scalar};
use crate::error::{Error, Result};

/// Dense univariate polynomial with ascending coefficients.
///
/// The coefficient list never ends in a zero; the zero polynomial is the
/// empty list. Products keep the order of the factors, so `Poly<Quaternion>`
/// is the noncommutative ring H[x].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type RealPoly = Poly<Scalar>;
pub type ComplexPoly = Poly<Complex>;
pub type QuatPoly = Poly<Quaternion>;

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c x^n`.
    pub fn monomial(c: T, n: usize) -> Self {
        let mut v = vec![T::zero(); n];
        v.push(c);
        Self::new(v)
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == T::one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(Coeff::neg).collect() }
    }

    /// Ordered convolution: coefficient r is `sum_s self_s * rhs_{r-s}`.
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (r, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (s, b) in rhs.coeffs.iter().enumerate() {
                out[r + s] = out[r + s].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(k)).collect())
    }

    /// `c * self`, multiplying every coefficient on the left.
    pub fn left_mul_const(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| c.mul(a)).collect())
    }

    /// `self * c`, multiplying every coefficient on the right.
    pub fn right_mul_const(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Scalar::from_integer(i as i64)))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut v = vec![T::zero()];
        v.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&Scalar::ratio(1, i as i64 + 1))),
        );
        Self::new(v)
    }

    /// Coefficientwise conjugation.
    pub fn conj(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(Coeff::conj).collect() }
    }

    /// Horner evaluation with the variable on the right of each coefficient.
    pub fn eval(&self, x: &Scalar) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc.scale(x).add(c))
    }

    /// Leftmost surd base among the coefficients; error if they disagree.
    pub fn surd_base(&self) -> Result<u32> {
        let mut base = 0;
        for s in self.coeffs.iter().flat_map(|c| c.scalars()) {
            match (base, s.base()) {
                (_, 0) => {}
                (0, b) => base = b,
                (a, b) if a == b => {}
                (a, b) => return Err(Error::MismatchedBase { left: a, right: b }),
            }
        }
        Ok(base)
    }

    /// Checked product; rejects operands over different surd bases.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let (a, b) = (self.surd_base()?, rhs.surd_base()?);
        if a != 0 && b != 0 && a != b {
            return Err(Error::MismatchedBase { left: a, right: b });
        }
        Ok(self.mul(rhs))
    }

    /// Right division with remainder: `self = q * d + r`, `deg r < deg d`.
    pub fn div_rem_right(&self, d: &Self) -> Result<(Self, Self)> {
        let lead = d.leading().ok_or(Error::DivisionByZero)?;
        let lead_inv = lead.inv().ok_or(Error::DivisionByZero)?;
        let dn = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dn {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dn];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + dn];
            if top.is_zero() {
                continue;
            }
            let c = top.mul(&lead_inv);
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].sub(&c.mul(dc));
            }
            quot[shift] = c;
        }
        rem.truncate(dn);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact right quotient `q` with `self = q * d`.
    pub fn exact_div_right(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem_right(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Scale so the leading coefficient is one (left multiplication by its inverse).
    pub fn monic(&self) -> Self {
        match self.leading().and_then(|l| l.inv()) {
            Some(inv) => self.left_mul_const(&inv),
            None => self.clone(),
        }
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Coeff> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c:?}"),
                1 => format!("{c:?} x"),
                _ => format!("{c:?} x^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl RealPoly {
    /// Integer-coefficient shorthand, ascending order.
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&n| Scalar::from_integer(n)).collect())
    }

    pub fn to_complex(&self) -> ComplexPoly {
        self.map(|c| Complex::real(c.clone()))
    }

    pub fn to_quat(&self) -> QuatPoly {
        self.map(|c| Quaternion::real(c.clone()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    /// Divide exactly by a nonzero scalar.
    pub fn div_scalar(&self, k: &Scalar) -> Result<Self> {
        Ok(self.scale(&k.inv()?))
    }
}

impl ComplexPoly {
    /// `re + im i` from two real polynomials.
    pub fn from_parts(re: &RealPoly, im: &RealPoly) -> Self {
        let n = re.coeffs.len().max(im.coeffs.len());
        Self::new((0..n).map(|i| Complex::new(re.coeff(i), im.coeff(i))).collect())
    }

    pub fn re(&self) -> RealPoly {
        self.map(|c| c.re.clone())
    }

    pub fn im(&self) -> RealPoly {
        self.map(|c| c.im.clone())
    }

    pub fn to_quat(&self) -> QuatPoly {
        self.map(Quaternion::from_complex)
    }

    /// `|self|^2 = self * conj(self)`, a real polynomial.
    pub fn norm_sq(&self) -> RealPoly {
        let (re, im) = (self.re(), self.im());
        re.mul(&re).add(&im.mul(&im))
    }
}

impl QuatPoly {
    pub fn from_components(u: &RealPoly, v: &RealPoly, p: &RealPoly, q: &RealPoly) -> Self {
        let n = [u, v, p, q].iter().map(|c| c.coeffs.len()).max().unwrap_or(0);
        Self::new(
            (0..n)
                .map(|i| Quaternion::new(u.coeff(i), v.coeff(i), p.coeff(i), q.coeff(i)))
                .collect(),
        )
    }

    /// Integer shorthand: each coefficient as `[w, x, y, z]`, ascending.
    pub fn from_int_coeffs(c: &[[i64; 4]]) -> Self {
        Self::new(c.iter().map(|&[w, x, y, z]| Quaternion::from_ints(w, x, y, z)).collect())
    }

    /// Component polynomials `(u, v, p, q)` of `u + v i + p j + q k`.
    pub fn components(&self) -> [RealPoly; 4] {
        [
            self.map(|c| c.w.clone()),
            self.map(|c| c.x.clone()),
            self.map(|c| c.y.clone()),
            self.map(|c| c.z.clone()),
        ]
    }

    /// `(alpha, beta)` with `self = alpha + beta j`.
    pub fn split(&self) -> (ComplexPoly, ComplexPoly) {
        let [u, v, p, q] = self.components();
        (ComplexPoly::from_parts(&u, &v), ComplexPoly::from_parts(&p, &q))
    }

    /// `alpha + beta j`.
    pub fn from_split(alpha: &ComplexPoly, beta: &ComplexPoly) -> Self {
        Self::from_components(&alpha.re(), &alpha.im(), &beta.re(), &beta.im())
    }

    pub fn mul_real(&self, r: &RealPoly) -> Self {
        self.mul(&r.to_quat())
    }

    pub fn mul_complex(&self, c: &ComplexPoly) -> Self {
        self.mul(&c.to_quat())
    }

    /// Componentwise exact division by a real polynomial.
    pub fn exact_div_real(&self, r: &RealPoly) -> Result<Self> {
        let [u, v, p, q] = self.components();
        Ok(Self::from_components(
            &u.exact_div_right(r)?,
            &v.exact_div_right(r)?,
            &p.exact_div_right(r)?,
            &q.exact_div_right(r)?,
        ))
    }

    pub fn eval_f64(&self, x: f64) -> [f64; 4] {
        let mut acc = [0.0; 4];
        for c in self.coeffs.iter().rev() {
            let cf = c.to_f64();
            for (a, b) in acc.iter_mut().zip(cf) {
                *a = *a * x + b;
            }
        }
        acc
    }
}

/// Real polynomial `<X(x), Y(x)>`: the componentwise Euclidean inner product.
pub fn inner_poly(x: &QuatPoly, y: &QuatPoly) -> RealPoly {
    let (a, b) = (x.components(), y.components());
    a.iter().zip(b.iter()).fold(RealPoly::zero(), |acc, (p, q)| acc.add(&p.mul(q)))
}
