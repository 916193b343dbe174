use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Complex, Scalar};
use crate::error::{Error, Result};

/// `w + x i + y j + z k` with exact components.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub w: Scalar,
    pub x: Scalar,
    pub y: Scalar,
    pub z: Scalar,
}

impl Quaternion {
    pub fn new(w: Scalar, x: Scalar, y: Scalar, z: Scalar) -> Self {
        Quaternion { w, x, y, z }
    }

    /// Shorthand for integer components.
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(w.into(), x.into(), y.into(), z.into())
    }

    pub fn real(w: Scalar) -> Self {
        Quaternion { w, ..Default::default() }
    }

    pub fn zero() -> Self {
        Quaternion::default()
    }

    pub fn one() -> Self {
        Quaternion::real(Scalar::one())
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn components(&self) -> [&Scalar; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn from_components(c: [Scalar; 4]) -> Self {
        let [w, x, y, z] = c;
        Quaternion { w, x, y, z }
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// Pure vectors have zero scalar part.
    pub fn is_pure(&self) -> bool {
        self.w.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn vector_part(&self) -> Self {
        Quaternion::new(Scalar::zero(), self.x.clone(), self.y.clone(), self.z.clone())
    }

    pub fn norm_sq(&self) -> Scalar {
        quat_inner(self, self)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq().inv()?;
        Ok(self.conj().scale(&n))
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Quaternion::new(&self.w * k, &self.x * k, &self.y * k, &self.z * k)
    }

    /// The embedding `re + im i`.
    pub fn from_complex(c: &Complex) -> Self {
        Quaternion::new(c.re.clone(), c.im.clone(), Scalar::zero(), Scalar::zero())
    }

    /// Split `q = a + b j` with complex `a = w + x i`, `b = y + z i`.
    pub fn split(&self) -> (Complex, Complex) {
        (
            Complex::new(self.w.clone(), self.x.clone()),
            Complex::new(self.y.clone(), self.z.clone()),
        )
    }

    /// Cross product of the vector parts, returned as a pure quaternion.
    pub fn cross(&self, o: &Quaternion) -> Quaternion {
        Quaternion::new(
            Scalar::zero(),
            &self.y * &o.z - &self.z * &o.y,
            &self.z * &o.x - &self.x * &o.z,
            &self.x * &o.y - &self.y * &o.x,
        )
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [self.w.to_f64(), self.x.to_f64(), self.y.to_f64(), self.z.to_f64()]
    }

    pub fn checked_mul(&self, q: &Quaternion) -> Result<Quaternion> {
        quat_product(self, q)
    }
}

fn check_bases<'a>(items: impl IntoIterator<Item = &'a Scalar>) -> Result<()> {
    let mut base = 0;
    for s in items {
        match (base, s.base()) {
            (_, 0) => {}
            (0, b) => base = b,
            (a, b) if a == b => {}
            (a, b) => return Err(Error::MismatchedBase { left: a, right: b }),
        }
    }
    Ok(())
}

/// Hamilton product `p q`.
pub fn quat_product(p: &Quaternion, q: &Quaternion) -> Result<Quaternion> {
    check_bases(p.components().into_iter().chain(q.components()))?;
    Ok(hamilton(p, q))
}

fn hamilton(p: &Quaternion, q: &Quaternion) -> Quaternion {
    Quaternion::new(
        &p.w * &q.w - &p.x * &q.x - &p.y * &q.y - &p.z * &q.z,
        &p.w * &q.x + &p.x * &q.w + &p.y * &q.z - &p.z * &q.y,
        &p.w * &q.y - &p.x * &q.z + &p.y * &q.w + &p.z * &q.x,
        &p.w * &q.z + &p.x * &q.y - &p.y * &q.x + &p.z * &q.w,
    )
}

/// Euclidean inner product on R^4: `x0 y0 + x1 y1 + x2 y2 + x3 y3`.
pub fn quat_inner(x: &Quaternion, y: &Quaternion) -> Scalar {
    &x.w * &y.w + &x.x * &y.x + &x.y * &y.y + &x.z * &y.z
}

/// Checked form of [`quat_inner`].
pub fn try_quat_inner(x: &Quaternion, y: &Quaternion) -> Result<Scalar> {
    check_bases(x.components().into_iter().chain(y.components()))?;
    Ok(quat_inner(x, y))
}

/// `<X, Y> / <Y, Y>`: oriented length of the projection of X on Y, in units of |Y|.
pub fn normalized_component(x: &Quaternion, y: &Quaternion) -> Result<Scalar> {
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    try_quat_inner(x, y)?.checked_div(&y.norm_sq())
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, q: &Quaternion) -> Quaternion {
        hamilton(self, q)
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, q: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w + &q.w, &self.x + &q.x, &self.y + &q.y, &self.z + &q.z)
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, q: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w - &q.w, &self.x - &q.x, &self.y - &q.y, &self.z - &q.z)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i + {:?}j + {:?}k)", self.w, self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::from_ints(w, x, y, z)
    }

    #[test]
    fn defining_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(quat_product(&i, &j).unwrap(), k);
        assert_eq!(quat_product(&j, &i).unwrap(), -&k);
        assert_eq!(&(&i * &i) + &Quaternion::one(), Quaternion::zero());
        assert_eq!(&q(1, 0, 1, 0) * &q(1, 0, -1, 0), q(2, 0, 0, 0));
    }

    #[test]
    fn inner_products() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(quat_inner(&i, &i), Scalar::one());
        assert_eq!(quat_inner(&k, &(&j * &i)), Scalar::from_integer(-1));
        assert_eq!(quat_inner(&q(1, 0, 2, 0), &q(0, 3, 0, 1)), Scalar::zero());
    }

    #[test]
    fn normalized_components() {
        let i = Quaternion::i();
        assert_eq!(normalized_component(&i.scale(&2.into()), &i).unwrap(), 2.into());
        assert_eq!(normalized_component(&i, &Quaternion::j()).unwrap(), Scalar::zero());
        assert_eq!(normalized_component(&q(1, 0, 1, 0), &q(1, 0, -1, 0)).unwrap(), Scalar::zero());
        assert_eq!(normalized_component(&i, &Quaternion::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatched_surd_bases_rejected() {
        let a = Quaternion::real("sqrt(2)".parse().unwrap());
        let b = Quaternion::real("sqrt(3)".parse().unwrap());
        assert!(matches!(quat_product(&a, &b), Err(Error::MismatchedBase { .. })));
        assert!(matches!(try_quat_inner(&a, &b), Err(Error::MismatchedBase { .. })));
    }

    fn arb_quat() -> impl Strategy<Value = Quaternion> {
        (-9i64..=9, -9i64..=9, -9i64..=9, -9i64..=9).prop_map(|(w, x, y, z)| q(w, x, y, z))
    }

    proptest! {
        #[test]
        fn product_is_associative(a in arb_quat(), b in arb_quat(), c in arb_quat()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn conjugate_reverses_products(a in arb_quat(), b in arb_quat()) {
            prop_assert_eq!((&a * &b).conj(), &b.conj() * &a.conj());
            prop_assert_eq!(a.conj().conj(), a);
        }

        #[test]
        fn norm_is_multiplicative(a in arb_quat(), b in arb_quat()) {
            prop_assert_eq!((&a * &b).norm_sq(), &a.norm_sq() * &b.norm_sq());
        }

        #[test]
        fn multiplication_is_conformal(u in arb_quat(), x in arb_quat(), y in arb_quat()) {
            // <UX, UY> = |U|^2 <X, Y> and likewise on the right
            let n = u.norm_sq();
            prop_assert_eq!(quat_inner(&(&u * &x), &(&u * &y)), &n * &quat_inner(&x, &y));
            prop_assert_eq!(quat_inner(&(&x * &u), &(&y * &u)), &n * &quat_inner(&x, &y));
        }

        #[test]
        fn nonzero_elements_invert(a in arb_quat()) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!(&a * &a.inv().unwrap(), Quaternion::one());
        }
    }
}
