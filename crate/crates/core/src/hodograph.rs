//! Pythagorean-hodograph map `r' = A i A*`, parametric speed, primitivity,
//! cores, and exact integration.

use crate::error::{Error, Result};
use crate::poly::{exact_divide, gcd_complex, gcd_real, norm_poly, ComplexPoly, QuatPoly, RealPoly};

/// Hodograph components `(x', y', z')` with parametric speed `sigma`.
#[derive(Clone, Debug, PartialEq)]
pub struct Hodograph {
    pub xprime: RealPoly,
    pub yprime: RealPoly,
    pub zprime: RealPoly,
    pub sigma: RealPoly,
}

impl Hodograph {
    pub fn components(&self) -> [&RealPoly; 3] {
        [&self.xprime, &self.yprime, &self.zprime]
    }

    pub fn eval_f64(&self, x: f64) -> [f64; 3] {
        [self.xprime.eval_f64(x), self.yprime.eval_f64(x), self.zprime.eval_f64(x)]
    }

    /// `x'^2 + y'^2 + z'^2 - sigma^2`.
    pub fn pythagorean_defect(&self) -> RealPoly {
        let sq = |p: &RealPoly| p.mul(p);
        sq(&self.xprime).add(&sq(&self.yprime)).add(&sq(&self.zprime)).sub(&sq(&self.sigma))
    }
}

/// Curve position (zero at the origin of the parameter) and arc length.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvePosition {
    pub x: RealPoly,
    pub y: RealPoly,
    pub z: RealPoly,
    pub arclen: RealPoly,
}

impl CurvePosition {
    pub fn eval_f64(&self, t: f64) -> [f64; 3] {
        [self.x.eval_f64(t), self.y.eval_f64(t), self.z.eval_f64(t)]
    }
}

fn nonzero(a: &QuatPoly) -> Result<()> {
    if a.is_zero() {
        Err(Error::ZeroPolynomial)
    } else {
        Ok(())
    }
}

/// The hodograph generated by `A = u + v i + p j + q k`:
/// `(u^2+v^2-p^2-q^2, 2(uq+vp), 2(vq-up))` with `sigma = |A|^2`.
pub fn hodograph_of(a: &QuatPoly) -> Result<Hodograph> {
    nonzero(a)?;
    a.surd_base()?;
    let [u, v, p, q] = a.components();
    let two = crate::algebra::Scalar::from_integer(2);
    let sq = |x: &RealPoly| x.mul(x);
    let h = Hodograph {
        xprime: sq(&u).add(&sq(&v)).sub(&sq(&p)).sub(&sq(&q)),
        yprime: u.mul(&q).add(&v.mul(&p)).scale(&two),
        zprime: v.mul(&q).sub(&u.mul(&p)).scale(&two),
        sigma: norm_poly(a),
    };
    if !h.pythagorean_defect().is_zero() {
        return Err(Error::Internal("Pythagorean identity failed".into()));
    }
    Ok(h)
}

/// `(alpha, conj(beta))` for `A = alpha + beta j`.
pub(crate) fn alpha_beta_conj(a: &QuatPoly) -> (ComplexPoly, ComplexPoly) {
    let (alpha, beta) = a.split();
    (alpha, beta.conj())
}

/// Whether `A i A*` is a primitive hodograph: `gcd(alpha, conj(beta)) = 1`,
/// cross-checked against `gcd(x', y', z') = 1`.
pub fn is_primitive(a: &QuatPoly) -> Result<bool> {
    nonzero(a)?;
    let (alpha, beta_c) = alpha_beta_conj(a);
    let by_complex = gcd_complex(&[alpha, beta_c])?.is_one();
    let h = hodograph_of(a)?;
    let by_real = gcd_real(&[h.xprime, h.yprime, h.zprime])?.is_one();
    if by_complex != by_real {
        return Err(Error::Internal(format!(
            "primitivity mismatch: complex gcd test {by_complex}, hodograph gcd test {by_real}"
        )));
    }
    Ok(by_complex)
}

/// Core of `A`: `A = core * chi` with `chi = gcd(alpha, conj(beta))` monic.
pub fn core_of(a: &QuatPoly) -> Result<(QuatPoly, ComplexPoly)> {
    nonzero(a)?;
    let (alpha, beta_c) = alpha_beta_conj(a);
    let chi = gcd_complex(&[alpha, beta_c])?;
    let core = exact_divide(a, &chi.to_quat())?;
    if core.mul_complex(&chi) != *a {
        return Err(Error::Internal("core times chi does not reproduce A".into()));
    }
    Ok((core, chi))
}

/// Termwise antiderivatives with `r(0) = 0` and `s(0) = 0`.
pub fn integrate(h: &Hodograph) -> CurvePosition {
    CurvePosition {
        x: h.xprime.antiderivative(),
        y: h.yprime.antiderivative(),
        z: h.zprime.antiderivative(),
        arclen: h.sigma.antiderivative(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Quaternion;
    use crate::fixtures;
    use crate::poly::{inner_poly, ComplexPoly};
    use proptest::prelude::*;

    fn rp(c: &[i64]) -> RealPoly {
        RealPoly::from_ints(c)
    }

    #[test]
    fn example_one_hodograph() {
        let h = hodograph_of(&fixtures::example1().generator).unwrap();
        assert_eq!(h.xprime, rp(&[14141, 7434, -8610, 882, 441]));
        assert_eq!(h.yprime, rp(&[-22412, 12012, 420, -1764]));
        assert_eq!(h.zprime, rp(&[-21500, 14700, 1428, -1764]));
        let sigma = rp(&[325, 126, 21]).mul(&rp(&[5, -4, 1])).scale(&21.into());
        assert_eq!(h.sigma, sigma);
    }

    #[test]
    fn constant_generator() {
        let h = hodograph_of(&QuatPoly::one()).unwrap();
        assert_eq!((h.xprime, h.yprime, h.zprime), (rp(&[1]), RealPoly::zero(), RealPoly::zero()));
        assert_eq!(hodograph_of(&QuatPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn matches_quaternion_sandwich() {
        let a = fixtures::example2().generator;
        let h = hodograph_of(&a).unwrap();
        let sandwich = a.mul(&QuatPoly::constant(Quaternion::i())).mul(&a.conj());
        let [w, x, y, z] = sandwich.components();
        assert!(w.is_zero());
        assert_eq!((x, y, z), (h.xprime, h.yprime, h.zprime));
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&fixtures::example2().generator).unwrap());
        assert!(is_primitive(&QuatPoly::one()).unwrap());
        // (1 + j)(x + i) has gcd(alpha, conj beta) = x + i
        let a = QuatPoly::from_int_coeffs(&[[1, 0, 1, 0]]).mul(&QuatPoly::from_int_coeffs(&[[0, 1, 0, 0], [1, 0, 0, 0]]));
        assert!(!is_primitive(&a).unwrap());
    }

    #[test]
    fn cores() {
        let a = fixtures::example2().generator;
        assert_eq!(core_of(&a).unwrap(), (a.clone(), ComplexPoly::one()));
        let c = fixtures::cubic_f0();
        let chi = ComplexPoly::new(vec![crate::algebra::Complex::i(), crate::algebra::Complex::one()]);
        let (core, got_chi) = core_of(&c.mul_complex(&chi)).unwrap();
        assert_eq!((core, got_chi), (c, chi));
        let k = QuatPoly::constant(Quaternion::from_ints(2, 1, 0, 3));
        assert_eq!(core_of(&k).unwrap(), (k, ComplexPoly::one()));
    }

    #[test]
    fn integration() {
        let line = Hodograph { xprime: rp(&[1]), yprime: RealPoly::zero(), zprime: RealPoly::zero(), sigma: rp(&[1]) };
        let r = integrate(&line);
        assert_eq!((r.x, r.arclen), (rp(&[0, 1]), rp(&[0, 1])));
        let h = Hodograph { xprime: rp(&[0, 2]), yprime: RealPoly::zero(), zprime: RealPoly::zero(), sigma: rp(&[0, 2]) };
        assert_eq!(integrate(&h).x, rp(&[0, 0, 1]));
        let r = integrate(&hodograph_of(&fixtures::example2().generator).unwrap());
        assert_eq!(r.x, rp(&[0, 100, -220, 140, 10, -54]));
        assert_eq!(r.y.derivative(), hodograph_of(&fixtures::example2().generator).unwrap().yprime);
    }

    fn arb_qpoly() -> impl Strategy<Value = QuatPoly> {
        proptest::collection::vec(proptest::array::uniform4(-5i64..=5), 1..=4)
            .prop_map(|v| QuatPoly::from_int_coeffs(&v))
    }

    proptest! {
        #[test]
        fn pythagorean_identity(a in arb_qpoly()) {
            prop_assume!(!a.is_zero());
            let h = hodograph_of(&a).unwrap();
            prop_assert!(h.pythagorean_defect().is_zero());
            prop_assert!(h.sigma.leading().unwrap().is_positive());
        }

        #[test]
        fn core_is_idempotent_and_matches_primitivity(a in arb_qpoly(), chi in proptest::collection::vec((-3i64..=3, -3i64..=3), 1..=3)) {
            let chi = ComplexPoly::new(chi.into_iter().map(|(r, i)| crate::algebra::Complex::new(r.into(), i.into())).collect());
            prop_assume!(!a.is_zero() && !chi.is_zero());
            let a = a.mul_complex(&chi);
            let (core, c) = core_of(&a).unwrap();
            prop_assert_eq!(core_of(&core).unwrap(), (core.clone(), ComplexPoly::one()));
            prop_assert_eq!(is_primitive(&a).unwrap(), c.is_one());
        }

        #[test]
        fn left_constant_rotates_hodograph(a in arb_qpoly(), c in proptest::array::uniform4(-4i64..=4)) {
            let q = Quaternion::from_ints(c[0], c[1], c[2], c[3]);
            prop_assume!(!a.is_zero() && !q.is_zero());
            let qa = a.left_mul_const(&q);
            let (h, hq) = (hodograph_of(&a).unwrap(), hodograph_of(&qa).unwrap());
            prop_assert_eq!(&hq.sigma, &h.sigma.scale(&q.norm_sq()));
            // pairwise inner products of vector coefficients scale by |Q|^4
            let vecs = |h: &Hodograph| QuatPoly::from_components(&RealPoly::zero(), &h.xprime, &h.yprime, &h.zprime);
            let (b, bq) = (vecs(&h), vecs(&hq));
            let n2 = &q.norm_sq() * &q.norm_sq();
            for l in 0..b.coeffs().len() {
                for m in 0..b.coeffs().len() {
                    let lhs = crate::algebra::quat_inner(&bq.coeff(l), &bq.coeff(m));
                    let rhs = &n2 * &crate::algebra::quat_inner(&b.coeff(l), &b.coeff(m));
                    prop_assert_eq!(lhs, rhs);
                }
            }
            let _ = inner_poly(&a, &a);
        }
    }
}
