//! Polynomials over the scalar field with real, complex and quaternion
//! coefficients, their gcds, and reduced rational functions.

mod dense;
mod rational;

pub use dense::{inner_poly, ComplexPoly, Poly, QuatPoly, RealPoly};
pub use rational::{reduce_fraction, RationalFunction};

use crate::algebra::Coeff;
use crate::error::{Error, Result};

/// Monic gcd of two polynomials over a commutative field of coefficients.
fn gcd_pair<T: Coeff>(a: &Poly<T>, b: &Poly<T>) -> Result<Poly<T>> {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem_right(&b)?;
        // keep remainders monic so coefficient growth stays modest
        a = b;
        b = r.monic();
    }
    Ok(a.monic())
}

fn gcd_many<T: Coeff>(polys: &[Poly<T>]) -> Result<Poly<T>> {
    let mut acc: Option<Poly<T>> = None;
    for p in polys.iter().filter(|p| !p.is_zero()) {
        acc = Some(match acc {
            None => p.monic(),
            Some(g) if g.is_one() => return Ok(g),
            Some(g) => gcd_pair(&g, p)?,
        });
    }
    acc.ok_or(Error::AllZero)
}

/// Monic gcd in R[x] (computed over the scalar field).
pub fn gcd_real(polys: &[RealPoly]) -> Result<RealPoly> {
    gcd_many(polys)
}

/// Monic gcd in C[x] (computed over the scalar field adjoined i).
pub fn gcd_complex(polys: &[ComplexPoly]) -> Result<ComplexPoly> {
    gcd_many(polys)
}

/// `u^2 + v^2 + p^2 + q^2` for `P = u + v i + p j + q k`.
pub fn norm_poly(p: &QuatPoly) -> RealPoly {
    inner_poly(p, p)
}

/// Product in H[x]; errors on mixed surd bases.
pub fn quat_poly_product(p: &QuatPoly, q: &QuatPoly) -> Result<QuatPoly> {
    p.checked_mul(q)
}

pub fn quat_poly_conjugate(p: &QuatPoly) -> QuatPoly {
    p.conj()
}

/// Exact right quotient `q` with `p = q * d`.
pub fn exact_divide<T: Coeff>(p: &Poly<T>, d: &Poly<T>) -> Result<Poly<T>> {
    p.exact_div_right(d)
}

/// Whether the real components of `A` have trivial gcd.
pub fn has_coprime_components(a: &QuatPoly) -> bool {
    !a.is_zero() && gcd_real(&a.components()).map(|g| g.is_one()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Complex, Quaternion, Scalar};
    use proptest::prelude::*;

    fn rp(c: &[i64]) -> RealPoly {
        RealPoly::from_ints(c)
    }

    fn cp(c: &[(i64, i64)]) -> ComplexPoly {
        ComplexPoly::new(c.iter().map(|&(a, b)| Complex::new(a.into(), b.into())).collect())
    }

    fn qp(c: &[[i64; 4]]) -> QuatPoly {
        QuatPoly::from_int_coeffs(c)
    }

    #[test]
    fn derivatives() {
        assert_eq!(rp(&[5, -4, 1]).derivative(), rp(&[-4, 2]));
        assert_eq!(rp(&[7]).derivative(), RealPoly::zero());
        // (n-2) i x^n + n k x^(n-1) + j x + 1 at n = 3
        let a = qp(&[[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 3], [0, 1, 0, 0]]);
        assert_eq!(a.derivative(), qp(&[[0, 0, 1, 0], [0, 0, 0, 6], [0, 3, 0, 0]]));
    }

    #[test]
    fn quaternion_products() {
        let x_plus_i = qp(&[[0, 1, 0, 0], [1, 0, 0, 0]]);
        let x_minus_i = qp(&[[0, -1, 0, 0], [1, 0, 0, 0]]);
        assert_eq!(quat_poly_product(&x_plus_i, &x_minus_i).unwrap(), qp(&[[1, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]]));
        let j = qp(&[[0, 0, 1, 0]]);
        assert_eq!(j.mul(&x_plus_i), qp(&[[0, 0, 0, -1], [0, 0, 1, 0]]));
    }

    #[test]
    fn conjugation_reverses_products() {
        let a = qp(&[[0, 1, 0, 0], [1, 0, 0, 0]]);
        let b = qp(&[[0, 0, 1, 0], [1, 0, 0, 0]]);
        assert_eq!(quat_poly_conjugate(&a.mul(&b)), b.conj().mul(&a.conj()));
        assert_eq!(qp(&[[1, 2, 3, 4]]).conj(), qp(&[[1, -2, -3, -4]]));
        let real = rp(&[1, 2, 3]).to_quat();
        assert_eq!(real.conj(), real);
    }

    #[test]
    fn norm_of_constant() {
        assert_eq!(norm_poly(&QuatPoly::one()), RealPoly::one());
    }

    #[test]
    fn gcds() {
        assert_eq!(gcd_real(&[rp(&[-2, 2]), RealPoly::zero()]).unwrap(), rp(&[-1, 1]));
        assert_eq!(gcd_real(&[RealPoly::zero()]), Err(Error::AllZero));
        assert!(gcd_complex(&[cp(&[(0, 1), (1, 0)]), cp(&[(0, -1), (1, 0)])]).unwrap().is_one());
        let x_plus_i = cp(&[(0, 1), (1, 0)]);
        let prod = x_plus_i.mul(&cp(&[(-2, 0), (1, 0)]));
        assert_eq!(gcd_complex(&[prod, x_plus_i.clone()]).unwrap(), x_plus_i);
    }

    #[test]
    fn planted_complex_gcd_is_recovered() {
        let chi = cp(&[(1, 1), (0, 0), (1, 0)]);
        let alpha = cp(&[(3, -1), (2, 1)]);
        let beta_conj = cp(&[(1, 0), (0, 2), (1, 1)]);
        let g = gcd_complex(&[alpha.mul(&chi), beta_conj.mul(&chi)]).unwrap();
        assert_eq!(g, chi);
    }

    #[test]
    fn exact_division() {
        let x2_plus_1 = cp(&[(1, 0), (0, 0), (1, 0)]);
        let x_plus_i = cp(&[(0, 1), (1, 0)]);
        assert_eq!(exact_divide(&x2_plus_1, &x_plus_i).unwrap(), cp(&[(0, -1), (1, 0)]));
        assert_eq!(exact_divide(&rp(&[1, 0, 1]), &rp(&[1, 1])), Err(Error::InexactDivision));
        assert_eq!(exact_divide(&rp(&[1]), &RealPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_bases_rejected() {
        let a = QuatPoly::constant(Quaternion::real("sqrt(2)".parse().unwrap()));
        let b = QuatPoly::constant(Quaternion::real("sqrt(5)".parse().unwrap()));
        assert!(matches!(quat_poly_product(&a, &b), Err(Error::MismatchedBase { .. })));
    }

    fn small() -> impl Strategy<Value = i64> {
        -6i64..=6
    }

    fn arb_qpoly(max_len: usize) -> impl Strategy<Value = QuatPoly> {
        proptest::collection::vec((small(), small(), small(), small()), 1..=max_len)
            .prop_map(|v| QuatPoly::new(v.into_iter().map(|(w, x, y, z)| Quaternion::from_ints(w, x, y, z)).collect()))
    }

    fn arb_cpoly(max_len: usize) -> impl Strategy<Value = ComplexPoly> {
        proptest::collection::vec((small(), small()), 1..=max_len)
            .prop_map(|v| cp(&v))
    }

    proptest! {
        #[test]
        fn split_round_trips(a in arb_qpoly(4)) {
            let (alpha, beta) = a.split();
            let [u, v, p, q] = a.components();
            prop_assert_eq!(alpha.re(), u);
            prop_assert_eq!(alpha.im(), v);
            prop_assert_eq!(beta.re(), p);
            prop_assert_eq!(beta.im(), q);
            prop_assert_eq!(QuatPoly::from_split(&alpha, &beta), a);
        }

        #[test]
        fn beta_j_gamma_commutation(alpha in arb_cpoly(3), beta in arb_cpoly(3), gamma in arb_cpoly(3)) {
            // (alpha + beta j) gamma = alpha gamma + (beta conj(gamma)) j
            let a = QuatPoly::from_split(&alpha, &beta);
            let lhs = a.mul_complex(&gamma);
            let rhs = QuatPoly::from_split(&alpha.mul(&gamma), &beta.mul(&gamma.conj()));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn norm_is_multiplicative(a in arb_qpoly(4), b in arb_qpoly(4)) {
            prop_assert_eq!(norm_poly(&a.mul(&b)), norm_poly(&a).mul(&norm_poly(&b)));
        }

        #[test]
        fn norm_is_real_part_of_p_pstar(a in arb_qpoly(4)) {
            let prod = a.mul(&a.conj());
            let [w, x, y, z] = prod.components();
            prop_assert_eq!(w, norm_poly(&a));
            prop_assert!(x.is_zero() && y.is_zero() && z.is_zero());
        }

        #[test]
        fn degrees_add(a in arb_qpoly(4), b in arb_qpoly(4)) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!(a.mul(&b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        }

        #[test]
        fn gcd_divides_inputs(a in arb_cpoly(4), b in arb_cpoly(4), c in arb_cpoly(3)) {
            let (a, b) = (a.mul(&c), b.mul(&c));
            prop_assume!(!a.is_zero() || !b.is_zero());
            let g = gcd_complex(&[a.clone(), b.clone()]).unwrap();
            prop_assert_eq!(g.leading().cloned(), Some(Complex::one()));
            prop_assert!(exact_divide(&a, &g).is_ok());
            prop_assert!(exact_divide(&b, &g).is_ok());
        }

        #[test]
        fn right_division_round_trips(a in arb_qpoly(3), chi in arb_cpoly(3)) {
            prop_assume!(!chi.is_zero());
            let chi_q = chi.to_quat();
            prop_assert_eq!(exact_divide(&a.mul(&chi_q), &chi_q).unwrap(), a);
        }

        #[test]
        fn real_gcd_monic_and_divides(a in proptest::collection::vec(small(), 1..5), b in proptest::collection::vec(small(), 1..5)) {
            let (a, b) = (rp(&a), rp(&b));
            prop_assume!(!a.is_zero() || !b.is_zero());
            let g = gcd_real(&[a.clone(), b.clone()]).unwrap();
            prop_assert_eq!(g.leading().cloned(), Some(Scalar::one()));
            prop_assert!(exact_divide(&a, &g).is_ok() && exact_divide(&b, &g).is_ok());
        }
    }
}
