//! Rotation indicatrix `<A' i, A> / |A|^2`, the Han fraction, certificate
//! checks, the ERF twist rate and the equal-degree divisibility criterion.
//!
//! Sign: the indicatrix numerator is `-(v'u - u'v - q'p + p'q)` while the Han
//! numerator is `uv' - u'v - pq' + p'q`; the two are exact negatives.

use crate::algebra::{Quaternion, Scalar};
use crate::error::{Error, Result};
use crate::poly::{gcd_real, has_coprime_components, inner_poly, norm_poly, reduce_fraction, QuatPoly, RationalFunction, RealPoly};

/// Indicatrix numerator, speed, and the reduced quotient.
#[derive(Clone, Debug, PartialEq)]
pub struct IndicatrixPair {
    pub numerator_inner: RealPoly,
    pub sigma: RealPoly,
    pub reduced: RationalFunction,
}

/// `<A' i, A>` from the component formula; the quaternion evaluation is the
/// second path, and the two must agree.
pub fn inner_product_poly(a: &QuatPoly) -> RealPoly {
    let by_components = han_numerator(a).neg();
    debug_assert_eq!(by_components, inner_poly(&a.derivative().right_mul_const(&Quaternion::i()), a));
    by_components
}

/// `uv' - u'v - pq' + p'q`.
pub fn han_numerator(a: &QuatPoly) -> RealPoly {
    let [u, v, p, q] = a.components();
    let [du, dv, dp, dq] = a.derivative().components();
    u.mul(&dv).sub(&du.mul(&v)).sub(&p.mul(&dq)).add(&dp.mul(&q))
}

pub fn indicatrix_pair(a: &QuatPoly) -> Result<IndicatrixPair> {
    let numerator_inner = inner_product_poly(a);
    let sigma = norm_poly(a);
    let reduced = reduce_fraction(&numerator_inner, &sigma)?;
    Ok(IndicatrixPair { numerator_inner, sigma, reduced })
}

/// Normalized component of `A' i` along `A`; zero for `A = 0`.
pub fn rotation_indicatrix(a: &QuatPoly) -> RationalFunction {
    if a.is_zero() {
        return RationalFunction::zero();
    }
    indicatrix_pair(a).expect("nonzero speed").reduced
}

/// `(uv' - u'v - pq' + p'q) / (u^2 + v^2 + p^2 + q^2)`, reduced.
pub fn han_fraction(a: &QuatPoly) -> Result<RationalFunction> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    reduce_fraction(&han_numerator(a), &norm_poly(a))
}

/// ERF twist rate `2 (uv' - u'v - pq' + p'q) / sigma`.
pub fn omega1(a: &QuatPoly) -> Result<RationalFunction> {
    Ok(han_fraction(a)?.scale(&Scalar::from_integer(2)))
}

/// Checks `(ab' - a'b) sigma = N (a^2 + b^2)` exactly, `N` the Han numerator.
pub fn verify_han(a_poly: &QuatPoly, a: &RealPoly, b: &RealPoly) -> Result<bool> {
    let g = gcd_real(&[a.clone(), b.clone()]).map_err(|_| Error::NotCoprime("certificate (a, b) is zero".into()))?;
    if !g.is_one() {
        return Err(Error::NotCoprime(format!("certificate (a, b) shares the factor {g:?}")));
    }
    if !has_coprime_components(a_poly) {
        return Err(Error::NotCoprime("components of A are not coprime".into()));
    }
    let lhs = a.mul(&b.derivative()).sub(&a.derivative().mul(b)).mul(&norm_poly(a_poly));
    let rhs = han_numerator(a_poly).mul(&a.mul(a).add(&b.mul(b)));
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RhoEta {
    pub rho: RealPoly,
    pub eta: RealPoly,
    /// `sigma` divides `rho` (and therefore `eta`).
    pub divisible: bool,
}

/// The polynomials `rho`, `eta` of the equal-degree criterion and whether
/// `sigma` divides them.
pub fn rho_eta(a: &QuatPoly) -> Result<RhoEta> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let [u, v, p, q] = a.components();
    let [du, dv, dp, dq] = a.derivative().components();
    let sq = |x: RealPoly| x.mul(&x);
    let rho = sq(u.mul(&dp).sub(&du.mul(&p)).add(&v.mul(&dq)).sub(&dv.mul(&q)))
        .add(&sq(u.mul(&dq).sub(&du.mul(&q)).sub(&v.mul(&dp)).add(&dv.mul(&p))));
    let eta = sq(u.mul(&du).add(&v.mul(&dv)).add(&p.mul(&dp)).add(&q.mul(&dq))).add(&sq(han_numerator(a)));
    let sigma = norm_poly(a);
    let divisible = rho.div_rem_right(&sigma)?.1.is_zero();
    if divisible != eta.div_rem_right(&sigma)?.1.is_zero() {
        return Err(Error::Internal("sigma divides exactly one of rho, eta".into()));
    }
    Ok(RhoEta { rho, eta, divisible })
}

/// Cross-multiplied residual of the product formula for the indicatrix of
/// `BA`, `A = alpha + beta j`:
///
/// `<(BA)' i, BA> - |B|^2 <A' i, A> - (|alpha|^2 - |beta|^2) <B' i, B> + 2 <B' alpha beta k, B>`,
///
/// identically zero for all `A`, `B`.
pub fn indicatrix_product_residual(b: &QuatPoly, a: &QuatPoly) -> Result<RealPoly> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ba = b.checked_mul(a)?;
    let (alpha, beta) = a.split();
    let db = b.derivative();
    let ab_k = alpha.mul(&beta).to_quat().right_mul_const(&Quaternion::k());
    Ok(inner_product_poly(&ba)
        .sub(&norm_poly(b).mul(&inner_product_poly(a)))
        .sub(&alpha.norm_sq().sub(&beta.norm_sq()).mul(&inner_product_poly(b)))
        .add(&inner_poly(&db.mul(&ab_k), b).scale(&Scalar::from_integer(2))))
}
