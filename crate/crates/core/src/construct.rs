//! Constructors: trivial elements, the non-trivial cubic and quartic
//! families, the degree-n family, and F elements built as core times a
//! complex multiplier.

use crate::algebra::{quat_inner, Quaternion, Scalar};
use crate::classify::{is_in_f0, is_trivial};
use crate::error::{Error, Result};
use crate::hodograph::core_of;
use crate::linalg;
use crate::poly::{gcd_complex, gcd_real, has_coprime_components, ComplexPoly, QuatPoly};

fn unit_real() -> Vec<Scalar> {
    vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()]
}

fn row(q: &Quaternion) -> Vec<Scalar> {
    q.components().into_iter().cloned().collect()
}

fn span_rank(qs: &[&Quaternion]) -> usize {
    let mut rows = vec![unit_real()];
    rows.extend(qs.iter().map(|q| row(q)));
    linalg::rank(&rows)
}

fn require_jk_span(a1: &Quaternion, a2: &Quaternion) -> Result<()> {
    if !a1.x.is_zero() || !a2.x.is_zero() {
        return Err(Error::Precondition("A1 and A2 must lie in R + Rj + Rk".into()));
    }
    if span_rank(&[a1, a2]) != 3 {
        return Err(Error::Precondition("degenerate span: 1, A1, A2 do not span R + Rj + Rk".into()));
    }
    Ok(())
}

fn nonzero_factor(c: &Quaternion) -> Result<()> {
    if c.is_zero() {
        Err(Error::Precondition("left factor C must be nonzero".into()))
    } else {
        Ok(())
    }
}

/// `C * sum (x_m + y_m u) t^m` for a pure `u` orthogonal to `i`.
pub fn make_trivial(c: &Quaternion, u: &Quaternion, coeffs: &[(Scalar, Scalar)]) -> Result<QuatPoly> {
    nonzero_factor(c)?;
    if u.is_zero() || !u.is_pure() {
        return Err(Error::Precondition("u must be a nonzero pure quaternion".into()));
    }
    if !u.x.is_zero() {
        return Err(Error::Precondition("u must be orthogonal to i".into()));
    }
    let tilde = QuatPoly::new(coeffs.iter().map(|(x, y)| &Quaternion::real(x.clone()) + &u.scale(y)).collect());
    let a = QuatPoly::constant(c.clone()).checked_mul(&tilde)?;
    if !has_coprime_components(&a) {
        return Err(Error::NotCoprime("components of the trivial element are not coprime".into()));
    }
    Ok(a)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CubicSpec {
    pub a1: Quaternion,
    pub a2: Quaternion,
    pub s3: Scalar,
    pub left_factor: Quaternion,
}

/// Vector `w = (A1 i) x (A2 i)` scaled to have i-component `target`.
fn scaled_cross(a1: &Quaternion, a2: &Quaternion, target: &Scalar) -> Result<Quaternion> {
    let i = Quaternion::i();
    let w = (a1 * &i).cross(&(a2 * &i));
    if w.x.is_zero() {
        return Err(Error::Precondition(if target.is_zero() {
            "underdetermined: (A1 i) x (A2 i) and <A1, A2 i> both have zero i-component".into()
        } else {
            "no solution: (A1 i) x (A2 i) has zero i-component".into()
        }));
    }
    Ok(w.scale(&(target / &w.x)))
}

/// `C (A3 t^3 + A2 t^2 + A1 t + 1)` with the vector part of `A3` forced
/// parallel to `(A1 i) x (A2 i)` with i-component `<A1, A2 i> / 3`.
pub fn make_cubic(spec: &CubicSpec) -> Result<QuatPoly> {
    require_jk_span(&spec.a1, &spec.a2)?;
    nonzero_factor(&spec.left_factor)?;
    let target = &quat_inner(&spec.a1, &(&spec.a2 * &Quaternion::i())) * &Scalar::ratio(1, 3);
    let a3 = &Quaternion::real(spec.s3.clone()) + &scaled_cross(&spec.a1, &spec.a2, &target)?;
    let tilde = QuatPoly::new(vec![Quaternion::one(), spec.a1.clone(), spec.a2.clone(), a3]);
    QuatPoly::constant(spec.left_factor.clone()).checked_mul(&tilde)
}

/// `t^3 + A2 t^2 + A1 t + A0`, the vector part of `A0` parallel to
/// `(A1 i) x (A2 i)` with i-component `-<A1, A2 i> / 3`.
pub fn make_cubic_monic(a1: &Quaternion, a2: &Quaternion, s0: &Scalar) -> Result<QuatPoly> {
    require_jk_span(a1, a2)?;
    let target = &quat_inner(a1, &(a2 * &Quaternion::i())) * &Scalar::ratio(-1, 3);
    let a0 = &Quaternion::real(s0.clone()) + &scaled_cross(a1, a2, &target)?;
    Ok(QuatPoly::new(vec![a0, a1.clone(), a2.clone(), Quaternion::one()]))
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuarticSpec {
    pub a1: Quaternion,
    pub a2: Quaternion,
    pub a3_j: Scalar,
    pub a3_k: Scalar,
    pub s3: Scalar,
    pub left_factor: Quaternion,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuarticResult {
    pub poly: QuatPoly,
    /// Dimension of the solution set for `A4`; the representative sets the
    /// free coordinates to zero.
    pub family_dim: usize,
    /// Non-triviality by the span conditions on `1, A1, A2, A3`.
    pub nontrivial: bool,
}

/// `C (A4 t^4 + A3 t^3 + A2 t^2 + A1 t + 1)`: the i-part of `A3` is
/// `<A1, A2 i> / 3`, and `A4` solves
/// `<A4, A2 i> = 0`, `<A4, A3 i> = 0`, `<A4, i> = <A1, A3 i> / 2`,
/// `<A1, A4 i> = -<A2, A3 i> / 3`.
pub fn make_quartic(spec: &QuarticSpec) -> Result<QuarticResult> {
    nonzero_factor(&spec.left_factor)?;
    if !spec.a1.x.is_zero() || !spec.a2.x.is_zero() {
        return Err(Error::Precondition("A1 and A2 must lie in R + Rj + Rk".into()));
    }
    let i = Quaternion::i();
    let third = Scalar::ratio(1, 3);
    let a3 = Quaternion::new(
        spec.s3.clone(),
        &quat_inner(&spec.a1, &(&spec.a2 * &i)) * &third,
        spec.a3_j.clone(),
        spec.a3_k.clone(),
    );
    let rows = vec![row(&(&spec.a2 * &i)), row(&(&a3 * &i)), row(&i), row(&(&spec.a1 * &i).scale(&Scalar::from_integer(-1)))];
    let rhs = vec![
        Scalar::zero(),
        Scalar::zero(),
        &quat_inner(&spec.a1, &(&a3 * &i)) * &Scalar::ratio(1, 2),
        -(&quat_inner(&spec.a2, &(&a3 * &i)) * &third),
    ];
    let (x, family_dim) = linalg::solve(&rows, &rhs)
        .ok_or_else(|| Error::Precondition("inconsistent conditions for A4".into()))?;
    let a4 = Quaternion::from_components([x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone()]);
    let low = span_rank(&[&spec.a1, &spec.a2]);
    let nontrivial = low == 3 || (low <= 2 && span_rank(&[&spec.a1, &spec.a2, &a3]) == 3);
    let tilde = QuatPoly::new(vec![Quaternion::one(), spec.a1.clone(), spec.a2.clone(), a3, a4]);
    let poly = QuatPoly::constant(spec.left_factor.clone()).checked_mul(&tilde)?;
    Ok(QuarticResult { poly, family_dim, nontrivial })
}

/// `(n-2) i t^n + n k t^(n-1) + j t + 1`.
pub fn make_family_n(n: usize) -> Result<QuatPoly> {
    if n < 3 {
        return Err(Error::Precondition(format!("family requires n >= 3, got {n}")));
    }
    let mut c = vec![Quaternion::zero(); n + 1];
    c[0] = Quaternion::one();
    c[1] = Quaternion::j();
    c[n - 1] = &c[n - 1] + &Quaternion::k().scale(&Scalar::from_integer(n as i64));
    c[n] = Quaternion::i().scale(&Scalar::from_integer(n as i64 - 2));
    Ok(QuatPoly::new(c))
}

/// `A = core(B0) * delta` with the certificate `gamma = conj(mu) delta /
/// |gcd(mu, delta)|^2`, where `B0 = core * mu`. Any real factor left in
/// `gamma` is divided out so that its parts are coprime.
pub fn make_f_element(b0: &QuatPoly, delta: &ComplexPoly) -> Result<(QuatPoly, ComplexPoly)> {
    if b0.is_zero() || delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_in_f0(b0)? {
        return Err(Error::Precondition("B0 is not in F0".into()));
    }
    if !gcd_real(&[delta.re(), delta.im()])?.is_one() {
        return Err(Error::NotCoprime("real and imaginary parts of delta are not coprime".into()));
    }
    let (core, mu) = core_of(b0)?;
    let a = core.checked_mul(&delta.to_quat())?;
    if !has_coprime_components(&a) {
        return Err(Error::NotCoprime("components of core * delta are not coprime".into()));
    }
    let g = gcd_complex(&[mu.clone(), delta.clone()])?;
    let nu = mu.conj().mul(delta).exact_div_right(&g.norm_sq().to_complex())?;
    let rest = gcd_real(&[nu.re(), nu.im()])?;
    let gamma = nu.exact_div_right(&rest.to_complex())?;
    Ok((a, gamma))
}

/// Whether a constructor output is non-trivial, for callers that have not
/// already checked coprimality.
pub fn is_nontrivial(a: &QuatPoly) -> Result<bool> {
    Ok(is_trivial(a)?.is_none())
}

/// Floating parametrization of the trivial family at degree `n`:
/// `(C, theta, x_0..x_n, y_0..y_n) -> coefficients of C sum (x_m + y_m u) t^m`
/// with `u = cos(theta) j + sin(theta) k`. Takes `2n + 7` parameters and
/// returns `4(n + 1)` reals.
pub fn trivial_parametrization_f64(params: &[f64], n: usize) -> Vec<f64> {
    assert_eq!(params.len(), 2 * n + 7, "parameter count");
    let c = [params[0], params[1], params[2], params[3]];
    let (s, co) = params[4].sin_cos();
    let (xs, ys) = params[5..].split_at(n + 1);
    xs.iter()
        .zip(ys)
        .flat_map(|(&x, &y)| crate::frames::qmul_f64(c, [x, 0.0, y * co, y * s]))
        .collect()
}
