//! Membership and structure tests: the `c_m` conditions for F0, triviality,
//! planarity, reduction of F_gamma elements to F0, and a certificate search.

use std::time::{Duration, Instant};

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{quat_inner, Complex, Quaternion, Scalar};
use crate::error::{Error, Result};
use crate::hodograph::{alpha_beta_conj, core_of, hodograph_of, is_primitive};
use crate::indicatrix::{han_fraction, inner_product_poly, rho_eta, verify_han};
use crate::linalg;
use crate::poly::{gcd_complex, gcd_real, has_coprime_components, inner_poly, ComplexPoly, QuatPoly, RealPoly};

fn nonzero(a: &QuatPoly) -> Result<()> {
    if a.is_zero() {
        Err(Error::ZeroPolynomial)
    } else {
        Ok(())
    }
}

/// The values `c_0 .. c_{2n-2}` for a generator of degree `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct CmList {
    pub degree: usize,
    pub values: Vec<Scalar>,
}

impl CmList {
    pub fn all_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }
}

/// `c_m = sum_{k=0}^{m} (k+1) <A_{m-k}, A_{k+1} i>` for `m <= 2n - 2`, with
/// coefficients past index `n` taken as zero.
fn c_direct(coeffs: &[Quaternion], n: usize) -> Vec<Scalar> {
    let at = |i: usize| coeffs.get(i).filter(|_| i <= n).cloned().unwrap_or_else(Quaternion::zero);
    let i = Quaternion::i();
    (0..(2 * n).saturating_sub(1))
        .map(|m| {
            (0..=m).fold(Scalar::zero(), |acc, k| {
                let term = quat_inner(&at(m - k), &(&at(k + 1) * &i));
                &acc + &(&term * &Scalar::from_integer(k as i64 + 1))
            })
        })
        .collect()
}

/// The F0 conditions of a degree-`n` generator. Both the direct sum and the
/// coefficients of `<A' i, A>` are computed, and the step from the truncated
/// degree-`(n-1)` list is replayed; any disagreement is an internal error.
pub fn c_coefficients(a: &QuatPoly) -> Result<CmList> {
    nonzero(a)?;
    let n = a.degree().expect("nonzero");
    let coeffs = a.coeffs();
    let values = c_direct(coeffs, n);
    let ip = inner_product_poly(a);
    if ip.degree().is_some_and(|d| d + 2 > 2 * n) || values.iter().enumerate().any(|(m, c)| *c != ip.coeff(m)) {
        return Err(Error::Internal("c_m disagree with the coefficients of <A' i, A>".into()));
    }
    if n >= 1 {
        let prev = c_direct(&coeffs[..n], n - 1);
        let an_i = &coeffs[n] * &Quaternion::i();
        for (m, c) in values.iter().enumerate() {
            let mut expect = prev.get(m).cloned().unwrap_or_else(Scalar::zero);
            if m + 1 >= n {
                let w = Scalar::from_integer(2 * n as i64 - m as i64 - 1);
                expect = &expect + &(&w * &quat_inner(&coeffs[m + 1 - n], &an_i));
            }
            if expect != *c {
                return Err(Error::Internal(format!("inductive step fails at m = {m}")));
            }
        }
    }
    Ok(CmList { degree: n, values })
}

/// Coprime components and vanishing indicatrix. Cross-checked against the
/// balance `<alpha' i, alpha> = <beta' i, beta>`.
pub fn is_in_f0(a: &QuatPoly) -> Result<bool> {
    nonzero(a)?;
    let vanishes = c_coefficients(a)?.all_zero();
    let (alpha, beta) = a.split();
    let rate = |c: &ComplexPoly| {
        let q = c.to_quat();
        inner_poly(&q.derivative().right_mul_const(&Quaternion::i()), &q)
    };
    if vanishes != (rate(&alpha) == rate(&beta)) {
        return Err(Error::Internal("F0 test disagrees with the alpha/beta balance".into()));
    }
    Ok(vanishes && has_coprime_components(a))
}

/// Evidence that `A = C * A~` with every coefficient of `A~` in `R + R u`,
/// `u` orthogonal to `i`. The direction is kept unnormalized; its unit
/// version is `direction / sqrt(direction_norm_sq)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrivialWitness {
    pub left_factor: Quaternion,
    pub direction: Quaternion,
    pub direction_norm_sq: Scalar,
}

/// Triviality test. `C` is the lowest nonzero coefficient: any nonzero
/// element of the coset `C (R + R u)` serves equally well.
pub fn is_trivial(a: &QuatPoly) -> Result<Option<TrivialWitness>> {
    nonzero(a)?;
    if !has_coprime_components(a) {
        return Err(Error::Precondition("triviality requires coprime components".into()));
    }
    let c = a.coeffs().iter().find(|q| !q.is_zero()).expect("nonzero").clone();
    let c_inv = c.inv()?;
    let vs: Vec<Quaternion> = a.coeffs().iter().map(|ak| (&c_inv * ak).vector_part()).collect();
    let direction = match vs.iter().find(|v| !v.is_zero()) {
        Some(d) => d.clone(),
        None => Quaternion::j(),
    };
    if !direction.x.is_zero() || vs.iter().any(|v| !v.cross(&direction).is_zero()) {
        return Ok(None);
    }
    let direction_norm_sq = direction.norm_sq();
    Ok(Some(TrivialWitness { left_factor: c, direction, direction_norm_sq }))
}

/// Whether the hodograph coefficients span at most a plane.
pub fn is_planar(a: &QuatPoly) -> Result<bool> {
    let h = hodograph_of(a)?;
    let len = h.components().iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    let rows: Vec<Vec<Scalar>> = (0..len).map(|l| h.components().iter().map(|p| p.coeff(l)).collect()).collect();
    Ok(linalg::rank(&rows) <= 2)
}

/// `gcd(alpha, conj(beta), gamma)` for `A = alpha + beta j`.
pub fn gcd_h_with_complex(a: &QuatPoly, gamma: &ComplexPoly) -> Result<ComplexPoly> {
    nonzero(a)?;
    if gamma.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (alpha, beta_c) = alpha_beta_conj(a);
    gcd_complex(&[alpha, beta_c, gamma.clone()])
}

fn complex_is_coprime(g: &ComplexPoly) -> bool {
    !g.is_zero() && gcd_real(&[g.re(), g.im()]).is_ok_and(|d| d.is_one())
}

/// `B = A conj(gamma) / |gcd(alpha, conj(beta), gamma)|^2`, and whether `B`
/// lies in F0 (which is the case exactly when `A` is in F_gamma).
pub fn reduce_to_f0(a: &QuatPoly, gamma: &ComplexPoly) -> Result<(QuatPoly, bool)> {
    nonzero(a)?;
    if !has_coprime_components(a) {
        return Err(Error::NotCoprime("components of A are not coprime".into()));
    }
    if !complex_is_coprime(gamma) {
        return Err(Error::NotCoprime("real and imaginary parts of gamma are not coprime".into()));
    }
    let g = gcd_h_with_complex(a, gamma)?;
    let b = a.checked_mul(&gamma.conj().to_quat())?.exact_div_real(&g.norm_sq())?;
    let in_f0 = is_in_f0(&b)?;
    Ok((b, in_f0))
}

/// Why a generator is known to lie in F.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MembershipBasis {
    F0,
    EqualDegreeCriterion,
    Certificate,
    Search,
}

impl MembershipBasis {
    pub fn label(self) -> &'static str {
        match self {
            MembershipBasis::F0 => "F0",
            MembershipBasis::EqualDegreeCriterion => "equal-degree criterion",
            MembershipBasis::Certificate => "certificate",
            MembershipBasis::Search => "search",
        }
    }
}

/// Three-valued verdict; there is no "not in F".
#[derive(Clone, Debug, PartialEq)]
pub enum Membership {
    ProvenInF { basis: MembershipBasis, certificate: Option<(RealPoly, RealPoly)> },
    CertificateRejected,
    Unknown,
}

impl Membership {
    pub fn is_proven(&self) -> bool {
        matches!(self, Membership::ProvenInF { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Membership::ProvenInF { .. } => "proven",
            Membership::CertificateRejected => "certificate-rejected",
            Membership::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchOptions {
    pub max_degree: usize,
    pub budget: Duration,
    pub seed: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { max_degree: 6, budget: Duration::from_secs(10), seed: 0 }
    }
}

/// F-membership from a certificate, from F0, from the equal-degree
/// criterion, or (optionally) from a search.
pub fn f_membership(a: &QuatPoly, certificate: Option<&ComplexPoly>, search: Option<&SearchOptions>) -> Result<Membership> {
    nonzero(a)?;
    if !has_coprime_components(a) {
        return Err(Error::Precondition("F-membership requires coprime components".into()));
    }
    if let Some(gamma) = certificate {
        return Ok(match reduce_to_f0(a, gamma) {
            Ok((_, true)) => Membership::ProvenInF {
                basis: MembershipBasis::Certificate,
                certificate: Some((gamma.re(), gamma.im())),
            },
            Ok((_, false)) | Err(Error::NotCoprime(_)) => Membership::CertificateRejected,
            Err(e) => return Err(e),
        });
    }
    if is_in_f0(a)? {
        return Ok(Membership::ProvenInF {
            basis: MembershipBasis::F0,
            certificate: Some((RealPoly::one(), RealPoly::zero())),
        });
    }
    let searched = match search {
        Some(opts) => search_gamma(a, opts)?,
        None => None,
    };
    if rho_eta(a)?.divisible {
        return Ok(Membership::ProvenInF { basis: MembershipBasis::EqualDegreeCriterion, certificate: searched });
    }
    Ok(match searched {
        Some(c) => Membership::ProvenInF { basis: MembershipBasis::Search, certificate: Some(c) },
        None => Membership::Unknown,
    })
}

fn eval_c64(p: &RealPoly, z: Complex64) -> Complex64 {
    p.coeffs().iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_f64())
}

/// Coefficients of `p(t + s)`.
fn taylor_shift(c: &[f64], s: f64) -> Vec<f64> {
    let mut out = vec![0.0; c.len()];
    for &ck in c.iter().rev() {
        for i in (1..out.len()).rev() {
            out[i] = out[i - 1] + s * out[i];
        }
        out[0] = ck + s * out[0];
    }
    out
}

/// Roots of a real polynomial from the eigenvalues of its companion matrix,
/// then polished by Newton steps. The unshifted Schur iteration stalls on
/// some symmetric root patterns (e.g. `t^4 + t^2 + 1`), so the iteration is
/// capped and retried on translates; `None` if nothing converges.
fn complex_roots(p: &RealPoly) -> Option<Vec<Complex64>> {
    let c: Vec<f64> = p.coeffs().iter().map(Scalar::to_f64).collect();
    let n = c.len() - 1;
    let dp = p.derivative();
    [0.0, 0.5, -0.7, 1.3].into_iter().find_map(|s| {
        let cs = taylor_shift(&c, s);
        let mut m = DMatrix::<f64>::zeros(n, n);
        for i in 1..n {
            m[(i, i - 1)] = 1.0;
        }
        for i in 0..n {
            m[(i, n - 1)] = -cs[i] / cs[n];
        }
        let schur = Schur::try_new(m, f64::EPSILON, 1000)?;
        Some(
            schur
                .complex_eigenvalues()
                .iter()
                .map(|&z0| {
                    let mut z = z0 + s;
                    for _ in 0..8 {
                        let d = eval_c64(&dp, z);
                        if d.norm() == 0.0 {
                            break;
                        }
                        z -= eval_c64(p, z) / d;
                    }
                    z
                })
                .collect(),
        )
    })
}

/// Nearest rational with a small denominator, if one is within tolerance.
fn rationalize(x: f64) -> Option<Scalar> {
    let tol = 1e-8 * (1.0 + x.abs());
    [1i64, 10, 100, 1_000, 10_000, 100_000, 1_000_000, 100_000_000]
        .into_iter()
        .filter_map(|d| Scalar::approximate_f64(x, d))
        .find(|s| (s.to_f64() - x).abs() <= tol)
}

/// Search for a Han certificate `(a, b)` with `deg(a + b i) <= max_degree`.
///
/// Every Han fraction `Im(g'/g)` has only simple poles, at the roots of
/// `|g|^2`; the residue at a root `z` in the upper half plane is `-i m / 2`
/// when `z` is a root of `g` of multiplicity `m` and `+i m / 2` when its
/// conjugate is. Reading the multiplicities off the residues fixes the monic
/// `g` numerically, which is then rationalized and verified exactly. The seed
/// drives a floating pre-screen of each candidate at random points.
///
/// Returned pairs are normalized with `a` monic and `deg b < deg a`.
pub fn search_gamma(a: &QuatPoly, opts: &SearchOptions) -> Result<Option<(RealPoly, RealPoly)>> {
    nonzero(a)?;
    if !has_coprime_components(a) {
        return Err(Error::Precondition("search requires coprime components".into()));
    }
    let start = Instant::now();
    let h = han_fraction(a)?;
    if h.is_zero() {
        return Ok(Some((RealPoly::one(), RealPoly::zero())));
    }
    let (p, q) = (h.numerator(), h.denominator());
    let dq = q.derivative();
    let deg_q = q.degree().unwrap_or(0);
    if deg_q % 2 == 1 || p.degree() >= q.degree() || !gcd_real(&[q.clone(), dq.clone()])?.is_one() {
        return Ok(None);
    }
    let mut factors = Vec::new();
    let mut total = 0usize;
    let Some(roots) = complex_roots(q) else {
        return Ok(None);
    };
    for z in roots.into_iter().filter(|z| z.im > 0.0) {
        if z.im < 1e-9 * (1.0 + z.norm()) {
            return Ok(None);
        }
        let r = Complex64::new(0.0, 2.0) * eval_c64(p, z) / eval_c64(&dq, z);
        let m = r.re.round();
        if m == 0.0 || (r - m).norm() > 1e-6 * (1.0 + m.abs()) {
            return Ok(None);
        }
        total += m.abs() as usize;
        if total > opts.max_degree {
            return Ok(None);
        }
        factors.push((if m > 0.0 { z } else { z.conj() }, m.abs() as usize));
    }
    if 2 * factors.len() != deg_q || start.elapsed() > opts.budget {
        return Ok(None);
    }
    let mut g = vec![Complex64::new(1.0, 0.0)];
    for (z, m) in factors {
        for _ in 0..m {
            let mut next = vec![Complex64::new(0.0, 0.0); g.len() + 1];
            for (i, c) in g.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * z;
            }
            g = next;
        }
    }
    let mut coeffs = Vec::with_capacity(g.len());
    for c in &g {
        match (rationalize(c.re), rationalize(c.im)) {
            (Some(re), Some(im)) => coeffs.push(Complex::new(re, im)),
            _ => return Ok(None),
        }
    }
    let gamma = ComplexPoly::new(coeffs);
    let (ca, cb) = (gamma.re(), gamma.im());
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let screen = (0..4).all(|_| {
        let t: f64 = rng.random_range(-2.0..2.0);
        let lhs = (ca.eval_f64(t) * cb.derivative().eval_f64(t) - ca.derivative().eval_f64(t) * cb.eval_f64(t))
            / (ca.eval_f64(t).powi(2) + cb.eval_f64(t).powi(2));
        (lhs - h.eval_f64(t)).abs() <= 1e-6 * (1.0 + lhs.abs())
    });
    if !screen || start.elapsed() > opts.budget {
        return Ok(None);
    }
    match verify_han(a, &ca, &cb) {
        Ok(true) => Ok(Some((ca, cb))),
        Ok(false) | Err(Error::NotCoprime(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Full verdict for one generator.
#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub in_widetilde: bool,
    pub in_f0: bool,
    pub trivial_witness: Option<TrivialWitness>,
    pub planar: bool,
    pub primitive: bool,
    pub core: QuatPoly,
    pub chi: ComplexPoly,
    pub core_degree: usize,
    pub membership: Membership,
    pub han_certificate: Option<(RealPoly, RealPoly)>,
    pub notes: Vec<String>,
}

pub fn classify(a: &QuatPoly, certificate: Option<&ComplexPoly>, search: Option<&SearchOptions>) -> Result<Classification> {
    nonzero(a)?;
    a.surd_base()?;
    let in_widetilde = has_coprime_components(a);
    let mut notes = vec!["regularity (real roots of sigma) not checked".to_string()];
    let in_f0 = is_in_f0(a)?;
    let (core, chi) = core_of(a)?;
    let primitive = is_primitive(a)?;
    let planar = is_planar(a)?;
    let (trivial_witness, membership) = if in_widetilde {
        (is_trivial(a)?, f_membership(a, certificate, search)?)
    } else {
        notes.push("components not coprime: triviality and F-membership not evaluated".into());
        (None, Membership::Unknown)
    };
    if trivial_witness.is_some() && !(in_f0 && planar && primitive) {
        return Err(Error::Internal("trivial element failed F0, planarity or primitivity".into()));
    }
    if membership.is_proven() && planar != is_trivial(&core)?.is_some() {
        return Err(Error::Internal("planarity disagrees with triviality of the core".into()));
    }
    let han_certificate = match &membership {
        Membership::ProvenInF { certificate, .. } => certificate.clone(),
        _ => None,
    };
    if let Membership::ProvenInF { basis: MembershipBasis::EqualDegreeCriterion, certificate: None } = membership {
        notes.push("in F by the equal-degree divisibility criterion; no explicit certificate".into());
    }
    Ok(Classification {
        in_widetilde,
        in_f0,
        trivial_witness,
        planar,
        primitive,
        core_degree: core.degree().unwrap_or(0),
        core,
        chi,
        membership,
        han_certificate,
        notes,
    })
}
