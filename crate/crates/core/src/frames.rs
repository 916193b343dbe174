//! Euler–Rodrigues and rotation-minimizing frames: exact rational entries,
//! the normal-plane rotation, and floating samples for export.

use rayon::prelude::*;

use crate::algebra::{Quaternion, Scalar};
use crate::classify::is_in_f0;
use crate::error::{Error, Result};
use crate::hodograph::{hodograph_of, integrate};
use crate::indicatrix::verify_han;
use crate::poly::{gcd_real, norm_poly, reduce_fraction, ComplexPoly, QuatPoly, RationalFunction, RealPoly};

/// Three rational unit vectors `f1, f2, f3`, each `numerators[k] / denominator`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicFrame {
    pub numerators: [[RealPoly; 3]; 3],
    pub denominator: RealPoly,
    pub entries: [[RationalFunction; 3]; 3],
}

fn vector_numerators(a: &QuatPoly, e: &Quaternion) -> [RealPoly; 3] {
    let [_, x, y, z] = a.mul(&QuatPoly::constant(e.clone())).mul(&a.conj()).components();
    [x, y, z]
}

fn dot(a: &[RealPoly; 3], b: &[RealPoly; 3]) -> RealPoly {
    a.iter().zip(b).fold(RealPoly::zero(), |acc, (p, q)| acc.add(&p.mul(q)))
}

impl SymbolicFrame {
    fn from_numerators(numerators: [[RealPoly; 3]; 3], denominator: RealPoly) -> Result<Self> {
        let mut entries: [[RationalFunction; 3]; 3] = Default::default();
        for (row, nums) in entries.iter_mut().zip(&numerators) {
            for (e, n) in row.iter_mut().zip(nums) {
                *e = reduce_fraction(n, &denominator)?;
            }
        }
        Ok(SymbolicFrame { numerators, denominator, entries })
    }

    /// `<N_a, N_b> - delta_ab D^2` for the six pairs `a <= b`.
    pub fn orthonormality_defects(&self) -> Vec<RealPoly> {
        let d2 = self.denominator.mul(&self.denominator);
        let mut out = Vec::with_capacity(6);
        for a in 0..3 {
            for b in a..3 {
                let d = dot(&self.numerators[a], &self.numerators[b]);
                out.push(if a == b { d.sub(&d2) } else { d });
            }
        }
        out
    }

    pub fn is_orthonormal(&self) -> bool {
        self.orthonormality_defects().iter().all(RealPoly::is_zero)
    }

    /// Numerator of `<f3, f2'>` over `D^2`; the ERF gives `2 N sigma` with `N`
    /// the Han numerator, and a rotation-minimizing frame gives zero.
    pub fn twist_numerator(&self) -> RealPoly {
        let d2 = [
            self.numerators[1][0].derivative(),
            self.numerators[1][1].derivative(),
            self.numerators[1][2].derivative(),
        ];
        dot(&self.numerators[2], &d2)
    }

    pub fn eval_f64(&self, t: f64) -> [[f64; 3]; 3] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.entries[r][c].eval_f64(t)))
    }
}

/// `(A i A*, A j A*, A k A*) / |A|^2`.
pub fn erf_symbolic(a: &QuatPoly) -> Result<SymbolicFrame> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    a.surd_base()?;
    let nums = [Quaternion::i(), Quaternion::j(), Quaternion::k()].map(|e| vector_numerators(a, &e));
    SymbolicFrame::from_numerators(nums, norm_poly(a))
}

/// `a - b i` as a complex polynomial.
fn rotor(a: &RealPoly, b: &RealPoly) -> ComplexPoly {
    ComplexPoly::from_parts(a, &b.neg())
}

/// ERF of `B = A (a - b i)`; requires `(a, b)` to be a Han certificate of `A`.
pub fn rmf_symbolic(a: &QuatPoly, ca: &RealPoly, cb: &RealPoly) -> Result<SymbolicFrame> {
    if !verify_han(a, ca, cb)? {
        return Err(Error::Precondition("(a, b) is not a Han certificate for A".into()));
    }
    erf_symbolic(&a.checked_mul(&rotor(ca, cb).to_quat())?)
}

/// Normal-plane rotation of the ERF of `A`:
/// `f2 = ((a^2-b^2) e2 - 2ab e3) / (a^2+b^2)`, `f3 = (2ab e2 + (a^2-b^2) e3) / (a^2+b^2)`.
pub fn rotate_frame(a: &QuatPoly, ca: &RealPoly, cb: &RealPoly) -> Result<([RationalFunction; 3], [RationalFunction; 3])> {
    if ca.is_zero() && cb.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !gcd_real(&[ca.clone(), cb.clone()])?.is_one() {
        return Err(Error::NotCoprime("(a, b) are not coprime".into()));
    }
    let erf = erf_symbolic(a)?;
    let c = ca.mul(ca).sub(&cb.mul(cb));
    let s = ca.mul(cb).scale(&Scalar::from_integer(2));
    let den = erf.denominator.mul(&ca.mul(ca).add(&cb.mul(cb)));
    let [_, e2, e3] = &erf.numerators;
    let mut f2: [RationalFunction; 3] = Default::default();
    let mut f3: [RationalFunction; 3] = Default::default();
    for k in 0..3 {
        f2[k] = reduce_fraction(&c.mul(&e2[k]).sub(&s.mul(&e3[k])), &den)?;
        f3[k] = reduce_fraction(&s.mul(&e2[k]).add(&c.mul(&e3[k])), &den)?;
    }
    Ok((f2, f3))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameKind {
    Erf,
    Rmf,
    Frenet,
}

impl std::str::FromStr for FrameKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "erf" => Ok(FrameKind::Erf),
            "rmf" => Ok(FrameKind::Rmf),
            "frenet" => Ok(FrameKind::Frenet),
            other => Err(Error::Parse(format!("unknown frame kind '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FrameSample {
    pub xi: f64,
    pub position: [f64; 3],
    pub f1: [f64; 3],
    pub f2: [f64; 3],
    pub f3: [f64; 3],
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleError {
    pub xi: f64,
    pub reason: String,
}

pub(crate) fn qmul_f64(p: [f64; 4], q: [f64; 4]) -> [f64; 4] {
    let [a1, b1, c1, d1] = p;
    let [a2, b2, c2, d2] = q;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

/// Images of `i, j, k` under the rotation `X -> q X q* / |q|^2`.
fn rotation_frame(q: [f64; 4]) -> Option<[[f64; 3]; 3]> {
    let n = q.iter().map(|c| c * c).sum::<f64>().sqrt();
    if n.is_nan() || n <= 1e-300 {
        return None;
    }
    let [w, x, y, z] = q.map(|c| c / n);
    Some([
        [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y + w * z), 2.0 * (x * z - w * y)],
        [2.0 * (x * y - w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z + w * x)],
        [2.0 * (x * z + w * y), 2.0 * (y * z - w * x), 1.0 - 2.0 * (x * x + y * y)],
    ])
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn norm3(a: [f64; 3]) -> f64 {
    dot3(a, a).sqrt()
}

const SAMPLE_TOL: f64 = 1e-12;

fn check_orthonormal(f: &[[f64; 3]; 3]) -> bool {
    (0..3).all(|a| {
        (a..3).all(|b| {
            let target = if a == b { 1.0 } else { 0.0 };
            (dot3(f[a], f[b]) - target).abs() <= SAMPLE_TOL
        })
    }) && {
        let c = cross3(f[0], f[1]);
        (0..3).all(|k| (c[k] - f[2][k]).abs() <= SAMPLE_TOL)
    }
}

/// Floating samples of the chosen frame along the curve with `r(0) = 0`.
/// A missing RMF certificate is accepted only for elements of F0.
pub fn sample_frames(
    a: &QuatPoly,
    kind: FrameKind,
    certificate: Option<(&RealPoly, &RealPoly)>,
    xs: &[f64],
) -> Result<Vec<std::result::Result<FrameSample, SampleError>>> {
    let h = hodograph_of(a)?;
    let pos = integrate(&h);
    let generator = match kind {
        FrameKind::Rmf => match certificate {
            Some((ca, cb)) => {
                if !verify_han(a, ca, cb)? {
                    return Err(Error::Precondition("(a, b) is not a Han certificate for A".into()));
                }
                a.checked_mul(&rotor(ca, cb).to_quat())?
            }
            None if is_in_f0(a)? => a.clone(),
            None => return Err(Error::Precondition("rmf frames need a certificate unless A is in F0".into())),
        },
        _ => a.clone(),
    };
    let dh = [h.xprime.derivative(), h.yprime.derivative(), h.zprime.derivative()];
    let dsigma = h.sigma.derivative();
    let sample = |&t: &f64| -> std::result::Result<FrameSample, SampleError> {
        let fail = |reason: &str| SampleError { xi: t, reason: reason.to_string() };
        let frame = match kind {
            FrameKind::Erf | FrameKind::Rmf => {
                if h.sigma.eval_f64(t) == 0.0 {
                    return Err(fail("parametric speed vanishes"));
                }
                rotation_frame(generator.eval_f64(t)).ok_or_else(|| fail("parametric speed vanishes"))?
            }
            FrameKind::Frenet => {
                let r1 = h.eval_f64(t);
                let r2 = [dh[0].eval_f64(t), dh[1].eval_f64(t), dh[2].eval_f64(t)];
                let (s, ds) = (h.sigma.eval_f64(t), dsigma.eval_f64(t));
                if s.is_nan() || s == 0.0 {
                    return Err(fail("parametric speed vanishes"));
                }
                let nv = [s * r2[0] - ds * r1[0], s * r2[1] - ds * r1[1], s * r2[2] - ds * r1[2]];
                let scale = s.abs() * norm3(r2) + ds.abs() * norm3(r1);
                if norm3(nv).is_nan() || norm3(nv) <= 1e-12 * scale {
                    return Err(fail("curvature vanishes"));
                }
                let f1 = r1.map(|c| c / norm3(r1));
                let f2 = nv.map(|c| c / norm3(nv));
                [f1, f2, cross3(f1, f2)]
            }
        };
        if !check_orthonormal(&frame) {
            return Err(fail("frame not orthonormal within tolerance"));
        }
        Ok(FrameSample { xi: t, position: pos.eval_f64(t), f1: frame[0], f2: frame[1], f3: frame[2] })
    };
    Ok(xs.par_iter().map(sample).collect())
}

/// Evenly spaced parameters `lo, ..., hi` (a single sample sits at `lo`).
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect(),
    }
}
