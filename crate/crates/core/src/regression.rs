//! The worked-example battery: reference values of the three quintic examples
//! and the F0 catalog, checked exactly. Used by the CLI and the tests.

use std::fmt;

use crate::algebra::{Quaternion, Scalar};
use crate::classify::{is_in_f0, is_trivial};
use crate::construct::{make_cubic, make_quartic, CubicSpec, QuarticSpec};
use crate::fixtures::{self, CertifiedExample};
use crate::hodograph::{hodograph_of, is_primitive};
use crate::indicatrix::{han_fraction, han_numerator, rho_eta, verify_han};
use crate::poly::{gcd_real, norm_poly, reduce_fraction, RealPoly};

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "PASS {}", self.name)
        } else {
            write!(f, "FAIL {}: {}", self.name, self.detail)
        }
    }
}

fn check(name: impl Into<String>, passed: bool, detail: impl FnOnce() -> String) -> Check {
    Check { name: name.into(), passed, detail: if passed { String::new() } else { detail() } }
}

fn eq_check<T: PartialEq + fmt::Debug>(name: String, got: &T, want: &T) -> Check {
    check(name, got == want, || format!("got {got:?}, expected {want:?}"))
}

/// Reference values for one worked example.
#[derive(Clone, Debug)]
pub struct Expected {
    pub hodograph: [RealPoly; 3],
    pub sigma: RealPoly,
    /// Monic `gcd(Han numerator, sigma)`.
    pub left_gcd: RealPoly,
    /// Monic `gcd(ab' - a'b, a^2 + b^2)`.
    pub right_gcd: RealPoly,
    pub fraction: (RealPoly, RealPoly),
    /// Equal-degree case: sigma divides rho and eta.
    pub divisible: Option<bool>,
}

fn rp(c: &[i64]) -> RealPoly {
    RealPoly::from_ints(c)
}

fn sqrt15_times(c: &[i64]) -> RealPoly {
    rp(c).scale(&Scalar::sqrt_of(15).expect("squarefree"))
}

pub fn expected(name: &str) -> Option<Expected> {
    let ten = Scalar::from_integer(10);
    Some(match name {
        "example1" => Expected {
            hodograph: [
                rp(&[14141, 7434, -8610, 882, 441]),
                rp(&[-22412, 12012, 420, -1764]),
                rp(&[-21500, 14700, 1428, -1764]),
            ],
            sigma: rp(&[325, 126, 21]).mul(&rp(&[5, -4, 1])).scale(&21.into()),
            left_gcd: rp(&[6825, 2646, 441]).monic(),
            right_gcd: RealPoly::one(),
            fraction: (rp(&[1]), rp(&[5, -4, 1])),
            divisible: None,
        },
        "example2" => Expected {
            hodograph: [
                rp(&[100, -440, 420, 40, -270]),
                rp(&[0, 240, -120, -1080, 960]),
                rp(&[0, -320, 1560, -1880, 440]),
            ],
            sigma: rp(&[100, -440, 1220, -1720, 1090]),
            left_gcd: RealPoly::one(),
            right_gcd: RealPoly::one(),
            fraction: (rp(&[14, -38, 4]), rp(&[10, -44, 122, -172, 109])),
            divisible: Some(true),
        },
        "example3" => Expected {
            hodograph: [
                rp(&[865, -1440, 872, -256, 32]).scale(&ten),
                sqrt15_times(&[2, -1]).scale(&480.into()),
                sqrt15_times(&[-29, 32, -8]).scale(&30.into()),
            ],
            sigma: rp(&[25, -16, 4]).mul(&rp(&[5, -4, 1])).scale(&80.into()),
            left_gcd: RealPoly::one(),
            right_gcd: rp(&[25, -16, 4]).monic(),
            fraction: (rp(&[35, -32, 8]), rp(&[125, -180, 109, -32, 4])),
            divisible: None,
        },
        _ => return None,
    })
}

/// Exact checks of one certified example against its reference values.
pub fn example_checks(ex: &CertifiedExample, want: &Expected) -> Vec<Check> {
    let n = ex.name;
    let mut out = Vec::new();
    let h = match hodograph_of(&ex.generator) {
        Ok(h) => h,
        Err(e) => return vec![check(format!("{n}: hodograph"), false, || e.to_string())],
    };
    out.push(check(format!("{n}: Pythagorean identity"), h.pythagorean_defect().is_zero(), || "defect nonzero".into()));
    let got = [h.xprime.clone(), h.yprime.clone(), h.zprime.clone()];
    out.push(eq_check(format!("{n}: hodograph matches reference x', y', z'"), &got, &want.hodograph));
    out.push(eq_check(format!("{n}: parametric speed"), &h.sigma, &want.sigma));
    out.push(check(format!("{n}: primitive hodograph"), is_primitive(&ex.generator).unwrap_or(false), || {
        "gcd(x', y', z') != 1".into()
    }));
    let sigma = norm_poly(&ex.generator);
    let left = gcd_real(&[han_numerator(&ex.generator), sigma]).unwrap_or_else(|_| RealPoly::zero());
    out.push(eq_check(format!("{n}: left gcd"), &left, &want.left_gcd));
    let (a, b) = (&ex.a, &ex.b);
    let wron = a.mul(&b.derivative()).sub(&a.derivative().mul(b));
    let right = gcd_real(&[wron, a.mul(a).add(&b.mul(b))]).unwrap_or_else(|_| RealPoly::zero());
    out.push(eq_check(format!("{n}: right gcd"), &right, &want.right_gcd));
    let frac = han_fraction(&ex.generator).ok();
    let want_frac = reduce_fraction(&want.fraction.0, &want.fraction.1).ok();
    out.push(eq_check(format!("{n}: reduced Han fraction"), &frac, &want_frac));
    let cert = verify_han(&ex.generator, a, b);
    out.push(check(format!("{n}: certificate (a, b) verifies"), matches!(cert, Ok(true)), || format!("{cert:?}")));
    if let Some(d) = want.divisible {
        let got = rho_eta(&ex.generator).map(|r| r.divisible).ok();
        out.push(eq_check(format!("{n}: rho and eta divisible by sigma"), &got, &Some(d)));
    }
    out
}

/// F0 catalog and the cubic/quartic constructors.
pub fn catalog_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for (name, a) in fixtures::f0_catalog() {
        let f0 = is_in_f0(&a);
        out.push(check(format!("{name}: in F0"), matches!(f0, Ok(true)), || format!("{f0:?}")));
        let t = is_trivial(&a);
        out.push(check(format!("{name}: non-trivial"), matches!(t, Ok(None)), || format!("{t:?}")));
    }
    let cubic = make_cubic(&CubicSpec {
        a1: Quaternion::k(),
        a2: Quaternion::j(),
        s3: Scalar::zero(),
        left_factor: Quaternion::one(),
    });
    out.push(eq_check("make_cubic(k, j) reproduces the cubic".into(), &cubic.ok(), &Some(fixtures::cubic_f0())));
    let quartic = make_quartic(&QuarticSpec {
        a1: Quaternion::j(),
        a2: Quaternion::zero(),
        a3_j: Scalar::zero(),
        a3_k: Scalar::from_integer(4),
        s3: Scalar::zero(),
        left_factor: Quaternion::one(),
    })
    .map(|r| r.poly);
    out.push(eq_check(
        "make_quartic(j, 0, 4k) reproduces the quartic".into(),
        &quartic.ok(),
        &Some(fixtures::quartic_f0_a()),
    ));
    out
}

/// The battery over the given examples (each paired with the reference
/// values of the example it claims to be) plus the catalog.
pub fn run_battery_with(examples: &[CertifiedExample]) -> Vec<Check> {
    let mut out = Vec::new();
    for ex in examples {
        match expected(ex.name) {
            Some(want) => out.extend(example_checks(ex, &want)),
            None => out.push(check(format!("{}: known example", ex.name), false, || "no reference values".into())),
        }
    }
    out.extend(catalog_checks());
    out
}

pub fn run_battery() -> Vec<Check> {
    run_battery_with(&fixtures::certified_examples())
}

/// Example 1 with `u` raised by one.
pub fn perturbed_example1() -> CertifiedExample {
    let mut ex = fixtures::example1();
    ex.generator = ex.generator.add(&crate::poly::QuatPoly::one());
    ex
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_passes() {
        let report = run_battery();
        let failed: Vec<_> = report.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }

    #[test]
    fn perturbation_is_reported() {
        let report = run_battery_with(&[perturbed_example1()]);
        let get = |s: &str| report.iter().find(|c| c.name.ends_with(s)).unwrap().passed;
        assert!(get("Pythagorean identity"));
        assert!(!get("certificate (a, b) verifies"));
    }

    #[test]
    fn deterministic() {
        let a: Vec<String> = run_battery().iter().map(|c| c.to_string()).collect();
        let b: Vec<String> = run_battery().iter().map(|c| c.to_string()).collect();
        assert_eq!(a, b);
    }
}
