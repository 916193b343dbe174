//! The worked examples used throughout the tests, the regression battery and
//! the CLI fixture files.

use crate::algebra::{Quaternion, Scalar};
use crate::poly::{QuatPoly, RealPoly};

/// A generator together with its known Han certificate `(a, b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CertifiedExample {
    pub name: &'static str,
    pub generator: QuatPoly,
    pub a: RealPoly,
    pub b: RealPoly,
}

/// Quintic whose Han fraction cancels on the left; certificate degree 1.
pub fn example1() -> CertifiedExample {
    CertifiedExample {
        name: "example1",
        generator: QuatPoly::from_int_coeffs(&[[-142, -63, -34, 94], [21, -21, 42, -42], [21, 0, 0, 0]]),
        a: RealPoly::from_ints(&[-2, 1]),
        b: RealPoly::from_ints(&[-1]),
    }
}

/// Quintic with no cancellation; certificate degree 2.
pub fn example2() -> CertifiedExample {
    CertifiedExample {
        name: "example2",
        generator: QuatPoly::from_int_coeffs(&[[10, 0, 0, 0], [-22, 14, 16, 12], [7, -19, -26, -2]]),
        a: RealPoly::from_ints(&[10, -22, 27]),
        b: RealPoly::from_ints(&[0, 14, -19]),
    }
}

/// Quintic over Q(sqrt 15) whose Han fraction cancels on the right.
pub fn example3() -> CertifiedExample {
    let r15 = Scalar::sqrt_of(15).expect("15 is squarefree");
    let c0 = Quaternion::new((-35).into(), 90.into(), &r15 * &Scalar::from_integer(3), &r15 * &Scalar::from_integer(-6));
    CertifiedExample {
        name: "example3",
        generator: QuatPoly::new(vec![c0, Quaternion::from_ints(0, -80, 0, 0), Quaternion::from_ints(8, 16, 0, 0)]),
        a: RealPoly::from_ints(&[-38, 51, -24, 4]),
        b: RealPoly::from_ints(&[-41, 32, -8]),
    }
}

pub fn certified_examples() -> Vec<CertifiedExample> {
    vec![example1(), example2(), example3()]
}

fn q(w: Scalar, x: Scalar, y: Scalar, z: Scalar) -> Quaternion {
    Quaternion::new(w, x, y, z)
}

/// `-(1/3) i t^3 + j t^2 + k t + 1`.
pub fn cubic_f0() -> QuatPoly {
    QuatPoly::new(vec![
        Quaternion::one(),
        Quaternion::k(),
        Quaternion::j(),
        q(0.into(), Scalar::ratio(-1, 3), 0.into(), 0.into()),
    ])
}

/// `2 i t^4 + 4 k t^3 + j t + 1`.
pub fn quartic_f0_a() -> QuatPoly {
    QuatPoly::from_int_coeffs(&[[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 4], [0, 2, 0, 0]])
}

/// `(-1 + k/3) t^4 + (i/3 + j) t^3 + k t^2 + j t + 1`.
pub fn quartic_f0_b() -> QuatPoly {
    let third = Scalar::ratio(1, 3);
    QuatPoly::new(vec![
        Quaternion::one(),
        Quaternion::j(),
        Quaternion::k(),
        q(0.into(), third.clone(), 1.into(), 0.into()),
        q((-1).into(), 0.into(), 0.into(), third),
    ])
}

/// `(n-2) i t^n + n k t^(n-1) + j t + 1`, assembled directly from the formula.
pub fn family_f0(n: usize) -> QuatPoly {
    let mut c = vec![Quaternion::zero(); n + 1];
    c[0] = Quaternion::one();
    c[1] = &c[1] + &Quaternion::j();
    c[n - 1] = &c[n - 1] + &Quaternion::from_ints(0, 0, 0, n as i64);
    c[n] = Quaternion::from_ints(0, n as i64 - 2, 0, 0);
    QuatPoly::new(c)
}

/// The named F0 catalog: cubic, both quartics and the family for n = 3..=12.
pub fn f0_catalog() -> Vec<(String, QuatPoly)> {
    let mut v = vec![
        ("cubic".to_string(), cubic_f0()),
        ("quartic_a".to_string(), quartic_f0_a()),
        ("quartic_b".to_string(), quartic_f0_b()),
    ];
    v.extend((3..=12).map(|n| (format!("family_{n}"), family_f0(n))));
    v
}
