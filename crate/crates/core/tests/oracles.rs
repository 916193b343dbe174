//! Hand-entered values checked through the public API only.

use rrmf_core::{
    erf_symbolic, fixtures, han_fraction, hodograph_of, integrate, is_in_f0, is_trivial, make_family_n, omega1,
    reduce_fraction, rmf_symbolic, rotate_frame, sample_frames, verify_han, FrameKind, QuatPoly, Quaternion,
    RationalFunction, RealPoly, Scalar,
};

fn rp(c: &[i64]) -> RealPoly {
    RealPoly::from_ints(c)
}

#[test]
fn example2_hodograph_and_curve() {
    let ex = fixtures::example2();
    let h = hodograph_of(&ex.generator).unwrap();
    assert_eq!(h.xprime, rp(&[100, -440, 420, 40, -270]));
    assert_eq!(h.sigma, rp(&[100, -440, 1220, -1720, 1090]));
    let r = integrate(&h);
    assert_eq!(r.x, rp(&[0, 100, -220, 140, 10, -54]));
    assert_eq!(r.arclen.coeff(0), Scalar::zero());
}

#[test]
fn example1_fraction_and_certificate() {
    let ex = fixtures::example1();
    assert_eq!(han_fraction(&ex.generator).unwrap(), reduce_fraction(&rp(&[1]), &rp(&[5, -4, 1])).unwrap());
    assert!(verify_han(&ex.generator, &rp(&[-2, 1]), &rp(&[-1])).unwrap());
    // the opposite orientation of the pair is the conjugate certificate
    assert!(!verify_han(&ex.generator, &rp(&[-2, 1]), &rp(&[1])).unwrap());
    assert!(verify_han(&ex.generator, &rp(&[2, -1]), &rp(&[1])).unwrap());
}

#[test]
fn sqrt15_coefficients_parse() {
    let c: Scalar = "3*sqrt(15)".parse().unwrap();
    assert_eq!(c.base(), 15);
    let ex = fixtures::example3();
    assert_eq!(ex.generator.coeff(0).y, c);
    assert!(verify_han(&ex.generator, &ex.a, &ex.b).unwrap());
}

#[test]
fn line_is_trivial_and_twist_free() {
    let a = QuatPoly::new(vec![Quaternion::one(), Quaternion::j()]);
    assert!(is_in_f0(&a).unwrap());
    assert!(is_trivial(&a).unwrap().is_some());
    assert_eq!(omega1(&a).unwrap(), RationalFunction::zero());
}

#[test]
fn frames_at_the_origin() {
    let ex = fixtures::example2();
    let erf = erf_symbolic(&ex.generator).unwrap();
    assert_eq!(erf.eval_f64(0.0), [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
    let rmf = rmf_symbolic(&ex.generator, &ex.a, &ex.b).unwrap();
    assert!(rmf.is_orthonormal() && rmf.twist_numerator().is_zero());
    let (f2, f3) = rotate_frame(&ex.generator, &ex.a, &ex.b).unwrap();
    assert_eq!([f2, f3], [rmf.entries[1].clone(), rmf.entries[2].clone()]);
    let s = sample_frames(&ex.generator, FrameKind::Erf, None, &[0.0]).unwrap();
    let s = s[0].as_ref().unwrap();
    assert_eq!((s.position, s.f1, s.f2, s.f3), ([0.0; 3], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]));
}

#[test]
fn half_turn_rotation() {
    let a = make_family_n(3).unwrap();
    let erf = erf_symbolic(&a).unwrap();
    let (f2, f3) = rotate_frame(&a, &RealPoly::zero(), &RealPoly::one()).unwrap();
    for k in 0..3 {
        assert_eq!(f2[k], erf.entries[1][k].neg());
        assert_eq!(f3[k], erf.entries[2][k].neg());
    }
}

#[test]
fn rmf_needs_a_certificate_outside_f0() {
    let ex = fixtures::example1();
    assert!(sample_frames(&ex.generator, FrameKind::Rmf, None, &[0.5]).is_err());
    assert!(rmf_symbolic(&ex.generator, &rp(&[1]), &rp(&[0])).is_err());
    assert!(sample_frames(&make_family_n(5).unwrap(), FrameKind::Rmf, None, &[0.5]).is_ok());
}
