//! Exact algebra for polynomial space curves with rational rotation-minimizing
//! frames.
//!
//! A curve is described by a quaternion polynomial `A(t)`; its hodograph is
//! `A i A*`. The crate decides when the indicatrix of `A` vanishes, extracts
//! cores, tests triviality and planarity, builds the known families, and
//! produces exact and sampled adapted frames. All symbolic work runs over
//! `Q(sqrt d)`; floating point appears only in root seeding and sampling.

pub mod algebra;
pub mod classify;
pub mod construct;
pub mod error;
pub mod fixtures;
pub mod frames;
pub mod hodograph;
pub mod indicatrix;
pub mod linalg;
pub mod poly;
pub mod regression;

pub use algebra::{normalized_component, quat_inner, quat_product, Complex, Quaternion, Scalar};
pub use classify::{
    c_coefficients, classify, f_membership, gcd_h_with_complex, is_in_f0, is_planar, is_trivial, reduce_to_f0,
    search_gamma, Classification, CmList, Membership, MembershipBasis, SearchOptions, TrivialWitness,
};
pub use construct::{
    make_cubic, make_cubic_monic, make_f_element, make_family_n, make_quartic, make_trivial, CubicSpec,
    QuarticResult, QuarticSpec,
};
pub use error::{Error, Result};
pub use frames::{
    erf_symbolic, linspace, rmf_symbolic, rotate_frame, sample_frames, FrameKind, FrameSample, SampleError, SymbolicFrame,
};
pub use hodograph::{core_of, hodograph_of, integrate, is_primitive, CurvePosition, Hodograph};
pub use indicatrix::{
    han_fraction, indicatrix_product_residual, inner_product_poly, omega1, rho_eta, rotation_indicatrix,
    verify_han, IndicatrixPair, RhoEta,
};
pub use poly::{
    exact_divide, gcd_complex, gcd_real, norm_poly, quat_poly_conjugate, quat_poly_product, reduce_fraction,
    ComplexPoly, Poly, QuatPoly, RationalFunction, RealPoly,
};
