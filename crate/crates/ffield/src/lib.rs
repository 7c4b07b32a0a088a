//! Exact arithmetic on the rational function field Q(t) of the projective line:
//! heights, divisors, valuations, S-units, Wronskians, resultants, a logarithmic
//! derivative calculus, and checkers for a family of gcd and degree inequalities
//! on maps to complements of plane curves.
//!
//! Everything is computed over the rational slice of the constant field: scalars
//! are arbitrary-precision rationals, and points of degree > 1 are kept as monic
//! squarefree polynomials (Galois orbits) rather than split into conjugates. No
//! statement handled here depends on the constant field beyond characteristic 0,
//! but the restriction to rational scalars is a deliberate choice of this crate,
//! not a mathematical necessity. There is no irreducible factorization anywhere:
//! multiplicity and membership questions reduce to gcds and radicals.
//!
//! All verdicts are decided in exact integer or rational arithmetic; cube-root
//! bounds are compared in cubed form. No floating point exists in this crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bipoly;
pub mod conic;
pub mod derivation;
pub mod divisor;
pub mod error;
pub mod expr;
pub mod families;
pub mod gcd_bounds;
pub mod genrand;
pub mod height;
pub mod implicitize;
pub mod places;
pub mod poly;
pub mod ratfun;
pub mod report;
pub mod rfpoly;
pub mod sunit;
pub mod wronskian;

pub use bipoly::BivariatePolynomial;
pub use conic::{ConicConfig, PlaneMorphism, Solution};
pub use derivation::{DerivationFrame, LogDerivative};
pub use divisor::Divisor;
pub use error::Error;
pub use expr::{parse_bivariate, parse_place_set, parse_polynomial, parse_ratfun};
pub use families::FamilyCertificate;
pub use places::PlaceSet;
pub use poly::Polynomial;
pub use ratfun::RationalFunction;
pub use report::BoundReport;
pub use sunit::{Dependence, SUnit};

/// Arbitrary-precision rational scalar. Always in lowest terms with a
/// positive denominator; zero is 0/1.
pub type Rat = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Degree bound 2^15 * 35 for the image of a morphism avoiding a smooth conic
/// plus two lines in general position.
pub const DEGREE_BOUND_CONST: u64 = 1_146_880;

/// Height bound 2^14 * 35 entering the trichotomy for solutions of
/// y^2 = u1^2 + lambda*u1 + u2 + 1.
pub const HEIGHT_BOUND_CONST: u64 = 573_440;

/// (3 * 2^(1/3))^3 = 54: the cubed constant of the gcd-sum bound for
/// multiplicatively independent unit pairs.
pub const GCD_SUM_CONST_CUBED: u64 = 54;

/// Rational from a machine integer.
pub fn rat_from_i64(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational from a machine integer.
pub fn rat_from_u64(n: u64) -> Rat {
    Rat::from_integer(Int::from(n))
}
