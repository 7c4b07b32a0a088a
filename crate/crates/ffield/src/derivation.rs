//! The derivation calculus at genus zero.
//!
//! The 1-form is fixed to omega = dt/(t - v0) for a designated rational point
//! v0 of S, with infinity required to lie in S: omega then has exactly two
//! simple poles (at v0 and infinity) and no zeros, and the associated
//! derivation is f' = (t - v0) * df/dt, so that df = f' * omega. Any other
//! admissible choice of omega differs by a constant factor, which cancels in
//! every inequality checked here. The exceptional set T of the positive-genus
//! construction is empty at genus zero and is represented as such.

use alloc::format;

use num_traits::Zero;

use crate::bipoly::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::places::PlaceSet;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::report::BoundReport;
use crate::sunit::SUnit;
use crate::Rat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerivationFrame {
    base_point: Rat,
    places: PlaceSet,
}

impl DerivationFrame {
    pub fn base_point(&self) -> &Rat {
        &self.base_point
    }

    pub fn places(&self) -> &PlaceSet {
        &self.places
    }

    pub fn chi(&self) -> i64 {
        self.places.chi()
    }
}

/// Builds the frame for omega = dt/(t - v0). Requires infinity in S and
/// (t - v0) dividing the finite part of S.
pub fn make_frame(s: &PlaceSet, v0: &Rat) -> Result<DerivationFrame> {
    if !s.includes_infinity() {
        return Err(Error::InvalidFrame(
            "the place set must contain infinity".into(),
        ));
    }
    if !s.contains_point(v0) {
        return Err(Error::InvalidFrame(format!(
            "base point {} is not a finite place of S",
            crate::poly::fmt_rat(v0)
        )));
    }
    Ok(DerivationFrame {
        base_point: v0.clone(),
        places: s.clone(),
    })
}

/// The frame derivation f' = (t - v0) * df/dt; satisfies the Leibniz rule
/// and kills exactly the constants.
pub fn dprime(f: &RationalFunction, frame: &DerivationFrame) -> RationalFunction {
    let factor = RationalFunction::from_poly(Polynomial::linear_root(&frame.base_point));
    &factor * &f.derivative()
}

/// A logarithmic derivative theta with d(u)/u = theta * omega, certified to
/// have only simple poles inside S and height at most chi_S.
#[derive(Clone, Debug)]
pub struct LogDerivative {
    pub theta: RationalFunction,
    pub unit: SUnit,
}

/// Computes theta_u = u'/u and asserts (rather than trusts) the two
/// guarantees: simple poles inside S, and height at most chi_S. A failure is
/// a theorem violation, i.e. a bug in this crate.
pub fn log_derivative(u: &SUnit, frame: &DerivationFrame) -> Result<LogDerivative> {
    if u.places() != frame.places() {
        return Err(Error::InvalidInput(
            "unit is not certified against the frame's place set".into(),
        ));
    }
    let theta = &dprime(u.value(), frame) / u.value();
    if !theta.is_zero() {
        if !theta.den().is_squarefree() {
            return Err(Error::TheoremViolation(
                "logarithmic derivative has a multiple pole".into(),
            ));
        }
        if !frame.places().s_free_part(theta.den()).is_constant() {
            return Err(Error::TheoremViolation(
                "logarithmic derivative has a pole outside S".into(),
            ));
        }
        if theta.v_infinity().expect("nonzero") < 0 {
            return Err(Error::TheoremViolation(
                "logarithmic derivative has a pole at infinity".into(),
            ));
        }
    }
    let chi = frame.chi();
    if chi < 0 || theta.height() > chi as u64 {
        return Err(Error::TheoremViolation(format!(
            "height {} of the logarithmic derivative exceeds chi = {}",
            theta.height(),
            chi
        )));
    }
    Ok(LogDerivative {
        theta,
        unit: u.clone(),
    })
}

/// Checks the two derivative bounds for an S-integer a:
/// H(a') <= H(a) + chi_S, and v(a') >= v(a) - 1 at every place of S.
pub fn lemma_3_6_check(a: &RationalFunction, frame: &DerivationFrame) -> Result<BoundReport> {
    let s = frame.places();
    if a.is_zero() {
        let mut rep = BoundReport::new("s-integer-derivative", Rat::zero(), Rat::zero(), true)
            .with_branch("zero");
        rep.push_note("a = 0: both bounds hold trivially");
        return Ok(rep);
    }
    if !s.s_free_part(a.den()).is_constant() {
        return Err(Error::InvalidInput(
            "argument has a pole at a finite place outside S".into(),
        ));
    }
    // infinity lies in S for every frame, so no pole check is needed there
    let da = dprime(a, frame);
    let height_ok = da.height() <= a.height() + frame.chi() as u64;

    // valuation drop bound at the finite places of S: the part of
    // num(a)*den(a) with multiplicities lowered by one and support in S must
    // divide the numerator of a' (after accounting for den(a')^... directly:
    // ord_alpha(a') >= ord_alpha(a) - 1 for F(alpha) = 0 is equivalent to
    // S_part(gcd(g, g')) | w for g = num(a)*den(a) and
    // w = (t - v0)*(num' den - num den').
    let valuation_ok = if da.is_zero() {
        true
    } else {
        let g = a.num() * a.den();
        let lowered = g.gcd(&g.derivative());
        let (s_part, _) = s.split(&lowered);
        let w = &Polynomial::linear_root(&frame.base_point)
            * &(&(&a.num().derivative() * a.den()) - &(a.num() * &a.den().derivative()));
        s_part.divides(&w)
    };
    // valuation drop at infinity
    let inf_ok = if da.is_zero() {
        true
    } else {
        da.v_infinity().expect("nonzero") >= a.v_infinity().expect("nonzero") - 1
    };

    let mut rep = BoundReport::new(
        "s-integer-derivative",
        Rat::from_integer(crate::Int::from(da.height())),
        Rat::from_integer(crate::Int::from(a.height() + frame.chi() as u64)),
        height_ok && valuation_ok && inf_ok,
    )
    .with_branch("height-and-valuation");
    rep.push_context("H(a)", format!("{}", a.height()));
    rep.push_context("chi", format!("{}", frame.chi()));
    rep.push_context("valuation_drop_ok", format!("{}", valuation_ok && inf_ok));
    Ok(rep)
}

/// For a constant-coefficient A(X, Y) and certified units, forms
/// B = (u1'/u1) X dA/dX + (u2'/u2) Y dA/dY and verifies the exact identity
/// (A(u1, u2))' = B(u1, u2). Returns B with the (always true on success)
/// identity flag; a failure is a theorem violation.
pub fn poly_derivative_image(
    a: &BivariatePolynomial,
    u1: &SUnit,
    u2: &SUnit,
    frame: &DerivationFrame,
) -> Result<(BivariatePolynomial, bool)> {
    if !a.has_constant_coefficients() {
        return Err(Error::InvalidInput(
            "A must have constant coefficients".into(),
        ));
    }
    let d1 = log_derivative(u1, frame)?.theta;
    let d2 = log_derivative(u2, frame)?.theta;
    let b = derivative_image(a, &d1, &d2);
    let value = a.eval(u1.value(), u2.value());
    let lhs = dprime(&value, frame);
    let rhs = b.eval(u1.value(), u2.value());
    if lhs != rhs {
        return Err(Error::TheoremViolation(
            "derivative image identity failed to expand".into(),
        ));
    }
    Ok((b, true))
}

/// B = d1 * X * dA/dX + d2 * Y * dA/dY, without the identity check.
pub fn derivative_image(
    a: &BivariatePolynomial,
    d1: &RationalFunction,
    d2: &RationalFunction,
) -> BivariatePolynomial {
    let x_part = &BivariatePolynomial::var_x() * &a.partial_x();
    let y_part = &BivariatePolynomial::var_y() * &a.partial_y();
    &x_part.scale(d1) + &y_part.scale(d2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_place_set, parse_ratfun};
    use crate::sunit::certify_sunit;

    fn frame(places: &str, v0: i64) -> DerivationFrame {
        make_frame(&parse_place_set(places).unwrap(), &crate::rat_from_i64(v0)).unwrap()
    }

    #[test]
    fn frame_construction() {
        assert!(make_frame(&parse_place_set("t, inf").unwrap(), &crate::rat_from_i64(0)).is_ok());
        // v0 must be a point of S
        assert!(matches!(
            make_frame(
                &parse_place_set("t-1, inf").unwrap(),
                &crate::rat_from_i64(0)
            ),
            Err(Error::InvalidFrame(_))
        ));
        // infinity must be in S
        assert!(matches!(
            make_frame(&parse_place_set("t, t-1").unwrap(), &crate::rat_from_i64(0)),
            Err(Error::InvalidFrame(_))
        ));
    }

    #[test]
    fn dprime_examples() {
        let fr = frame("t, inf", 0);
        assert_eq!(
            dprime(&parse_ratfun("t").unwrap(), &fr),
            parse_ratfun("t").unwrap()
        );
        assert!(dprime(&parse_ratfun("22/7").unwrap(), &fr).is_zero());
        assert_eq!(
            dprime(&parse_ratfun("t^2").unwrap(), &fr),
            parse_ratfun("2*t^2").unwrap()
        );
    }

    #[test]
    fn log_derivative_examples() {
        let fr = frame("t, inf", 0);
        let u = certify_sunit(&parse_ratfun("t").unwrap(), fr.places()).unwrap();
        let ld = log_derivative(&u, &fr).unwrap();
        assert_eq!(ld.theta, parse_ratfun("1").unwrap());

        let fr2 = frame("t*(t-1), inf", 0);
        let u2 = certify_sunit(&parse_ratfun("t-1").unwrap(), fr2.places()).unwrap();
        let ld2 = log_derivative(&u2, &fr2).unwrap();
        // theta = t * (1/(t-1)) = t/(t-1), height 1 <= chi = 1
        assert_eq!(ld2.theta, parse_ratfun("t/(t-1)").unwrap());

        let c = certify_sunit(&parse_ratfun("5").unwrap(), fr.places()).unwrap();
        assert!(log_derivative(&c, &fr).unwrap().theta.is_zero());
    }

    #[test]
    fn log_derivative_additivity() {
        let fr = frame("t*(t-1)*(t+2), inf", 0);
        let u = certify_sunit(&parse_ratfun("t^2*(t-1)").unwrap(), fr.places()).unwrap();
        let v = certify_sunit(&parse_ratfun("(t+2)^3/t").unwrap(), fr.places()).unwrap();
        let sum = &log_derivative(&u, &fr).unwrap().theta + &log_derivative(&v, &fr).unwrap().theta;
        let prod = certify_sunit(&(u.value() * v.value()), fr.places()).unwrap();
        assert_eq!(log_derivative(&prod, &fr).unwrap().theta, sum);
    }

    #[test]
    fn lemma_3_6_examples() {
        let fr = frame("t, inf", 0);
        // a = t + 1: a' = t, H = 1 <= 1 + 0
        let rep = lemma_3_6_check(&parse_ratfun("t+1").unwrap(), &fr).unwrap();
        assert!(rep.holds);
        // constants
        assert!(
            lemma_3_6_check(&parse_ratfun("9").unwrap(), &fr)
                .unwrap()
                .holds
        );
        // a = (t-1)^2 over S = {0, 1, inf}: a' = 2t(t-1) keeps v >= v(a) - 1
        let fr2 = frame("t*(t-1), inf", 0);
        let rep2 = lemma_3_6_check(&parse_ratfun("(t-1)^2").unwrap(), &fr2).unwrap();
        assert!(rep2.holds);
        assert_eq!(
            dprime(&parse_ratfun("(t-1)^2").unwrap(), &fr2),
            parse_ratfun("2*t*(t-1)").unwrap()
        );
    }

    #[test]
    fn derivative_image_product_rule() {
        let fr = frame("t, inf", 0);
        let u1 = certify_sunit(&parse_ratfun("t").unwrap(), fr.places()).unwrap();
        let u2 = certify_sunit(&parse_ratfun("t^2").unwrap(), fr.places()).unwrap();
        // A = X + Y
        let a = &BivariatePolynomial::var_x() + &BivariatePolynomial::var_y();
        let (_, ok) = poly_derivative_image(&a, &u1, &u2, &fr).unwrap();
        assert!(ok);
        // A = XY recovers the Leibniz rule on u1*u2
        let xy = &BivariatePolynomial::var_x() * &BivariatePolynomial::var_y();
        assert!(poly_derivative_image(&xy, &u1, &u2, &fr).is_ok());
        // constant A maps to zero
        let one = BivariatePolynomial::one();
        let (b, _) = poly_derivative_image(&one, &u1, &u2, &fr).unwrap();
        assert!(b.is_zero());
    }
}
