//! Explicit curve families on complements of cubics and of non-normal
//! crossing quartics, with machine-checked avoidance certificates: the
//! defining form of the boundary divisor, evaluated along each
//! parametrization, collapses to an exact monomial c * t^k, hence never
//! vanishes on the multiplicative group. Degrees grow without bound while
//! the Euler characteristic stays 0, which is exactly what the
//! general-position quartic forbids.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::conic::{image_degree, PlaneMorphism};

use crate::error::{Error, Result};
use crate::places::PlaceSet;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::Rat;

/// A parametrized member of one of the boundary-divisor families, together
/// with its exact avoidance witness and its implicitization degree.
#[derive(Clone, Debug)]
pub struct FamilyCertificate {
    pub morphism: PlaneMorphism,
    /// Which boundary divisor the witness certifies avoidance of.
    pub divisor_id: String,
    /// The value of the (principal) defining form along the
    /// parametrization: exactly c * t^k with c != 0.
    pub avoidance_witness: Polynomial,
    /// Total degree of the reduced image curve, by implicitization.
    pub degree: u64,
    /// Euler characteristic of the parametrizing curve (always 0 here:
    /// S = {0, infinity} on the line).
    pub euler_char: i64,
}

impl FamilyCertificate {
    /// The places of the parametrizing multiplicative group.
    pub fn places() -> PlaceSet {
        PlaceSet::new(Polynomial::variable(), true).expect("t is squarefree")
    }

    /// (c, k) with witness = c * t^k.
    pub fn witness_monomial(&self) -> (Rat, usize) {
        let k = self.avoidance_witness.order_at_zero().expect("nonzero");
        (self.avoidance_witness.coeff(k), k)
    }
}

/// Checks that `value` is exactly c * t^k with c != 0 (so it never vanishes
/// on the multiplicative group) and returns it as a polynomial.
fn unit_monomial(value: &RationalFunction, what: &str) -> Result<Polynomial> {
    if value.is_zero() || !value.den().is_one() {
        return Err(Error::TheoremViolation(format!(
            "{what} is not a polynomial monomial: {value}"
        )));
    }
    let p = value.num();
    let k = p.order_at_zero().expect("nonzero");
    if p.degree() != Some(k) {
        return Err(Error::TheoremViolation(format!(
            "{what} = {value} is not of the form c * t^k"
        )));
    }
    Ok(p.clone())
}

fn poly_rf(p: &Polynomial) -> RationalFunction {
    RationalFunction::from_poly(p.clone())
}

/// Curve avoiding a cuspidal cubic (z y^2 = x^3 in the coordinate order
/// (x : y : z)): t -> (t^{2n} p(t) : t^{3n} : p(t)^3 + 1), whose cubic form
/// evaluates to exactly t^{6n}. Requires p(0) != 0.
///
/// The parametrization can factor (e.g. a constant p, or p even in t with
/// n even); the reduced image degree then divides out the index, so the
/// certified lower bound is degree * index >= 2n + deg p.
pub fn cusp_family(n: u32, p: &Polynomial) -> Result<FamilyCertificate> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    if p.is_zero() || p.coeff(0).is_zero() {
        return Err(Error::InvalidInput("p(0) must be nonzero".into()));
    }
    let tn = Polynomial::monomial(Rat::from_integer(1.into()), n as usize);
    let x = &tn.pow(2) * p;
    let y = tn.pow(3);
    let z = &p.pow(3) + &Polynomial::one();
    // cubic form z y^2 - x^3 on the raw triple
    let form = &(&z * &y.pow(2)) - &x.pow(3);
    let expected = Polynomial::monomial(Rat::from_integer(1.into()), 6 * n as usize);
    if form != expected {
        return Err(Error::TheoremViolation(format!(
            "cusp witness expanded to {form}, not t^{}",
            6 * n
        )));
    }
    let witness = unit_monomial(&poly_rf(&form), "cusp form value")?;
    let morphism = PlaneMorphism::new(x, y, z)?;
    let (ax, ay) = morphism.affine()?;
    let (degree, index) = crate::implicitize::image_curve_degree_with_index(&ax, &ay)?;
    let lower = 2 * n as u64 + p.degree().unwrap_or(0) as u64;
    if degree * index < lower {
        return Err(Error::TheoremViolation(format!(
            "cusp degree {degree} * index {index} fell below 2n + deg p = {lower}"
        )));
    }
    Ok(FamilyCertificate {
        morphism,
        divisor_id: "cuspidal cubic z*y^2 - x^3 = 0".into(),
        avoidance_witness: witness,
        degree,
        euler_char: FamilyCertificate::places().chi(),
    })
}

/// Curve avoiding a nodal cubic (z y^2 = x^3 + x^2 z):
/// t -> (4 t^n (t^n - 1) : 4 t^n (t^n + 1) : (t^n - 1)^3 + 8), whose nodal
/// form evaluates to exactly 512 t^{3n}.
///
/// The parametrization factors through s = t^n, so the image curve is the
/// same cubic for every n (the certificate records the honest
/// implicitization degree); the avoidance witness is what varies with n.
pub fn node_family(n: u32) -> Result<FamilyCertificate> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let tn = Polynomial::monomial(Rat::from_integer(1.into()), n as usize);
    let four = Polynomial::constant_i64(4);
    let x = &(&four * &tn) * &(&tn - &Polynomial::one());
    let y = &(&four * &tn) * &(&tn + &Polynomial::one());
    let z = &(&tn - &Polynomial::one()).pow(3) + &Polynomial::constant_i64(8);
    let form = &(&(&z * &y.pow(2)) - &x.pow(3)) - &(&x.pow(2) * &z);
    let expected = Polynomial::monomial(Rat::from_integer(512.into()), 3 * n as usize);
    if form != expected {
        return Err(Error::TheoremViolation(format!(
            "node witness expanded to {form}, not 512 t^{}",
            3 * n
        )));
    }
    let witness = unit_monomial(&poly_rf(&form), "nodal form value")?;
    let morphism = PlaneMorphism::new(x, y, z)?;
    let degree = image_degree(&morphism)?;
    Ok(FamilyCertificate {
        morphism,
        divisor_id: "nodal cubic z*y^2 - x^3 - x^2*z = 0".into(),
        avoidance_witness: witness,
        degree,
        euler_char: FamilyCertificate::places().chi(),
    })
}

/// Curve avoiding a smooth conic plus a secant line:
/// f(t) = ((t^2 - t^n + 1)/(2t), (1 - t^n - t^2)/(2t)) with
/// x^2 - y^2 - 1 = -t^n exactly; the image has degree exactly n.
pub fn secant_conic_family(n: u32) -> Result<FamilyCertificate> {
    if n < 2 {
        return Err(Error::InvalidInput("the secant family needs n >= 2".into()));
    }
    let t = RationalFunction::variable();
    let two_t = &RationalFunction::constant_i64(2) * &t;
    let tn = t.pow_u(n);
    let t2 = t.pow_u(2);
    let one = RationalFunction::one();
    let x = &(&(&t2 - &tn) + &one) / &two_t;
    let y = &(&(&one - &tn) - &t2) / &two_t;
    // displayed identity x^2 - y^2 = 1 - t^n
    let conic_value = &(&(&x * &x) - &(&y * &y)) - &one;
    if conic_value != -&tn {
        return Err(Error::TheoremViolation(format!(
            "secant identity expanded to {conic_value}, not -t^{n}"
        )));
    }
    let witness = unit_monomial(&conic_value, "secant conic value")?;
    let morphism = PlaneMorphism::from_affine(&x, &y)?;
    // the line x0 = 0 is avoided exactly when the denominators are t-powers
    let line_value = poly_rf(&morphism.coords()[0]);
    unit_monomial(&line_value, "secant line value")?;
    let degree = image_degree(&morphism)?;
    if degree != n as u64 {
        return Err(Error::TheoremViolation(format!(
            "secant image degree {degree} != n = {n}"
        )));
    }
    Ok(FamilyCertificate {
        morphism,
        divisor_id: "smooth conic x^2 - y^2 = 1 plus the secant line at infinity".into(),
        avoidance_witness: witness,
        degree,
        euler_char: FamilyCertificate::places().chi(),
    })
}

/// Curve avoiding three lines in general position: t -> (1 : t : t^n); all
/// three coordinates are unit monomials and the image x1^n = x2 x0^{n-1}
/// has degree exactly n. The witness is the full form x0 x1 x2 = t^{n+1}.
pub fn three_lines_family(n: u32) -> Result<FamilyCertificate> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let x0 = Polynomial::one();
    let x1 = Polynomial::variable();
    let x2 = Polynomial::monomial(Rat::from_integer(1.into()), n as usize);
    let form = &(&x0 * &x1) * &x2;
    let witness = unit_monomial(&poly_rf(&form), "three-lines form value")?;
    let morphism = PlaneMorphism::new(x0, x1, x2)?;
    let degree = image_degree(&morphism)?;
    if degree != n as u64 {
        return Err(Error::TheoremViolation(format!(
            "three-lines image degree {degree} != n = {n}"
        )));
    }
    Ok(FamilyCertificate {
        morphism,
        divisor_id: "three lines x0 x1 x2 = 0".into(),
        avoidance_witness: witness,
        degree,
        euler_char: FamilyCertificate::places().chi(),
    })
}

/// Curve avoiding a conic plus two lines meeting ON the conic (so the
/// configuration has a non-normal crossing): f(t) = (t, (t^{n+1}-1)/(t-1)),
/// with the conic (x - 1) y + 1 evaluating to exactly t^{n+1} and the line
/// x = 0 to t; the image has degree exactly n.
pub fn tangent_crossing_family(n: u32) -> Result<FamilyCertificate> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let t = RationalFunction::variable();
    let one = RationalFunction::one();
    let num = &t.pow_u(n + 1) - &one;
    let den = &t - &one;
    let y = &num / &den; // 1 + t + ... + t^n
    let conic_value = &(&(&t - &one) * &y) + &one;
    let expected = t.pow_u(n + 1);
    if conic_value != expected {
        return Err(Error::TheoremViolation(format!(
            "tangent-crossing conic value expanded to {conic_value}, not t^{}",
            n + 1
        )));
    }
    let witness = unit_monomial(&conic_value, "tangent-crossing conic value")?;
    unit_monomial(&t, "line value x = t")?;
    let morphism = PlaneMorphism::from_affine(&t, &y)?;
    let degree = image_degree(&morphism)?;
    if degree != n as u64 {
        return Err(Error::TheoremViolation(format!(
            "tangent-crossing image degree {degree} != n = {n}"
        )));
    }
    Ok(FamilyCertificate {
        morphism,
        divisor_id: "conic (x-1)y + 1 = 0 plus lines x = 0 and x0 = 0 meeting on it".into(),
        avoidance_witness: witness,
        degree,
        euler_char: FamilyCertificate::places().chi(),
    })
}

/// Which family a table or suite addresses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cusp { p: Polynomial },
    Node,
    SecantConic,
    ThreeLines,
    TangentCrossing,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cusp { .. } => "cusp",
            Family::Node => "node",
            Family::SecantConic => "secant",
            Family::ThreeLines => "three-lines",
            Family::TangentCrossing => "tangent",
        }
    }

    pub fn min_n(&self) -> u32 {
        match self {
            Family::SecantConic => 2,
            _ => 1,
        }
    }

    pub fn certificate(&self, n: u32) -> Result<FamilyCertificate> {
        match self {
            Family::Cusp { p } => cusp_family(n, p),
            Family::Node => node_family(n),
            Family::SecantConic => secant_conic_family(n),
            Family::ThreeLines => three_lines_family(n),
            Family::TangentCrossing => tangent_crossing_family(n),
        }
    }
}

/// One table row: (n, image degree, Euler characteristic).
pub type TableRow = (u32, u64, i64);

/// Emits (n, degree, chi) for the family and asserts strictly increasing
/// degree at constant chi.
///
/// The node family is rejected here: its parametrization factors through
/// t^n, so its image degree is the constant 3 and cannot witness
/// unboundedness; its certificates remain available individually.
pub fn unboundedness_table(family: &Family, n_max: u32) -> Result<Vec<TableRow>> {
    if matches!(family, Family::Node) {
        return Err(Error::InvalidInput(
            "the node parametrization factors through t^n: its image degree is constant".into(),
        ));
    }
    let start = family.min_n();
    if n_max < start.max(2) {
        return Err(Error::InvalidInput("n_max must be at least 2".into()));
    }
    let mut rows: Vec<TableRow> = Vec::new();
    for n in start..=n_max {
        let cert = family.certificate(n)?;
        if let Some(&(_, prev_deg, prev_chi)) = rows.last() {
            if cert.degree <= prev_deg {
                return Err(Error::TheoremViolation(format!(
                    "{} degree failed to increase at n = {n}",
                    family.name()
                )));
            }
            if cert.euler_char != prev_chi {
                return Err(Error::TheoremViolation(format!(
                    "{} Euler characteristic changed at n = {n}",
                    family.name()
                )));
            }
        }
        rows.push((n, cert.degree, cert.euler_char));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_polynomial;
    use crate::rat_from_i64;

    #[test]
    fn cusp_witnesses() {
        // n = 1, p = 1 + t: (p^3 + 1) t^6 - t^6 p^3 = t^6, oracle by the
        // symbolic expansion done inside the constructor
        let cert = cusp_family(1, &parse_polynomial("1+t").unwrap()).unwrap();
        let (c, k) = cert.witness_monomial();
        assert_eq!((c, k), (rat_from_i64(1), 6));
        assert!(cert.degree >= 3);
        assert_eq!(cert.euler_char, 0);
        // trivial specialization
        let triv = cusp_family(1, &Polynomial::one()).unwrap();
        assert_eq!(triv.witness_monomial().1, 6);
        assert!(triv.degree >= 2);
        // n = 3, p = 2 + t^2
        let big = cusp_family(3, &parse_polynomial("2+t^2").unwrap()).unwrap();
        assert_eq!(big.witness_monomial().1, 18);
        // p(0) = 0 rejected
        assert!(cusp_family(1, &parse_polynomial("t").unwrap()).is_err());
        // a factoring parametrization divides the degree by the index but
        // keeps the certified product bound: p = 2 + t^2 at even n
        let even = cusp_family(2, &parse_polynomial("2+t^2").unwrap()).unwrap();
        assert_eq!(even.degree, 3);
        // constant p at n = 2 factors through t^2 entirely
        let cc = cusp_family(2, &Polynomial::one()).unwrap();
        assert_eq!(cc.witness_monomial().1, 12);
    }

    #[test]
    fn node_witnesses() {
        for n in 1..=5u32 {
            let cert = node_family(n).unwrap();
            let (c, k) = cert.witness_monomial();
            assert_eq!(c, rat_from_i64(512), "n = {n}");
            assert_eq!(k, 3 * n as usize, "n = {n}");
            assert_eq!(cert.euler_char, 0);
            // the image is the same cubic for every n
            assert_eq!(cert.degree, 3);
        }
    }

    #[test]
    fn secant_identity_and_degree() {
        for n in 2..=7u32 {
            let cert = secant_conic_family(n).unwrap();
            let (c, k) = cert.witness_monomial();
            assert_eq!(c, rat_from_i64(-1));
            assert_eq!(k, n as usize);
            assert_eq!(cert.degree, n as u64);
        }
        assert!(secant_conic_family(1).is_err());
    }

    #[test]
    fn three_lines_degrees() {
        assert_eq!(three_lines_family(1).unwrap().degree, 1);
        assert_eq!(three_lines_family(4).unwrap().degree, 4);
        // witness polynomials t^0 * t * t^2 for n = 2
        let cert = three_lines_family(2).unwrap();
        assert_eq!(cert.witness_monomial(), (rat_from_i64(1), 3));
    }

    #[test]
    fn tangent_crossing_witnesses() {
        // n = 1: (t - 1)(t + 1) + 1 = t^2
        let cert = tangent_crossing_family(1).unwrap();
        assert_eq!(cert.witness_monomial(), (rat_from_i64(1), 2));
        assert_eq!(cert.degree, 1);
        let c3 = tangent_crossing_family(3).unwrap();
        assert_eq!(c3.witness_monomial().1, 4);
        let c2 = tangent_crossing_family(2).unwrap();
        assert_eq!(c2.degree, 2);
    }

    #[test]
    fn tables_grow_strictly() {
        let rows = unboundedness_table(&Family::SecantConic, 8).unwrap();
        assert_eq!(rows.first(), Some(&(2, 2, 0)));
        assert_eq!(rows.last(), Some(&(8, 8, 0)));
        let rows2 = unboundedness_table(&Family::ThreeLines, 6).unwrap();
        assert_eq!(rows2.len(), 6);
        assert!(rows2.windows(2).all(|w| w[0].1 < w[1].1));
        let rows3 = unboundedness_table(&Family::TangentCrossing, 6).unwrap();
        assert!(rows3.windows(2).all(|w| w[0].1 < w[1].1));
        // the node table is the documented exception
        assert!(unboundedness_table(&Family::Node, 5).is_err());
    }

    #[test]
    fn witness_radical_divides_t() {
        // assertable form of the avoidance invariant
        for cert in [
            node_family(2).unwrap(),
            three_lines_family(3).unwrap(),
            tangent_crossing_family(2).unwrap(),
        ] {
            let rad = cert.avoidance_witness.radical().unwrap();
            assert!(rad.divides(&Polynomial::variable()) || rad.is_one());
        }
    }
}
