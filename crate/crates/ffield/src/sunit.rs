//! Certified S-units and multiplicative dependence.

use alloc::vec::Vec;

use num_integer::Integer;

use crate::divisor::{coprime_basis, divisor_of, Divisor};
use crate::error::{Error, Result};
use crate::places::PlaceSet;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::Rat;

/// A rational function together with a certificate that its divisor is
/// supported inside the given place set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SUnit {
    value: RationalFunction,
    places: PlaceSet,
}

impl SUnit {
    pub fn value(&self) -> &RationalFunction {
        &self.value
    }

    pub fn places(&self) -> &PlaceSet {
        &self.places
    }

    pub fn height(&self) -> u64 {
        self.value.height()
    }

    pub fn is_constant(&self) -> bool {
        self.value.is_constant()
    }

    pub fn divisor(&self) -> Divisor {
        divisor_of(&self.value).expect("units are nonzero")
    }

    pub fn pow_i(&self, e: i64) -> SUnit {
        SUnit {
            value: self.value.pow_i(e).expect("units are nonzero"),
            places: self.places.clone(),
        }
    }

    pub fn mul(&self, other: &SUnit) -> SUnit {
        debug_assert_eq!(self.places, other.places);
        SUnit {
            value: &self.value * &other.value,
            places: self.places.clone(),
        }
    }
}

/// Certifies that all zeros and poles of `f` lie in S. On failure the error
/// carries a squarefree witness outside S (or "inf").
pub fn certify_sunit(f: &RationalFunction, s: &PlaceSet) -> Result<SUnit> {
    if f.is_zero() {
        return Err(Error::InvalidInput("zero is not an S-unit".into()));
    }
    let support = (f.num() * f.den()).radical()?;
    let outside = s.s_free_part(&support);
    if !outside.is_constant() {
        return Err(Error::NotAnSUnit {
            witness: outside.to_display("t"),
        });
    }
    if !s.includes_infinity() && f.v_infinity() != Some(0) {
        return Err(Error::NotAnSUnit {
            witness: "inf".into(),
        });
    }
    Ok(SUnit {
        value: f.clone(),
        places: s.clone(),
    })
}

/// Outcome of the dependence test for a pair of units.
///
/// A relation is reported in the normalized form u1^r * u2^s = mu with
/// gcd(|r|, |s|) = 1 and r > 0, or r = 0 and s > 0. When both units are
/// constant the relation lattice has rank two and (1, 0) is reported.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Dependence {
    Independent,
    Relation { r: i64, s: i64, mu: Rat },
}

/// Decides multiplicative dependence by comparing exponent vectors on a
/// common pairwise-coprime support basis (plus the point at infinity).
pub fn multiplicative_dependence(u1: &SUnit, u2: &SUnit) -> Result<Dependence> {
    if u1.places != u2.places {
        return Err(Error::InvalidInput(
            "units certified against different place sets".into(),
        ));
    }
    let d1 = u1.divisor();
    let d2 = u2.divisor();
    let basis = coprime_basis(
        d1.finite_terms()
            .iter()
            .chain(d2.finite_terms())
            .map(|(p, _)| p.clone())
            .collect(),
    );
    let v1 = exponent_vector(&d1, &basis);
    let v2 = exponent_vector(&d2, &basis);

    let z1 = v1.iter().all(|&e| e == 0);
    let z2 = v2.iter().all(|&e| e == 0);
    if z1 {
        // covers the rank-two lattice of a doubly constant pair as well
        return Ok(Dependence::Relation {
            r: 1,
            s: 0,
            mu: u1
                .value
                .constant_value()
                .expect("zero divisor means constant"),
        });
    }
    if z2 {
        return Ok(Dependence::Relation {
            r: 0,
            s: 1,
            mu: u2
                .value
                .constant_value()
                .expect("zero divisor means constant"),
        });
    }
    // dependent iff all 2x2 minors vanish
    for i in 0..v1.len() {
        for j in i + 1..v1.len() {
            if v1[i] * v2[j] != v1[j] * v2[i] {
                return Ok(Dependence::Independent);
            }
        }
    }
    let i = (0..v1.len()).find(|&i| v1[i] != 0).expect("nonzero vector");
    let (mut r, mut s) = (v2[i], -v1[i]);
    let g = r.abs().gcd(&s.abs());
    r /= g;
    s /= g;
    if r < 0 || (r == 0 && s < 0) {
        r = -r;
        s = -s;
    }
    let mu_fn = &u1.value.pow_i(r)? * &u2.value.pow_i(s)?;
    let mu = mu_fn.constant_value().ok_or_else(|| {
        Error::Internal("generating relation failed to produce a constant".into())
    })?;
    Ok(Dependence::Relation { r, s, mu })
}

fn exponent_vector(d: &Divisor, basis: &[Polynomial]) -> Vec<i64> {
    let mut v = Vec::with_capacity(basis.len() + 1);
    for b in basis {
        let mut m = 0;
        for (p, mult) in d.finite_terms() {
            if b.divides(p) {
                m = *mult;
                break;
            }
        }
        v.push(m);
    }
    v.push(d.infinity_mult());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_place_set, parse_ratfun};
    use num_traits::One;

    fn unit(expr: &str, places: &str) -> SUnit {
        certify_sunit(
            &parse_ratfun(expr).unwrap(),
            &parse_place_set(places).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn certification_examples() {
        assert!(unit("t^3/(t+1)", "t, t+1, inf").height() == 3);
        let err = certify_sunit(
            &parse_ratfun("t-2").unwrap(),
            &parse_place_set("t, inf").unwrap(),
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::NotAnSUnit {
                witness: "t - 2".into()
            }
        );
        // nonzero constants certify against any S
        assert!(certify_sunit(
            &parse_ratfun("5").unwrap(),
            &parse_place_set("t+3").unwrap()
        )
        .is_ok());
    }

    #[test]
    fn infinity_must_be_allowed() {
        // deg num != deg den means a zero or pole at infinity
        let s = parse_place_set("t*(t+1)").unwrap();
        assert!(certify_sunit(&parse_ratfun("t").unwrap(), &s).is_err());
        assert!(certify_sunit(&parse_ratfun("t/(t+1)").unwrap(), &s).is_ok());
    }

    #[test]
    fn dependence_powers() {
        let (a, b) = (unit("t", "t, inf"), unit("t^2", "t, inf"));
        assert_eq!(
            multiplicative_dependence(&a, &b).unwrap(),
            Dependence::Relation {
                r: 2,
                s: -1,
                mu: Rat::one()
            }
        );
    }

    #[test]
    fn dependence_scalar_multiple() {
        let (a, b) = (unit("t", "t, inf"), unit("2*t", "t, inf"));
        assert_eq!(
            multiplicative_dependence(&a, &b).unwrap(),
            Dependence::Relation {
                r: 1,
                s: -1,
                mu: Rat::new(1.into(), 2.into())
            }
        );
    }

    #[test]
    fn independent_pair() {
        let (a, b) = (unit("t", "t, t+1, inf"), unit("t+1", "t, t+1, inf"));
        assert_eq!(
            multiplicative_dependence(&a, &b).unwrap(),
            Dependence::Independent
        );
    }

    #[test]
    fn relation_expands_to_constant() {
        let (a, b) = (
            unit("t^2/(t+1)", "t, t+1, inf"),
            unit("t^4/(t+1)^2", "t, t+1, inf"),
        );
        match multiplicative_dependence(&a, &b).unwrap() {
            Dependence::Relation { r, s, mu } => {
                let expanded = &a.value().pow_i(r).unwrap() * &b.value().pow_i(s).unwrap();
                assert_eq!(expanded.constant_value().unwrap(), mu);
            }
            other => panic!("expected a relation, got {other:?}"),
        }
    }
}
