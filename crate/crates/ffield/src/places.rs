//! Finite Galois-stable sets of points of the projective line.
//!
//! A place set S is a monic squarefree polynomial (whose roots are the finite
//! points, kept as Galois orbits without ever being split) plus a flag for the
//! point at infinity. Cardinality counts geometric points, so a degree-2
//! orbit contributes two.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::Rat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaceSet {
    finite: Polynomial,
    infinity: bool,
}

impl PlaceSet {
    /// Normalizes to monic and checks squarefreeness.
    pub fn new(finite: Polynomial, infinity: bool) -> Result<Self> {
        if finite.is_zero() {
            return Err(Error::InvalidInput("place set polynomial is zero".into()));
        }
        let finite = finite.monic();
        if !finite.is_squarefree() {
            return Err(Error::InvalidInput(
                "place set polynomial must be squarefree".into(),
            ));
        }
        Ok(PlaceSet { finite, infinity })
    }

    /// Builds S from distinct rational points, e.g. `{0, -1}` plus infinity.
    pub fn from_points(points: &[Rat], infinity: bool) -> Result<Self> {
        let mut f = Polynomial::one();
        for p in points {
            f = &f * &Polynomial::linear_root(p);
        }
        PlaceSet::new(f, infinity)
    }

    pub fn finite_part(&self) -> &Polynomial {
        &self.finite
    }

    pub fn includes_infinity(&self) -> bool {
        self.infinity
    }

    /// Number of geometric points.
    pub fn cardinality(&self) -> usize {
        self.finite.degree().unwrap_or(0) + usize::from(self.infinity)
    }

    /// Euler characteristic of the complement at genus zero: #S - 2.
    pub fn chi(&self) -> i64 {
        self.cardinality() as i64 - 2
    }

    /// Whether every root of the squarefree `q` is a point of S.
    pub fn contains_support(&self, q: &Polynomial) -> bool {
        q.divides(&self.finite) || q.is_constant()
    }

    pub fn contains_point(&self, p: &Rat) -> bool {
        use num_traits::Zero;
        self.finite.eval(p).is_zero()
    }

    /// Splits `p` into (part supported inside S, part coprime to S), both
    /// with the obvious product relation up to the original leading scalar.
    pub fn split(&self, p: &Polynomial) -> (Polynomial, Polynomial) {
        if p.is_zero() {
            return (Polynomial::one(), Polynomial::zero());
        }
        let mut outside = p.monic();
        let mut inside = Polynomial::one();
        loop {
            let g = outside.gcd(&self.finite);
            if g.is_constant() {
                break;
            }
            inside = &inside * &g;
            outside = outside.exact_div(&g).expect("gcd divides").monic();
        }
        (inside, outside)
    }

    /// Monic part of `p` with every root outside S.
    pub fn s_free_part(&self, p: &Polynomial) -> Polynomial {
        self.split(p).1
    }

    /// Union of place sets (lcm of finite parts).
    pub fn union(&self, other: &PlaceSet) -> PlaceSet {
        let g = self.finite.gcd(&other.finite);
        let finite = &self.finite * &other.finite.exact_div(&g).expect("gcd divides");
        PlaceSet {
            finite: finite.monic(),
            infinity: self.infinity || other.infinity,
        }
    }

    /// Extends S by the roots of `p` (ignoring constants).
    pub fn with_roots_of(&self, p: &Polynomial) -> Result<PlaceSet> {
        if p.is_zero() {
            return Err(Error::InvalidInput(
                "cannot extend a place set by the zero polynomial".into(),
            ));
        }
        let rad = p.radical()?;
        let g = rad.gcd(&self.finite);
        let extra = rad.exact_div(&g).expect("gcd divides");
        Ok(PlaceSet {
            finite: (&self.finite * &extra).monic(),
            infinity: self.infinity,
        })
    }

    pub fn to_display(&self) -> String {
        let mut s = String::new();
        if self.finite.is_constant() {
            if self.infinity {
                s.push_str("inf");
            }
            return s;
        }
        s.push_str(&self.finite.to_display("t"));
        if self.infinity {
            s.push_str(", inf");
        }
        s
    }

    /// Rational points of S, ascending (used to pick derivation base points).
    pub fn rational_finite_points(&self) -> Vec<Rat> {
        self.finite.rational_roots()
    }
}

impl core::fmt::Display for PlaceSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.to_display())
    }
}

#[cfg(test)]
mod tests {
    use crate::expr::{parse_place_set, parse_polynomial};

    #[test]
    fn euler_characteristic() {
        assert_eq!(parse_place_set("t, inf").unwrap().chi(), 0);
        assert_eq!(parse_place_set("t, t+1, inf").unwrap().chi(), 1);
        // degree-2 squarefree part contributes two conjugate points
        assert_eq!(parse_place_set("t^2+1, inf").unwrap().chi(), 1);
    }

    #[test]
    fn split_extracts_supported_part() {
        let s = parse_place_set("t, t+1, inf").unwrap();
        let p = parse_polynomial("t^3*(t+1)*(t-5)^2").unwrap();
        let (inside, outside) = s.split(&p);
        assert_eq!(inside, parse_polynomial("t^3*(t+1)").unwrap().monic());
        assert_eq!(outside, parse_polynomial("(t-5)^2").unwrap().monic());
    }

    #[test]
    fn union_is_squarefree() {
        let a = parse_place_set("t*(t+1)").unwrap();
        let b = parse_place_set("(t+1)*(t-1), inf").unwrap();
        let u = a.union(&b);
        assert_eq!(u.cardinality(), 4);
        assert!(u.includes_infinity());
    }
}
