//! Height functions: affine, outside-S, and projective.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::places::PlaceSet;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;

/// H(f) = max(deg num, deg den): the degree of f as a self-map of the line.
pub fn height(f: &RationalFunction) -> u64 {
    f.height()
}

/// H_S(f): the number of poles of f, with multiplicity, outside S.
pub fn height_outside(f: &RationalFunction, s: &PlaceSet) -> u64 {
    if f.is_zero() {
        return 0;
    }
    let finite = s.s_free_part(f.den()).degree().unwrap_or(0) as u64;
    let infinity = if s.includes_infinity() {
        0
    } else {
        core::cmp::max(0, -f.v_infinity().expect("nonzero")) as u64
    };
    finite + infinity
}

/// Number of zeros of f, with multiplicity, outside S (0 for f constant).
pub fn zeros_outside(f: &RationalFunction, s: &PlaceSet) -> u64 {
    if f.is_zero() {
        return 0;
    }
    let finite = s.s_free_part(f.num()).degree().unwrap_or(0) as u64;
    let infinity = if s.includes_infinity() {
        0
    } else {
        core::cmp::max(0, f.v_infinity().expect("nonzero")) as u64
    };
    finite + infinity
}

/// Projective height H(f_1 : ... : f_n) = -sum over all places of the
/// minimum coordinate valuation. Invariant under scaling every entry by one
/// rational function. Errors if all entries are zero.
pub fn projective_height(fs: &[RationalFunction]) -> Result<u64> {
    if fs.iter().all(|f| f.is_zero()) {
        return Err(Error::InvalidInput(
            "projective height of the zero vector".into(),
        ));
    }
    // Put over a common denominator, then divide out the gcd of the
    // numerators; for a coprime polynomial vector the height is the max
    // degree (no common finite zero, and the minimum at infinity is -max deg).
    let mut den = Polynomial::one();
    for f in fs {
        let g = den.gcd(f.den());
        den = &den * &f.den().exact_div(&g).expect("gcd divides");
    }
    let nums: Vec<Polynomial> = fs
        .iter()
        .map(|f| f.num() * &den.exact_div(f.den()).expect("lcm divisible"))
        .collect();
    let mut g = Polynomial::zero();
    for n in &nums {
        g = g.gcd(n);
    }
    Ok(nums
        .iter()
        .map(|n| {
            n.exact_div(&g)
                .expect("gcd divides")
                .degree()
                .map_or(0, |d| d as u64)
        })
        .max()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_place_set, parse_ratfun};

    fn rf(s: &str) -> RationalFunction {
        parse_ratfun(s).unwrap()
    }

    #[test]
    fn height_outside_examples() {
        let s = parse_place_set("t, inf").unwrap();
        assert_eq!(height_outside(&rf("1/t"), &s), 0);
        assert_eq!(height_outside(&rf("1/(t-1)"), &s), 1);
        let s_no_inf = parse_place_set("t").unwrap();
        // pole of order 2 at infinity, outside S
        assert_eq!(height_outside(&rf("t^2"), &s_no_inf), 2);
    }

    #[test]
    fn projective_height_examples() {
        // (u, 1) reduces to the affine height
        let u = rf("(t^2-1)/t");
        assert_eq!(
            projective_height(&[u.clone(), rf("1")]).unwrap(),
            u.height()
        );
        // (t, t^2, 1): oracle by direct valuation enumeration lives in the
        // integration tests; the value is 2.
        assert_eq!(
            projective_height(&[rf("t"), rf("t^2"), rf("1")]).unwrap(),
            2
        );
    }

    #[test]
    fn projective_height_scaling_invariance() {
        let fs = [rf("t"), rf("t^2"), rf("1")];
        let lam = rf("(t-3)/(t+7)^2");
        let scaled: Vec<_> = fs.iter().map(|f| f * &lam).collect();
        assert_eq!(
            projective_height(&fs).unwrap(),
            projective_height(&scaled).unwrap()
        );
    }

    #[test]
    fn all_zero_rejected() {
        assert!(projective_height(&[RationalFunction::zero()]).is_err());
    }
}
