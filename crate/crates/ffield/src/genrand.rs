//! Deterministic instance generation for the randomized suites.
//!
//! A fixed splitmix64 stream keyed by the caller's seed makes every suite
//! reproducible: identical seed, identical instances, identical reports.
//! Units are built as c * prod (t - s_i)^{e_i} with the s_i drawn from a
//! small rational pool and exponents in [-4, 4].

use alloc::vec::Vec;

use crate::places::PlaceSet;
use crate::ratfun::RationalFunction;
use crate::sunit::{certify_sunit, multiplicative_dependence, Dependence, SUnit};
use crate::{rat_from_i64, Rat};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, bound); bound must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len() as u64) as usize]
    }
}

/// Finite rational points used for supports.
pub fn point_pool() -> Vec<Rat> {
    let mut pool: Vec<Rat> = [0i64, 1, -1, 2, -2, 3, -3, 5]
        .iter()
        .map(|&n| rat_from_i64(n))
        .collect();
    pool.push(Rat::new(1.into(), 2.into()));
    pool.push(Rat::new((-1).into(), 2.into()));
    pool
}

/// Nonzero scalars used as unit constants.
pub fn scalar_pool() -> Vec<Rat> {
    let mut pool: Vec<Rat> = [1i64, -1, 2, 3, -2]
        .iter()
        .map(|&n| rat_from_i64(n))
        .collect();
    pool.push(Rat::new(1.into(), 2.into()));
    pool
}

/// A place set with `finite_points` distinct rational points plus infinity.
pub fn gen_place_set(rng: &mut SplitMix64, finite_points: usize) -> (PlaceSet, Vec<Rat>) {
    let pool = point_pool();
    let mut chosen: Vec<Rat> = Vec::new();
    while chosen.len() < finite_points {
        let p = rng.pick(&pool).clone();
        if !chosen.contains(&p) {
            chosen.push(p);
        }
    }
    let s = PlaceSet::from_points(&chosen, true).expect("distinct points are squarefree");
    (s, chosen)
}

/// A unit supported on the given points, with height at most `max_height`.
pub fn gen_unit(rng: &mut SplitMix64, s: &PlaceSet, points: &[Rat], max_height: u64) -> SUnit {
    loop {
        let c = rng.pick(&scalar_pool()).clone();
        let mut f = RationalFunction::constant(c);
        for p in points {
            let e = rng.range_i64(-4, 4);
            if e == 0 {
                continue;
            }
            let factor = RationalFunction::from_poly(crate::poly::Polynomial::linear_root(p));
            f = &f * &factor.pow_i(e).expect("nonzero");
        }
        if f.height() <= max_height {
            return certify_sunit(&f, s).expect("supported in S by construction");
        }
    }
}

/// A nonconstant unit.
pub fn gen_nonconstant_unit(
    rng: &mut SplitMix64,
    s: &PlaceSet,
    points: &[Rat],
    max_height: u64,
) -> SUnit {
    loop {
        let u = gen_unit(rng, s, points, max_height);
        if !u.is_constant() {
            return u;
        }
    }
}

/// A multiplicatively independent pair over a fresh place set with at most
/// `max_finite` finite points (at least 2, so independence is possible).
pub fn gen_independent_pair(
    rng: &mut SplitMix64,
    max_finite: usize,
    max_height: u64,
) -> (SUnit, SUnit) {
    loop {
        let finite = 2 + rng.below((max_finite.max(2) - 1) as u64) as usize;
        let (s, points) = gen_place_set(rng, finite);
        let a = gen_unit(rng, &s, &points, max_height);
        let b = gen_unit(rng, &s, &points, max_height);
        if matches!(
            multiplicative_dependence(&a, &b),
            Ok(Dependence::Independent)
        ) {
            return (a, b);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_stream() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for _ in 0..32 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn generated_pairs_are_independent_units() {
        let mut rng = SplitMix64::new(42);
        for _ in 0..10 {
            let (a, b) = gen_independent_pair(&mut rng, 5, 12);
            assert!(a.height() <= 12 && b.height() <= 12);
            assert_eq!(a.places(), b.places());
            assert!(matches!(
                multiplicative_dependence(&a, &b).unwrap(),
                Dependence::Independent
            ));
        }
    }
}
