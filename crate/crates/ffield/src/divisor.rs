//! Formal integer combinations of places: the zero/pole bookkeeping behind
//! heights and unit certification.
//!
//! Finite support is a list of monic squarefree polynomials with pairwise
//! coprime supports; each carries one integer multiplicity, so a term bundles
//! a Galois-stable packet of points that all occur with that multiplicity.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::places::PlaceSet;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Divisor {
    finite: Vec<(Polynomial, i64)>,
    infinity: i64,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor {
            finite: Vec::new(),
            infinity: 0,
        }
    }

    pub fn finite_terms(&self) -> &[(Polynomial, i64)] {
        &self.finite
    }

    pub fn infinity_mult(&self) -> i64 {
        self.infinity
    }

    /// Total degree: sum of mult * deg over finite terms, plus infinity.
    pub fn degree(&self) -> i64 {
        let finite: i64 = self
            .finite
            .iter()
            .map(|(p, m)| m * p.degree().unwrap_or(0) as i64)
            .sum();
        finite + self.infinity
    }

    /// Degree of the positive part (number of zeros with multiplicity).
    pub fn positive_degree(&self) -> i64 {
        let finite: i64 = self
            .finite
            .iter()
            .filter(|(_, m)| *m > 0)
            .map(|(p, m)| m * p.degree().unwrap_or(0) as i64)
            .sum();
        finite + core::cmp::max(0, self.infinity)
    }

    pub fn is_zero(&self) -> bool {
        self.finite.is_empty() && self.infinity == 0
    }

    pub fn negate(&self) -> Divisor {
        Divisor {
            finite: self.finite.iter().map(|(p, m)| (p.clone(), -m)).collect(),
            infinity: -self.infinity,
        }
    }

    pub fn scale(&self, k: i64) -> Divisor {
        if k == 0 {
            return Divisor::zero();
        }
        Divisor {
            finite: self
                .finite
                .iter()
                .map(|(p, m)| (p.clone(), m * k))
                .collect(),
            infinity: self.infinity * k,
        }
    }

    /// Sum of divisors, refining the two supports to a common coprime basis.
    pub fn add(&self, other: &Divisor) -> Divisor {
        let basis = coprime_basis(
            self.finite
                .iter()
                .chain(other.finite.iter())
                .map(|(p, _)| p.clone())
                .collect(),
        );
        let mut finite = Vec::new();
        for b in basis {
            let m = self.mult_on(&b) + other.mult_on(&b);
            if m != 0 {
                finite.push((b, m));
            }
        }
        Divisor {
            finite,
            infinity: self.infinity + other.infinity,
        }
    }

    /// Multiplicity carried by a squarefree `b` that divides one of the
    /// support polynomials (zero if it meets none).
    fn mult_on(&self, b: &Polynomial) -> i64 {
        for (p, m) in &self.finite {
            if b.divides(p) {
                return *m;
            }
        }
        0
    }

    /// Checks that the whole support lies inside S; on failure returns the
    /// offending squarefree witness (or "inf").
    pub fn support_inside(&self, s: &PlaceSet) -> Result<()> {
        for (p, _) in &self.finite {
            if !s.contains_support(p) {
                let witness = s.s_free_part(p);
                return Err(Error::NotAnSUnit {
                    witness: witness.to_display("t"),
                });
            }
        }
        if self.infinity != 0 && !s.includes_infinity() {
            return Err(Error::NotAnSUnit {
                witness: "inf".into(),
            });
        }
        Ok(())
    }
}

/// Divisor of zeros minus poles of a nonzero rational function, including the
/// contribution at infinity. The total degree is always zero.
pub fn divisor_of(f: &RationalFunction) -> Result<Divisor> {
    if f.is_zero() {
        return Err(Error::InvalidInput("divisor of the zero function".into()));
    }
    let mut finite = Vec::new();
    for (p, m) in f.num().squarefree_decomposition()? {
        finite.push((p, m as i64));
    }
    for (p, m) in f.den().squarefree_decomposition()? {
        finite.push((p, -(m as i64)));
    }
    let div = Divisor {
        finite,
        infinity: f.v_infinity().expect("nonzero"),
    };
    debug_assert_eq!(div.degree(), 0);
    Ok(div)
}

/// Refines a list of nonconstant squarefree polynomials into a pairwise
/// coprime basis generating the same set of roots.
pub fn coprime_basis(polys: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut queue: Vec<Polynomial> = polys.into_iter().map(|p| p.monic()).collect();
    'outer: while let Some(mut cur) = queue.pop() {
        if cur.is_constant() {
            continue;
        }
        let mut i = 0;
        while i < basis.len() {
            let g = cur.gcd(&basis[i]);
            if g.is_constant() {
                i += 1;
                continue;
            }
            if g == basis[i] {
                // basis element wholly inside cur: strip and rescan
                cur = cur.exact_div(&g).expect("gcd divides").monic();
                if cur.is_constant() {
                    continue 'outer;
                }
                i = 0;
                continue;
            }
            // proper overlap: split the basis element, requeue the rest of cur
            let rest = basis[i].exact_div(&g).expect("gcd divides").monic();
            basis[i] = g.clone();
            basis.push(rest);
            let remaining = cur.exact_div(&g).expect("gcd divides").monic();
            queue.push(remaining);
            continue 'outer;
        }
        basis.push(cur);
    }
    basis.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.to_display("t").cmp(&b.to_display("t")))
    });
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_polynomial, parse_ratfun};

    #[test]
    fn divisor_of_variable() {
        let d = divisor_of(&parse_ratfun("t").unwrap()).unwrap();
        assert_eq!(d.finite_terms(), &[(parse_polynomial("t").unwrap(), 1)]);
        assert_eq!(d.infinity_mult(), -1);
        assert_eq!(d.degree(), 0);
    }

    #[test]
    fn divisor_with_multiplicities() {
        let d = divisor_of(&parse_ratfun("(t-1)^2/t").unwrap()).unwrap();
        let mut terms = d.finite_terms().to_vec();
        terms.sort_by_key(|(p, _)| p.to_display("t"));
        assert_eq!(
            terms,
            alloc::vec![
                (parse_polynomial("t").unwrap(), -1),
                (parse_polynomial("t-1").unwrap(), 2),
            ]
        );
        assert_eq!(d.infinity_mult(), -1);
        assert_eq!(d.degree(), 0);
    }

    #[test]
    fn divisor_of_constant_is_empty() {
        let d = divisor_of(&parse_ratfun("7").unwrap()).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn additivity() {
        let f = parse_ratfun("(t-1)*t^2/(t+2)").unwrap();
        let g = parse_ratfun("(t+2)^3/(t-1)").unwrap();
        let sum = divisor_of(&f).unwrap().add(&divisor_of(&g).unwrap());
        let direct = divisor_of(&(&f * &g)).unwrap();
        // compare as multiplicity functions via a shared refinement
        assert_eq!(sum.degree(), 0);
        assert_eq!(sum.add(&direct.negate()).is_zero(), true);
    }

    #[test]
    fn coprime_basis_splits() {
        let basis = coprime_basis(alloc::vec![
            parse_polynomial("t^2+t").unwrap(),
            parse_polynomial("t^2-t").unwrap(),
        ]);
        let mut strs: Vec<_> = basis.iter().map(|p| p.to_display("t")).collect();
        strs.sort();
        assert_eq!(strs, alloc::vec!["t", "t + 1", "t - 1"]);
    }
}
