//! Dense univariate polynomials whose coefficients live in the rational
//! function field. Euclidean arithmetic over that field is what powers the
//! squarefree-part and multiplicity extraction for eliminants, without ever
//! factoring anything.

use alloc::vec::Vec;

use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::Rat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RfPoly {
    coeffs: Vec<RationalFunction>,
}

impl RfPoly {
    pub fn zero() -> Self {
        RfPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<RationalFunction>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RfPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RationalFunction {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&RationalFunction> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> RfPoly {
        if self.coeffs.len() <= 1 {
            return RfPoly::zero();
        }
        RfPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| {
                    c * &RationalFunction::constant(Rat::from_integer(crate::Int::from(i)))
                })
                .collect(),
        )
    }

    pub fn monic(&self) -> RfPoly {
        match self.leading() {
            None => RfPoly::zero(),
            Some(lc) => {
                let inv = &RationalFunction::one() / lc;
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> RfPoly {
        if c.is_zero() {
            return RfPoly::zero();
        }
        RfPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, rhs: &RfPoly) -> RfPoly {
        if self.is_zero() || rhs.is_zero() {
            return RfPoly::zero();
        }
        let mut coeffs =
            alloc::vec![RationalFunction::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        RfPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &RfPoly) -> RfPoly {
        let n = core::cmp::max(self.coeffs.len(), rhs.coeffs.len());
        RfPoly::from_coeffs((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }

    pub fn div_rem(&self, d: &RfPoly) -> (RfPoly, RfPoly) {
        let dd = d.degree().expect("division by zero");
        let lc_inv = &RationalFunction::one() / d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (RfPoly::zero(), self.clone());
        }
        let qlen = rem.len() - dd;
        let mut quot = alloc::vec![RationalFunction::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for j in 0..dd {
                let sub = &c * &d.coeffs[j];
                rem[i + j] = &rem[i + j] - &sub;
            }
            rem[i + dd] = RationalFunction::zero();
            quot[i] = c;
        }
        (RfPoly::from_coeffs(quot), RfPoly::from_coeffs(rem))
    }

    pub fn exact_div(&self, d: &RfPoly) -> Option<RfPoly> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic gcd over the coefficient field, computed as a primitive
    /// pseudo-remainder sequence over the polynomial ring underneath: every
    /// remainder is stripped of its polynomial content, which keeps
    /// coefficient degrees linear instead of exploding the way naive
    /// fraction arithmetic does.
    pub fn gcd(&self, other: &RfPoly) -> RfPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let g = primitive_gcd(
            self.primitive_polynomial_coeffs(),
            other.primitive_polynomial_coeffs(),
        );
        RfPoly::from_coeffs(g.into_iter().map(RationalFunction::from_poly).collect()).monic()
    }

    /// Clears denominators and content: returns polynomial coefficients that
    /// are collectively primitive (their gcd is constant). Requires every
    /// coefficient to be a genuine rational function of the base variable.
    pub fn primitive_polynomial_coeffs(&self) -> Vec<Polynomial> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut den = Polynomial::one();
        for c in &self.coeffs {
            let g = den.gcd(c.den());
            den = &den * &c.den().exact_div(&g).expect("gcd divides");
        }
        let nums: Vec<Polynomial> = self
            .coeffs
            .iter()
            .map(|c| c.num() * &den.exact_div(c.den()).expect("lcm divisible"))
            .collect();
        let mut content = Polynomial::zero();
        for n in &nums {
            content = content.gcd(n);
        }
        if content.is_constant() {
            return nums;
        }
        nums.iter()
            .map(|n| n.exact_div(&content).expect("content divides"))
            .collect()
    }
}

/// Primitive-PRS gcd at the polynomial-coefficient level.
pub fn primitive_gcd(mut a: Vec<Polynomial>, mut b: Vec<Polynomial>) -> Vec<Polynomial> {
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        return primitive_part(a);
    }
    loop {
        if b.len() == 1 {
            // a nonzero constant (in Y) divides everything
            return alloc::vec![Polynomial::one()];
        }
        let r = pseudo_rem(&a, &b);
        if r.iter().all(|c| c.is_zero()) {
            return primitive_part(b);
        }
        a = b;
        b = primitive_part(r);
    }
}

/// Exact division when the divisor is primitive with polynomial
/// coefficients: by the Gauss lemma the quotient, if the division is exact
/// over the fraction field, has polynomial coefficients, so every step
/// reduces to an exact univariate division. Returns `None` if any step
/// leaves a remainder.
pub fn poly_exact_div(num: &[Polynomial], den: &[Polynomial]) -> Option<Vec<Polynomial>> {
    let mut num: Vec<Polynomial> = num.to_vec();
    while num.last().map_or(false, |c| c.is_zero()) {
        num.pop();
    }
    if den.is_empty() {
        return None;
    }
    let dd = den.len() - 1;
    if num.is_empty() {
        return Some(Vec::new());
    }
    if num.len() < den.len() {
        return None;
    }
    let qlen = num.len() - dd;
    let mut quot = alloc::vec![Polynomial::zero(); qlen];
    for i in (0..qlen).rev() {
        let lead = num[i + dd].clone();
        if lead.is_zero() {
            continue;
        }
        let q = lead.exact_div(&den[dd])?;
        for j in 0..dd {
            num[i + j] = &num[i + j] - &(&q * &den[j]);
        }
        num[i + dd] = Polynomial::zero();
        quot[i] = q;
    }
    if num.iter().all(|c| c.is_zero()) {
        Some(quot)
    } else {
        None
    }
}

/// Pseudo-remainder of coefficient vectors over the polynomial ring:
/// lc(b)^(deg a - deg b + 1) * a mod b, ascending coefficients, trailing
/// zeros trimmed by the caller's primitive step.
fn pseudo_rem(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r: Vec<Polynomial> = a.to_vec();
    while r.len() >= b.len() && r.iter().any(|c| !c.is_zero()) {
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
        if r.len() < b.len() {
            break;
        }
        let dr = r.len() - 1;
        let lead = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lcb;
        }
        for j in 0..db {
            r[shift + j] = &r[shift + j] - &(&lead * &b[j]);
        }
        r.truncate(dr);
    }
    r
}

/// Divides out the polynomial content (gcd of the coefficients) and then
/// jointly normalizes the rational scalars to a primitive integer form, so
/// the pseudo-remainder sequence stays subresultant-sized instead of
/// accumulating multiplied-through leading coefficients.
fn primitive_part(mut v: Vec<Polynomial>) -> Vec<Polynomial> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = Polynomial::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        v = v
            .into_iter()
            .map(|c| c.exact_div(&content).expect("content divides"))
            .collect();
    }
    scalar_normalize(v)
}

/// Joint scalar normalization: clears all denominators and divides by the
/// gcd of all integer coefficients, leaving the vector primitive over the
/// integers up to sign.
fn scalar_normalize(v: Vec<Polynomial>) -> Vec<Polynomial> {
    use num_integer::Integer;
    use num_traits::{One, Zero};
    let mut den_lcm = crate::Int::one();
    for p in &v {
        for c in p.coeffs() {
            den_lcm = den_lcm.lcm(c.denom());
        }
    }
    let mut content = crate::Int::zero();
    for p in &v {
        for c in p.coeffs() {
            content = content.gcd(&(c.numer() * (&den_lcm / c.denom())));
        }
    }
    if content.is_zero() {
        return v;
    }
    let scale = crate::Rat::new(den_lcm, content);
    v.into_iter().map(|p| p.scale(&scale)).collect()
}

impl core::fmt::Display for RfPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})", c.to_display("x"))?;
            if k > 0 {
                write!(f, "*y^{k}")?;
            }
        }
        Ok(())
    }
}

impl RfPoly {
    /// Squarefree part over the coefficient field: self / gcd(self, self').
    pub fn squarefree_part(&self) -> RfPoly {
        if self.is_zero() || self.is_constant() {
            return self.clone().monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Largest k with d^k dividing self; also returns self / d^k.
    pub fn multiplicity_of(&self, d: &RfPoly) -> (usize, RfPoly) {
        let mut rest = self.clone();
        let mut k = 0;
        loop {
            match rest.exact_div(d) {
                Some(next) => {
                    rest = next;
                    k += 1;
                }
                None => return (k, rest),
            }
        }
    }
}

impl RfPoly {
    pub fn one() -> Self {
        RfPoly::from_coeffs(alloc::vec![RationalFunction::one()])
    }
}
