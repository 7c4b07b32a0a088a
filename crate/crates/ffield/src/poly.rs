//! Dense univariate polynomials over arbitrary-precision rationals.
//!
//! The gcd is computed by a certified modular algorithm: degrees are probed by
//! Euclid over small prime fields, a candidate is reconstructed by CRT with a
//! symmetric lift, and the candidate is accepted only after exact divisibility
//! into both inputs is verified over the integers. Unlucky primes therefore
//! cost time, never correctness.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::{Int, Rat};

/// Univariate polynomial with rational coefficients, stored densely by
/// ascending exponent. The leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient vector); the degree of the zero
/// polynomial is `None`, never a signed sentinel.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { coeffs: vec![c] }
        }
    }

    pub fn constant_i64(c: i64) -> Self {
        Polynomial::constant(crate::rat_from_i64(c))
    }

    /// The variable t.
    pub fn variable() -> Self {
        Polynomial {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    /// c * t^k.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// t - r.
    pub fn linear_root(r: &Rat) -> Self {
        Polynomial {
            coeffs: vec![-r.clone(), Rat::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Coefficient of t^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Order of vanishing at t = 0: the index of the lowest nonzero
    /// coefficient. `None` for the zero polynomial.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * crate::rat_from_u64(i as u64))
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => Polynomial::zero(),
            Some(lc) => {
                let inv = Rat::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Field division with remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc_inv = Rat::one() / d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (Polynomial::zero(), self.clone());
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![Rat::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for j in 0..dd {
                let sub = &c * &d.coeffs[j];
                rem[i + j] = &rem[i + j] - &sub;
            }
            rem[i + dd] = Rat::zero();
            quot[i] = c;
        }
        (Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem))
    }

    /// Exact quotient, or `None` if the division leaves a remainder.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.exact_div(self).is_some()
    }

    /// Monic greatest common divisor; `gcd(0, 0)` returns zero (public entry
    /// points reject that case).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Polynomial::one();
        }
        // small inputs are cheaper by direct Euclid than by the modular path
        if self.coeffs.len() + other.coeffs.len() <= 24 {
            return euclid_gcd(self, other);
        }
        modular_gcd(self, other)
    }

    /// Monic product of the distinct roots: p / gcd(p, p').
    pub fn radical(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::InvalidInput("radical of the zero polynomial".into()));
        }
        if self.is_constant() {
            return Ok(Polynomial::one());
        }
        let g = self.gcd(&self.derivative());
        Ok(self.exact_div(&g).expect("gcd(p, p') divides p").monic())
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.is_constant() {
            return true;
        }
        self.gcd(&self.derivative()).is_constant()
    }

    /// Yun's squarefree decomposition: returns monic, squarefree, pairwise
    /// coprime `g_i` with `p = lc * prod g_i^{m_i}`, multiplicities strictly
    /// increasing.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Polynomial, usize)>> {
        if self.is_zero() {
            return Err(Error::InvalidInput(
                "squarefree decomposition of the zero polynomial".into(),
            ));
        }
        if self.is_constant() {
            return Ok(Vec::new());
        }
        let p = self.monic();
        let d = p.gcd(&p.derivative());
        if d.is_constant() {
            return Ok(vec![(p, 1)]);
        }
        let mut out = Vec::new();
        let mut b = p.exact_div(&d).expect("gcd divides");
        let mut c = p.derivative().exact_div(&d).expect("gcd divides p'");
        let mut i = 1usize;
        loop {
            let d1 = &c - &b.derivative();
            if b.is_constant() {
                break;
            }
            let a = b.gcd(&d1);
            if a.degree().map_or(false, |d| d > 0) {
                out.push((a.monic(), i));
            }
            b = b.exact_div(&a).expect("factor divides");
            c = d1.exact_div(&a).expect("factor divides");
            i += 1;
        }
        Ok(out)
    }

    /// Multiplicity of the monic factor `q` in `self`: the largest k with
    /// q^k dividing self. `q` must be nonconstant.
    pub fn multiplicity_of(&self, q: &Polynomial) -> usize {
        debug_assert!(!q.is_constant());
        let mut rest = self.clone();
        let mut k = 0;
        while let Some(next) = rest.exact_div(q) {
            rest = next;
            k += 1;
        }
        k
    }

    /// Clears denominators and content: returns primitive integer
    /// coefficients with positive leading coefficient, together with the
    /// rational scalar c such that `self = c * primitive`.
    pub fn to_int_primitive(&self) -> (Rat, Vec<Int>) {
        if self.is_zero() {
            return (Rat::zero(), Vec::new());
        }
        let mut den_lcm = Int::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = Int::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim: Vec<Int> = ints.iter().map(|c| c / &content).collect();
        (Rat::new(content, den_lcm), prim)
    }

    pub fn from_int_coeffs(coeffs: &[Int]) -> Polynomial {
        Polynomial::from_coeffs(
            coeffs
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Resultant of `self` and `other`, as the determinant of the Sylvester
    /// matrix with the coefficient rows of `self` on top; equivalently
    /// `lc(self)^deg(other) * prod other(root of self)`. Zero iff the inputs
    /// share a root.
    pub fn resultant(&self, other: &Polynomial) -> Result<Rat> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::InvalidInput("resultant of a zero polynomial".into()));
        }
        let m = self.degree().unwrap();
        let n = other.degree().unwrap();
        if m == 0 {
            return Ok(pow_rat(&self.coeffs[0], n as u64));
        }
        if n == 0 {
            return Ok(pow_rat(&other.coeffs[0], m as u64));
        }
        let (cp, pp) = self.to_int_primitive();
        let (cq, qq) = other.to_int_primitive();
        let size = m + n;
        let mut mat = vec![vec![Int::zero(); size]; size];
        for i in 0..n {
            for (j, c) in pp.iter().rev().enumerate() {
                mat[i][i + j] = c.clone();
            }
        }
        for i in 0..m {
            for (j, c) in qq.iter().rev().enumerate() {
                mat[n + i][i + j] = c.clone();
            }
        }
        let det = bareiss_det_int(mat);
        Ok(Rat::from_integer(det) * pow_rat(&cp, n as u64) * pow_rat(&cq, m as u64))
    }

    /// Rational roots, ascending. Candidate divisors are enumerated by trial
    /// division, which covers every input this crate produces (place-set
    /// polynomials with small integer data).
    pub fn rational_roots(&self) -> Vec<Rat> {
        if self.is_zero() || self.is_constant() {
            return Vec::new();
        }
        let (_, prim) = self.to_int_primitive();
        let a0_pos = prim.iter().position(|c| !c.is_zero()).unwrap();
        let mut roots = Vec::new();
        if a0_pos > 0 {
            roots.push(Rat::zero());
        }
        let a0 = prim[a0_pos].abs();
        let ad = prim.last().unwrap().abs();
        let num_divs = small_divisors(&a0);
        let den_divs = small_divisors(&ad);
        for r in &num_divs {
            for s in &den_divs {
                for sign in [1i64, -1] {
                    let cand = Rat::new(r * Int::from(sign), s.clone());
                    if self.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    pub fn to_display(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let positive = c.is_positive();
            let abs = c.abs();
            if first {
                if !positive {
                    s.push('-');
                }
                first = false;
            } else if positive {
                s.push_str(" + ");
            } else {
                s.push_str(" - ");
            }
            let unit_coeff = abs.is_one() && k > 0;
            if !unit_coeff {
                write!(s, "{}", fmt_rat(&abs)).unwrap();
            }
            if k > 0 {
                if !unit_coeff {
                    s.push('*');
                }
                s.push_str(var);
                if k > 1 {
                    write!(s, "^{k}").unwrap();
                }
            }
        }
        s
    }
}

/// Renders a rational scalar as `n` or `n/d`.
pub fn fmt_rat(r: &Rat) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    if r.denom().is_one() {
        write!(s, "{}", r.numer()).unwrap();
    } else {
        write!(s, "{}/{}", r.numer(), r.denom()).unwrap();
    }
    s
}

pub(crate) fn pow_rat(base: &Rat, e: u64) -> Rat {
    let mut acc = Rat::one();
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

fn small_divisors(n: &Int) -> Vec<Int> {
    // Trial division up to 10^6; sufficient for the small constants that
    // occur in place sets.
    let mut divs = vec![Int::one()];
    let mut rest = n.clone();
    let mut p = Int::from(2u32);
    let limit = Int::from(1_000_000u64);
    while &p * &p <= rest && p <= limit {
        if (&rest % &p).is_zero() {
            let mut powers = vec![Int::one()];
            while (&rest % &p).is_zero() {
                rest /= &p;
                let next = powers.last().unwrap() * &p;
                powers.push(next);
            }
            let mut out = Vec::new();
            for d in &divs {
                for q in &powers {
                    out.push(d * q);
                }
            }
            divs = out;
        }
        p += 1;
    }
    if !rest.is_one() {
        let mut out = Vec::new();
        for d in &divs {
            out.push(d.clone());
            out.push(d * &rest);
        }
        divs = out;
    }
    divs.sort();
    divs.dedup();
    divs
}

/// Fraction-free determinant with row pivoting.
pub(crate) fn bareiss_det_int(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

// --- certified modular gcd -------------------------------------------------

/// Primes just below 2^31 (so every mod-p product fits in u64); the
/// iterator extends past the table by trial division if a computation ever
/// exhausts it.
const PRIME_TABLE: [u64; 48] = [
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543, 2147483497,
    2147483489, 2147483477, 2147483423, 2147483399, 2147483353, 2147483323, 2147483269, 2147483249,
    2147483237, 2147483179, 2147483171, 2147483137, 2147483123, 2147483077, 2147483069, 2147483059,
    2147483053, 2147483033, 2147483029, 2147482951, 2147482949, 2147482943, 2147482937, 2147482921,
    2147482877, 2147482873, 2147482867, 2147482859, 2147482819, 2147482817, 2147482811, 2147482801,
    2147482763, 2147482739, 2147482697, 2147482693, 2147482681, 2147482663, 2147482661, 2147482621,
];

struct Primes {
    index: usize,
    next_beyond: u64,
}

impl Primes {
    fn new() -> Self {
        Primes {
            index: 0,
            next_beyond: PRIME_TABLE[PRIME_TABLE.len() - 1] - 2,
        }
    }
}

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        if self.index < PRIME_TABLE.len() {
            let p = PRIME_TABLE[self.index];
            self.index += 1;
            return Some(p);
        }
        let mut c = self.next_beyond;
        loop {
            if is_prime_u64(c) {
                self.next_beyond = c - 2;
                return Some(c);
            }
            c -= 2;
        }
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = 17u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_reduce(c: &Int, p: u64) -> u64 {
    let m = c.mod_floor(&Int::from(p));
    m.to_u64().expect("nonnegative residue below 2^31")
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn gcd_mod_p(a: &[Int], b: &[Int], p: u64) -> Vec<u64> {
    let mut x: Vec<u64> = a.iter().map(|c| mod_reduce(c, p)).collect();
    let mut y: Vec<u64> = b.iter().map(|c| mod_reduce(c, p)).collect();
    trim_mod(&mut x);
    trim_mod(&mut y);
    while !y.is_empty() {
        // x <- x mod y
        let dy = y.len() - 1;
        let inv = mod_inv(y[dy], p);
        while x.len() > dy {
            let shift = x.len() - 1 - dy;
            let c = x.last().unwrap() * inv % p;
            if c != 0 {
                for j in 0..=dy {
                    let sub = c * y[j] % p;
                    let idx = shift + j;
                    x[idx] = (x[idx] + p - sub) % p;
                }
            }
            x.pop();
            trim_mod(&mut x);
            if x.len() <= dy {
                break;
            }
        }
        core::mem::swap(&mut x, &mut y);
    }
    // make monic
    if let Some(&lc) = x.last() {
        let inv = mod_inv(lc, p);
        for c in x.iter_mut() {
            *c = *c * inv % p;
        }
    }
    x
}

/// Exact division of integer polynomials; `None` if not divisible over Z.
/// By Gauss's lemma this decides divisibility over Q for primitive divisors.
fn int_exact_div(num: &[Int], den: &[Int]) -> Option<Vec<Int>> {
    if den.is_empty() {
        return None;
    }
    let dd = den.len() - 1;
    if num.len() < den.len() {
        return if num.is_empty() {
            Some(Vec::new())
        } else {
            None
        };
    }
    let mut rem: Vec<Int> = num.to_vec();
    let qlen = rem.len() - dd;
    let mut quot = vec![Int::zero(); qlen];
    let lc = &den[dd];
    for i in (0..qlen).rev() {
        let (q, r) = rem[i + dd].div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for j in 0..dd {
                let sub = &q * &den[j];
                rem[i + j] = &rem[i + j] - sub;
            }
        }
        rem[i + dd] = Int::zero();
        quot[i] = q;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(quot)
    } else {
        None
    }
}

fn int_primitive(mut v: Vec<Int>) -> Vec<Int> {
    let mut content = Int::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if content.is_zero() {
        return v;
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    for c in v.iter_mut() {
        *c = &*c / &content;
    }
    v
}

fn modular_gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let (_, a) = p.to_int_primitive();
    let (_, b) = q.to_int_primitive();
    let lc_gcd = a.last().unwrap().gcd(b.last().unwrap());

    let mut residues: Vec<Int> = Vec::new();
    let mut modulus = Int::one();
    let mut best_deg = usize::MAX;

    for (tries, prime) in Primes::new().enumerate() {
        if tries > 512 {
            // Unreachable in theory; fall back to plain rational Euclid so
            // the answer stays exact no matter what.
            return euclid_gcd(p, q);
        }
        let pi = Int::from(prime);
        if (a.last().unwrap() % &pi).is_zero() || (b.last().unwrap() % &pi).is_zero() {
            continue;
        }
        let g = gcd_mod_p(&a, &b, prime);
        if g.len() == 1 {
            return Polynomial::one();
        }
        let deg = g.len() - 1;
        if deg > best_deg {
            continue; // unlucky prime
        }
        // scale the monic image so coefficients lift to the integer
        // polynomial (lc_gcd / lc(G)) * G
        let scale = mod_reduce(&lc_gcd, prime);
        let scaled: Vec<Int> = g
            .iter()
            .map(|&c| Int::from((c as u128 * scale as u128 % prime as u128) as u64))
            .collect();
        if deg < best_deg {
            best_deg = deg;
            residues = scaled;
            modulus = pi.clone();
        } else {
            // CRT combine with the accumulated residues
            let m_inv = mod_inv(mod_reduce(&modulus, prime), prime);
            for (acc, new) in residues.iter_mut().zip(scaled.iter()) {
                let cur = mod_reduce(acc, prime);
                let target = mod_reduce(new, prime);
                let k = (target + prime - cur) % prime * m_inv % prime;
                *acc += &modulus * Int::from(k);
            }
            modulus *= &pi;
        }
        // symmetric lift and verify
        let half = &modulus / Int::from(2u32);
        let lifted: Vec<Int> = residues
            .iter()
            .map(|c| if c > &half { c - &modulus } else { c.clone() })
            .collect();
        let cand = int_primitive(lifted);
        if cand.last().map_or(false, |c| !c.is_zero())
            && int_exact_div(&a, &cand).is_some()
            && int_exact_div(&b, &cand).is_some()
        {
            return Polynomial::from_int_coeffs(&cand).monic();
        }
    }
    unreachable!("prime iterator is infinite")
}

fn euclid_gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r.monic(); // renormalize to tame coefficient growth
    }
    a.monic()
}

// --- operator impls ---------------------------------------------------------

impl core::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = core::cmp::max(self.coeffs.len(), rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl core::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = core::cmp::max(self.coeffs.len(), rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl core::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl core::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl core::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.to_display("t"))
    }
}

impl core::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Polynomial({})", self.to_display("t"))
    }
}

// --- spec-level entry points -------------------------------------------------

/// Monic gcd; errors if both inputs are zero.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::InvalidInput("gcd(0, 0) is undefined".into()));
    }
    Ok(p.gcd(q))
}

/// Sum over the common roots (in the algebraic closure) of the minimum
/// multiplicity, computed by iterated gcds: d1 = gcd(p, q),
/// d2 = gcd(p/d1, q/d1), ...; the answer is the sum of the degrees.
pub fn gcd_multiplicity(p: &Polynomial, q: &Polynomial) -> Result<u64> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::InvalidInput(
            "gcd multiplicity requires nonzero inputs".into(),
        ));
    }
    let mut a = p.clone();
    let mut b = q.clone();
    let mut total = 0u64;
    loop {
        let d = a.gcd(&b);
        match d.degree() {
            Some(deg) if deg > 0 => {
                total += deg as u64;
                a = a.exact_div(&d).expect("gcd divides");
                b = b.exact_div(&d).expect("gcd divides");
            }
            _ => break,
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(expr: &str) -> Polynomial {
        crate::expr::parse_polynomial(expr).unwrap()
    }

    #[test]
    fn gcd_shared_linear_factor() {
        assert_eq!(poly_gcd(&p("t^2-1"), &p("t-1")).unwrap(), p("t-1"));
    }

    #[test]
    fn gcd_cyclotomic_oracle() {
        // oracle: t^3 - 1 = (t - 1)(t^2 + t + 1), verified by multiplication
        let product = &p("t-1") * &p("t^2+t+1");
        assert_eq!(product, p("t^3-1"));
        assert_eq!(poly_gcd(&p("1-t^3"), &p("t^2+t+1")).unwrap(), p("t^2+t+1"));
    }

    #[test]
    fn gcd_with_zero_is_monic_other() {
        assert_eq!(
            poly_gcd(&p("3*t+3"), &Polynomial::zero()).unwrap(),
            p("t+1")
        );
        assert!(poly_gcd(&Polynomial::zero(), &Polynomial::zero()).is_err());
    }

    #[test]
    fn gcd_large_binomial_coefficients() {
        // exercises the modular path on inputs with big coefficients
        let f = &p("t").pow(60) - &Polynomial::one();
        let g = &p("t+1").pow(60) - &Polynomial::one();
        let d = poly_gcd(&f, &g).unwrap();
        assert_eq!(d, p("t^2+t+1"));
    }

    #[test]
    fn gcd_multiplicity_min_of_powers() {
        let a = p("t-1").pow(2);
        let b = p("t-1").pow(3);
        assert_eq!(gcd_multiplicity(&a, &b).unwrap(), 2);
    }

    #[test]
    fn gcd_multiplicity_cubics_oracle() {
        // 1 - t^3 = -(t - 1)(t^2 + t + 1) shares exactly the two conjugate
        // roots of t^2 + t + 1 with it, each simple.
        assert_eq!(gcd_multiplicity(&p("1-t^3"), &p("1+t+t^2")).unwrap(), 2);
    }

    #[test]
    fn gcd_multiplicity_coprime() {
        assert_eq!(gcd_multiplicity(&p("t"), &p("t+1")).unwrap(), 0);
        assert!(gcd_multiplicity(&p("t"), &Polynomial::zero()).is_err());
    }

    #[test]
    fn gcd_multiplicity_squarefree_self() {
        let q = p("t^3 - t"); // squarefree
        assert_eq!(gcd_multiplicity(&q, &q).unwrap(), 3);
    }

    #[test]
    fn resultant_linear() {
        // Res(t - a, t - b) = a - b under the rows-of-first-argument-on-top
        // convention, i.e. lc(p)^deg(q) * q evaluated at the roots of p.
        assert_eq!(
            p("t-1").resultant(&p("t+1")).unwrap(),
            crate::rat_from_i64(2)
        );
    }

    #[test]
    fn resultant_quadratics_oracle() {
        // roots of t^2+1 are +-i; (i^2 - 1)(-i^2 - ... ) product of pairwise
        // differences: Res = prod q(alpha) = (-2)(-2) = 4
        assert_eq!(
            p("t^2+1").resultant(&p("t^2-1")).unwrap(),
            crate::rat_from_i64(4)
        );
    }

    #[test]
    fn resultant_common_root_is_zero() {
        let prod = &p("t-1") * &p("t+2");
        assert!(p("t-1").resultant(&prod).unwrap().is_zero());
    }

    #[test]
    fn radical_examples() {
        assert_eq!(p("t-1").pow(3).radical().unwrap(), p("t-1"));
        let q = &p("t").pow(2) * &p("t+1");
        assert_eq!(q.radical().unwrap(), p("t^2+t"));
        assert_eq!(p("2*t^2-2").radical().unwrap(), p("t^2-1")); // idempotent on squarefree
    }

    #[test]
    fn squarefree_decomposition_yun() {
        let q = &p("t-1").pow(2) * &p("t").pow(3);
        let dec = q.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(p("t-1"), 2), (p("t"), 3)]);
    }

    #[test]
    fn rational_roots_found() {
        let q = &(&p("t-2") * &p("2*t+1")) * &p("t^2+1");
        let roots = q.rational_roots();
        assert_eq!(
            roots,
            vec![
                Rat::new(Int::from(-1), Int::from(2)),
                crate::rat_from_i64(2)
            ]
        );
    }

    #[test]
    fn division_roundtrip() {
        let a = p("t^5 - 2*t^3 + t - 7/3");
        let b = p("3*t^2 + t");
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
    }
}
