//! Rational functions on the projective line, kept in canonical form:
//! numerator and denominator coprime, denominator monic and nonzero.

use alloc::string::String;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::Rat;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds the reduced form; errors on a zero denominator.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides");
        let mut den = den.exact_div(&g).expect("gcd divides");
        let lc = den.leading_coeff().expect("nonzero").clone();
        if !lc.is_one() {
            let inv = Rat::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn constant_i64(c: i64) -> Self {
        Self::constant(crate::rat_from_i64(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn variable() -> Self {
        Self::from_poly(Polynomial::variable())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Height: the degree as a self-map of the line, max(deg num, deg den).
    pub fn height(&self) -> u64 {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        core::cmp::max(dn, dd) as u64
    }

    /// Order of vanishing at infinity: deg den - deg num. `None` for zero.
    pub fn v_infinity(&self) -> Option<i64> {
        let dn = self.num.degree()?;
        Some(self.den.degree().unwrap_or(0) as i64 - dn as i64)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidInput("inverse of zero".into()));
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn pow_i(&self, e: i64) -> Result<Self> {
        if e < 0 {
            Ok(self.inv()?.pow_u((-e) as u32))
        } else {
            Ok(self.pow_u(e as u32))
        }
    }

    pub fn pow_u(&self, e: u32) -> Self {
        RationalFunction::reduced(self.num.pow(e), self.den.pow(e))
    }

    /// d/dt, exact: (n'd - nd')/d^2.
    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let d = &self.den * &self.den;
        Self::reduced(n, d)
    }

    /// Evaluation at a rational point; `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Composition self(phi(t)), exact in the function field.
    pub fn substitute(&self, phi: &RationalFunction) -> Self {
        let n = eval_poly_at_ratfun(&self.num, phi);
        let d = eval_poly_at_ratfun(&self.den, phi);
        &n / &d
    }

    pub fn to_display(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.den.is_one() {
            return self.num.to_display(var);
        }
        let mut s = String::new();
        write!(
            s,
            "({})/({})",
            self.num.to_display(var),
            self.den.to_display(var)
        )
        .unwrap();
        s
    }
}

/// p(phi) for a polynomial p, by Horner in the function field.
pub fn eval_poly_at_ratfun(p: &Polynomial, phi: &RationalFunction) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * phi) + &RationalFunction::constant(c.clone());
    }
    acc
}

impl core::ops::Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let d = &self.den * &rhs.den;
        RationalFunction::reduced(n, d)
    }
}

impl core::ops::Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        let n = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let d = &self.den * &rhs.den;
        RationalFunction::reduced(n, d)
    }
}

impl core::ops::Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl core::ops::Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by the zero function");
        RationalFunction::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl core::ops::Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl core::fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.to_display("t"))
    }
}

impl core::fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "RationalFunction({})", self.to_display("t"))
    }
}

/// Product over a slice, for building units as c * prod (t - s_i)^{e_i}.
pub fn product(factors: &[RationalFunction]) -> RationalFunction {
    let mut acc = RationalFunction::one();
    for f in factors {
        acc = &acc * f;
    }
    acc
}

/// Linear combination sum c_i * f_i.
pub fn linear_combination(coeffs: &[Rat], fs: &[RationalFunction]) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for (c, f) in coeffs.iter().zip(fs) {
        acc = &acc + &(&RationalFunction::constant(c.clone()) * f);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(expr: &str) -> RationalFunction {
        crate::expr::parse_ratfun(expr).unwrap()
    }

    #[test]
    fn canonical_form() {
        let f = RationalFunction::new(
            crate::expr::parse_polynomial("2*t^2-2").unwrap(),
            crate::expr::parse_polynomial("4*t-4").unwrap(),
        )
        .unwrap();
        assert_eq!(f, rf("(t+1)/2"));
        assert!(f.den().is_one() || f.den().leading_coeff().unwrap().is_one());
    }

    #[test]
    fn heights() {
        assert_eq!(rf("t+1").height(), 1);
        assert_eq!(rf("(t^2-1)/t").height(), 2);
        assert_eq!(rf("7/3").height(), 0);
    }

    #[test]
    fn derivative_quotient_rule() {
        let f = rf("(t^2+1)/(t-1)");
        let expect = rf("(t^2 - 2*t - 1)/(t^2 - 2*t + 1)");
        assert_eq!(f.derivative(), expect);
    }

    #[test]
    fn substitution_mobius() {
        // f(t) = t^2 composed with phi(t) = 1/t gives 1/t^2
        let f = rf("t^2");
        let phi = rf("1/t");
        assert_eq!(f.substitute(&phi), rf("1/t^2"));
        assert_eq!(f.substitute(&phi).height(), f.height());
    }

    #[test]
    fn v_infinity_signs() {
        assert_eq!(rf("t^2").v_infinity(), Some(-2));
        assert_eq!(rf("1/t^3").v_infinity(), Some(3));
        assert_eq!(rf("5").v_infinity(), Some(0));
        assert_eq!(RationalFunction::zero().v_infinity(), None);
    }
}
