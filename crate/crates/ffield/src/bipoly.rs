//! Sparse bivariate polynomials in X, Y with coefficients in the rational
//! function field, plus Sylvester resultants with Bezout cofactors.
//!
//! The constant-coefficient specialization (coefficients in Q) carries the
//! plane-curve equations; the general form carries the logarithmic-derivative
//! images, whose coefficients genuinely live in Q(t).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::rfpoly::RfPoly;
use crate::Rat;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    X,
    Y,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivariatePolynomial {
    // (x exponent, y exponent) -> nonzero coefficient
    terms: BTreeMap<(u32, u32), RationalFunction>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        BivariatePolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(RationalFunction::one())
    }

    pub fn constant(c: RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        BivariatePolynomial { terms }
    }

    pub fn constant_rat(c: Rat) -> Self {
        Self::constant(RationalFunction::constant(c))
    }

    pub fn var_x() -> Self {
        Self::monomial(1, 0, RationalFunction::one())
    }

    pub fn var_y() -> Self {
        Self::monomial(0, 1, RationalFunction::one())
    }

    pub fn monomial(i: u32, j: u32, c: RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BivariatePolynomial { terms }
    }

    pub fn from_terms(list: &[(u32, u32, RationalFunction)]) -> Self {
        let mut out = BivariatePolynomial::zero();
        for (i, j, c) in list {
            out.add_term(*i, *j, c.clone());
        }
        out
    }

    /// Embeds a univariate polynomial as a polynomial in the chosen axis
    /// with constant coefficients.
    pub fn from_univariate(p: &Polynomial, axis: Axis) -> Self {
        let mut out = BivariatePolynomial::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            let (i, j) = match axis {
                Axis::X => (k as u32, 0),
                Axis::Y => (0, k as u32),
            };
            out.add_term(i, j, RationalFunction::constant(c.clone()));
        }
        out
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&(i, j)) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&(i, j));
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert((i, j), c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> RationalFunction {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn has_constant_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_constant())
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return BivariatePolynomial::zero();
        }
        BivariatePolynomial {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn partial_x(&self) -> Self {
        let mut out = BivariatePolynomial::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.add_term(i - 1, j, c * &RationalFunction::constant_i64(i as i64));
            }
        }
        out
    }

    pub fn partial_y(&self) -> Self {
        let mut out = BivariatePolynomial::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.add_term(i, j - 1, c * &RationalFunction::constant_i64(j as i64));
            }
        }
        out
    }

    /// Swaps the roles of X and Y.
    pub fn transpose(&self) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// Exact evaluation at a pair of rational functions. Constant
    /// coefficients take a single-fraction path (one reduction at the end
    /// instead of one per term), which is what keeps curve-equation checks
    /// at moderate heights fast.
    pub fn eval(&self, x: &RationalFunction, y: &RationalFunction) -> RationalFunction {
        if self.terms.is_empty() {
            return RationalFunction::zero();
        }
        let dx = self.deg_x().unwrap_or(0) as usize;
        let dy = self.deg_y().unwrap_or(0) as usize;
        if self.has_constant_coefficients() {
            let xn = poly_power_table(x.num(), dx);
            let xd = poly_power_table(x.den(), dx);
            let yn = poly_power_table(y.num(), dy);
            let yd = poly_power_table(y.den(), dy);
            let mut num = Polynomial::zero();
            for (&(i, j), c) in &self.terms {
                let (i, j) = (i as usize, j as usize);
                let term = &(&xn[i] * &xd[dx - i]) * &(&yn[j] * &yd[dy - j]);
                num = &num + &term.scale(&c.constant_value().expect("constant"));
            }
            let den = &xd[dx] * &yd[dy];
            return RationalFunction::new(num, den).expect("nonzero denominator");
        }
        let xp = power_table(x, dx);
        let yp = power_table(y, dy);
        let mut acc = RationalFunction::zero();
        for (&(i, j), c) in &self.terms {
            acc = &acc + &(&(c * &xp[i as usize]) * &yp[j as usize]);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BivariatePolynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients with respect to the given axis, ascending; entries are
    /// bivariate polynomials free of that axis.
    pub fn coeffs_wrt(&self, axis: Axis) -> Vec<BivariatePolynomial> {
        let deg = match axis {
            Axis::X => self.deg_x(),
            Axis::Y => self.deg_y(),
        };
        let Some(deg) = deg else {
            return Vec::new();
        };
        let mut out = alloc::vec![BivariatePolynomial::zero(); deg as usize + 1];
        for (&(i, j), c) in &self.terms {
            match axis {
                Axis::X => out[i as usize].add_term(0, j, c.clone()),
                Axis::Y => out[j as usize].add_term(i, 0, c.clone()),
            }
        }
        out
    }

    /// Views a constant-coefficient bivariate as a univariate in Y whose
    /// coefficients are rational functions in X (same dense representation).
    pub fn to_rfpoly_in_y(&self) -> Result<RfPoly> {
        if !self.has_constant_coefficients() {
            return Err(Error::InvalidInput("expected constant coefficients".into()));
        }
        let dy = self.deg_y().unwrap_or(0) as usize;
        let mut coeffs = alloc::vec![Polynomial::zero(); dy + 1];
        for (&(i, j), c) in &self.terms {
            let cur = &coeffs[j as usize]
                + &Polynomial::monomial(c.constant_value().expect("constant"), i as usize);
            coeffs[j as usize] = cur;
        }
        Ok(RfPoly::from_coeffs(
            coeffs
                .into_iter()
                .map(RationalFunction::from_poly)
                .collect(),
        ))
    }

    /// Rebuilds a constant-coefficient bivariate from a univariate in Y with
    /// polynomial coefficients.
    pub fn from_poly_coeffs_in_y(coeffs: &[Polynomial]) -> Self {
        let mut out = BivariatePolynomial::zero();
        for (j, p) in coeffs.iter().enumerate() {
            for (i, c) in p.coeffs().iter().enumerate() {
                out.add_term(i as u32, j as u32, RationalFunction::constant(c.clone()));
            }
        }
        out
    }

    /// Normalizes a constant-coefficient bivariate to primitive integer
    /// coefficients with the lexicographically-leading term positive.
    pub fn normalize_integer(&self) -> Result<BivariatePolynomial> {
        use num_integer::Integer;
        use num_traits::{Signed, Zero};
        if !self.has_constant_coefficients() {
            return Err(Error::InvalidInput("expected constant coefficients".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let mut den_lcm = crate::Int::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.constant_value().expect("constant").denom());
        }
        let mut content = crate::Int::zero();
        let scaled: BTreeMap<(u32, u32), crate::Int> = self
            .terms
            .iter()
            .map(|(&k, c)| {
                let r = c.constant_value().expect("constant");
                let int = r.numer() * (&den_lcm / r.denom());
                (k, int)
            })
            .collect();
        for v in scaled.values() {
            content = content.gcd(v);
        }
        let leading = scaled
            .iter()
            .max_by_key(|(&(i, j), _)| (j, i))
            .expect("nonzero");
        if leading.1.is_negative() {
            content = -content;
        }
        let mut out = BivariatePolynomial::zero();
        for (&(i, j), v) in &scaled {
            out.add_term(
                i,
                j,
                RationalFunction::constant(Rat::from_integer(v / &content)),
            );
        }
        Ok(out)
    }

    pub fn to_display(&self, xname: &str, yname: &str) -> String {
        use core::fmt::Write;
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut s = String::new();
        let mut first = true;
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| (core::cmp::Reverse(i + j), core::cmp::Reverse(i)));
        for (i, j) in keys {
            let c = &self.terms[&(i, j)];
            if !first {
                s.push_str(" + ");
            }
            first = false;
            let coeff_str = c.to_display("t");
            let is_unit = coeff_str == "1";
            if !is_unit || (i == 0 && j == 0) {
                if c.den().is_one() && c.num().is_constant() {
                    write!(s, "{coeff_str}").unwrap();
                } else {
                    write!(s, "({coeff_str})").unwrap();
                }
                if i + j > 0 {
                    s.push('*');
                }
            }
            if i > 0 {
                write!(s, "{xname}").unwrap();
                if i > 1 {
                    write!(s, "^{i}").unwrap();
                }
            }
            if i > 0 && j > 0 {
                s.push('*');
            }
            if j > 0 {
                write!(s, "{yname}").unwrap();
                if j > 1 {
                    write!(s, "^{j}").unwrap();
                }
            }
        }
        s
    }
}

fn poly_power_table(p: &Polynomial, upto: usize) -> Vec<Polynomial> {
    let mut out = Vec::with_capacity(upto + 1);
    out.push(Polynomial::one());
    for _ in 0..upto {
        let next = &out[out.len() - 1] * p;
        out.push(next);
    }
    out
}

fn power_table(x: &RationalFunction, upto: usize) -> Vec<RationalFunction> {
    let mut out = Vec::with_capacity(upto + 1);
    out.push(RationalFunction::one());
    for _ in 0..upto {
        out.push(&out[out.len() - 1] * x);
    }
    out
}

impl core::ops::Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl core::ops::Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl core::ops::Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl core::ops::Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl core::fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.to_display("X", "Y"))
    }
}

// --- resultants ---------------------------------------------------------------

const SYLVESTER_CAP: usize = 8;

/// Sylvester resultant eliminating the given axis, with the coefficient rows
/// of `a` on top. Requires positive degree in the eliminated variable on
/// both sides. Also returns Bezout cofactors (U, V) with U*a + V*b = res,
/// verified by exact expansion before returning.
pub fn bivariate_resultant(
    a: &BivariatePolynomial,
    b: &BivariatePolynomial,
    axis: Axis,
) -> Result<ResultantWithCofactors> {
    let da = degree_along(a, axis);
    let db = degree_along(b, axis);
    if da == 0 || db == 0 {
        return Err(Error::InvalidInput(
            "resultant requires positive degree in the eliminated variable".into(),
        ));
    }
    let size = da + db;
    if size > SYLVESTER_CAP {
        return Err(Error::ResourceLimit(alloc::format!(
            "sylvester matrix of size {size} exceeds the cap {SYLVESTER_CAP}"
        )));
    }
    let mat = sylvester_matrix(a, b, axis);
    let res = det_expansion(&mat);
    // cofactor vector from the last column of the adjugate
    let n = size;
    let mut cof = Vec::with_capacity(n);
    for i in 0..n {
        let minor = delete_row_col(&mat, i, n - 1);
        let m = det_expansion(&minor);
        let sign_neg = (i + n - 1) % 2 == 1;
        cof.push(if sign_neg { -&m } else { m });
    }
    let mut u = BivariatePolynomial::zero();
    for (i, c) in cof.iter().take(db).enumerate() {
        let p = db - 1 - i;
        u = &u + &(c * &axis_power(axis, p as u32));
    }
    let mut v = BivariatePolynomial::zero();
    for (j, c) in cof.iter().skip(db).enumerate() {
        let p = da - 1 - j;
        v = &v + &(c * &axis_power(axis, p as u32));
    }
    let expanded = &(&u * a) + &(&v * b);
    if expanded != res {
        return Err(Error::Internal(
            "bezout cofactor identity failed to expand".into(),
        ));
    }
    if degree_along(&res, axis) != 0 {
        return Err(Error::Internal(
            "resultant still involves the eliminated variable".into(),
        ));
    }
    Ok(ResultantWithCofactors { res, u, v })
}

pub struct ResultantWithCofactors {
    pub res: BivariatePolynomial,
    pub u: BivariatePolynomial,
    pub v: BivariatePolynomial,
}

/// Resultant with the degree-zero conventions Res(c, q) = c^{deg q},
/// Res(p, c) = c^{deg p}, Res(c, d) = 1; used for coprimality tests where
/// one side may not involve the eliminated variable.
pub fn resultant_with_convention(
    a: &BivariatePolynomial,
    b: &BivariatePolynomial,
    axis: Axis,
) -> Result<BivariatePolynomial> {
    let da = degree_along(a, axis);
    let db = degree_along(b, axis);
    if da == 0 && db == 0 {
        return Ok(BivariatePolynomial::one());
    }
    if da == 0 {
        return Ok(a.pow(db as u32));
    }
    if db == 0 {
        return Ok(b.pow(da as u32));
    }
    Ok(bivariate_resultant(a, b, axis)?.res)
}

fn degree_along(p: &BivariatePolynomial, axis: Axis) -> usize {
    match axis {
        Axis::X => p.deg_x().unwrap_or(0) as usize,
        Axis::Y => p.deg_y().unwrap_or(0) as usize,
    }
}

fn axis_power(axis: Axis, e: u32) -> BivariatePolynomial {
    match axis {
        Axis::X => BivariatePolynomial::monomial(e, 0, RationalFunction::one()),
        Axis::Y => BivariatePolynomial::monomial(0, e, RationalFunction::one()),
    }
}

fn sylvester_matrix(
    a: &BivariatePolynomial,
    b: &BivariatePolynomial,
    axis: Axis,
) -> Vec<Vec<BivariatePolynomial>> {
    let ca = a.coeffs_wrt(axis);
    let cb = b.coeffs_wrt(axis);
    let da = ca.len() - 1;
    let db = cb.len() - 1;
    let n = da + db;
    let mut m = alloc::vec![alloc::vec![BivariatePolynomial::zero(); n]; n];
    for row in 0..db {
        for (k, c) in ca.iter().rev().enumerate() {
            m[row][row + k] = c.clone();
        }
    }
    for row in 0..da {
        for (k, c) in cb.iter().rev().enumerate() {
            m[db + row][row + k] = c.clone();
        }
    }
    m
}

fn delete_row_col(
    m: &[Vec<BivariatePolynomial>],
    row: usize,
    col: usize,
) -> Vec<Vec<BivariatePolynomial>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != col)
                .map(|(_, c)| c.clone())
                .collect()
        })
        .collect()
}

fn det_expansion(m: &[Vec<BivariatePolynomial>]) -> BivariatePolynomial {
    let n = m.len();
    if n == 0 {
        return BivariatePolynomial::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BivariatePolynomial::zero();
    for i in 0..n {
        if m[i][0].is_zero() {
            continue;
        }
        let minor = delete_row_col(m, i, 0);
        let sub = det_expansion(&minor);
        let term = &m[i][0] * &sub;
        if i % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

impl core::ops::Mul<&BivariatePolynomial> for &RationalFunction {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        rhs.scale(self)
    }
}

/// Squarefree part of a constant-coefficient bivariate, without factoring:
/// the content (a polynomial in X) is replaced by its radical, and the
/// primitive part by its squarefree part over the field Q(X).
pub fn squarefree_part_constant_coeffs(a: &BivariatePolynomial) -> Result<BivariatePolynomial> {
    if a.is_zero() {
        return Err(Error::InvalidInput(
            "squarefree part of the zero polynomial".into(),
        ));
    }
    if a.is_constant() {
        return Ok(BivariatePolynomial::one());
    }
    let ry = a.to_rfpoly_in_y()?;
    let mut content = Polynomial::zero();
    for c in ry.coeffs() {
        debug_assert!(c.den().is_one());
        content = content.gcd(c.num());
    }
    let prim = ry.scale(
        &RationalFunction::from_poly(content.clone())
            .inv()
            .expect("nonzero"),
    );
    let sqf_prim = prim.squarefree_part();
    let prim_bivar =
        BivariatePolynomial::from_poly_coeffs_in_y(&sqf_prim.primitive_polynomial_coeffs());
    let content_bivar = BivariatePolynomial::from_univariate(&content.radical()?, Axis::X);
    (&prim_bivar * &content_bivar).normalize_integer()
}

/// True when the constant-coefficient bivariate has no repeated factors.
pub fn is_squarefree_constant_coeffs(a: &BivariatePolynomial) -> Result<bool> {
    if a.is_zero() {
        return Ok(false);
    }
    if a.is_constant() {
        return Ok(true);
    }
    let sqf = squarefree_part_constant_coeffs(a)?;
    Ok(sqf.total_degree() == a.total_degree()
        && sqf.deg_x() == a.deg_x()
        && sqf.deg_y() == a.deg_y())
}

/// Views an X-only constant-coefficient bivariate as a univariate
/// polynomial (used for nonzero-root counts of eliminant resultants).
pub fn to_univariate_in_x(a: &BivariatePolynomial) -> Result<Polynomial> {
    if a.deg_y().unwrap_or(0) != 0 || !a.has_constant_coefficients() {
        return Err(Error::InvalidInput(
            "expected a constant-coefficient polynomial in X only".into(),
        ));
    }
    let deg = a.deg_x().unwrap_or(0) as usize;
    let mut coeffs = alloc::vec![Rat::zero(); deg + 1];
    for (&(i, _), c) in a.terms() {
        coeffs[i as usize] = c.constant_value().expect("constant");
    }
    Ok(Polynomial::from_coeffs(coeffs))
}
