//! Gcd-sum bounds for S-unit pairs: both alternatives of the height
//! propositions, the corollary with its dependent cases, the multiple-zero
//! excess bound, the unit-sum lower bound, the Wronskian witness
//! construction, and the gcd(f^n - 1, g^n - 1) scan.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::bipoly::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::height::{height_outside, projective_height, zeros_outside};
use crate::implicitize::implicitize;
use crate::places::PlaceSet;
use crate::poly::{gcd_multiplicity, Polynomial};
use crate::ratfun::RationalFunction;
use crate::report::BoundReport;
use crate::sunit::{certify_sunit, multiplicative_dependence, Dependence, SUnit};
use crate::wronskian::{linear_dependence, wronskian};
use crate::{rat_from_i64, rat_from_u64, Rat, GCD_SUM_CONST_CUBED};

/// Shared-place-set guard.
fn require_same_places<'a>(a: &'a SUnit, b: &SUnit) -> Result<&'a PlaceSet> {
    if a.places() != b.places() {
        return Err(Error::InvalidInput(
            "units certified against different place sets".into(),
        ));
    }
    Ok(a.places())
}

/// Sum over places outside S of min(v(1 - a), v(1 - b)): the number of
/// common zeros of a - 1 and b - 1 outside S, with multiplicity, computed
/// as a gcd multiplicity of the S-free numerator parts plus an explicit
/// infinity term when infinity is not in S.
pub fn gcd_sum(a: &SUnit, b: &SUnit) -> Result<u64> {
    let s = require_same_places(a, b)?;
    let fa = &RationalFunction::one() - a.value();
    let fb = &RationalFunction::one() - b.value();
    match (fa.is_zero(), fb.is_zero()) {
        (true, true) => Err(Error::InvalidInput(
            "both units equal 1: the gcd sum diverges".into(),
        )),
        (true, false) => Ok(zeros_outside(&fb, s)),
        (false, true) => Ok(zeros_outside(&fa, s)),
        (false, false) => {
            let na = s.s_free_part(fa.num());
            let nb = s.s_free_part(fb.num());
            let finite = if na.is_constant() || nb.is_constant() {
                0
            } else {
                gcd_multiplicity(&na, &nb)?
            };
            let infinity = if s.includes_infinity() {
                0
            } else {
                let va = fa.v_infinity().expect("nonzero");
                let vb = fb.v_infinity().expect("nonzero");
                core::cmp::max(0, core::cmp::min(va, vb)) as u64
            };
            Ok(finite + infinity)
        }
    }
}

/// Corollary for a unit pair, in exact arithmetic.
///
/// Independent pairs: gcd_sum^3 <= 54 * H(a) * H(b) * chi, the cubed form of
/// the non-rational bound, decided entirely over the integers. Dependent
/// pairs with generating relation u1^r u2^s = mu: either mu != 1 and the sum
/// vanishes, or mu = 1 and the sum is at most min(H(a)/|s|, H(b)/|r|).
pub fn check_cor_2_3(a: &SUnit, b: &SUnit) -> Result<BoundReport> {
    require_same_places(a, b)?;
    if a.is_constant() && b.is_constant() {
        return Err(Error::InvalidInput(
            "the corollary requires a pair that is not both constant".into(),
        ));
    }
    let g = gcd_sum(a, b)?;
    let chi = a.places().chi();
    let mut report = match multiplicative_dependence(a, b)? {
        Dependence::Independent => {
            let lhs_cubed = crate::poly::pow_rat(&rat_from_u64(g), 3);
            let rhs = rat_from_u64(GCD_SUM_CONST_CUBED)
                * rat_from_u64(a.height())
                * rat_from_u64(b.height())
                * rat_from_i64(chi);
            let holds = lhs_cubed <= rhs;
            let mut rep = BoundReport::new("cor-2.3(i)", lhs_cubed, rhs, holds)
                .with_branch("independent-cubed");
            rep.push_note(
                "cube-root bound compared in cubed integer form: gcd_sum^3 vs 54*H(a)*H(b)*chi",
            );
            rep
        }
        Dependence::Relation { r, s, mu } => {
            if !mu.is_one() {
                let holds = g == 0;
                let mut rep = BoundReport::new("cor-2.3(ii)", rat_from_u64(g), Rat::zero(), holds)
                    .with_branch("dependent-nontrivial-constant");
                rep.push_context("r", r.to_string());
                rep.push_context("s", s.to_string());
                rep.push_context_rat("mu", &mu);
                rep
            } else {
                let mut bound: Option<Rat> = None;
                if s != 0 {
                    bound = Some(Rat::new(a.height().into(), s.abs().into()));
                }
                if r != 0 {
                    let alt = Rat::new(b.height().into(), r.abs().into());
                    bound = Some(match bound {
                        Some(cur) if cur <= alt => cur,
                        _ => alt,
                    });
                }
                let bound = bound.expect("(r, s) is nonzero");
                let holds = rat_from_u64(g) <= bound;
                let mut rep = BoundReport::new("cor-2.3(ii)", rat_from_u64(g), bound, holds)
                    .with_branch("dependent-unit-constant");
                rep.push_context("r", r.to_string());
                rep.push_context("s", s.to_string());
                rep
            }
        }
    };
    report.push_context("gcd_sum", g.to_string());
    report.push_context("H(a)", a.height().to_string());
    report.push_context("H(b)", b.height().to_string());
    report.push_context("chi", chi.to_string());
    Ok(report)
}

fn first_alternative(
    a: &SUnit,
    b: &SUnit,
    h: u64,
    k: u64,
) -> (Option<bool>, Option<u64>, Option<String>) {
    // the index divides both heights, so it is at most their minimum; when
    // even that cannot satisfy the alternative, skip the implicitization
    let min_h = core::cmp::min(a.height(), b.height());
    if a.height() > h * min_h || b.height() > k * min_h {
        return (
            Some(false),
            None,
            Some("first alternative impossible: heights exceed h, k times any index".into()),
        );
    }
    match implicitize(a.value(), b.value()) {
        Ok((_, index)) => (
            Some(a.height() <= h * index && b.height() <= k * index),
            Some(index),
            None,
        ),
        Err(e) => (None, None, Some(format!("field index undetermined: {e}"))),
    }
}

/// Common precondition for the two propositions: multiplicatively
/// independent (hence not both constant) and positive parameters.
fn prop_preconditions(a: &SUnit, b: &SUnit, h: u64, k: u64) -> Result<()> {
    require_same_places(a, b)?;
    if h == 0 || k == 0 {
        return Err(Error::InvalidInput("h and k must be positive".into()));
    }
    match multiplicative_dependence(a, b)? {
        Dependence::Independent => Ok(()),
        Dependence::Relation { .. } => Err(Error::InvalidInput(
            "units are multiplicatively dependent".into(),
        )),
    }
}

/// Gcd-sum form: either the field-index alternative holds, or
/// gcd_sum <= (h+2k)/n * H(b) + k/n * H(a) + (n-1)/2 * chi with n = hk+h+k.
pub fn check_prop_2_2(a: &SUnit, b: &SUnit, h: u64, k: u64) -> Result<BoundReport> {
    prop_preconditions(a, b, h, k)?;
    let n = h * k + h + k;
    let g = gcd_sum(a, b)?;
    let chi = a.places().chi();
    let rhs = Rat::new((h + 2 * k).into(), n.into()) * rat_from_u64(b.height())
        + Rat::new(k.into(), n.into()) * rat_from_u64(a.height())
        + Rat::new((n - 1).into(), 2.into()) * rat_from_i64(chi);
    let alt2 = rat_from_u64(g) <= rhs;
    let (alt1, index, note) = first_alternative(a, b, h, k);
    finish_prop_report(
        "prop-2.2",
        rat_from_u64(g),
        rhs,
        alt1,
        alt2,
        index,
        note,
        a,
        b,
        h,
        k,
    )
}

/// Height form: either the field-index alternative holds, or
/// H_S((1-a)/(1-b)) >= hk/n * H(b) - k/n * (H(a)+H(b)) - (n-1)/2 * chi.
pub fn check_prop_2_1(a: &SUnit, b: &SUnit, h: u64, k: u64) -> Result<BoundReport> {
    prop_preconditions(a, b, h, k)?;
    let n = h * k + h + k;
    let one = RationalFunction::one();
    let q = &(&one - a.value()) / &(&one - b.value());
    let lhs = rat_from_u64(height_outside(&q, a.places()));
    let chi = a.places().chi();
    let rhs = Rat::new((h * k).into(), n.into()) * rat_from_u64(b.height())
        - Rat::new(k.into(), n.into()) * rat_from_u64(a.height() + b.height())
        - Rat::new((n - 1).into(), 2.into()) * rat_from_i64(chi);
    let alt2 = lhs >= rhs;
    let (alt1, index, note) = first_alternative(a, b, h, k);
    finish_prop_report("prop-2.1", lhs, rhs, alt1, alt2, index, note, a, b, h, k)
}

#[allow(clippy::too_many_arguments)]
fn finish_prop_report(
    check: &str,
    lhs: Rat,
    rhs: Rat,
    alt1: Option<bool>,
    alt2: bool,
    index: Option<u64>,
    note: Option<String>,
    a: &SUnit,
    b: &SUnit,
    h: u64,
    k: u64,
) -> Result<BoundReport> {
    let branch = match (alt1, alt2) {
        (Some(true), true) => "both-alternatives",
        (Some(true), false) => "first-alternative",
        (Some(false), true) | (None, true) => "second-alternative",
        (Some(false), false) => "neither",
        (None, false) => "neither (first undetermined)",
    };
    let holds = alt1 == Some(true) || alt2;
    let mut rep = BoundReport::new(check, lhs, rhs, holds).with_branch(branch);
    if let Some(i) = index {
        rep.push_context("field_index", i.to_string());
    }
    if let Some(n) = note {
        rep.push_note(n);
    }
    rep.push_context("H(a)", a.height().to_string());
    rep.push_context("H(b)", b.height().to_string());
    rep.push_context("chi", a.places().chi().to_string());
    rep.push_context("h", h.to_string());
    rep.push_context("k", k.to_string());
    Ok(rep)
}

/// Multiple-zero excess of 1 - b over all places: sum of (v(1 - b) - 1) over
/// the zeros of 1 - b, which the abc bound keeps at most chi_S.
pub fn multiple_zero_excess(b: &SUnit) -> Result<BoundReport> {
    if b.is_constant() {
        return Err(Error::InvalidInput(
            "excess bound requires a nonconstant unit".into(),
        ));
    }
    let fb = &RationalFunction::one() - b.value();
    let num = fb.num();
    let finite = num.degree().unwrap_or(0) as i64 - num.radical()?.degree().unwrap_or(0) as i64;
    let v_inf = fb.v_infinity().expect("nonzero");
    let excess = finite + if v_inf > 0 { v_inf - 1 } else { 0 };
    let chi = b.places().chi();
    let holds = excess <= chi;
    let mut rep = BoundReport::new(
        "mason-excess",
        rat_from_i64(excess),
        rat_from_i64(chi),
        holds,
    )
    .with_branch("abc-excess");
    rep.push_context("H(b)", b.height().to_string());
    Ok(rep)
}

/// Lower bound for the zeros of a sum of units with no vanishing subsum:
/// sum_{v not in S} v(theta_1 + ... + theta_m) >= H(theta_1 : ... : theta_m)
/// - C(m, 2) * chi. The subsum condition is checked exhaustively.
pub fn unit_sum_lower_bound(thetas: &[SUnit]) -> Result<BoundReport> {
    let m = thetas.len();
    if m == 0 {
        return Err(Error::InvalidInput("empty unit list".into()));
    }
    if m > 12 {
        return Err(Error::InvalidInput(
            "unit-sum bound capped at m = 12 summands".into(),
        ));
    }
    let s = thetas[0].places().clone();
    for t in thetas {
        if t.places() != &s {
            return Err(Error::InvalidInput(
                "units certified against different place sets".into(),
            ));
        }
    }
    for mask in 1u32..(1 << m) {
        let mut sum = RationalFunction::zero();
        for (i, t) in thetas.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum = &sum + t.value();
            }
        }
        if sum.is_zero() {
            let subset = (0..m)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| i + 1)
                .collect();
            return Err(Error::VanishingSubsum { subset });
        }
    }
    let mut sigma = RationalFunction::zero();
    for t in thetas {
        sigma = &sigma + t.value();
    }
    let lhs = zeros_outside(&sigma, &s) as i64;
    let values: Vec<RationalFunction> = thetas.iter().map(|t| t.value().clone()).collect();
    let proj = projective_height(&values)? as i64;
    let pairs = (m as i64) * (m as i64 - 1) / 2;
    let rhs = proj - pairs * s.chi();
    let holds = lhs >= rhs;
    let mut rep = BoundReport::new(
        "unit-sum-lower-bound",
        rat_from_i64(lhs),
        rat_from_i64(rhs),
        holds,
    )
    .with_branch("no-vanishing-subsum");
    rep.push_context("m", m.to_string());
    rep.push_context("projective_height", proj.to_string());
    rep.push_context("chi", s.chi().to_string());
    Ok(rep)
}

/// Output of the Wronskian witness construction: either the nonzero
/// Wronskian itself, or a nonzero polynomial relation P(a, b) = 0 inside the
/// degree box deg_X <= k, deg_Y <= h, extracted from the rational kernel.
#[derive(Clone, Debug)]
pub enum Witness {
    Nonzero(RationalFunction),
    Relation(BivariatePolynomial),
}

pub const DEFAULT_WRONSKIAN_CAP: u64 = 24;

/// Builds q = (1-a)/(1-b) and the n = hk+h+k functions a^{i-1} q
/// (i = 1..k) followed by a^r b^s (r = 0..k, s = 0..h-1), and computes
/// their Wronskian. A zero Wronskian yields the linear dependence and from
/// it the polynomial relation P1(X)(1-X) + P2(X,Y)(1-Y), which is nonzero,
/// vanishes exactly at (a, b), and respects the degree box.
pub fn wronskian_witness(a: &SUnit, b: &SUnit, h: u64, k: u64, cap: u64) -> Result<Witness> {
    require_same_places(a, b)?;
    if h == 0 || k == 0 {
        return Err(Error::InvalidInput("h and k must be positive".into()));
    }
    if a.is_constant() && b.is_constant() {
        return Err(Error::InvalidInput(
            "witness construction requires a pair that is not both constant".into(),
        ));
    }
    let one = RationalFunction::one();
    let fb = &one - b.value();
    if fb.is_zero() {
        return Err(Error::InvalidInput(
            "b = 1 leaves q = (1-a)/(1-b) undefined".into(),
        ));
    }
    let n = h * k + h + k;
    if n > cap {
        return Err(Error::ResourceLimit(format!(
            "witness system of size {n} exceeds the cap {cap}"
        )));
    }
    let q = &(&one - a.value()) / &fb;
    let mut fs: Vec<RationalFunction> = Vec::with_capacity(n as usize);
    for i in 0..k {
        fs.push(&a.value().pow_i(i as i64)? * &q);
    }
    for r in 0..=k {
        for s in 0..h {
            fs.push(&a.value().pow_i(r as i64)? * &b.value().pow_i(s as i64)?);
        }
    }
    let w = wronskian(&fs)?;
    if !w.is_zero() {
        return Ok(Witness::Nonzero(w));
    }
    let c = linear_dependence(&fs)
        .ok_or_else(|| Error::Internal("zero Wronskian without a rational dependence".into()))?;
    let one_minus_x = &BivariatePolynomial::one() - &BivariatePolynomial::var_x();
    let one_minus_y = &BivariatePolynomial::one() - &BivariatePolynomial::var_y();
    let mut p1 = BivariatePolynomial::zero();
    for (i, ci) in c.iter().take(k as usize).enumerate() {
        p1.add_term(i as u32, 0, RationalFunction::constant(ci.clone()));
    }
    let mut p2 = BivariatePolynomial::zero();
    let mut idx = k as usize;
    for r in 0..=k {
        for s in 0..h {
            p2.add_term(
                r as u32,
                s as u32,
                RationalFunction::constant(c[idx].clone()),
            );
            idx += 1;
        }
    }
    let p = &(&p1 * &one_minus_x) + &(&p2 * &one_minus_y);
    if p.is_zero() {
        return Err(Error::Internal(
            "kernel relation collapsed to the zero polynomial".into(),
        ));
    }
    if p.deg_x().unwrap_or(0) as u64 > k || p.deg_y().unwrap_or(0) as u64 > h {
        return Err(Error::Internal("relation left the degree box".into()));
    }
    if !p.eval(a.value(), b.value()).is_zero() {
        return Err(Error::Internal(
            "extracted relation fails to vanish at (a, b)".into(),
        ));
    }
    Ok(Witness::Relation(p.normalize_integer()?))
}

/// One row of the gcd(f^n - 1, g^n - 1) scan.
#[derive(Clone, Debug)]
pub struct ArRow {
    pub n: u32,
    pub gcd_degree: u64,
    /// 54 * H(f^n) * H(g^n) * chi, the cubed right side.
    pub rhs_cubed: Rat,
    pub holds: bool,
}

/// Exact gcd degrees of (f^n - 1, g^n - 1) for n up to n_max, each compared
/// against the corollary bound with a = f^n, b = g^n and S the zeros of f
/// and g plus infinity.
pub fn ar_gcd_table(f: &Polynomial, g: &Polynomial, n_max: u32) -> Result<Vec<ArRow>> {
    if f.is_constant() || g.is_constant() {
        return Err(Error::InvalidInput(
            "the scan requires nonconstant polynomials".into(),
        ));
    }
    let s = PlaceSet::new((f * g).radical()?, true)?;
    let fu = certify_sunit(&RationalFunction::from_poly(f.clone()), &s)?;
    let gu = certify_sunit(&RationalFunction::from_poly(g.clone()), &s)?;
    if !matches!(
        multiplicative_dependence(&fu, &gu)?,
        Dependence::Independent
    ) {
        return Err(Error::InvalidInput(
            "f and g are multiplicatively dependent".into(),
        ));
    }
    let chi = s.chi();
    let hf = f.degree().unwrap() as u64;
    let hg = g.degree().unwrap() as u64;
    let one = Polynomial::one();
    let mut fpow = Polynomial::one();
    let mut gpow = Polynomial::one();
    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        fpow = &fpow * f;
        gpow = &gpow * g;
        let d = crate::poly::poly_gcd(&(&fpow - &one), &(&gpow - &one))?
            .degree()
            .unwrap_or(0) as u64;
        let rhs_cubed = rat_from_u64(GCD_SUM_CONST_CUBED)
            * rat_from_u64(n as u64 * hf)
            * rat_from_u64(n as u64 * hg)
            * rat_from_i64(chi);
        let holds = crate::poly::pow_rat(&rat_from_u64(d), 3) <= rhs_cubed;
        rows.push(ArRow {
            n,
            gcd_degree: d,
            rhs_cubed,
            holds,
        });
    }
    Ok(rows)
}
