//! Implicitization of a parametrized plane curve and the index of the
//! parametrization.
//!
//! The eliminant E(X, Y) = Res_t(a_num - X a_den, b_num - Y b_den) equals a
//! constant times P^k, where P is the reduced equation of the image curve
//! and k = [Q(t) : Q(a, b)] is the index. E is computed by evaluating exact
//! integer Sylvester determinants on a grid sized by the degree bounds
//! deg_X E <= H(b), deg_Y E <= H(a) and interpolating, after which P and k
//! are extracted with gcds over the field Q(X) only; nothing is ever
//! factored. If the eliminant fails to be a perfect power of its squarefree
//! part the instance is flagged instead of guessed.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bipoly::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::poly::{bareiss_det_int, Polynomial};
use crate::ratfun::RationalFunction;
use crate::{Int, Rat};

/// Returns the normalized squarefree curve equation P (primitive integer
/// coefficients) and the index k with eliminant = c * P^k. Cross-validates
/// k * deg_X(P) = H(b) and k * deg_Y(P) = H(a) and the exact vanishing
/// P(a, b) = 0, erroring on any mismatch.
pub fn implicitize(
    a: &RationalFunction,
    b: &RationalFunction,
) -> Result<(BivariatePolynomial, u64)> {
    if a.is_constant() && b.is_constant() {
        return Err(Error::InvalidInput(
            "cannot implicitize a pair of constants".into(),
        ));
    }
    if a.is_constant() {
        let p = &BivariatePolynomial::var_x()
            - &BivariatePolynomial::constant_rat(a.constant_value().expect("constant"));
        return Ok((p.normalize_integer()?, b.height()));
    }
    if b.is_constant() {
        let p = &BivariatePolynomial::var_y()
            - &BivariatePolynomial::constant_rat(b.constant_value().expect("constant"));
        return Ok((p.normalize_integer()?, a.height()));
    }

    let m = a.height() as usize; // deg bound in Y
    let n = b.height() as usize; // deg bound in X

    let (na, da) = clear_to_int(a);
    let (nb, db) = clear_to_int(b);

    // evaluate the eliminant on an (n+1) x (m+1) integer grid
    let mut values = Vec::with_capacity(n + 1);
    for xi in 0..=n {
        let pa = combine(&na, &da, xi as i64, m);
        let mut row = Vec::with_capacity(m + 1);
        for yj in 0..=m {
            let qb = combine(&nb, &db, yj as i64, n);
            row.push(sylvester_det(&pa, &qb));
        }
        values.push(row);
    }

    // interpolate in Y per grid column, then in X per Y-coefficient
    let ys: Vec<Rat> = (0..=m).map(|j| crate::rat_from_i64(j as i64)).collect();
    let xs: Vec<Rat> = (0..=n).map(|i| crate::rat_from_i64(i as i64)).collect();
    let per_x: Vec<Vec<Rat>> = values
        .iter()
        .map(|row| {
            interpolate(
                &ys,
                &row.iter()
                    .map(|v| Rat::from_integer(v.clone()))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let mut e_coeffs: Vec<Polynomial> = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let col: Vec<Rat> = per_x
            .iter()
            .map(|c| c.get(k).cloned().unwrap_or_else(Rat::zero))
            .collect();
        e_coeffs.push(Polynomial::from_coeffs(interpolate(&xs, &col)));
    }
    while e_coeffs.last().map_or(false, |c| c.is_zero()) {
        e_coeffs.pop();
    }
    if e_coeffs.is_empty() {
        return Err(Error::Internal("eliminant vanished identically".into()));
    }

    // Extract the squarefree part P and the multiplicity k through
    // univariate specializations: for good rational points x0 the
    // decomposition of E(x0, Y) is a single squarefree layer with uniform
    // multiplicity k, and lc_E(x0) * monic(sqf) equals the polynomial
    // lc_E(X) * P(X, Y) / lc_P(X) specialized at x0, which interpolation
    // recovers with 2n + 1 good points. The rigorous certificate is the
    // validation below, not the sampling: a polynomial with the right
    // degrees vanishing identically along the parametrization is forced to
    // be a constant multiple of the reduced curve equation.
    let lc_e = e_coeffs.last().expect("nonzero eliminant").clone();
    let deg_y_e = e_coeffs.len() - 1;
    if deg_y_e == 0 {
        return Err(Error::Internal("eliminant unexpectedly free of Y".into()));
    }
    let needed = 2 * n + 1;
    let mut nodes: Vec<Rat> = Vec::with_capacity(needed);
    let mut specializations: Vec<Vec<Rat>> = Vec::with_capacity(needed);
    let mut k_opt: Option<usize> = None;
    let mut candidate = 0i64;
    let mut tried = 0u32;
    while nodes.len() < needed {
        tried += 1;
        if tried > 64 + 2 * needed as u32 {
            return Err(Error::Internal(
                "eliminant is not a perfect power of its squarefree part; flagged, not guessed"
                    .into(),
            ));
        }
        let x0 = crate::rat_from_i64(candidate);
        candidate = if candidate >= 0 {
            -candidate - 1
        } else {
            -candidate
        };
        if lc_e.eval(&x0).is_zero() {
            continue;
        }
        let e_at = Polynomial::from_coeffs(e_coeffs.iter().map(|c| c.eval(&x0)).collect());
        debug_assert_eq!(e_at.degree(), Some(deg_y_e)); // lc_e(x0) != 0
        let layers = e_at.squarefree_decomposition()?;
        let [(g, mult)] = layers.as_slice() else {
            continue; // unlucky point: P(x0, Y) picked up a square factor
        };
        match k_opt {
            None => k_opt = Some(*mult),
            Some(k0) if k0 == *mult => {}
            Some(_) => {
                // inconsistent multiplicities across points: start over on
                // the smaller one by resetting the collection
                nodes.clear();
                specializations.clear();
                k_opt = Some(*mult);
            }
        }
        let scaled = g.scale(&lc_e.eval(&x0));
        let mut coeffs: Vec<Rat> = scaled.coeffs().to_vec();
        coeffs.resize(deg_y_e / k_opt.unwrap() + 1, Rat::zero());
        nodes.push(x0);
        specializations.push(coeffs);
    }
    let k = k_opt.expect("collected points");
    if deg_y_e % k != 0 {
        return Err(Error::Internal(
            "eliminant is not a perfect power of its squarefree part; flagged, not guessed".into(),
        ));
    }
    let deg_y_p = deg_y_e / k;
    let mut hat_coeffs: Vec<Polynomial> = Vec::with_capacity(deg_y_p + 1);
    for j in 0..=deg_y_p {
        let col: Vec<Rat> = specializations.iter().map(|c| c[j].clone()).collect();
        hat_coeffs.push(Polynomial::from_coeffs(interpolate(&nodes, &col)));
    }
    // strip the lc_P^{k-1}-shaped content over Q[X]
    let p_coeffs = crate::rfpoly::RfPoly::from_coeffs(
        hat_coeffs
            .into_iter()
            .map(RationalFunction::from_poly)
            .collect(),
    )
    .primitive_polynomial_coeffs();

    let deg_x = p_coeffs
        .iter()
        .filter_map(|p| p.degree())
        .max()
        .unwrap_or(0);
    let deg_y = p_coeffs.len() - 1;
    if k * deg_x != n || k * deg_y != m {
        return Err(Error::Internal(alloc::format!(
            "index cross-validation failed: k = {k}, deg_X = {deg_x}, deg_Y = {deg_y}, H(a) = {m}, H(b) = {n}"
        )));
    }
    let p = BivariatePolynomial::from_poly_coeffs_in_y(&p_coeffs).normalize_integer()?;
    if !p.eval(a, b).is_zero() {
        return Err(Error::Internal(
            "curve equation fails to vanish on the parametrization".into(),
        ));
    }
    Ok((p, k as u64))
}

/// Total degree of the reduced image curve of the parametrization.
pub fn image_curve_degree(a: &RationalFunction, b: &RationalFunction) -> Result<u64> {
    Ok(image_curve_degree_with_index(a, b)?.0)
}

/// (degree of the reduced image curve, index of the parametrization).
pub fn image_curve_degree_with_index(
    a: &RationalFunction,
    b: &RationalFunction,
) -> Result<(u64, u64)> {
    let (p, k) = implicitize(a, b)?;
    Ok((p.total_degree().unwrap_or(0) as u64, k))
}

fn clear_to_int(f: &RationalFunction) -> (Vec<Int>, Vec<Int>) {
    let mut den_lcm = Int::one();
    for c in f.num().coeffs().iter().chain(f.den().coeffs()) {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let scale = |p: &Polynomial| -> Vec<Int> {
        p.coeffs()
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect()
    };
    (scale(f.num()), scale(f.den()))
}

/// Integer coefficients of num - x * den, padded to formal degree `deg`,
/// ascending.
fn combine(num: &[Int], den: &[Int], x: i64, deg: usize) -> Vec<Int> {
    let mut out = alloc::vec![Int::zero(); deg + 1];
    for (i, c) in num.iter().enumerate() {
        out[i] += c;
    }
    let xi = Int::from(x);
    for (i, c) in den.iter().enumerate() {
        out[i] -= c * &xi;
    }
    out
}

/// Determinant of the Sylvester matrix built with the FORMAL degrees of the
/// inputs (leading entries may be zero); this keeps the value equal to the
/// eliminant polynomial evaluated at the grid point even where the actual
/// t-degree drops.
fn sylvester_det(p: &[Int], q: &[Int]) -> Int {
    let m = p.len() - 1;
    let n = q.len() - 1;
    if m == 0 && n == 0 {
        return Int::one();
    }
    let size = m + n;
    let mut mat = alloc::vec![alloc::vec![Int::zero(); size]; size];
    for row in 0..n {
        for (k, c) in p.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in q.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    bareiss_det_int(mat)
}

/// Lagrange interpolation through distinct nodes; returns ascending
/// coefficients of the unique polynomial of degree < nodes.len().
fn interpolate(xs: &[Rat], vals: &[Rat]) -> Vec<Rat> {
    let n = xs.len();
    let mut acc = Polynomial::zero();
    for i in 0..n {
        if vals[i].is_zero() {
            continue;
        }
        let mut basis = Polynomial::one();
        let mut denom = Rat::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            basis = &basis * &Polynomial::linear_root(&xs[j]);
            denom *= &xs[i] - &xs[j];
        }
        acc = &acc + &basis.scale(&(vals[i].clone() / denom));
    }
    let mut out: Vec<Rat> = acc.coeffs().to_vec();
    out.resize(n, Rat::zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_ratfun;

    fn rf(s: &str) -> RationalFunction {
        parse_ratfun(s).unwrap()
    }

    /// Compares bivariate polynomials up to sign.
    fn assert_eq_up_to_sign(p: &BivariatePolynomial, q: &BivariatePolynomial) {
        assert!(p == q || *p == -q, "{p} vs {q}");
    }

    #[test]
    fn cuspidal_cubic() {
        // oracle: substitute and expand: (t^3)^2 - (t^2)^3 = 0
        let (p, k) = implicitize(&rf("t^2"), &rf("t^3")).unwrap();
        let expect = &BivariatePolynomial::var_x().pow(3) - &BivariatePolynomial::var_y().pow(2);
        assert_eq_up_to_sign(&p, &expect);
        assert_eq!(k, 1);
    }

    #[test]
    fn diagonal() {
        let (p, k) = implicitize(&rf("t"), &rf("t")).unwrap();
        let expect = &BivariatePolynomial::var_x() - &BivariatePolynomial::var_y();
        assert_eq_up_to_sign(&p, &expect);
        assert_eq!(k, 1);
    }

    #[test]
    fn double_cover_of_parabola() {
        // the map t -> (t^2, t^4) is 2-to-1 onto Y = X^2: a generic point of
        // the image has exactly the preimages +-t
        let (p, k) = implicitize(&rf("t^2"), &rf("t^4")).unwrap();
        let expect = &BivariatePolynomial::var_x().pow(2) - &BivariatePolynomial::var_y();
        assert_eq_up_to_sign(&p, &expect);
        assert_eq!(k, 2);
    }

    #[test]
    fn constant_coordinate() {
        let (p, k) = implicitize(&rf("3"), &rf("t^2")).unwrap();
        assert_eq!(k, 2);
        assert_eq!(p.deg_y().unwrap_or(0), 0); // vertical line X = 3
        assert!(p.eval(&rf("3"), &rf("t^2")).is_zero());
    }

    #[test]
    fn rational_coordinates() {
        // line through a Moebius pair: x + y = 1 for (t/(t+1), 1/(t+1))
        let (p, k) = implicitize(&rf("t/(t+1)"), &rf("1/(t+1)")).unwrap();
        let expect = &(&BivariatePolynomial::var_x() + &BivariatePolynomial::var_y())
            - &BivariatePolynomial::one();
        assert_eq_up_to_sign(&p, &expect);
        assert_eq!(k, 1);
    }

    #[test]
    fn vanishing_check_runs() {
        let (p, _) = implicitize(&rf("(t^2-1)/t"), &rf("t^3")).unwrap();
        assert!(p.eval(&rf("(t^2-1)/t"), &rf("t^3")).is_zero());
    }
}
