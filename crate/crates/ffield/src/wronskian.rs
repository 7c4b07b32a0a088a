//! Wronskians with respect to t, and rational linear dependence extraction.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::Rat;

/// Determinant of the matrix whose j-th row holds the (j-1)-th derivatives
/// of the inputs. Zero exactly when the inputs are linearly dependent over
/// the constants (characteristic zero).
pub fn wronskian(fs: &[RationalFunction]) -> Result<RationalFunction> {
    if fs.is_empty() {
        return Err(Error::InvalidInput("wronskian of an empty list".into()));
    }
    let n = fs.len();
    let mut rows: Vec<Vec<RationalFunction>> = Vec::with_capacity(n);
    rows.push(fs.to_vec());
    for j in 1..n {
        let prev = &rows[j - 1];
        rows.push(prev.iter().map(|f| f.derivative()).collect());
    }
    Ok(field_determinant(rows))
}

/// Exact determinant over the function field by Gaussian elimination.
fn field_determinant(mut m: Vec<Vec<RationalFunction>>) -> RationalFunction {
    let n = m.len();
    let mut det = RationalFunction::one();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero());
        let Some(p) = pivot else {
            return RationalFunction::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -&det;
        }
        let pk = m[k][k].clone();
        det = &det * &pk;
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] / &pk;
            for j in k..n {
                let sub = &factor * &m[k][j];
                m[i][j] = &m[i][j] - &sub;
            }
        }
    }
    det
}

/// Finds a nontrivial rational vector c with sum c_i f_i = 0, or `None` if
/// the family is linearly independent over the constants. The search is
/// exact: clear to a common denominator and solve the coefficient system.
pub fn linear_dependence(fs: &[RationalFunction]) -> Option<Vec<Rat>> {
    if fs.is_empty() {
        return None;
    }
    let mut den = Polynomial::one();
    for f in fs {
        let g = den.gcd(f.den());
        den = &den * &f.den().exact_div(&g).expect("gcd divides");
    }
    let nums: Vec<Polynomial> = fs
        .iter()
        .map(|f| f.num() * &den.exact_div(f.den()).expect("lcm divisible"))
        .collect();
    let rows = 1 + nums.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    // matrix: one row per t-power, one column per function
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|r| nums.iter().map(|p| p.coeff(r)).collect())
        .collect();
    nullspace_vector(&mut m, fs.len())
}

/// One nontrivial kernel vector of the column space, by exact elimination.
fn nullspace_vector(m: &mut [Vec<Rat>], cols: usize) -> Option<Vec<Rat>> {
    let rows = m.len();
    let mut pivot_of_col: Vec<Option<usize>> = alloc::vec![None; cols];
    let mut rank_row = 0usize;
    for col in 0..cols {
        let pivot = (rank_row..rows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            continue;
        };
        m.swap(rank_row, p);
        let inv = Rat::one() / m[rank_row][col].clone();
        for c in col..cols {
            m[rank_row][c] = &m[rank_row][c] * &inv;
        }
        for r in 0..rows {
            if r != rank_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    let sub = &f * &m[rank_row][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        pivot_of_col[col] = Some(rank_row);
        rank_row += 1;
        if rank_row == rows {
            break;
        }
    }
    let free = (0..cols).find(|&c| pivot_of_col[c].is_none())?;
    let mut v = alloc::vec![Rat::zero(); cols];
    v[free] = Rat::one();
    for c in 0..cols {
        if let Some(r) = pivot_of_col[c] {
            v[c] = -m[r][free].clone();
        }
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_ratfun;

    fn rf(s: &str) -> RationalFunction {
        parse_ratfun(s).unwrap()
    }

    #[test]
    fn wronskian_examples() {
        assert_eq!(wronskian(&[rf("1"), rf("t")]).unwrap(), rf("1"));
        assert!(wronskian(&[rf("t"), rf("2*t")]).unwrap().is_zero());
        // 3x3 determinant by hand: W(1, t, t^2) = 2
        assert_eq!(wronskian(&[rf("1"), rf("t"), rf("t^2")]).unwrap(), rf("2"));
    }

    #[test]
    fn dependence_vector_found() {
        let fs = [rf("t+1"), rf("t-1"), rf("1")];
        let c = linear_dependence(&fs).unwrap();
        let combo = crate::ratfun::linear_combination(&c, &fs);
        assert!(combo.is_zero());
        assert!(c.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn independent_family_has_no_kernel() {
        assert!(linear_dependence(&[rf("1"), rf("t"), rf("1/t")]).is_none());
    }
}
