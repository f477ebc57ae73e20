//! Characteristic polynomials of algebraic elements.
//!
//! For a monic irreducible `f` of degree `d` and an element written as a
//! polynomial `g` in the generator, the characteristic polynomial is the
//! degree-`d` monic rational polynomial whose roots are `g(alpha_i)` over all
//! roots `alpha_i` of `f`. It is computed exactly as the characteristic
//! polynomial of the multiplication-by-`g` matrix on the power basis of
//! `Q[x]/(f)` via the Faddeev–LeVerrier recurrence.

use super::factor::is_irreducible;
use super::poly::IntPolynomial;
use super::ratpoly::RatPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense rational matrix helpers (row-major), sized for degree <= 8 work.
pub(crate) fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![BigRational::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                if b[t][j].is_zero() {
                    continue;
                }
                let prod = &a[i][t] * &b[t][j];
                out[i][j] += prod;
            }
        }
    }
    out
}

pub(crate) fn mat_trace(a: &[Vec<BigRational>]) -> BigRational {
    let mut t = BigRational::zero();
    for (i, row) in a.iter().enumerate() {
        t += &row[i];
    }
    t
}

pub(crate) fn mat_identity(n: usize) -> Vec<Vec<BigRational>> {
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigRational::one();
    }
    m
}

/// Inverts a square rational matrix by Gauss–Jordan elimination.
///
/// Returns `None` when the matrix is singular.
pub(crate) fn mat_inverse(a: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a.to_vec();
    let mut inv = mat_identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        for j in 0..n {
            m[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for j in 0..n {
                let t = &factor * &m[col][j];
                m[r][j] -= t;
                let t = &factor * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    Some(inv)
}

/// Characteristic polynomial (monic, ascending coefficients) of a square
/// rational matrix by the Faddeev–LeVerrier recurrence.
pub fn matrix_char_poly(m: &[Vec<BigRational>]) -> RatPolynomial {
    let d = m.len();
    let mut coeffs = vec![BigRational::zero(); d + 1];
    coeffs[d] = BigRational::one();
    let mut b = mat_identity(d);
    for k in 1..=d {
        let a = mat_mul(m, &b);
        let c = -mat_trace(&a) / BigRational::from_integer(BigInt::from(k as i64));
        coeffs[d - k] = c.clone();
        b = a;
        for i in 0..d {
            b[i][i] += &c;
        }
    }
    RatPolynomial::new(coeffs)
}

/// Multiplication-by-`g` matrix on the power basis of `Q[x]/(f)`; column `j`
/// holds the coordinates of `g * x^j mod f`.
pub fn multiplication_matrix(f: &IntPolynomial, g: &RatPolynomial) -> Vec<Vec<BigRational>> {
    let d = f.degree();
    let fm = RatPolynomial::from_int(f);
    let mut cols: Vec<RatPolynomial> = Vec::with_capacity(d);
    let mut cur = g.rem_monic(&fm);
    let x = RatPolynomial::from_i64(&[0, 1]);
    for _ in 0..d {
        cols.push(cur.clone());
        cur = cur.mul(&x).rem_monic(&fm);
    }
    let mut m = vec![vec![BigRational::zero(); d]; d];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..d {
            m[i][j] = col.coeff(i);
        }
    }
    m
}

/// Characteristic polynomial of the element `g(alpha)` in `Q[x]/(f)`.
///
/// Returns the monic degree-`deg f` polynomial whose roots are `g(alpha_i)`
/// over all embeddings `alpha_i` of the generator.
///
/// # Panics
/// Panics unless `f` is monic and irreducible of degree >= 1.
pub fn char_poly_of_element(f: &IntPolynomial, g: &RatPolynomial) -> RatPolynomial {
    assert!(!f.is_zero() && f.is_monic(), "defining polynomial must be monic");
    assert!(
        is_irreducible(f),
        "defining polynomial must be irreducible: {}",
        f
    );
    let m = multiplication_matrix(f, g);
    matrix_char_poly(&m)
}
