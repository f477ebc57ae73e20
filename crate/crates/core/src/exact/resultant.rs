//! Exact resultants and discriminants.
//!
//! The sign convention is the classical one:
//! `Res(f, g) = lc(f)^deg(g) * prod g(alpha_i)` over the roots `alpha_i` of
//! `f` (with multiplicity), equal to the determinant of the Sylvester matrix
//! with the `f`-rows on top. Determinants are computed exactly with the
//! fraction-free Bareiss elimination, so no rational arithmetic is needed.

use super::poly::IntPolynomial;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact resultant of `f` and `g`.
///
/// Conventions for degenerate inputs: if either polynomial is zero the
/// resultant is zero (unless both are nonzero constants); for constants
/// `Res(c, g) = c^deg(g)` and `Res(f, c) = c^deg(f)`.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let m = f.degree();
    let n = g.degree();
    if m == 0 {
        return f.coeff(0).pow(n as u32);
    }
    if n == 0 {
        return g.coeff(0).pow(m as u32);
    }
    // Sylvester matrix: n rows of f coefficients, m rows of g coefficients,
    // each row listing coefficients from the leading one downwards.
    let size = m + n;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for r in 0..n {
        for (k, idx) in (0..=m).rev().enumerate() {
            mat[r][r + k] = f.coeff(idx);
        }
    }
    for r in 0..m {
        for (k, idx) in (0..=n).rev().enumerate() {
            mat[n + r][r + k] = g.coeff(idx);
        }
    }
    bareiss_determinant(mat)
}

/// Exact determinant of a square integer matrix by fraction-free elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        // Pivot selection: any nonzero entry in column k at row >= k.
        if m[k][k].is_zero() {
            let mut found = None;
            for r in k + 1..n {
                if !m[r][k].is_zero() {
                    found = Some(r);
                    break;
                }
            }
            match found {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num_integer::Integer::div_rem(&num, &prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
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

/// Discriminant of `f`: `(-1)^(d(d-1)/2) * Res(f, f') / lc(f)`.
///
/// # Panics
/// Panics if `f` is zero or constant.
pub fn discriminant(f: &IntPolynomial) -> BigInt {
    assert!(!f.is_zero() && f.degree() >= 1, "discriminant needs degree >= 1");
    let d = f.degree();
    if d == 1 {
        return BigInt::one();
    }
    let res = resultant(f, &f.derivative());
    let (q, r) = num_integer::Integer::div_rem(&res, f.leading_coefficient());
    assert!(r.is_zero(), "discriminant division must be exact");
    if (d * (d - 1) / 2) % 2 == 1 {
        -q
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn resultant_examples() {
        // Res(x^2 - 2, x) = product of the roots of x^2-2 evaluated... = -2.
        assert_eq!(resultant(&p(&[-2, 0, 1]), &p(&[0, 1])), BigInt::from(-2));
        // Res(x - 3, x - 5) = (3 - 5) = -2.
        assert_eq!(resultant(&p(&[-3, 1]), &p(&[-5, 1])), BigInt::from(-2));
        // |Res(x^3 - 4x - 2, x)| = |f(0)| = 2 as the norm shape.
        assert_eq!(resultant(&p(&[-2, -4, 0, 1]), &p(&[0, 1])).magnitude(), BigInt::from(2).magnitude());
    }

    #[test]
    fn resultant_multiplicativity() {
        // Res(f, g h) = Res(f, g) Res(f, h)
        let f = p(&[-2, 0, 1]);
        let g = p(&[1, 1]);
        let h = p(&[-3, 2, 1]);
        assert_eq!(resultant(&f, &g.mul(&h)), resultant(&f, &g) * resultant(&f, &h));
    }

    #[test]
    fn resultant_vs_direct_product_for_linear_factors() {
        // f = (x-1)(x-4), g arbitrary: Res(f, g) = g(1) g(4).
        let f = p(&[4, -5, 1]);
        let g = p(&[7, -3, 0, 2]);
        let expect = g.eval_integer(&BigInt::from(1)) * g.eval_integer(&BigInt::from(4));
        assert_eq!(resultant(&f, &g), expect);
    }

    #[test]
    fn discriminants() {
        // disc(x^2 - 2) = 8
        assert_eq!(discriminant(&p(&[-2, 0, 1])), BigInt::from(8));
        // disc(x^3 - 4x - 2) = -4(-4)^3 - 27*4 = 256 - 108 = 148
        assert_eq!(discriminant(&p(&[-2, -4, 0, 1])), BigInt::from(148));
        // disc(x^2 + x - 1) = 5
        assert_eq!(discriminant(&p(&[-1, 1, 1])), BigInt::from(5));
        // disc of x^3 + x^2 - 2x - 1 (conductor 7 cyclotomic cosines) = 49
        assert_eq!(discriminant(&p(&[-1, -2, 1, 1])), BigInt::from(49));
    }

    #[test]
    fn degenerate_conventions() {
        assert_eq!(resultant(&IntPolynomial::zero(), &p(&[1, 1])), BigInt::zero());
        assert_eq!(resultant(&p(&[5]), &p(&[0, 0, 1])), BigInt::from(25));
    }
}
