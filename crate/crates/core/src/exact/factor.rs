//! Irreducibility over `Q` for monic integer polynomials of degree <= 8.
//!
//! Strategy, sound and complete on the supported range:
//! 1. degree 1 is irreducible; a repeated factor (non-trivial `gcd(f, f')`)
//!    means reducible;
//! 2. an integer root (divisor of the constant term) means reducible, and for
//!    degree <= 3 the absence of one settles irreducibility;
//! 3. an irreducibility certificate modulo a small prime settles many inputs
//!    instantly;
//! 4. otherwise an exhaustive search for a monic divisor of each degree
//!    `k <= deg/2`: the divisor's constant term divides `f`'s constant term
//!    and its middle coefficients obey the Mignotte factor bound, so the
//!    search space is finite and the test is complete.

use super::poly::IntPolynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Irreducibility over the rationals.
///
/// # Panics
/// Panics unless `f` is monic with `1 <= deg f <= 8`.
pub fn is_irreducible(f: &IntPolynomial) -> bool {
    assert!(!f.is_zero(), "irreducibility of the zero polynomial is undefined");
    assert!(f.is_monic(), "irreducibility test requires a monic polynomial");
    let d = f.degree();
    assert!((1..=8).contains(&d), "irreducibility test supports degrees 1..=8");
    if d == 1 {
        return true;
    }
    // Repeated factors are visible in gcd(f, f').
    if f.gcd_primitive(&f.derivative()).degree() > 0 {
        return false;
    }
    // Monic integer polynomials have integer rational roots dividing a_0.
    if f.coeff(0).is_zero() {
        return false; // x divides f
    }
    if has_integer_root(f) {
        return false;
    }
    if d <= 3 {
        return true;
    }
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97] {
        if let Some(true) = irreducible_mod_p(f, p) {
            return true;
        }
    }
    // Complete bounded search for a monic divisor.
    for k in 2..=d / 2 {
        if find_monic_divisor(f, k).is_some() {
            return false;
        }
    }
    true
}

fn has_integer_root(f: &IntPolynomial) -> bool {
    let a0 = f.coeff(0).abs();
    let mut div = BigInt::one();
    // Enumerate divisors of |a0| by trial division (the inputs here are
    // desk-scale; the constant term is bounded by the coefficient range).
    let mut divisors = Vec::new();
    while &div * &div <= a0 {
        if (&a0 % &div).is_zero() {
            divisors.push(div.clone());
            divisors.push(&a0 / &div);
        }
        div += 1;
    }
    for r in divisors {
        if f.eval_integer(&r).is_zero() || f.eval_integer(&(-&r)).is_zero() {
            return true;
        }
    }
    false
}

/// Exhaustive search for a monic divisor of degree `k`: the constant term
/// divides `f(0)` and interior coefficients are bounded by the Mignotte
/// factor bound `|h_i| <= C(k, i) * (1 + ||f||_2)`.
fn find_monic_divisor(f: &IntPolynomial, k: usize) -> Option<IntPolynomial> {
    let norm = f.norm2_squared().sqrt() + BigInt::one();
    let a0 = f.coeff(0).abs();
    let mut const_divs: Vec<BigInt> = Vec::new();
    let mut div = BigInt::one();
    while &div * &div <= a0 {
        if (&a0 % &div).is_zero() {
            const_divs.push(div.clone());
            const_divs.push(&a0 / &div);
        }
        div += 1;
    }
    const_divs.sort();
    const_divs.dedup();

    let bounds: Vec<BigInt> = (1..k).map(|i| binomial(k, i) * &norm).collect();
    let mut mid = vec![BigInt::zero(); k.saturating_sub(1)];

    fn rec(
        f: &IntPolynomial,
        k: usize,
        bounds: &[BigInt],
        const_divs: &[BigInt],
        mid: &mut Vec<BigInt>,
        idx: usize,
    ) -> Option<IntPolynomial> {
        if idx == mid.len() {
            for c0 in const_divs {
                for sign in [1i64, -1] {
                    let mut coeffs = Vec::with_capacity(k + 1);
                    coeffs.push(c0 * BigInt::from(sign));
                    coeffs.extend(mid.iter().cloned());
                    coeffs.push(BigInt::one());
                    let h = IntPolynomial::new(coeffs);
                    if divides(&h, f) {
                        return Some(h);
                    }
                }
            }
            return None;
        }
        let b = bounds[idx].clone();
        let mut c = -b.clone();
        while c <= b {
            mid[idx] = c.clone();
            if let Some(h) = rec(f, k, bounds, const_divs, mid, idx + 1) {
                return Some(h);
            }
            c += 1;
        }
        None
    }

    rec(f, k, &bounds, &const_divs, &mut mid, 0)
}

fn divides(h: &IntPolynomial, f: &IntPolynomial) -> bool {
    // Monic divisor: plain long division over Z stays integral.
    let mut r = f.clone();
    let dh = h.degree();
    while !r.is_zero() && r.degree() >= dh {
        let k = r.degree() - dh;
        let co = r.leading_coefficient().clone();
        let mut t = vec![BigInt::zero(); k + 1];
        t[k] = co;
        r = r.sub(&IntPolynomial::new(t).mul(h));
    }
    r.is_zero()
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    b
}

/// Rabin irreducibility test for `f mod p`.
///
/// Returns `None` when the reduction is unusable (degree drops or the
/// reduction is not squarefree), otherwise `Some(verdict)`. A `true` verdict
/// certifies irreducibility over `Q` for monic `f`.
fn irreducible_mod_p(f: &IntPolynomial, p: u64) -> Option<bool> {
    let d = f.degree();
    let fp: Vec<u64> = (0..=d)
        .map(|i| {
            let c = f.coeff(i).mod_floor(&BigInt::from(p));
            let digits = c.to_u64_digits().1;
            if digits.is_empty() {
                0
            } else {
                digits[0]
            }
        })
        .collect();
    if fp[d] == 0 {
        return None;
    }
    // Squarefree check mod p.
    let der = derive_fp(&fp, p);
    if poly_gcd_fp(&fp, &der, p).len() > 1 {
        return None;
    }
    // x^(p^d) == x mod f, and gcd(x^(p^(d/l)) - x, f) = 1 for prime l | d.
    let xq = frobenius_power(&fp, p, d as u32);
    let x = vec![0, 1];
    if !sub_fp(&xq, &x, p).is_empty() {
        return Some(false);
    }
    for l in [2usize, 3, 5, 7] {
        if d % l == 0 {
            let e = (d / l) as u32;
            let xe = frobenius_power(&fp, p, e);
            let g = poly_gcd_fp(&fp, &sub_fp(&xe, &x, p), p);
            if g.len() > 1 {
                return Some(false);
            }
        }
    }
    Some(true)
}

fn trim_fp(mut v: Vec<u64>) -> Vec<u64> {
    while matches!(v.last(), Some(0)) {
        v.pop();
    }
    v
}

fn sub_fp(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + p - y % p) % p;
    }
    trim_fp(out)
}

fn mul_fp(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x as u128 * y as u128;
        }
    }
    trim_fp(out.into_iter().map(|c| (c % p as u128) as u64).collect())
}

fn derive_fp(a: &[u64], p: u64) -> Vec<u64> {
    if a.len() <= 1 {
        return Vec::new();
    }
    trim_fp(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (c as u128 * i as u128 % p as u128) as u64)
            .collect(),
    )
}

fn poly_mod_fp(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let lead_inv = mod_inverse(m[dm], p);
    let mut r: Vec<u64> = a.to_vec();
    r = trim_fp(r);
    while r.len() > dm {
        let k = r.len() - 1 - dm;
        let c = (r[r.len() - 1] as u128 * lead_inv as u128 % p as u128) as u64;
        for i in 0..=dm {
            let idx = k + i;
            let sub = (c as u128 * m[i] as u128 % p as u128) as u64;
            r[idx] = (r[idx] + p - sub) % p;
        }
        r = trim_fp(r);
    }
    r
}

fn poly_gcd_fp(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = trim_fp(a.to_vec());
    let mut y = trim_fp(b.to_vec());
    while !y.is_empty() {
        let r = poly_mod_fp(&x, &y, p);
        x = y;
        y = r;
    }
    // Normalize monic.
    if let Some(&lc) = x.last() {
        let inv = mod_inverse(lc, p);
        for c in &mut x {
            *c = (*c as u128 * inv as u128 % p as u128) as u64;
        }
    }
    x
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Computes `x^(p^e) mod f` over `F_p` by iterated Frobenius composition.
fn frobenius_power(f: &[u64], p: u64, e: u32) -> Vec<u64> {
    // phi = x^p mod f by square and multiply.
    let mut phi: Vec<u64> = vec![1];
    let mut exp = p;
    let mut base = vec![0u64, 1];
    while exp > 0 {
        if exp & 1 == 1 {
            phi = poly_mod_fp(&mul_fp(&phi, &base, p), f, p);
        }
        base = poly_mod_fp(&mul_fp(&base, &base, p), f, p);
        exp >>= 1;
    }
    // Iterate: x^(p^e) = phi composed with itself e-1 more times.
    let mut acc = phi.clone();
    for _ in 1..e {
        acc = compose_fp(&acc, &phi, f, p);
    }
    acc
}

/// Composition `a(b) mod f` over `F_p` (Horner in the polynomial argument).
fn compose_fp(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut acc: Vec<u64> = Vec::new();
    for &c in a.iter().rev() {
        acc = poly_mod_fp(&mul_fp(&acc, b, p), f, p);
        if c != 0 {
            if acc.is_empty() {
                acc = vec![c];
            } else {
                acc[0] = (acc[0] + c) % p;
                acc = trim_fp(acc);
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn classic_examples() {
        assert!(is_irreducible(&p(&[-2, -4, 0, 1]))); // x^3 - 4x - 2 (Eisenstein at 2)
        assert!(!is_irreducible(&p(&[-1, 0, 1]))); // x^2 - 1
        assert!(is_irreducible(&p(&[9, 0, -14, 0, 1]))); // x^4 - 14x^2 + 9 (min poly of sqrt2+sqrt5)
        assert!(is_irreducible(&p(&[1, 0, -10, 0, 1]))); // x^4 - 10x^2 + 1 (sqrt2+sqrt3)
        assert!(is_irreducible(&p(&[-2, 0, 1]))); // x^2 - 2
        assert!(!is_irreducible(&p(&[2, 3, 1]))); // (x+1)(x+2)
        assert!(is_irreducible(&p(&[1, 1, 1]))); // x^2 + x + 1
        assert!(is_irreducible(&p(&[1, 0, 0, 0, 1]))); // x^4 + 1: reducible mod every p but irreducible
    }

    #[test]
    fn degree_one_and_repeated_factors() {
        assert!(is_irreducible(&p(&[7, 1])));
        assert!(!is_irreducible(&p(&[1, 2, 1]))); // (x+1)^2
        assert!(!is_irreducible(&p(&[0, 0, 1]))); // x^2
    }

    #[test]
    fn products_of_two_quadratics() {
        // (x^2 - 2)(x^2 - 3) = x^4 - 5x^2 + 6 has no rational root.
        assert!(!is_irreducible(&p(&[6, 0, -5, 0, 1])));
    }

    #[test]
    fn products_of_two_cubics_degree_six() {
        // (x^3 - 2)(x^3 - 3) = x^6 - 5x^3 + 6
        assert!(!is_irreducible(&p(&[6, 0, 0, -5, 0, 0, 1])));
    }

    #[test]
    fn cyclotomic_cosine_minimal_polynomials() {
        // Conductor 32 cosine polynomial x^8 - 8x^6 + 20x^4 - 16x^2 + 2.
        assert!(is_irreducible(&p(&[2, 0, -16, 0, 20, 0, -8, 0, 1])));
        // Conductor 13: x^6 + x^5 - 5x^4 - 4x^3 + 6x^2 + 3x - 1.
        assert!(is_irreducible(&p(&[-1, 3, 6, -4, -5, 1, 1])));
    }
}
