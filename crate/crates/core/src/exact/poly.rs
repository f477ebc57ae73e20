//! Dense integer polynomials with exact arithmetic.
//!
//! Coefficients are stored in ascending order (index `i` holds the
//! coefficient of `x^i`) with no trailing zeros; the zero polynomial is the
//! empty vector. All operations are exact over the integers or rationals —
//! nothing here rounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A polynomial with arbitrary-precision integer coefficients.
///
/// The coefficient vector is kept normalized: either empty (the zero
/// polynomial) or with a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if i == 0 {
                    write!(f, "{}", c)?;
                } else {
                    match c.to_string().as_str() {
                        "1" => {}
                        "-1" => write!(f, "-")?,
                        s => write!(f, "{}", s)?,
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", i)?;
                    }
                }
            } else {
                if c.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let a = c.abs();
                if i == 0 {
                    write!(f, "{}", a)?;
                } else {
                    if !a.is_one() {
                        write!(f, "{}", a)?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl IntPolynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from machine integers, ascending order.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial.
    ///
    /// # Panics
    /// Panics on the zero polynomial, which has no degree.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of the zero polynomial is undefined");
        self.coeffs.len() - 1
    }

    /// Leading coefficient.
    ///
    /// # Panics
    /// Panics on the zero polynomial.
    pub fn leading_coefficient(&self) -> &BigInt {
        self.coeffs.last().expect("zero polynomial has no leading coefficient")
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading_coefficient().is_one()
    }

    pub fn neg(&self) -> Self {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Self::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitutes `x -> x + t` for an integer shift `t`.
    pub fn shift_variable(&self, t: &BigInt) -> Self {
        // Horner on f(x + t): process coefficients from the top.
        let mut out = Self::zero();
        let shift = Self::new(vec![t.clone(), BigInt::one()]);
        for c in self.coeffs.iter().rev() {
            out = out.mul(&shift).add(&Self::constant(c.clone()));
        }
        out
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c * BigInt::from(i));
        }
        Self::new(out)
    }

    /// Content: nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with the sign of the leading coefficient preserved.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        IntPolynomial { coeffs: self.coeffs.iter().map(|a| a / &c).collect() }
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact evaluation at an integer point.
    pub fn eval_integer(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluates `f(a + b*sqrt(6))` exactly in `Z[sqrt(6)]`, returning `(u, v)`
    /// with `f(a + b*sqrt(6)) = u + v*sqrt(6)`.
    pub fn eval_quad(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        let mut u = BigInt::zero();
        let mut v = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            let nu = &u * a + BigInt::from(6) * &v * b + c;
            let nv = &u * b + &v * a;
            u = nu;
            v = nv;
        }
        (u, v)
    }

    /// Pseudo-division: returns `(q, r)` with
    /// `lc(d)^(deg n - deg d + 1) * n = q * d + r` and `deg r < deg d`.
    ///
    /// # Panics
    /// Panics if `d` is zero or `deg n < deg d`.
    pub fn pseudo_divide(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "pseudo-division by the zero polynomial");
        let dn = self.degree();
        let dd = d.degree();
        assert!(dn >= dd, "pseudo-division requires deg(n) >= deg(d)");
        let lc = d.leading_coefficient().clone();
        let mut r = self.clone();
        let mut q = Self::zero();
        let steps = dn - dd + 1;
        let mut done = 0usize;
        while !r.is_zero() && r.degree() >= dd {
            let k = r.degree() - dd;
            let co = r.leading_coefficient().clone();
            // q <- q*lc + co*x^k ; r <- r*lc - co*x^k*d
            let mut t = vec![BigInt::zero(); k + 1];
            t[k] = co;
            let t = Self::new(t);
            q = q.scale(&lc).add(&t);
            r = r.scale(&lc).sub(&t.mul(d));
            done += 1;
        }
        // Pad the multiplier so the identity uses exactly lc^(deg n - deg d + 1).
        for _ in done..steps {
            q = q.scale(&lc);
            r = r.scale(&lc);
        }
        (q, r)
    }

    /// Exact polynomial division; panics if `d` does not divide `self` in `Q[x]`
    /// with an integer quotient.
    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let mut r = self.clone();
        let dd = d.degree();
        let lc = d.leading_coefficient();
        let mut q = vec![BigInt::zero(); self.degree() - dd + 1];
        while !r.is_zero() && r.degree() >= dd {
            let k = r.degree() - dd;
            let (co, rem) = r.leading_coefficient().div_rem(lc);
            assert!(rem.is_zero(), "non-exact polynomial division");
            let mut t = vec![BigInt::zero(); k + 1];
            t[k] = co.clone();
            let t = Self::new(t);
            r = r.sub(&t.mul(d));
            q[k] = co;
        }
        assert!(r.is_zero(), "non-exact polynomial division (remainder)");
        Self::new(q)
    }

    /// Primitive greatest common divisor via the primitive pseudo-remainder
    /// sequence. The result is primitive with a positive leading coefficient
    /// (content of the inputs is ignored); gcd with zero returns the other
    /// argument's primitive part.
    pub fn gcd_primitive(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return Self::positive_lc(b);
        }
        if b.is_zero() {
            return Self::positive_lc(a);
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let (_, r) = a.pseudo_divide(&b);
            if r.is_zero() {
                return Self::positive_lc(b.primitive_part());
            }
            a = b;
            b = r.primitive_part();
            if b.degree() == 0 {
                return Self::constant(BigInt::one());
            }
            if a.degree() < b.degree() {
                std::mem::swap(&mut a, &mut b);
            }
        }
    }

    fn positive_lc(p: Self) -> Self {
        if !p.is_zero() && p.leading_coefficient().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    /// Squarefree part: `f / gcd(f, f')`, primitive, positive leading
    /// coefficient. Shares the roots of `f` without multiplicity.
    ///
    /// # Panics
    /// Panics on the zero polynomial.
    pub fn squarefree_part(&self) -> Self {
        assert!(!self.is_zero(), "squarefree part of the zero polynomial");
        let p = Self::positive_lc(self.primitive_part());
        if p.degree() == 0 {
            return Self::constant(BigInt::one());
        }
        let g = p.gcd_primitive(&p.derivative());
        if g.degree() == 0 {
            return p;
        }
        p.div_exact(&g)
    }

    /// A strict Cauchy bound `M` with every real root of `f` in `(-M, M)`:
    /// `M = 1 + max_i |a_i| / |lc|`.
    ///
    /// # Panics
    /// Panics on the zero polynomial or a constant.
    pub fn cauchy_root_bound(&self) -> BigRational {
        assert!(!self.is_zero() && self.degree() >= 1, "root bound needs degree >= 1");
        let lc = self.leading_coefficient().abs();
        let mut m = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        BigRational::one() + BigRational::new(m, lc)
    }

    /// Squared Euclidean norm of the coefficient vector.
    pub fn norm2_squared(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }
}

/// Sign of `u + v*sqrt(6)` as `-1`, `0`, or `+1`.
///
/// Uses the exact comparison `u^2` vs `6 v^2`; since `sqrt(6)` is irrational
/// the value is zero only when `u = v = 0`.
pub fn sign_quad(u: &BigInt, v: &BigInt) -> i32 {
    let su = sign_of(u);
    let sv = sign_of(v);
    match (su, sv) {
        (0, 0) => 0,
        (0, s) | (s, 0) => s,
        (a, b) if a == b => a,
        _ => {
            // Opposite signs: the larger of u^2 and 6 v^2 decides.
            let u2 = u * u;
            let v26 = BigInt::from(6) * v * v;
            match u2.cmp(&v26) {
                std::cmp::Ordering::Greater => su,
                std::cmp::Ordering::Less => sv,
                std::cmp::Ordering::Equal => {
                    unreachable!("u^2 = 6 v^2 with u, v nonzero contradicts sqrt(6) irrational")
                }
            }
        }
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

pub(crate) fn sign_of_rational(x: &BigRational) -> i32 {
    sign_of(x.numer())
}
