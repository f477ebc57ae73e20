//! Dense polynomials with rational coefficients.

use super::poly::IntPolynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// A polynomial with exact rational coefficients, ascending order, trailing
/// zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPolynomial[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

impl RatPolynomial {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut p = RatPolynomial { coeffs };
        while matches!(p.coeffs.last(), Some(c) if c.is_zero()) {
            p.coeffs.pop();
        }
        p
    }

    pub fn zero() -> Self {
        RatPolynomial { coeffs: Vec::new() }
    }

    pub fn from_int(p: &IntPolynomial) -> Self {
        Self::new(p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// # Panics
    /// Panics on the zero polynomial.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of the zero polynomial is undefined");
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.coeffs.last().unwrap().is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        RatPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
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

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean remainder of `self` modulo the monic polynomial `m`.
    ///
    /// # Panics
    /// Panics if `m` is not monic.
    pub fn rem_monic(&self, m: &Self) -> Self {
        assert!(m.is_monic(), "rem_monic requires a monic modulus");
        let dm = m.degree();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= dm {
            let k = r.degree() - dm;
            let co = r.coeffs.last().unwrap().clone();
            let mut shift = vec![BigRational::zero(); k];
            shift.push(co);
            let t = Self::new(shift);
            r = r.sub(&t.mul(m));
        }
        r
    }

    /// Clears denominators: returns `(p, d)` with integer `p` and positive
    /// integer `d` such that `self = p / d` and `content(p)` coprime to `d`
    /// is not enforced (only a common denominator).
    pub fn clear_denominators(&self) -> (IntPolynomial, BigInt) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (IntPolynomial::new(ints), den)
    }

    /// True when every coefficient is an integer.
    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Converts to an integer polynomial.
    ///
    /// # Panics
    /// Panics if any coefficient has a nontrivial denominator.
    pub fn to_int(&self) -> IntPolynomial {
        assert!(self.is_integer(), "polynomial has non-integer coefficients");
        IntPolynomial::new(self.coeffs.iter().map(|c| c.numer().clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rem_monic_reduces() {
        // x^3 mod (x^2 - 2) = 2x
        let m = RatPolynomial::from_i64(&[-2, 0, 1]);
        let f = RatPolynomial::from_i64(&[0, 0, 0, 1]);
        assert_eq!(f.rem_monic(&m), RatPolynomial::from_i64(&[0, 2]));
    }

    #[test]
    fn clear_denominators_roundtrip() {
        let f = RatPolynomial::new(vec![
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::new(BigInt::from(2), BigInt::from(3)),
        ]);
        let (p, d) = f.clear_denominators();
        assert_eq!(d, BigInt::from(6));
        assert_eq!(p, IntPolynomial::from_i64(&[3, 4]));
    }
}
