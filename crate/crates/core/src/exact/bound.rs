//! Interval endpoints for exact root counting.
//!
//! Endpoints are rationals, quadratic irrationals of the shape
//! `a + b*sqrt(6)` with integer `a`, `b`, or infinities. All comparisons and
//! polynomial sign evaluations at these points are exact.

use super::poly::{sign_of, sign_of_rational, sign_quad, IntPolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// The quadratic irrational `a + b*sqrt(6)` with integer coefficients.
///
/// `sqrt(6)` is the only radical needed by the bounded-root searches in this
/// crate (the house cutoff `2 + sqrt(6)` and its mirror image), so this small
/// exact type avoids a general real-algebraic-number tower.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadIrrBound {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadIrrBound {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadIrrBound { a: a.into(), b: b.into() }
    }

    /// The cutoff `2 + sqrt(6)`.
    pub fn two_plus_sqrt6() -> Self {
        Self::new(2, 1)
    }

    pub fn neg(&self) -> Self {
        QuadIrrBound { a: -&self.a, b: -&self.b }
    }

    /// Exact sign of the value: `-1`, `0`, or `+1`.
    pub fn sign(&self) -> i32 {
        sign_quad(&self.a, &self.b)
    }

    /// True when `b = 0`, i.e. the value is the rational integer `a`.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        // a + b*sqrt(6) - p/q has the sign of (a q - p) + b q sqrt(6) for q > 0.
        let q = r.denom();
        let u = &self.a * q - r.numer();
        let v = &self.b * q;
        match sign_quad(&u, &v) {
            0 => Ordering::Equal,
            s if s < 0 => Ordering::Less,
            _ => Ordering::Greater,
        }
    }

    /// A rational upper bound on the value (ceil of `a + b*sqrt(6)`),
    /// using `2 < sqrt(6) < 5/2`.
    pub fn rational_upper(&self) -> BigRational {
        let s_hi = BigRational::new(BigInt::from(5), BigInt::from(2));
        let s_lo = BigRational::from_integer(BigInt::from(2));
        let b = BigRational::from_integer(self.b.clone());
        let bs = if self.b.is_negative() { b * s_lo } else { b * s_hi };
        BigRational::from_integer(self.a.clone()) + bs
    }

    /// A rational lower bound on the value.
    pub fn rational_lower(&self) -> BigRational {
        self.neg().rational_upper() * BigRational::from_integer(BigInt::from(-1))
    }
}

impl fmt::Display for QuadIrrBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt(6)", self.b)
        } else if self.b.is_negative() {
            write!(f, "{}-{}*sqrt(6)", self.a, self.b.abs())
        } else {
            write!(f, "{}+{}*sqrt(6)", self.a, self.b)
        }
    }
}

/// An exact endpoint for root counting: `-inf`, a rational, `a + b*sqrt(6)`,
/// or `+inf`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Bound {
    NegInf,
    Rational(BigRational),
    Quad(QuadIrrBound),
    PosInf,
}

impl Bound {
    pub fn rational_i64(n: i64) -> Self {
        Bound::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn two_plus_sqrt6() -> Self {
        Bound::Quad(QuadIrrBound::two_plus_sqrt6())
    }

    pub fn minus_two_minus_sqrt6() -> Self {
        Bound::Quad(QuadIrrBound::two_plus_sqrt6().neg())
    }

    /// Exact total order on endpoints.
    pub fn cmp_bound(&self, other: &Bound) -> Ordering {
        use Bound::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Rational(a), Rational(b)) => a.cmp(b),
            (Quad(a), Rational(b)) => a.cmp_rational(b),
            (Rational(a), Quad(b)) => b.cmp_rational(a).reverse(),
            (Quad(a), Quad(b)) => {
                let u = &a.a - &b.a;
                let v = &a.b - &b.b;
                match sign_quad(&u, &v) {
                    0 => Ordering::Equal,
                    s if s < 0 => Ordering::Less,
                    _ => Ordering::Greater,
                }
            }
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => write!(f, "-inf"),
            Bound::Rational(r) => write!(f, "{}", r),
            Bound::Quad(q) => write!(f, "{}", q),
            Bound::PosInf => write!(f, "+inf"),
        }
    }
}

/// Exact sign of `f` at the quadratic irrational `a + b*sqrt(6)`.
pub fn sign_at(f: &IntPolynomial, at: &QuadIrrBound) -> i32 {
    let (u, v) = f.eval_quad(&at.a, &at.b);
    sign_quad(&u, &v)
}

/// Exact sign of `f` at a rational point.
pub fn sign_at_rational(f: &IntPolynomial, at: &BigRational) -> i32 {
    sign_of_rational(&f.eval_rational(at))
}

/// Exact sign of `f` at an extended endpoint.
///
/// At `+inf` this is the sign of the leading coefficient; at `-inf` it is the
/// sign of the leading coefficient times `(-1)^deg`.
pub fn sign_at_bound(f: &IntPolynomial, at: &Bound) -> i32 {
    if f.is_zero() {
        return 0;
    }
    match at {
        Bound::NegInf => {
            let s = sign_of(f.leading_coefficient());
            if f.degree() % 2 == 1 {
                -s
            } else {
                s
            }
        }
        Bound::PosInf => sign_of(f.leading_coefficient()),
        Bound::Rational(r) => sign_at_rational(f, r),
        Bound::Quad(q) => sign_at(f, q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_at_examples() {
        let b = QuadIrrBound::two_plus_sqrt6();
        // x - 4 at 2 + sqrt(6) = sqrt(6) - 2 > 0
        assert_eq!(sign_at(&IntPolynomial::from_i64(&[-4, 1]), &b), 1);
        // x - 5 at 2 + sqrt(6) = sqrt(6) - 3 < 0
        assert_eq!(sign_at(&IntPolynomial::from_i64(&[-5, 1]), &b), -1);
        // x^2 - 10 at 2 + sqrt(6) = 4 sqrt(6) > 0
        assert_eq!(sign_at(&IntPolynomial::from_i64(&[-10, 0, 1]), &b), 1);
    }

    #[test]
    fn bound_ordering() {
        let b = Bound::two_plus_sqrt6();
        let r44 = Bound::Rational(BigRational::new(BigInt::from(44), BigInt::from(10)));
        let r45 = Bound::Rational(BigRational::new(BigInt::from(45), BigInt::from(10)));
        assert_eq!(r44.cmp_bound(&b), Ordering::Less);
        assert_eq!(r45.cmp_bound(&b), Ordering::Greater);
        assert_eq!(Bound::NegInf.cmp_bound(&b), Ordering::Less);
        assert_eq!(Bound::PosInf.cmp_bound(&b), Ordering::Greater);
        assert_eq!(b.cmp_bound(&Bound::two_plus_sqrt6()), Ordering::Equal);
    }

    #[test]
    fn rational_enclosure_of_cutoff() {
        let q = QuadIrrBound::two_plus_sqrt6();
        assert!(q.cmp_rational(&q.rational_lower()) == Ordering::Greater);
        assert!(q.cmp_rational(&q.rational_upper()) == Ordering::Less);
    }
}
