//! Outward-rounded dyadic interval arithmetic.
//!
//! Endpoints are dyadic rationals `m * 2^e`. Every operation rounds the lower
//! endpoint down and the upper endpoint up, so any real enclosed stays
//! enclosed: sign determinations made through these intervals are certified.
//! When an interval straddles zero the caller refines its inputs and retries;
//! for nonzero algebraic values that loop always terminates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// A dyadic rational `m * 2^e`.
#[derive(Clone, Debug)]
pub struct Dyadic {
    pub m: BigInt,
    pub e: i64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic { m: BigInt::zero(), e: 0 }
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Dyadic { m: n.clone(), e: 0 }
    }

    pub fn sign(&self) -> i32 {
        if self.m.is_zero() {
            0
        } else if self.m.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.e >= 0 {
            BigRational::from_integer(&self.m * (BigInt::one() << self.e as usize))
        } else {
            BigRational::new(self.m.clone(), BigInt::one() << (-self.e) as usize)
        }
    }

    fn align(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, i64) {
        match a.e.cmp(&b.e) {
            Ordering::Equal => (a.m.clone(), b.m.clone(), a.e),
            Ordering::Less => (a.m.clone(), &b.m << (b.e - a.e) as usize, a.e),
            Ordering::Greater => (&a.m << (a.e - b.e) as usize, b.m.clone(), b.e),
        }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let (x, y, e) = Self::align(self, other);
        Dyadic { m: x + y, e }
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic { m: -&self.m, e: self.e }
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic { m: &self.m * &other.m, e: self.e + other.e }
    }

    pub fn cmp_dyadic(&self, other: &Dyadic) -> Ordering {
        let (x, y, _) = Self::align(self, other);
        x.cmp(&y)
    }

    /// Rounds down (towards -inf) to at most `prec` mantissa bits.
    pub fn round_down(&self, prec: u64) -> Dyadic {
        let bits = self.m.bits();
        if bits <= prec {
            return self.clone();
        }
        let shift = (bits - prec) as i64;
        // Floor division by 2^shift.
        let m = floor_shift(&self.m, shift as usize);
        Dyadic { m, e: self.e + shift }
    }

    /// Rounds up (towards +inf) to at most `prec` mantissa bits.
    pub fn round_up(&self, prec: u64) -> Dyadic {
        let bits = self.m.bits();
        if bits <= prec {
            return self.clone();
        }
        let shift = (bits - prec) as i64;
        let m = ceil_shift(&self.m, shift as usize);
        Dyadic { m, e: self.e + shift }
    }
}

fn floor_shift(m: &BigInt, shift: usize) -> BigInt {
    // BigInt >> rounds toward negative infinity already.
    m >> shift
}

fn ceil_shift(m: &BigInt, shift: usize) -> BigInt {
    let mask = (BigInt::one() << shift) - BigInt::one();
    if (m & &mask).is_zero() {
        m >> shift
    } else {
        (m >> shift) + BigInt::one()
    }
}

/// Lower bound of a rational as a dyadic with `prec` fractional bits.
pub fn rational_floor_dyadic(r: &BigRational, prec: u64) -> Dyadic {
    let scaled = r * BigRational::from_integer(BigInt::one() << prec as usize);
    Dyadic { m: scaled.floor().to_integer(), e: -(prec as i64) }
}

/// Upper bound of a rational as a dyadic with `prec` fractional bits.
pub fn rational_ceil_dyadic(r: &BigRational, prec: u64) -> Dyadic {
    let scaled = r * BigRational::from_integer(BigInt::one() << prec as usize);
    Dyadic { m: scaled.ceil().to_integer(), e: -(prec as i64) }
}

/// A closed interval with dyadic endpoints, `lo <= hi`.
#[derive(Clone, Debug)]
pub struct DyInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl DyInterval {
    pub fn point_bigint(n: &BigInt) -> Self {
        DyInterval { lo: Dyadic::from_bigint(n), hi: Dyadic::from_bigint(n) }
    }

    pub fn zero() -> Self {
        DyInterval { lo: Dyadic::zero(), hi: Dyadic::zero() }
    }

    /// Encloses an exact rational to `prec` fractional bits.
    pub fn from_rational(r: &BigRational, prec: u64) -> Self {
        DyInterval { lo: rational_floor_dyadic(r, prec), hi: rational_ceil_dyadic(r, prec) }
    }

    /// Encloses the rational interval `[lo, hi]`.
    pub fn from_rational_pair(lo: &BigRational, hi: &BigRational, prec: u64) -> Self {
        DyInterval { lo: rational_floor_dyadic(lo, prec), hi: rational_ceil_dyadic(hi, prec) }
    }

    pub fn add(&self, other: &Self, prec: u64) -> Self {
        DyInterval {
            lo: self.lo.add(&other.lo).round_down(prec),
            hi: self.hi.add(&other.hi).round_up(prec),
        }
    }

    pub fn neg(&self) -> Self {
        DyInterval { lo: self.hi.neg(), hi: self.lo.neg() }
    }

    pub fn sub(&self, other: &Self, prec: u64) -> Self {
        self.add(&other.neg(), prec)
    }

    pub fn mul(&self, other: &Self, prec: u64) -> Self {
        let products = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if p.cmp_dyadic(&lo) == Ordering::Less {
                lo = p.clone();
            }
            if p.cmp_dyadic(&hi) == Ordering::Greater {
                hi = p.clone();
            }
        }
        DyInterval { lo: lo.round_down(prec), hi: hi.round_up(prec) }
    }

    /// Tight enclosure of the square.
    pub fn square(&self, prec: u64) -> Self {
        let l2 = self.lo.mul(&self.lo);
        let h2 = self.hi.mul(&self.hi);
        let (mut lo, hi) = if l2.cmp_dyadic(&h2) == Ordering::Less {
            (l2.clone(), h2)
        } else {
            (h2, l2)
        };
        if self.lo.sign() < 0 && self.hi.sign() > 0 {
            lo = Dyadic::zero();
        }
        DyInterval { lo: lo.round_down(prec), hi: hi.round_up(prec) }
    }

    /// `Some(sign)` when the sign of every point in the interval is
    /// determined, `None` when the interval straddles zero.
    pub fn determined_sign(&self) -> Option<i32> {
        let sl = self.lo.sign();
        let sh = self.hi.sign();
        if sl > 0 {
            Some(1)
        } else if sh < 0 {
            Some(-1)
        } else if sl == 0 && sh == 0 {
            Some(0)
        } else {
            None
        }
    }

    pub fn width_rational(&self) -> BigRational {
        self.hi.to_rational() - self.lo.to_rational()
    }
}

/// Interval Horner evaluation of a rational-coefficient polynomial
/// (ascending coefficients) on `x`.
pub fn eval_interval(coeffs: &[BigRational], x: &DyInterval, prec: u64) -> DyInterval {
    let mut acc = DyInterval::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(x, prec).add(&DyInterval::from_rational(c, prec), prec);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn enclosure_of_rational() {
        let r = rat(1, 3);
        let iv = DyInterval::from_rational(&r, 20);
        assert!(iv.lo.to_rational() <= r && r <= iv.hi.to_rational());
        assert!(iv.width_rational() <= rat(1, 1 << 19));
    }

    #[test]
    fn interval_multiplication_contains_product() {
        let a = DyInterval::from_rational_pair(&rat(-3, 2), &rat(1, 2), 30);
        let b = DyInterval::from_rational_pair(&rat(2, 1), &rat(3, 1), 30);
        let p = a.mul(&b, 30);
        // -3/2 * 3 = -9/2 is the minimum; 1/2 * 3 = 3/2 the maximum.
        assert!(p.lo.to_rational() <= rat(-9, 2));
        assert!(p.hi.to_rational() >= rat(3, 2));
    }

    #[test]
    fn square_straddling_zero_starts_at_zero() {
        let a = DyInterval::from_rational_pair(&rat(-1, 2), &rat(1, 4), 30);
        let s = a.square(30);
        assert_eq!(s.lo.sign(), 0);
        assert!(s.hi.to_rational() >= rat(1, 4));
    }

    #[test]
    fn horner_encloses_true_value() {
        // f(x) = x^2 - 2 at x enclosing sqrt(2) gives an interval around 0.
        let coeffs = vec![rat(-2, 1), rat(0, 1), rat(1, 1)];
        let x = DyInterval::from_rational_pair(&rat(141421, 100000), &rat(141422, 100000), 60);
        let v = eval_interval(&coeffs, &x, 60);
        assert_eq!(v.determined_sign(), None);
        // At x enclosing 2 the sign is determined positive.
        let x2 = DyInterval::from_rational_pair(&rat(2, 1), &rat(2, 1), 60);
        assert_eq!(eval_interval(&coeffs, &x2, 60).determined_sign(), Some(1));
    }

    #[test]
    fn outward_rounding_is_monotone() {
        let d = Dyadic { m: BigInt::from(0b1010101010101011i64), e: -10 };
        let down = d.round_down(8);
        let up = d.round_up(8);
        assert!(down.to_rational() <= d.to_rational());
        assert!(up.to_rational() >= d.to_rational());
    }
}
