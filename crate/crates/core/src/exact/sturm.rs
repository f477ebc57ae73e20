//! Sturm chains: exact real-root counting and isolation.
//!
//! Counting uses the half-open convention: `sturm_count(f, lo, hi)` is the
//! number of *distinct* real roots of `f` in `(lo, hi]`. Chains are built on
//! the squarefree part, so multiplicities never disturb the count.

use super::bound::{sign_at_bound, Bound};
use super::poly::{sign_of_rational, IntPolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use std::cmp::Ordering;

/// A Sturm chain for a squarefree polynomial.
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    /// Builds the canonical chain for the squarefree part of `f`.
    ///
    /// # Panics
    /// Panics if `f` is zero.
    pub fn new(f: &IntPolynomial) -> Self {
        assert!(!f.is_zero(), "Sturm chain of the zero polynomial");
        let g = f.squarefree_part();
        let mut chain = vec![g.clone()];
        if g.degree() >= 1 {
            chain.push(g.derivative());
            loop {
                let a = &chain[chain.len() - 2];
                let b = &chain[chain.len() - 1];
                if b.degree() == 0 {
                    break;
                }
                let (_, r) = a.pseudo_divide(b);
                if r.is_zero() {
                    unreachable!("squarefree polynomial produced a vanishing Sturm remainder");
                }
                // The true remainder is r / lc(b)^(delta+1); flip the sign when
                // that multiplier is positive so the next element is the
                // *negated* remainder up to a positive factor, then strip the
                // (positive) content to keep coefficients small.
                let delta = a.degree() - b.degree();
                let mult_negative =
                    b.leading_coefficient().is_negative() && (delta + 1) % 2 == 1;
                let next = if mult_negative { r } else { r.neg() };
                let next = next.primitive_part();
                chain.push(next.clone());
                if next.degree() == 0 {
                    break;
                }
            }
        }
        SturmChain { chain }
    }

    /// Number of sign variations of the chain at `at`, zeros skipped.
    pub fn variations(&self, at: &Bound) -> usize {
        let mut count = 0usize;
        let mut last = 0i32;
        for p in &self.chain {
            let s = sign_at_bound(p, at);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots of the underlying polynomial in `(lo, hi]`.
    pub fn count_roots(&self, lo: &Bound, hi: &Bound) -> usize {
        assert!(
            lo.cmp_bound(hi) == Ordering::Less,
            "sturm_count requires lo < hi (got lo = {}, hi = {})",
            lo,
            hi
        );
        let vl = self.variations(lo);
        let vh = self.variations(hi);
        vl.saturating_sub(vh)
    }
}

/// Number of distinct real roots of `f` in the half-open interval `(lo, hi]`.
///
/// # Panics
/// Panics if `f` is zero or `lo >= hi`.
pub fn sturm_count(f: &IntPolynomial, lo: &Bound, hi: &Bound) -> usize {
    SturmChain::new(f).count_roots(lo, hi)
}

/// Total number of distinct real roots of `f`.
pub fn count_real_roots(f: &IntPolynomial) -> usize {
    sturm_count(f, &Bound::NegInf, &Bound::PosInf)
}

/// An isolating interval: exactly one real root of the associated
/// (squarefree) polynomial lies in `(lo, hi]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    /// Interval width `hi - lo`.
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Midpoint.
    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }
}

/// Isolates the distinct real roots of `f`, returned in ascending order.
///
/// Each interval `(lo, hi]` contains exactly one real root of `f` (equivalently
/// of its squarefree part) and the intervals are pairwise disjoint.
///
/// # Panics
/// Panics if `f` is zero or constant.
pub fn isolate_real_roots(f: &IntPolynomial) -> Vec<RootInterval> {
    assert!(!f.is_zero(), "cannot isolate roots of the zero polynomial");
    assert!(f.degree() >= 1, "cannot isolate roots of a constant");
    let g = f.squarefree_part();
    if g.degree() == 0 {
        return Vec::new();
    }
    let chain = SturmChain::new(&g);
    let m = g.cauchy_root_bound();
    let lo = -m.clone();
    let hi = m;
    let total = {
        let l = Bound::Rational(lo.clone());
        let h = Bound::Rational(hi.clone());
        chain.count_roots(&l, &h)
    };
    let mut out = Vec::with_capacity(total);
    if total == 0 {
        return out;
    }
    // Depth-first bisection, left segment first, so roots come out ascending.
    let mut stack = vec![(lo, hi, total)];
    while let Some((a, b, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(RootInterval { lo: a, hi: b });
            continue;
        }
        let mid = (&a + &b) / BigRational::from_integer(BigInt::from(2));
        let n_left = chain.count_roots(
            &Bound::Rational(a.clone()),
            &Bound::Rational(mid.clone()),
        );
        // Push right first so the left segment is processed first.
        stack.push((mid.clone(), b, n - n_left));
        stack.push((a, mid, n_left));
    }
    out
}

/// Refines an isolating interval of the squarefree polynomial `g` by
/// bisection until its width is at most `target_width`.
///
/// Requires that `(lo, hi]` contains exactly one root of `g` and that the
/// root is simple (guaranteed when `g` is squarefree). The refined interval
/// keeps the half-open invariant.
pub fn refine_root(g: &IntPolynomial, iv: &RootInterval, target_width: &BigRational) -> RootInterval {
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let two = BigRational::from_integer(BigInt::from(2));
    while &hi - &lo > *target_width {
        let mid = (&lo + &hi) / &two;
        let sm = sign_of_rational(&g.eval_rational(&mid));
        if sm == 0 {
            // The root is exactly `mid`: collapse to a tiny half-open interval.
            let mut eps = (&hi - &lo) / &two;
            while eps > *target_width {
                eps = eps / &two;
            }
            return RootInterval { lo: &mid - eps, hi: mid };
        }
        let sh = sign_of_rational(&g.eval_rational(&hi));
        if sh == 0 {
            // The unique root is the right endpoint itself.
            if &hi - &mid <= *target_width {
                return RootInterval { lo: mid, hi };
            }
            lo = mid;
            continue;
        }
        if sm == sh {
            // No sign change on (mid, hi]; the unique root lies in (lo, mid].
            hi = mid;
        } else {
            lo = mid;
        }
    }
    RootInterval { lo, hi }
}

/// Rational `2^-k`.
pub fn pow2_inv(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2).pow(k))
}

/// True when every root of `f` (with multiplicity) is real and lies in the
/// open interval `(-bound, bound)`; `bound` must be positive.
///
/// This is the membership test for the bounded-house polynomial hunt:
/// it is exact, and roots exactly at `±bound` are excluded.
pub fn all_roots_in_open_interval(f: &IntPolynomial, bound: &Bound) -> bool {
    assert!(!f.is_zero(), "zero polynomial has no root locus");
    if f.degree() == 0 {
        return true;
    }
    let g = f.squarefree_part();
    let d = g.degree();
    let neg = match bound {
        Bound::Rational(r) => {
            assert!(r.is_positive(), "interval bound must be positive");
            Bound::Rational(-r.clone())
        }
        Bound::Quad(q) => {
            assert!(q.sign() > 0, "interval bound must be positive");
            Bound::Quad(q.neg())
        }
        _ => panic!("interval bound must be finite"),
    };
    let chain = SturmChain::new(&g);
    // All d distinct roots real and in (-B, B]: count there must equal d...
    if chain.count_roots(&neg, bound) != d {
        return false;
    }
    // ...and +B itself must not be a root (it would be counted above).
    sign_at_bound(&g, bound) != 0
}
