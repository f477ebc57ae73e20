//! The enumeration engine: an explicit-stack walk over coefficient prefixes.
//!
//! A node at depth `k` owns the integer polynomial `F_k = f^(d-k)` (which
//! depends only on the top `k` coefficients), the isolated real roots of its
//! squarefree part, and the certified integer range for the next coefficient.
//! Children are the polynomials `F_{k+1} = G + (d-k-1)! * a` where `G` is the
//! exact antiderivative of `F_k` with zero constant term and `a` runs over
//! the range. A child is kept iff its squarefree part is real-rooted; together
//! with the endpoint sign conditions baked into the range and the parent's
//! membership this is exactly "all roots in `(-B, B)`".

use super::{HuntCheckpoint, HuntJob};
use crate::exact::{
    count_real_roots, isolate_real_roots, refine_root, sign_quad, IntPolynomial, QuadIrrBound,
    RootInterval,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Floor of `(p + q*sqrt(6)) / r` for integer `p`, `q` and positive `r`.
fn floor_quad(p: &BigInt, q: &BigInt, r: &BigInt) -> BigInt {
    assert!(r.is_positive(), "floor_quad needs a positive denominator");
    // Start from a float estimate, then certify with exact sign tests:
    // m = floor(x) iff r*m <= p + q*sqrt(6) < r*(m+1).
    let estimate = match (p.to_f64(), q.to_f64(), r.to_f64()) {
        (Some(fp), Some(fq), Some(fr)) => ((fp + fq * 6f64.sqrt()) / fr).floor(),
        _ => 0.0,
    };
    let mut m = BigInt::from(estimate as i64);
    while sign_quad(&(p - r * &m), q) < 0 {
        m -= 1;
    }
    while sign_quad(&(p - r * (&m + 1)), q) >= 0 {
        m += 1;
    }
    m
}

/// Largest integer strictly below `(p + q*sqrt(6)) / r`, `r > 0`.
fn strict_below_quad(p: &BigInt, q: &BigInt, r: &BigInt) -> BigInt {
    let f = floor_quad(p, q, r);
    if sign_quad(&(p - r * &f), q) == 0 {
        f - 1
    } else {
        f
    }
}

/// Smallest integer strictly above `(p + q*sqrt(6)) / r`, `r > 0`.
fn strict_above_quad(p: &BigInt, q: &BigInt, r: &BigInt) -> BigInt {
    -strict_below_quad(&-p, &-q, r)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

/// Exact antiderivative with zero constant term. Every division is exact by
/// construction: the input is `f^(d-k)` for integer `f`, so the coefficient
/// of `x^(i-1)` is divisible by `i`.
fn integrate(f: &IntPolynomial) -> IntPolynomial {
    let cf = f.coeffs();
    let mut out = vec![BigInt::zero(); cf.len() + 1];
    for (i, c) in cf.iter().enumerate() {
        let den = BigInt::from(i as u64 + 1);
        let (q, r) = num_integer::Integer::div_rem(c, &den);
        assert!(r.is_zero(), "antiderivative of a non-derivative polynomial");
        out[i + 1] = q;
    }
    IntPolynomial::new(out)
}

/// Replaces the constant term.
fn with_constant(g: &IntPolynomial, value: BigInt) -> IntPolynomial {
    let mut coeffs = g.coeffs().to_vec();
    if coeffs.is_empty() {
        coeffs.push(value);
    } else {
        coeffs[0] = value;
    }
    IntPolynomial::new(coeffs)
}

/// Exact interval evaluation of `g` over `[lo, hi]` by interval Horner.
fn interval_eval(
    g: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
) -> (BigRational, BigRational) {
    let mut alo = BigRational::zero();
    let mut ahi = BigRational::zero();
    for c in g.coeffs().iter().rev() {
        // [alo, ahi] * [lo, hi]
        let p1 = &alo * lo;
        let p2 = &alo * hi;
        let p3 = &ahi * lo;
        let p4 = &ahi * hi;
        let mut mn = p1.clone();
        let mut mx = p1;
        for p in [p2, p3, p4] {
            if p < mn {
                mn = p.clone();
            }
            if p > mx {
                mx = p;
            }
        }
        let c = BigRational::from_integer(c.clone());
        alo = mn + &c;
        ahi = mx + c;
    }
    (alo, ahi)
}

/// One frame of the walk: produces the polynomials of degree
/// `produces_degree` that extend a fixed prefix.
struct NodeState {
    /// Antiderivative of the node polynomial, constant term zero.
    g: IntPolynomial,
    /// Multiplier of the new coefficient: `(d - produces_degree)!`.
    c: BigInt,
    next: i64,
    hi: i64,
    produces_degree: u32,
}

impl NodeState {
    /// Builds the frame for the children of `f_k` (degree `k >= 1`, all roots
    /// already certified inside the interval) with squarefree part `sf`.
    fn build(f_k: &IntPolynomial, sf: &IntPolynomial, k: u32, d: u32, bound: &QuadIrrBound) -> Self {
        let g = integrate(f_k);
        let c = factorial(d - k - 1);
        let squarefree = sf.degree() as u32 == k;

        // Isolate the roots of F_k and refine until each box can shift the
        // candidate bound by at most 1/2 of an integer step.
        let boxes = {
            let raw = isolate_real_roots(sf);
            let slope = {
                // 1 + sum i*|g_i|*(9/2)^(i-1) bounds |g'| on (-9/2, 9/2),
                // which contains (-B, B) for every bound used here.
                let ub = BigRational::new(BigInt::from(9), BigInt::from(2));
                let mut m = BigRational::from_integer(BigInt::from(1));
                let mut pow = BigRational::from_integer(BigInt::from(1));
                for (i, cf) in g.coeffs().iter().enumerate() {
                    if i >= 1 {
                        let term = BigRational::from_integer(BigInt::from(i as u64) * cf.abs());
                        m += term * &pow;
                        pow *= &ub;
                    }
                }
                m
            };
            let half_step = BigRational::new(c.clone(), BigInt::from(2)) / slope;
            let cap = BigRational::new(BigInt::from(1), BigInt::from(16));
            let width = if half_step < cap { half_step } else { cap };
            raw.iter().map(|iv| refine_root(sf, iv, &width)).collect::<Vec<_>>()
        };

        let range = candidate_range(&g, &c, k, &boxes, squarefree, bound);
        let (next, hi) = match range {
            Some((lo, hi)) => (lo, hi),
            None => (1, 0),
        };
        NodeState { g, c, next, hi, produces_degree: k + 1 }
    }
}

/// Certified integer range for the next coefficient `a`: every completion of
/// the prefix with all roots in `(-B, B)` has `a` in the returned range.
///
/// Exact constraints at the endpoints (`F(B) > 0` and `(-1)^(k+1) F(-B) > 0`
/// in `Z[sqrt(6)]`) are intersected with the sign-alternation constraints at
/// the isolated roots of `F_k`, relaxed outward through the rational boxes.
/// When `F_k` has a repeated root only the extreme-root constraints are used
/// (their alternation signs do not depend on the multiplicities).
fn candidate_range(
    g: &IntPolynomial,
    c: &BigInt,
    k: u32,
    boxes: &[RootInterval],
    squarefree: bool,
    bound: &QuadIrrBound,
) -> Option<(i64, i64)> {
    let mut lo: Option<BigInt> = None;
    let mut hi: Option<BigInt> = None;
    let push_lo = |v: BigInt, lo: &mut Option<BigInt>| {
        if lo.as_ref().is_none_or(|cur| v > *cur) {
            *lo = Some(v);
        }
    };
    let push_hi = |v: BigInt, hi: &mut Option<BigInt>| {
        if hi.as_ref().is_none_or(|cur| v < *cur) {
            *hi = Some(v);
        }
    };

    // F(B) = g(B) + c*a > 0  =>  a > -g(B)/c.
    let (u, v) = g.eval_quad(&bound.a, &bound.b);
    push_lo(strict_above_quad(&-u, &-v, c), &mut lo);

    // (-1)^(k+1) F(-B) > 0.
    let neg = bound.neg();
    let (u2, v2) = g.eval_quad(&neg.a, &neg.b);
    if (k + 1) % 2 == 0 {
        push_lo(strict_above_quad(&-u2, &-v2, c), &mut lo);
    } else {
        push_hi(strict_below_quad(&-u2, &-v2, c), &mut hi);
    }

    // Alternation at the roots r_1 < ... < r_s of F_k (1-based, ascending):
    // (-1)^(k+1-j) F(r_j) >= 0 for the j-th root counted with multiplicity.
    // Squarefree: s = k and the j-th distinct root is the j-th overall. With
    // repeated roots, only the smallest root (always j = 1) and the largest
    // (always j = k) have multiplicity-independent signs.
    let crat = BigRational::from_integer(c.clone());
    for (idx, iv) in boxes.iter().enumerate() {
        let signs: &[i32] = if squarefree {
            // (-1)^(k+1-j) with j = idx+1, i.e. (-1)^(k-idx).
            if (k as usize - idx) % 2 == 0 {
                &[1]
            } else {
                &[-1]
            }
        } else if boxes.len() == 1 {
            // The single distinct root carries both extreme constraints.
            if k % 2 == 0 {
                &[1, -1]
            } else {
                &[-1]
            }
        } else if idx == 0 {
            if k % 2 == 0 {
                &[1]
            } else {
                &[-1]
            }
        } else if idx == boxes.len() - 1 {
            &[-1]
        } else {
            continue;
        };
        let (glo, ghi) = interval_eval(g, &iv.lo, &iv.hi);
        for &s in signs {
            if s > 0 {
                // g(r) + c*a >= 0 relaxes to a >= -ghi/c.
                push_lo((-&ghi / &crat).ceil().to_integer(), &mut lo);
            } else {
                // g(r) + c*a <= 0 relaxes to a <= -glo/c.
                push_hi((-&glo / &crat).floor().to_integer(), &mut hi);
            }
        }
    }

    let lo = lo.expect("endpoint constraint always yields a lower bound");
    let hi = hi.expect("alternation always yields an upper bound");
    if lo > hi {
        return None;
    }
    Some((
        lo.to_i64().expect("candidate bound fits in i64"),
        hi.to_i64().expect("candidate bound fits in i64"),
    ))
}

/// Membership filter for a freshly built child: real-rootedness of the
/// squarefree part. The `±B` sign conditions are enforced exactly by the
/// candidate range and the derivative conditions by the parent node, so this
/// completes "all roots in `(-B, B)`".
fn accept(f: &IntPolynomial) -> Option<IntPolynomial> {
    let sf = f.squarefree_part();
    if count_real_roots(&sf) == sf.degree() {
        Some(sf)
    } else {
        None
    }
}

/// Irreducibility over `Q` for a monic polynomial whose roots all lie in
/// `(-B, B)`, `deg <= 5`. Any proper monic factor has its roots among the
/// roots of `f`, so a linear factor is `x - r` with `|r| < B` and a quadratic
/// factor `x^2 + p x + q` has `|p| < 2B`, `|q| < B^2`, and `q | f(0)`. For
/// degree <= 5 the absence of linear and quadratic factors settles it.
fn irreducible_bounded(f: &IntPolynomial, bound: &QuadIrrBound) -> bool {
    let d = f.degree();
    if d == 1 {
        return true;
    }
    let coeffs: Vec<i64> = f
        .coeffs()
        .iter()
        .map(|c| c.to_i64().expect("bounded-root coefficients fit in i64"))
        .collect();
    let eval = |x: i64| -> i64 {
        let mut acc = 0i64;
        for &c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let rb = strict_below_quad(&bound.a, &bound.b, &BigInt::from(1))
        .to_i64()
        .expect("root bound fits in i64");
    for r in -rb..=rb {
        if eval(r) == 0 {
            return false;
        }
    }
    if d <= 3 {
        return true;
    }

    let a0 = coeffs[0];
    debug_assert!(a0 != 0, "zero constant term has the integer root 0");
    let pb = strict_below_quad(&(&bound.a * 2), &(&bound.b * 2), &BigInt::from(1))
        .to_i64()
        .unwrap();
    let sq = QuadIrrBound::new(
        &bound.a * &bound.a + BigInt::from(6) * &bound.b * &bound.b,
        BigInt::from(2) * &bound.a * &bound.b,
    );
    let qb = strict_below_quad(&sq.a, &sq.b, &BigInt::from(1)).to_i64().unwrap();
    for q in -qb..=qb {
        if q == 0 || a0 % q != 0 {
            continue;
        }
        for p in -pb..=pb {
            // Synthetic division by x^2 + p x + q; coefficients stay below
            // ~|coeff| * (|p| + |q| + 1)^(d-2) < 2^60.
            let mut rem = coeffs.clone();
            for i in (2..=d).rev() {
                let c = rem[i];
                rem[i] = 0;
                rem[i - 1] -= c * p;
                rem[i - 2] -= c * q;
            }
            if rem[0] == 0 && rem[1] == 0 {
                return false;
            }
        }
    }
    true
}

/// Streaming enumeration in strictly increasing lexicographic order on
/// `(a_{d-1}, ..., a_0)`; see the module docs for the method.
pub struct HuntStream {
    job: HuntJob,
    /// Top-coefficient branches this stream walks, ascending.
    tops: Vec<i64>,
    ti: usize,
    cur_top: Option<i64>,
    stack: Vec<NodeState>,
    /// `d! * x`, the antiderivative frame for the top level.
    root_g: IntPolynomial,
    root_c: BigInt,
    last_completed: Option<i64>,
    emitted: u64,
    emitted_at_completed: u64,
}

impl HuntStream {
    pub(super) fn new(job: HuntJob, resume_after: Option<i64>, emitted0: u64) -> Self {
        let d = job.degree();
        let bound = job.bound().clone();
        // a_{d-1} ranges over the integers strictly between -dB and dB.
        let top_hi = strict_below_quad(&(&bound.a * d), &(&bound.b * d), &BigInt::from(1))
            .to_i64()
            .expect("top coefficient bound fits in i64");
        let (shard_index, shards) = job.shard();
        let tops: Vec<i64> = (-top_hi..=top_hi)
            .enumerate()
            .filter(|(i, _)| *i as u32 % shards == shard_index)
            .map(|(_, a)| a)
            .filter(|a| resume_after.is_none_or(|last| *a > last))
            .collect();
        let root_g = IntPolynomial::new(vec![BigInt::zero(), factorial(d)]);
        let root_c = factorial(d - 1);
        HuntStream {
            job,
            tops,
            ti: 0,
            cur_top: None,
            stack: Vec::new(),
            root_g,
            root_c,
            last_completed: resume_after,
            emitted: emitted0,
            emitted_at_completed: emitted0,
        }
    }

    pub fn job(&self) -> &HuntJob {
        &self.job
    }

    /// Polynomials emitted so far (including any count carried over by a
    /// resumed checkpoint).
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    /// Frontier of the last fully processed top-level branch; resuming from
    /// this checkpoint replays none of the branches already walked and skips
    /// none of the rest.
    pub fn checkpoint(&self) -> HuntCheckpoint {
        HuntCheckpoint::new(self.job.clone(), self.last_completed, self.emitted_at_completed)
    }
}

impl Iterator for HuntStream {
    type Item = IntPolynomial;

    fn next(&mut self) -> Option<IntPolynomial> {
        let d = self.job.degree();
        let bound = self.job.bound().clone();
        loop {
            if let Some(top) = self.stack.last_mut() {
                if top.next > top.hi {
                    self.stack.pop();
                    continue;
                }
                let a = top.next;
                top.next += 1;
                let f_next = with_constant(&top.g, &top.c * BigInt::from(a));
                let produces = top.produces_degree;
                let Some(sf) = accept(&f_next) else {
                    continue;
                };
                if produces == d {
                    if self.job.irreducible_only() && !irreducible_bounded(&f_next, &bound) {
                        continue;
                    }
                    self.emitted += 1;
                    return Some(f_next);
                }
                let node = NodeState::build(&f_next, &sf, produces, d, &bound);
                self.stack.push(node);
                continue;
            }

            // Stack drained: the current branch (if any) is complete.
            if let Some(t) = self.cur_top.take() {
                self.last_completed = Some(t);
                self.emitted_at_completed = self.emitted;
            }
            if self.ti >= self.tops.len() {
                return None;
            }
            let t = self.tops[self.ti];
            self.ti += 1;
            self.cur_top = Some(t);
            let f1 = with_constant(&self.root_g, &self.root_c * BigInt::from(t));
            if d == 1 {
                self.emitted += 1;
                return Some(f1);
            }
            let sf1 = f1.clone();
            let node = NodeState::build(&f1, &sf1, 1, d, &bound);
            self.stack.push(node);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{all_roots_in_open_interval, is_irreducible, Bound};
    use crate::hunt::{count, enumerate_totally_real, resume};

    fn job(degree: u32, irr: bool) -> HuntJob {
        HuntJob::new(degree, QuadIrrBound::two_plus_sqrt6(), irr).unwrap()
    }

    #[test]
    fn floor_quad_matches_known_values() {
        let f = |p: i64, q: i64, r: i64| {
            floor_quad(&BigInt::from(p), &BigInt::from(q), &BigInt::from(r))
        };
        assert_eq!(f(2, 1, 1), BigInt::from(4)); // 2 + sqrt6 ~ 4.449
        assert_eq!(f(-2, -1, 1), BigInt::from(-5));
        assert_eq!(f(0, 1, 1), BigInt::from(2)); // sqrt6 ~ 2.449
        assert_eq!(f(7, 0, 2), BigInt::from(3));
        assert_eq!(f(-7, 0, 2), BigInt::from(-4));
        assert_eq!(f(6, 3, 1), BigInt::from(13)); // 3B ~ 13.34

        let s = |p: i64, q: i64| {
            strict_below_quad(&BigInt::from(p), &BigInt::from(q), &BigInt::from(1))
        };
        assert_eq!(s(4, 0), BigInt::from(3)); // strictly below the integer 4
        assert_eq!(s(2, 1), BigInt::from(4));
    }

    #[test]
    fn degree_one_is_the_nine_shifts() {
        let polys: Vec<_> = enumerate_totally_real(&job(1, false)).collect();
        assert_eq!(polys.len(), 9);
        for (i, f) in polys.iter().enumerate() {
            // x + a for a = -4..=4, ascending.
            assert_eq!(f.coeff(1), BigInt::from(1));
            assert_eq!(f.coeff(0), BigInt::from(i as i64 - 4));
        }
        assert_eq!(count(&job(1, true)), 9);
    }

    #[test]
    fn degree_two_completeness_against_box_oracle() {
        for (ba, bb) in [(2i64, 0i64), (3, 0), (2, 1)] {
            let bound = QuadIrrBound::new(ba, bb);
            let j = HuntJob::new(2, bound.clone(), false).unwrap();
            let mine: Vec<Vec<BigInt>> =
                enumerate_totally_real(&j).map(|f| f.coeffs().to_vec()).collect();

            // Oracle: scan the full coefficient box |a1| <= 2*ceil(B),
            // |a0| <= ceil(B)^2 and keep the membership test's verdict.
            let ceil_b = (ba + bb * 3) as i64; // sqrt6 < 3 so B <= a + 3b
            let mut expected = Vec::new();
            for a1 in -(2 * ceil_b)..=(2 * ceil_b) {
                for a0 in -(ceil_b * ceil_b)..=(ceil_b * ceil_b) {
                    let f = IntPolynomial::from_i64(&[a0, a1, 1]);
                    if all_roots_in_open_interval(&f, &Bound::Quad(bound.clone())) {
                        expected.push(f.coeffs().to_vec());
                    }
                }
            }
            assert_eq!(mine, expected, "bound {ba}+{bb}*sqrt6");
        }
    }

    #[test]
    fn root_exactly_at_the_bound_is_excluded() {
        // x^2 - 4x - 2 has roots 2 ± sqrt6; 2 + sqrt6 = B is not inside the
        // open interval, so the polynomial must not appear.
        let target = IntPolynomial::from_i64(&[-2, -4, 1]);
        assert!(!enumerate_totally_real(&job(2, false)).any(|f| f == target));
        // Its mirror image -(roots) is excluded too.
        let mirror = IntPolynomial::from_i64(&[-2, 4, 1]);
        assert!(!enumerate_totally_real(&job(2, false)).any(|f| f == mirror));
    }

    #[test]
    fn stream_is_strictly_increasing_and_all_members_verify() {
        for degree in [2u32, 3] {
            let mut prev: Option<Vec<BigInt>> = None;
            for f in enumerate_totally_real(&job(degree, false)) {
                assert!(f.is_monic());
                assert_eq!(f.degree() as u32, degree);
                assert!(all_roots_in_open_interval(&f, &Bound::two_plus_sqrt6()));
                // Lexicographic key (a_{d-1}, ..., a_0).
                let key: Vec<BigInt> =
                    (0..=f.degree()).rev().skip(1).map(|i| f.coeff(i)).collect();
                if let Some(p) = &prev {
                    assert!(*p < key, "stream not strictly increasing");
                }
                prev = Some(key);
            }
        }
    }

    #[test]
    fn irreducibility_fast_path_agrees_with_the_general_test() {
        for f in enumerate_totally_real(&job(3, false)) {
            assert_eq!(
                irreducible_bounded(&f, &QuadIrrBound::two_plus_sqrt6()),
                is_irreducible(&f),
                "disagreement on {f}"
            );
        }
    }

    #[test]
    fn sharded_union_equals_unsharded_run() {
        let full: Vec<_> = enumerate_totally_real(&job(3, true)).collect();
        for total in [2u32, 4] {
            let mut merged = Vec::new();
            for index in 0..total {
                let j = job(3, true).with_shard(index, total).unwrap();
                merged.extend(enumerate_totally_real(&j));
            }
            merged.sort_by_key(|f: &IntPolynomial| {
                (0..=f.degree()).rev().skip(1).map(|i| f.coeff(i)).collect::<Vec<_>>()
            });
            assert_eq!(merged, full, "shard total {total}");
        }
    }

    #[test]
    fn checkpoint_resume_replays_nothing_and_skips_nothing() {
        let j = job(3, true);
        let full: Vec<_> = enumerate_totally_real(&j).collect();

        // Interrupt after every prefix length and splice the resumed stream.
        for cut in [1usize, full.len() / 4, full.len() / 2, 3 * full.len() / 4] {
            let mut stream = enumerate_totally_real(&j);
            let mut head = Vec::new();
            for _ in 0..cut {
                head.push(stream.next().unwrap());
            }
            let ck = stream.checkpoint();
            // Drop the tail of the interrupted branch: the checkpoint points
            // at the last *completed* branch, so replay from there.
            let keep = ck.emitted() as usize;
            head.truncate(keep);
            let tail: Vec<_> = resume(&ck).unwrap().collect();
            let mut spliced = head;
            spliced.extend(tail);
            assert_eq!(spliced, full, "cut at {cut}");
        }
    }
}
