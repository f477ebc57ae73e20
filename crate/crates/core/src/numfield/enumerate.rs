//! Complete enumeration of integral elements inside conjugate boxes, and the
//! indecomposability tests built on it.
//!
//! Candidates are integer coordinate vectors over the integral basis. Their
//! ranges come from a certified rational interval enclosure of the inverse
//! embedding matrix, widened outward, and the walk over that box is pruned by
//! an exact ellipsoid condition on the trace form (a Fincke-Pohst style
//! recursion over the cached LDL^T factorization of the Gram matrix). Every
//! surviving candidate is then checked exactly, so completeness never depends
//! on rounding: the box is certified, the pruning bound is an exact rational
//! consequence of the target condition, and the final filters are exact.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Element, FieldError, NumberField};
use crate::exact::{IntPolynomial, QuadIrrBound};

/// A closed interval with exact rational endpoints.
#[derive(Clone, Debug)]
struct RatInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RatInterval {
    fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    fn add(&self, o: &Self) -> Self {
        RatInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    fn sub(&self, o: &Self) -> Self {
        RatInterval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    fn mul(&self, o: &Self) -> Self {
        let c: Vec<BigRational> = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ]
        .into();
        RatInterval {
            lo: c.iter().min().unwrap().clone(),
            hi: c.iter().max().unwrap().clone(),
        }
    }

    /// Division; the denominator interval must exclude zero.
    fn div(&self, o: &Self) -> Self {
        assert!(o.lo.is_positive() || o.hi.is_negative(), "division by an interval containing zero");
        let c: Vec<BigRational> = [
            &self.lo / &o.lo,
            &self.lo / &o.hi,
            &self.hi / &o.lo,
            &self.hi / &o.hi,
        ]
        .into();
        RatInterval {
            lo: c.iter().min().unwrap().clone(),
            hi: c.iter().max().unwrap().clone(),
        }
    }

    fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Smallest enclosing interval whose endpoints are dyadics with
    /// denominator dividing 2^bits. Rounding lo down and hi up only widens
    /// the interval, so enclosures stay valid while endpoint bit lengths
    /// stay bounded.
    fn round_out(&self, bits: u64) -> Self {
        let scale = BigInt::one() << bits;
        let s = BigRational::from_integer(scale.clone());
        let lo = BigRational::new((&self.lo * &s).floor().to_integer(), scale.clone());
        let hi = BigRational::new((&self.hi * &s).ceil().to_integer(), scale);
        RatInterval { lo, hi }
    }
}

/// Certified interval enclosure of the inverse of the embedding matrix
/// M[k][i] = sigma_k(b_i), by interval Gauss-Jordan elimination with
/// adaptive precision. The result depends only on the field, so it is
/// computed once per field and cached.
fn inverse_embedding_enclosure(field: &Arc<NumberField>) -> Vec<Vec<RatInterval>> {
    field
        .inv_embedding
        .get_or_init(|| {
            let d = field.degree();
            let mut prec = 96u64;
            loop {
                field.ensure_prec(prec);
                let m: Vec<Vec<RatInterval>> = {
                    let mut rows = Vec::with_capacity(d);
                    for k in 0..d {
                        let mut y = vec![BigInt::zero(); d];
                        let mut row = Vec::with_capacity(d);
                        for i in 0..d {
                            y[i] = BigInt::one();
                            let e = &field.embed_integral_coords(&y, prec)[k];
                            row.push(RatInterval::new(e.lo.to_rational(), e.hi.to_rational()));
                            y[i] = BigInt::zero();
                        }
                        rows.push(row);
                    }
                    rows
                };
                if let Some(inv) = interval_gauss_jordan(m, 2 * prec) {
                    return inv
                        .into_iter()
                        .map(|row| row.into_iter().map(|iv| (iv.lo, iv.hi)).collect())
                        .collect();
                }
                prec *= 2;
                assert!(prec <= 16384, "embedding matrix inversion failed to stabilize");
            }
        })
        .iter()
        .map(|row| {
            row.iter().map(|(lo, hi)| RatInterval { lo: lo.clone(), hi: hi.clone() }).collect()
        })
        .collect()
}

/// Interval Gauss-Jordan inversion. Every updated entry is rounded outward
/// to `round_bits` dyadic precision, which keeps coefficient sizes bounded
/// (exact rational elimination grows them multiplicatively per step) and
/// can only widen the enclosure. Returns `None` when a pivot interval
/// contains zero, in which case the caller retries at higher precision;
/// rounding width shrinks along with input width, so the retry loop
/// stabilizes exactly as it would without rounding.
fn interval_gauss_jordan(m: Vec<Vec<RatInterval>>, round_bits: u64) -> Option<Vec<Vec<RatInterval>>> {
    let d = m.len();
    let zero = || RatInterval::point(BigRational::zero());
    let one = || RatInterval::point(BigRational::one());
    // Augment with the identity.
    let mut a: Vec<Vec<RatInterval>> = m
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row;
            for j in 0..d {
                r.push(if i == j { one() } else { zero() });
            }
            r
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !a[r][col].contains_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..2 * d {
            a[col][j] = a[col][j].div(&p).round_out(round_bits);
        }
        for r in 0..d {
            if r == col {
                continue;
            }
            let factor = a[r][col].clone();
            if factor.lo.is_zero() && factor.hi.is_zero() {
                continue;
            }
            for j in 0..2 * d {
                let t = factor.mul(&a[col][j]);
                a[r][j] = a[r][j].sub(&t).round_out(round_bits);
            }
        }
    }
    Some(a.into_iter().map(|row| row[d..].to_vec()).collect())
}

/// Integer ranges of integral-basis coordinates for elements whose k-th
/// embedding lies in `emb_ranges[k]`.
fn coordinate_ranges(field: &Arc<NumberField>, emb_ranges: &[RatInterval]) -> Vec<(i64, i64)> {
    let n = inverse_embedding_enclosure(field);
    n.iter()
        .map(|row| {
            let mut acc = RatInterval::point(BigRational::zero());
            for (nik, ek) in row.iter().zip(emb_ranges) {
                acc = acc.add(&nik.mul(ek));
            }
            let lo = acc.lo.floor().to_integer().to_i64().expect("coordinate range fits in i64");
            let hi = acc.hi.ceil().to_integer().to_i64().expect("coordinate range fits in i64");
            (lo, hi)
        })
        .collect()
}

/// Visits every integer vector `y` in the product of `ranges` satisfying
/// `Q(y - center) <= cap`, where `Q` is the trace form of the field (so
/// `Q(y - center)` is the trace of the square of the element with rational
/// coordinates `y - center`).
///
/// The walk recurses over coordinates using the exact LDL^T factorization of
/// the Gram matrix: with `z = L^T (y - center)`, the form is the weighted sum
/// of squares `sum_i D_i z_i^2`, every weight positive, so partial sums are
/// exact lower bounds and subtree pruning loses no solutions.
///
/// # Panics
/// Panics if more than 5 * 10^8 nodes are visited.
fn enumerate_ellipsoid(
    field: &Arc<NumberField>,
    center: &[BigRational],
    cap: &BigRational,
    ranges: &[(i64, i64)],
    mut visit: impl FnMut(&[BigInt]),
) {
    let d = field.degree();
    assert_eq!(center.len(), d);
    assert_eq!(ranges.len(), d);
    if cap.is_negative() {
        return;
    }
    let (l, dvec, perm) = field.gram_ldlt();
    let mut current = vec![BigInt::zero(); d];
    let mut w = vec![BigRational::zero(); d];
    let mut nodes = 0u64;
    // Recursion over pivoted levels i = d-1 down to 0; level i assigns the
    // original coordinate perm[i], so `current` stays in original order while
    // `w` and the form live in pivoted order.
    #[allow(clippy::too_many_arguments)]
    fn descend(
        i: usize,
        partial: BigRational,
        l: &[Vec<BigRational>],
        dvec: &[BigRational],
        perm: &[usize],
        center: &[BigRational],
        cap: &BigRational,
        ranges: &[(i64, i64)],
        current: &mut Vec<BigInt>,
        w: &mut Vec<BigRational>,
        nodes: &mut u64,
        visit: &mut impl FnMut(&[BigInt]),
    ) {
        let remaining = cap - &partial;
        let orig = perm[i];
        // z_i = (y_i - c_i) + sum_{j>i} L[j][i] w_j = y_i - m with the
        // effective center m below (indices pivoted, y_i = current[perm[i]]).
        let mut off = BigRational::zero();
        for j in i + 1..perm.len() {
            if !l[j][i].is_zero() && !w[j].is_zero() {
                off += &l[j][i] * &w[j];
            }
        }
        let m = &center[orig] - &off;
        // Integer bound s >= sqrt(remaining / D_i) without real square roots.
        let rhs = &remaining / &dvec[i];
        let s_up = (rhs.floor().to_integer() + 1u32).sqrt() + 1u32;
        let lo = {
            let b = (&m - BigRational::from_integer(s_up.clone())).ceil().to_integer();
            b.max(BigInt::from(ranges[orig].0))
        };
        let hi = {
            let b = (&m + BigRational::from_integer(s_up)).floor().to_integer();
            b.min(BigInt::from(ranges[orig].1))
        };
        let mut y = lo;
        while y <= hi {
            *nodes += 1;
            assert!(*nodes <= 500_000_000, "enumeration exceeded the node budget");
            let z = BigRational::from_integer(y.clone()) - &m;
            let term = &dvec[i] * &z * &z;
            let next = &partial + &term;
            if next <= *cap {
                current[orig] = y.clone();
                w[i] = BigRational::from_integer(y.clone()) - &center[orig];
                if i == 0 {
                    visit(current);
                } else {
                    descend(
                        i - 1,
                        next,
                        l,
                        dvec,
                        perm,
                        center,
                        cap,
                        ranges,
                        current,
                        w,
                        nodes,
                        visit,
                    );
                }
            }
            y += 1u32;
        }
    }
    descend(
        d - 1,
        BigRational::zero(),
        l,
        dvec,
        perm,
        center,
        cap,
        ranges,
        &mut current,
        &mut w,
        &mut nodes,
        &mut visit,
    );
}

/// Center vector for elements forced into the conjugate box (0, u_k) for all
/// k: half the integral coordinates of the bounding element.
fn half_coords(y: &[BigInt]) -> Vec<BigRational> {
    y.iter()
        .map(|v| BigRational::new(v.clone(), BigInt::from(2)))
        .collect()
}

/// Quadratic form of the trace Gram matrix at integer coordinates: the trace
/// of the square of the element.
fn gram_value(field: &NumberField, y: &[BigInt]) -> BigInt {
    let g = field.gram();
    let d = y.len();
    let mut acc = BigInt::zero();
    for i in 0..d {
        if y[i].is_zero() {
            continue;
        }
        for j in 0..d {
            if !y[j].is_zero() {
                acc += &y[i] * &y[j] * &g[i][j];
            }
        }
    }
    acc
}

/// Rational upper bounds of all embeddings of an integral element.
fn embedding_upper_bounds(field: &Arc<NumberField>, y: &[BigInt], prec: u64) -> Vec<BigRational> {
    field
        .embed_integral_coords(y, prec)
        .iter()
        .map(|iv| iv.hi.to_rational())
        .collect()
}

/// All integral β with 0 ≺ β ≺ upper, strict Minkowski domination at both
/// ends, sorted by trace then coordinates.
pub fn totally_positive_below(upper: &Element) -> Result<Vec<Element>, FieldError> {
    let field = upper.field();
    let yu = upper
        .integral_coords()
        .ok_or_else(|| FieldError::InvalidElement("upper bound must be integral".into()))?;
    if !upper.is_totally_positive() {
        return Err(FieldError::InvalidElement("upper bound must be totally positive".into()));
    }
    let ub = embedding_upper_bounds(field, &yu, 64);
    let emb_ranges: Vec<RatInterval> =
        ub.iter().map(|u| RatInterval::new(BigRational::zero(), u.clone())).collect();
    let ranges = coordinate_ranges(field, &emb_ranges);
    let tr_upper = field.trace_integral_coords(&yu);
    // Any 0 < x < upper conjugate-wise satisfies, exactly,
    //   Tr((x - upper/2)^2) = sum_k (sigma_k(x) - sigma_k(upper)/2)^2
    //                       < sum_k sigma_k(upper)^2 / 4 = Tr(upper^2) / 4.
    let cap = {
        let sq = field.mul_integral_coords(&yu, &yu);
        BigRational::new(field.trace_integral_coords(&sq), BigInt::from(4))
    };
    let center = half_coords(&yu);
    let mut out = Vec::new();
    enumerate_ellipsoid(field, &center, &cap, &ranges, |y| {
        if y.iter().all(|c| c.is_zero()) {
            return;
        }
        let tr = field.trace_integral_coords(y);
        if !tr.is_positive() || tr >= tr_upper {
            return;
        }
        if !field.is_totally_positive_integral(y) {
            return;
        }
        let diff: Vec<BigInt> = yu.iter().zip(y).map(|(a, b)| a - b).collect();
        if !field.is_totally_positive_integral(&diff) {
            return;
        }
        out.push(Element::from_integral_coords(field, y));
    });
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(out)
}

/// All totally positive integral elements with trace at most `t`, sorted by
/// trace then coordinates.
pub fn totally_positive_with_trace_at_most(field: &Arc<NumberField>, t: u32) -> Vec<Element> {
    if t == 0 {
        return Vec::new();
    }
    let d = field.degree();
    let tb = BigRational::from_integer(BigInt::from(t));
    let emb_ranges: Vec<RatInterval> =
        (0..d).map(|_| RatInterval::new(BigRational::zero(), tb.clone())).collect();
    let ranges = coordinate_ranges(field, &emb_ranges);
    let t_int = BigInt::from(t);
    // Each conjugate lies in (0, t), so Tr((x - t/2)^2) <= d * (t/2)^2.
    let half_t = BigRational::new(BigInt::from(t), BigInt::from(2));
    let mut center = vec![BigRational::zero(); d];
    center[0] = half_t.clone();
    let cap = BigRational::from_integer(BigInt::from(d as u64)) * &half_t * &half_t;
    let mut out = Vec::new();
    enumerate_ellipsoid(field, &center, &cap, &ranges, |y| {
        if y.iter().all(|c| c.is_zero()) {
            return;
        }
        let tr = field.trace_integral_coords(y);
        if !tr.is_positive() || tr > t_int {
            return;
        }
        if field.is_totally_positive_integral(y) {
            out.push(Element::from_integral_coords(field, y));
        }
    });
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// All integral elements of norm ±1 with house strictly below the cap, found
/// by exhaustive box enumeration. Not claimed to generate the unit group.
pub fn units_heuristic(field: &Arc<NumberField>, house_cap: &QuadIrrBound) -> Vec<Element> {
    let u = house_cap.rational_upper();
    if !u.is_positive() {
        return Vec::new();
    }
    let d = field.degree();
    let emb_ranges: Vec<RatInterval> =
        (0..d).map(|_| RatInterval::new(-u.clone(), u.clone())).collect();
    let ranges = coordinate_ranges(field, &emb_ranges);
    // Every conjugate lies in (-u, u), so Tr(x^2) < d * u^2.
    let center = vec![BigRational::zero(); d];
    let cap = BigRational::from_integer(BigInt::from(d as u64)) * &u * &u;
    let one = BigRational::one();
    let mut out = Vec::new();
    enumerate_ellipsoid(field, &center, &cap, &ranges, |y| {
        if y.iter().all(|c| c.is_zero()) {
            return;
        }
        let e = Element::from_integral_coords(field, y);
        if e.norm().abs() != one {
            return;
        }
        if e.house_less_than(house_cap) {
            out.push(e);
        }
    });
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// All nonzero integral elements whose conjugates all lie strictly inside
/// `(-cap, cap)` (house strictly below `cap`), by complete enumeration,
/// sorted by trace then coordinates.
///
/// # Panics
/// Panics when the cap is not a finite positive endpoint.
pub fn integral_elements_with_house_below(
    field: &Arc<NumberField>,
    cap: &crate::exact::Bound,
) -> Vec<Element> {
    let u = match cap {
        crate::exact::Bound::Rational(r) => r.clone(),
        crate::exact::Bound::Quad(q) => q.rational_upper(),
        _ => panic!("house cap must be finite"),
    };
    assert!(u.is_positive(), "house cap must be positive");
    let d = field.degree();
    let emb_ranges: Vec<RatInterval> =
        (0..d).map(|_| RatInterval::new(-u.clone(), u.clone())).collect();
    let ranges = coordinate_ranges(field, &emb_ranges);
    // Every conjugate lies in (-u, u), so Tr(x^2) < d * u^2.
    let center = vec![BigRational::zero(); d];
    let qcap = BigRational::from_integer(BigInt::from(d as u64)) * &u * &u;
    let mut out = Vec::new();
    enumerate_ellipsoid(field, &center, &qcap, &ranges, |y| {
        if y.iter().all(|c| c.is_zero()) {
            return;
        }
        let e = Element::from_integral_coords(field, y);
        if e.house_less_than_bound(cap) {
            out.push(e);
        }
    });
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// All nonzero integral elements `x` with `Tr(x^2) <= t`, one representative
/// per sign pair `{x, -x}` (normalized so the first nonzero integral
/// coordinate is positive), sorted by trace then coordinates.
///
/// This is the candidate-part generator for sum-of-squares searches: the
/// trace of a square is the trace-form value of its root, so the condition
/// is exactly the ellipsoid `Q(x) <= t` and the enumeration is complete.
pub fn sign_classes_with_square_trace_at_most(
    field: &Arc<NumberField>,
    t: &BigInt,
) -> Vec<Element> {
    if !t.is_positive() {
        return Vec::new();
    }
    let d = field.degree();
    // |sigma_k(x)|^2 <= Tr(x^2) <= t, so every conjugate lies in [-s, s]
    // with s = isqrt(t) + 1 > sqrt(t).
    let s = BigRational::from_integer(t.sqrt() + 1u32);
    let emb_ranges: Vec<RatInterval> =
        (0..d).map(|_| RatInterval::new(-s.clone(), s.clone())).collect();
    let ranges = coordinate_ranges(field, &emb_ranges);
    let center = vec![BigRational::zero(); d];
    let cap = BigRational::from_integer(t.clone());
    let mut out = Vec::new();
    enumerate_ellipsoid(field, &center, &cap, &ranges, |y| {
        match y.iter().find(|c| !c.is_zero()) {
            None => return,
            Some(first) if first.is_negative() => return,
            Some(_) => {}
        }
        out.push(Element::from_integral_coords(field, y));
    });
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// True iff no integral β satisfies 0 ≺ β ≺ e.
pub fn is_indecomposable(e: &Element) -> Result<bool, FieldError> {
    Ok(totally_positive_below(e)?.is_empty())
}

/// Sufficient norm criterion: a primitive totally positive integer with
/// Nr(e) < 2^{d-1}(1+c) is indecomposable. Returns false when the criterion
/// does not apply (no conclusion).
///
/// # Panics
/// Panics if `e` is not integral or not totally positive.
pub fn indecomposability_by_norm(e: &Element, c: &BigRational) -> bool {
    let y = e.integral_coords().expect("element must be integral");
    assert!(e.is_totally_positive(), "element must be totally positive");
    let mut g = BigInt::zero();
    for v in &y {
        g = g.gcd(v);
    }
    if g != BigInt::one() {
        return false;
    }
    let d = e.field().degree();
    let threshold = BigRational::from_integer(BigInt::one() << (d - 1))
        * (BigRational::one() + c);
    e.norm() < threshold
}

/// Searches for a root of the monic integer polynomial `g` inside the field,
/// by complete box enumeration of integral candidates bounded by the Cauchy
/// root bound of `g`.
pub fn find_root_in_field(g: &IntPolynomial, field: &Arc<NumberField>) -> Option<Element> {
    assert!(g.is_monic() && g.degree() >= 1, "monic nonconstant polynomial");
    let d = field.degree();
    let cap = g.cauchy_root_bound();
    let emb_ranges: Vec<RatInterval> =
        (0..d).map(|_| RatInterval::new(-cap.clone(), cap.clone())).collect();
    let ranges = coordinate_ranges(field, &emb_ranges);
    // When deg g equals the field degree, the embeddings of a root are all
    // the roots of g, pinning the trace and the trace of the square exactly.
    let exact_sums = if g.degree() == d && d >= 2 {
        let s1 = -g.coeff(d - 1);
        let s2 = &s1 * &s1 - BigInt::from(2) * g.coeff(d - 2);
        Some((s1, s2))
    } else {
        None
    };
    // A root has all its conjugates among the roots of g, so Tr(root^2) is
    // either pinned exactly (degree match) or at most d * cap^2.
    let center = vec![BigRational::zero(); d];
    let ell_cap = match &exact_sums {
        Some((_, s2)) => BigRational::from_integer(s2.clone()),
        None => BigRational::from_integer(BigInt::from(d as u64)) * &cap * &cap,
    };
    let coeffs: Vec<BigInt> = g.coeffs().to_vec();
    let mut found = None;
    let mut zero_coords = vec![BigInt::zero(); d];
    zero_coords[0] = BigInt::one();
    let e0 = zero_coords;
    enumerate_ellipsoid(field, &center, &ell_cap, &ranges, |y| {
        if found.is_some() {
            return;
        }
        if let Some((s1, s2)) = &exact_sums {
            if &field.trace_integral_coords(y) != s1 || &gram_value(field, y) != s2 {
                return;
            }
        }
        // Horner evaluation of g at the candidate, in integral coordinates;
        // the constant 1 is the first basis vector.
        let mut acc = vec![BigInt::zero(); d];
        for c in coeffs.iter().rev() {
            acc = field.mul_integral_coords(&acc, y);
            if !c.is_zero() {
                for (a, e) in acc.iter_mut().zip(&e0) {
                    *a += c * e;
                }
            }
        }
        if acc.iter().all(|v| v.is_zero()) {
            found = Some(Element::from_integral_coords(field, y));
        }
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::is_isomorphic;

    fn field(coeffs: &[i64]) -> Arc<NumberField> {
        NumberField::new_maximal(IntPolynomial::from_i64(coeffs)).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn below_two_in_the_rationals() {
        let q = field(&[0, 1]);
        let two = Element::from_integer(&q, 2);
        let v = totally_positive_below(&two).unwrap();
        assert_eq!(v, vec![Element::one(&q)]);
    }

    #[test]
    fn below_phi_plus_one_is_empty() {
        let k5 = field(&[-5, 0, 1]);
        // phi + 1 = (3 + sqrt(5))/2.
        let e = Element::from_power_coords(&k5, vec![rat(3, 2), rat(1, 2)]);
        assert!(e.is_integral());
        assert!(totally_positive_below(&e).unwrap().is_empty());
    }

    /// Independent brute-force oracle in Z[sqrt(2)]: sign decisions by pure
    /// integer comparisons of a^2 against 2b^2.
    fn oracle_below_in_sqrt2(ua: i64, ub: i64) -> Vec<(i64, i64)> {
        let pos = |a: i64, b: i64| -> bool {
            // a + b*sqrt(2) > 0 and a - b*sqrt(2) > 0
            let plus = if b >= 0 { a > 0 || a * a < 2 * b * b } else { a > 0 && a * a > 2 * b * b };
            let minus = if b <= 0 { a > 0 || a * a < 2 * b * b } else { a > 0 && a * a > 2 * b * b };
            plus && minus
        };
        let mut out = Vec::new();
        for a in -8..=8 {
            for b in -8..=8 {
                if (a, b) != (0, 0) && pos(a, b) && pos(ua - a, ub - b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    #[test]
    fn below_two_plus_sqrt2_matches_oracle() {
        // Oracle first: nothing lies strictly between 0 and 2 + sqrt(2).
        assert!(oracle_below_in_sqrt2(2, 1).is_empty());
        let k2 = field(&[-2, 0, 1]);
        let e = Element::from_power_coords(&k2, vec![rat(2, 1), rat(1, 1)]);
        assert!(totally_positive_below(&e).unwrap().is_empty());
        assert!(is_indecomposable(&e).unwrap());
        // Cross-check a decomposable case: 4 + sqrt(2) dominates 1, 2, 2+sqrt(2), 3+sqrt(2).
        assert_eq!(oracle_below_in_sqrt2(4, 1), vec![(1, 0), (2, 0), (2, 1), (3, 1)]);
        let big = Element::from_power_coords(&k2, vec![rat(4, 1), rat(1, 1)]);
        let below = totally_positive_below(&big).unwrap();
        assert_eq!(below.len(), 4);
        assert!(!is_indecomposable(&big).unwrap());
    }

    #[test]
    fn rejects_bad_upper_bounds() {
        let k2 = field(&[-2, 0, 1]);
        // sqrt(2)/2 is not integral.
        let e = Element::from_power_coords(&k2, vec![rat(0, 1), rat(1, 2)]);
        assert!(totally_positive_below(&e).is_err());
        // sqrt(2) is not totally positive.
        let e = Element::generator(&k2);
        assert!(totally_positive_below(&e).is_err());
    }

    #[test]
    fn small_trace_scan() {
        // Trace below 3d/2 admits only the element 1 in Z[sqrt(2)].
        let k2 = field(&[-2, 0, 1]);
        let v: Vec<Element> = totally_positive_with_trace_at_most(&k2, 2);
        assert_eq!(v, vec![Element::one(&k2)]);
        // In the golden-ratio field trace 3 adds phi + 1 and its conjugate.
        let k5 = field(&[-5, 0, 1]);
        let v = totally_positive_with_trace_at_most(&k5, 3);
        assert_eq!(v.len(), 3);
        assert_eq!(v[0], Element::one(&k5));
        assert!(v.iter().skip(1).all(|e| e.trace() == rat(3, 1)));
    }

    #[test]
    fn unit_search_examples() {
        let k2 = field(&[-2, 0, 1]);
        let units = units_heuristic(&k2, &QuadIrrBound::new(4, 0));
        let fundamental = Element::from_power_coords(&k2, vec![rat(1, 1), rat(1, 1)]);
        let inverse = Element::from_power_coords(&k2, vec![rat(-1, 1), rat(1, 1)]);
        assert!(units.contains(&fundamental));
        assert!(units.contains(&inverse));
        assert!(units.contains(&Element::one(&k2)));

        let k5 = field(&[-5, 0, 1]);
        let units = units_heuristic(&k5, &QuadIrrBound::new(3, 0));
        let phi = Element::from_power_coords(&k5, vec![rat(1, 2), rat(1, 2)]);
        assert!(units.contains(&phi));

        let q = field(&[0, 1]);
        let units = units_heuristic(&q, &QuadIrrBound::new(4, 0));
        assert_eq!(units.len(), 2);
        assert!(units.contains(&Element::one(&q)));
        assert!(units.contains(&Element::from_integer(&q, -1)));
    }

    #[test]
    fn norm_criterion() {
        let k2 = field(&[-2, 0, 1]);
        let e = Element::from_power_coords(&k2, vec![rat(2, 1), rat(1, 1)]);
        // Norm 2 < 2^(d-1) * 5/2 = 5: certified indecomposable.
        assert!(indecomposability_by_norm(&e, &rat(3, 2)));
        // With c = 0, the threshold is exactly the norm: strict fails.
        assert!(!indecomposability_by_norm(&e, &rat(0, 1)));
        // 2 is not primitive: no conclusion.
        assert!(!indecomposability_by_norm(&Element::from_integer(&k2, 2), &rat(3, 2)));
        // 3 + sqrt(2) has norm 7 >= 5: no conclusion (it is in fact decomposable).
        let e = Element::from_power_coords(&k2, vec![rat(3, 1), rat(1, 1)]);
        assert!(!indecomposability_by_norm(&e, &rat(3, 2)));
        assert!(!is_indecomposable(&e).unwrap());
    }

    #[test]
    fn roots_and_isomorphism() {
        let k5a = field(&[-5, 0, 1]);
        let k5b = field(&[-1, 1, 1]);
        // sqrt(5) exists in the golden-ratio presentation: 2*omega + 1.
        let r = find_root_in_field(&IntPolynomial::from_i64(&[-5, 0, 1]), &k5b).unwrap();
        assert_eq!(r.mul(&r), Element::from_integer(&k5b, 5));
        assert!(is_isomorphic(&k5a, &k5b));
        let k2 = field(&[-2, 0, 1]);
        let k3 = field(&[-3, 0, 1]);
        assert!(!is_isomorphic(&k2, &k3));
        assert!(find_root_in_field(&IntPolynomial::from_i64(&[-3, 0, 1]), &k2).is_none());
    }
}
