//! Completeness and ordering guarantees of the bounded-roots enumeration,
//! cross-checked against brute-force coefficient-box oracles and internal
//! product accounting.

use num_bigint::BigInt;
use sumsq_core::exact::{
    all_roots_in_open_interval, is_irreducible, Bound, IntPolynomial, QuadIrrBound,
};
use sumsq_core::hunt::{count, enumerate_totally_real, resume, HuntJob};

fn job(degree: u32, bound: QuadIrrBound, irr: bool) -> HuntJob {
    HuntJob::new(degree, bound, irr).unwrap()
}

fn lex_key(f: &IntPolynomial) -> Vec<BigInt> {
    (0..=f.degree()).rev().skip(1).map(|i| f.coeff(i)).collect()
}

/// Property suite: degree-2 enumeration equals brute-force filtering of the
/// full coefficient box `|a1| <= 2*ceil(B)`, `|a0| <= ceil(B)^2` for three
/// different bounds. Every box polynomial is a test case (well over 200).
#[test]
fn degree_two_matches_coefficient_box_oracle_for_three_bounds() {
    let mut cases = 0u64;
    for (ba, bb) in [(2i64, 0i64), (3, 0), (2, 1)] {
        let bound = QuadIrrBound::new(ba, bb);
        let mine: Vec<IntPolynomial> =
            enumerate_totally_real(&job(2, bound.clone(), false)).collect();

        let ceil_b = ba + bb * 3; // sqrt6 < 3, so ceil(B) <= a + 3b
        let mut expected = Vec::new();
        for a1 in -(2 * ceil_b)..=(2 * ceil_b) {
            for a0 in -(ceil_b * ceil_b)..=(ceil_b * ceil_b) {
                cases += 1;
                let f = IntPolynomial::from_i64(&[a0, a1, 1]);
                if all_roots_in_open_interval(&f, &Bound::Quad(bound.clone())) {
                    expected.push(f);
                }
            }
        }
        assert_eq!(mine, expected, "bound {ba}+{bb}*sqrt(6)");
    }
    assert!(cases >= 200, "suite ran {cases} cases");
}

#[test]
fn degree_one_emits_the_nine_integer_shifts() {
    let polys: Vec<_> =
        enumerate_totally_real(&job(1, QuadIrrBound::two_plus_sqrt6(), false)).collect();
    let expected: Vec<IntPolynomial> =
        (-4..=4).map(|k| IntPolynomial::from_i64(&[k, 1])).collect();
    assert_eq!(polys, expected);
}

/// The polynomial with roots exactly at ±(2+sqrt6) is the only integer
/// quadratic with a root on the boundary; the open interval excludes it.
#[test]
fn boundary_roots_are_excluded() {
    let b = QuadIrrBound::two_plus_sqrt6();
    let stream: Vec<_> = enumerate_totally_real(&job(2, b, false)).collect();
    assert!(!stream.contains(&IntPolynomial::from_i64(&[-2, -4, 1])));
    assert!(!stream.contains(&IntPolynomial::from_i64(&[-2, 4, 1])));
    // Interior neighbours are present.
    assert!(stream.contains(&IntPolynomial::from_i64(&[-1, -4, 1])));
}

/// Emission order is strictly increasing in the lexicographic order on
/// `(a_{d-1}, ..., a_0)` — hence duplicate-free — and every emitted
/// polynomial verifies the membership conditions exactly.
#[test]
fn stream_is_sorted_and_every_member_verifies() {
    let b = QuadIrrBound::two_plus_sqrt6();
    for degree in [2u32, 3] {
        let mut prev: Option<Vec<BigInt>> = None;
        let mut n = 0u64;
        for f in enumerate_totally_real(&job(degree, b.clone(), false)) {
            assert!(f.is_monic());
            assert_eq!(f.degree() as u32, degree);
            assert!(all_roots_in_open_interval(&f, &Bound::two_plus_sqrt6()));
            let key = lex_key(&f);
            if let Some(p) = &prev {
                assert!(*p < key, "order violation at {f}");
            }
            prev = Some(key);
            n += 1;
        }
        assert!(n > 0);
    }
}

/// Counts for degrees 1-3 agree with independent product accounting: every
/// reducible monic polynomial with bounded roots factors into irreducible
/// monic polynomials with bounded roots, so
///   raw(3) = irr(3) + irr(2)*irr(1) + multichoose(irr(1), 3).
/// The degree-2 and degree-3 raw counts are also pinned to the values
/// confirmed by the coefficient-box brute force (run during development over
/// the boxes |a2| <= 13, |a1| <= 59, |a0| <= 88).
#[test]
fn low_degree_counts_satisfy_product_accounting() {
    let b = QuadIrrBound::two_plus_sqrt6();
    let lin = count(&job(1, b.clone(), true));
    let raw2 = count(&job(2, b.clone(), false));
    let irr2 = count(&job(2, b.clone(), true));
    let raw3 = count(&job(3, b.clone(), false));
    let irr3 = count(&job(3, b.clone(), true));

    assert_eq!(lin, 9);
    // multichoose(9, 2) = C(10, 2) = 45 products of two linear factors.
    assert_eq!(raw2, irr2 + 45);
    // multichoose(9, 3) = C(11, 3) = 165 and 9 * irr2 mixed products.
    assert_eq!(raw3, irr3 + lin * irr2 + 165);

    assert_eq!((raw2, irr2), (124, 79));
    assert_eq!((raw3, irr3), (2862, 1986));
}

/// Partitioned runs cover the search space exactly once: the union of the
/// shard outputs equals the unsharded stream for shard totals 1, 2, 4.
#[test]
fn sharded_runs_partition_the_stream() {
    let b = QuadIrrBound::two_plus_sqrt6();
    let full: Vec<_> = enumerate_totally_real(&job(3, b.clone(), true)).collect();
    for total in [1u32, 2, 4] {
        let mut merged = Vec::new();
        for index in 0..total {
            let j = job(3, b.clone(), true).with_shard(index, total).unwrap();
            merged.extend(enumerate_totally_real(&j));
        }
        merged.sort_by_key(lex_key);
        assert_eq!(merged, full, "shard total {total}");
    }
}

/// A checkpoint taken mid-run resumes to a byte-identical tail: the spliced
/// prefix + resumed stream equals the uninterrupted run.
#[test]
fn resume_from_checkpoint_is_equivalent_to_uninterrupted_run() {
    let b = QuadIrrBound::two_plus_sqrt6();
    let j = job(3, b, true);
    let full: Vec<_> = enumerate_totally_real(&j).collect();
    for cut in [1usize, full.len() / 3, 2 * full.len() / 3, full.len() - 1] {
        let mut stream = enumerate_totally_real(&j);
        let mut head = Vec::new();
        for _ in 0..cut {
            head.push(stream.next().unwrap());
        }
        let ck = stream.checkpoint();
        head.truncate(ck.emitted() as usize);
        head.extend(resume(&ck).unwrap());
        assert_eq!(head, full, "cut at {cut}");
    }
}

/// The bounded-roots irreducibility fast path agrees with the general
/// factor-search test across the whole degree-3 stream.
#[test]
fn irreducibility_filter_agrees_with_general_test() {
    let b = QuadIrrBound::two_plus_sqrt6();
    let raw: Vec<_> = enumerate_totally_real(&job(3, b.clone(), false)).collect();
    let filtered: Vec<_> = enumerate_totally_real(&job(3, b, true)).collect();
    let expected: Vec<_> = raw.into_iter().filter(is_irreducible).collect();
    assert_eq!(filtered, expected);
}
