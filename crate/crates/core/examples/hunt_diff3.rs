use std::collections::BTreeSet;
use std::time::Instant;
use sumsq_core::exact::{all_roots_in_open_interval, is_irreducible, Bound, IntPolynomial, QuadIrrBound};
use sumsq_core::hunt::{enumerate_totally_real, HuntJob};

fn main() {
    let t = Instant::now();
    let mut brute: BTreeSet<Vec<i64>> = BTreeSet::new();
    let b = Bound::two_plus_sqrt6();
    // |e1| < 3B ~ 13.35, |e2| <= 3B^2 ~ 59.4, |e3| < B^3 ~ 88.1
    let mut n_irr = 0u64;
    for a2 in -13i64..=13 {
        for a1 in -59i64..=59 {
            for a0 in -88i64..=88 {
                let f = IntPolynomial::from_i64(&[a0, a1, a2, 1]);
                if all_roots_in_open_interval(&f, &b) {
                    brute.insert(vec![a0, a1, a2]);
                    if is_irreducible(&f) {
                        n_irr += 1;
                    }
                }
            }
        }
    }
    println!("brute total: {}  irreducible: {}  ({:.1?})", brute.len(), n_irr, t.elapsed());

    let job = HuntJob::new(3, QuadIrrBound::two_plus_sqrt6(), false).unwrap();
    let mine: BTreeSet<Vec<i64>> = enumerate_totally_real(&job)
        .map(|f| (0..3).map(|i| i64::try_from(f.coeff(i)).unwrap()).collect())
        .collect();
    println!("stream total: {}", mine.len());
    let missing: Vec<_> = brute.difference(&mine).take(10).collect();
    println!("missing from stream (first 10): {missing:?}");
    let extra: Vec<_> = mine.difference(&brute).take(10).collect();
    println!("extra in stream (first 10): {extra:?}");
}
