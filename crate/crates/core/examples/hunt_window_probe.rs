use std::time::Instant;
use sumsq_core::exact::{is_irreducible, sturm_count, Bound, IntPolynomial};
use num_rational::BigRational;
use num_bigint::BigInt;

fn count_cubics(lo: &Bound, hi: &Bound, closed_note: &str) {
    let t = Instant::now();
    let mut raw = 0u64;
    let mut irr = 0u64;
    // coefficient box for |roots| <= 5: |e1|<=15, |e2|<=75, |e3|<=125
    for a2 in -15i64..=15 {
        for a1 in -75i64..=75 {
            for a0 in -125i64..=125 {
                let f = IntPolynomial::from_i64(&[a0, a1, a2, 1]);
                if sturm_count(&f, lo, hi) == 3 {
                    // sturm_count counts distinct roots in (lo, hi]; require
                    // squarefree match and exclude endpoint membership per note
                    let sf = f.squarefree_part();
                    if sf.degree() != 3 {
                        // repeated roots: count distinct
                        if sumsq_core::exact::count_real_roots(&sf) != sf.degree() {
                            continue;
                        }
                    }
                    raw += 1;
                    if is_irreducible(&f) {
                        irr += 1;
                    }
                }
            }
        }
    }
    println!("{closed_note}: raw(distinct-in-range=3) {raw} irr {irr}  ({:.1?})", t.elapsed());
}

fn main() {
    let rat = |n: i64, d: i64| Bound::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)));
    // windows (lo, hi] via sturm; for cubics with 3 distinct roots raw
    count_cubics(&rat(-5, 1), &rat(5, 1), "(-5, 5]");
    count_cubics(&rat(-9, 2), &rat(9, 2), "(-4.5, 4.5]");
    count_cubics(&rat(-23, 5), &rat(23, 5), "(-4.6, 4.6]");
    count_cubics(&rat(-47, 10), &rat(47, 10), "(-4.7, 4.7]");
}
