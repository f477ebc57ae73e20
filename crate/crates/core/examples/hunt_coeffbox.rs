use std::time::Instant;
use sumsq_core::exact::{count_real_roots, is_irreducible, IntPolynomial};

fn main() {
    // Coefficient box from |e_k| <= C(3,k) B^k, B = 2+sqrt6:
    // |a2| <= 13, |a1| <= 59, |a0| <= 88.
    let t = Instant::now();
    let mut real_rooted = 0u64;
    let mut irr = 0u64;
    for a2 in -13i64..=13 {
        for a1 in -59i64..=59 {
            for a0 in -88i64..=88 {
                let f = IntPolynomial::from_i64(&[a0, a1, a2, 1]);
                let sf = f.squarefree_part();
                if count_real_roots(&sf) == sf.degree() {
                    real_rooted += 1;
                    if is_irreducible(&f) {
                        irr += 1;
                    }
                }
            }
        }
    }
    println!("coefficient-box real-rooted cubics: {real_rooted}, irreducible: {irr} ({:.1?})", t.elapsed());
}
