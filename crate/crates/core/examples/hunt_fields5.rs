use std::collections::BTreeSet;
use sumsq_core::exact::QuadIrrBound;
use sumsq_core::hunt::{enumerate_totally_real, HuntJob};

fn squarefree_core(mut n: i64) -> i64 {
    let mut core = 1i64;
    let mut p = 2i64;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 { n /= p; e += 1; }
        if e % 2 == 1 { core *= p; }
        p += 1;
    }
    core * n
}

fn main() {
    for (name, bound) in [("B=5 open", QuadIrrBound::new(5, 0)),
                          ("B=2+sqrt6", QuadIrrBound::two_plus_sqrt6())] {
        let mut fields: BTreeSet<i64> = BTreeSet::new();
        let mut n = 0u64;
        for f in enumerate_totally_real(&HuntJob::new(2, bound.clone(), true).unwrap()) {
            let a1 = i64::try_from(f.coeff(1)).unwrap();
            let a0 = i64::try_from(f.coeff(0)).unwrap();
            fields.insert(squarefree_core(a1 * a1 - 4 * a0));
            n += 1;
        }
        println!("{name}: {} irreducible quadratics, {} fields: {:?}", n, fields.len(), fields);
    }
}
