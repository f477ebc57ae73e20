use std::time::Instant;
use sumsq_core::exact::QuadIrrBound;
use sumsq_core::hunt::{enumerate_totally_real, HuntJob};

fn main() {
    let t = Instant::now();
    let job = HuntJob::new(5, QuadIrrBound::two_plus_sqrt6(), true).unwrap();
    let mut n = 0u64;
    let mut tmin = i64::MAX;
    let mut tmax = i64::MIN;
    let mut stream = enumerate_totally_real(&job);
    for f in &mut stream {
        n += 1;
        let tr = -i64::try_from(f.coeff(4)).unwrap();
        tmin = tmin.min(tr);
        tmax = tmax.max(tr);
        if n % 1_000_000 == 0 {
            eprintln!("  ... {n} at {:.1?}", t.elapsed());
        }
    }
    println!("degree 5 irreducible: {n}  traces {tmin}..{tmax}  ({:.1?})", t.elapsed());
}
