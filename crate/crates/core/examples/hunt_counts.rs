use sumsq_core::exact::QuadIrrBound;
use sumsq_core::hunt::{count, HuntJob};
use std::time::Instant;

fn main() {
    for (deg, irr) in [(3u32, false), (3, true), (4, false), (4, true)] {
        let t = Instant::now();
        let job = HuntJob::new(deg, QuadIrrBound::two_plus_sqrt6(), irr).unwrap();
        let n = count(&job);
        println!("degree {deg} irr={irr}: {n}  ({:.2?})", t.elapsed());
    }
}
