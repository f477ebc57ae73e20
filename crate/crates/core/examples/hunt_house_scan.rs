use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use sumsq_core::exact::{isolate_real_roots, refine_root, QuadIrrBound};
use sumsq_core::hunt::{enumerate_totally_real, HuntJob};

fn main() {
    let job = HuntJob::new(3, QuadIrrBound::new(5, 0), true).unwrap();
    let width = BigRational::new(BigInt::from(1), BigInt::from(1 << 14));
    let mut houses: Vec<f64> = Vec::new();
    for f in enumerate_totally_real(&job) {
        let ivs = isolate_real_roots(&f);
        let lo = refine_root(&f, &ivs[0], &width);
        let hi = refine_root(&f, ivs.last().unwrap(), &width);
        let h = lo.lo.to_f64().unwrap().abs().max(lo.hi.to_f64().unwrap().abs())
            .max(hi.lo.to_f64().unwrap().abs()).max(hi.hi.to_f64().unwrap().abs());
        houses.push(h);
    }
    houses.sort_by(|a, b| a.partial_cmp(b).unwrap());
    println!("total irreducible cubics with house < 5: {}", houses.len());
    for k in [1986usize, 2141, 2494, 2874, 2884, 2885, 2886, 2890] {
        if k < houses.len() {
            println!("house_({}) = {:.6}   house_({}) = {:.6}", k, houses[k - 1], k + 1, houses[k]);
        }
    }
}
