use std::time::Instant;
use sumsq_core::sos::classify;

fn main() {
    let deg: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let budget: u32 = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(30);
    let t = Instant::now();
    let r = classify(deg, budget).unwrap();
    println!(
        "degree {} budget {}: enumerated {} -> {} fields; excluded {} basis + {} scan; {} indeterminate; survivors:",
        r.degree, budget, r.enumerated, r.fields, r.excluded_shifted_basis, r.excluded_trace_scan,
        r.indeterminate.len()
    );
    for s in &r.survivors {
        println!("  {}   disc {}", s.defining_poly(), s.discriminant());
    }
    if let Some(b) = &r.biquadratic {
        println!(
            "biquadratic: {} radicands {:?}; {} composites; retained {}; {} indeterminate; survivors:",
            b.radicands.len(), b.radicands, b.composites, b.retained, b.indeterminate.len()
        );
        for s in &b.survivors {
            println!("  {}   disc {}", s.defining_poly(), s.discriminant());
        }
    }
    println!("({:.1?})", t.elapsed());
}
