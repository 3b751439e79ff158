//! Indicator sequences by both routes (trace of S∘P_{n-1} and λ(Λ^[n]))
//! with the detected period. For R(p) the pattern is p-1 ones then a
//! zero, repeating; group algebras count solutions of g^n = e.
//!
//!     cargo run --example indicator_sequences

use radford::field::PrimeModulus;
use radford::hopf::HopfAlgebra;
use radford::indicators::{detect_period, indicators, Method};
use radford::zoo;

fn show(name: &str, h: &HopfAlgebra, count: usize) {
    let seq = indicators(h, count, Method::Both).unwrap();
    let rendered: Vec<String> = seq.lifted().iter().map(u64::to_string).collect();
    let period = match detect_period(&seq.values) {
        Some(r) => format!("period {} (preperiod {})", r.period, r.preperiod),
        None => "period inconclusive".to_string(),
    };
    println!("{name:<12} ν_1..ν_{count}: {}", rendered.join(","));
    println!("{:<12} {period}, methods agree entrywise", "");
}

fn main() {
    let fp = |p| PrimeModulus::new(p).unwrap();
    for p in [2u64, 3, 5, 7] {
        let h = zoo::build_radford(fp(p)).unwrap();
        show(&format!("radford:{p}"), &h, 4 * p as usize);
    }
    println!();
    let c3 = zoo::build_group_algebra(fp(5), &zoo::cyclic_cayley(3), zoo::cyclic_labels(3)).unwrap();
    show("group:c3:5", &c3, 12);
    let c4 = zoo::build_group_algebra(fp(3), &zoo::cyclic_cayley(4), zoo::cyclic_labels(4)).unwrap();
    show("group:c4:3", &c4, 12);
    let s3 = zoo::build_group_algebra(fp(5), &zoo::s3_cayley(), zoo::s3_labels()).unwrap();
    show("group:s3:5", &s3, 12);
}
