//! Dualize an algebra and compare gauge-invariant data: the dual of R(p)
//! has the same indicator sequence and the same minimal polynomial, and
//! the double dual restores the original tensors.
//!
//!     cargo run --example duality

use radford::field::PrimeModulus;
use radford::indicators::{indicators, minimal_polynomial_of_indicators, Method};
use radford::zoo;

fn main() {
    let modulus = PrimeModulus::new(5).unwrap();
    let h = zoo::build_radford(modulus).unwrap();
    let d = h.dualize().unwrap();

    println!("primal id: {}", h.canonical_id());
    println!("dual id:   {} (different object)", d.canonical_id());
    println!("dual basis starts with: {}", d.basis_labels()[..3].join(", "));
    println!();

    let count = 20;
    let primal_seq = indicators(&h, count, Method::Both).unwrap();
    let dual_seq = indicators(&d, count, Method::Both).unwrap();
    println!("primal ν: {:?}", primal_seq.lifted());
    println!("dual   ν: {:?}", dual_seq.lifted());
    println!("sequences equal: {}", primal_seq.lifted() == dual_seq.lifted());

    let primal_mp = minimal_polynomial_of_indicators(&h).unwrap();
    let dual_mp = minimal_polynomial_of_indicators(&d).unwrap();
    println!(
        "minimal polynomials: {} vs {} (equal: {})",
        primal_mp.pretty(),
        dual_mp.pretty(),
        primal_mp == dual_mp
    );

    let dd = d.dualize().unwrap();
    println!("double dual restores tensors: {}", dd.same_tensors(&h));
}
