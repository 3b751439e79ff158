//! Exhaustive identity sweeps in the free bialgebra on g and x: the
//! C-sum recursion, the coproduct formulas, and the Sweedler power
//! expansion, all checked exactly up to a degree bound.
//!
//!     cargo run --example free_bialgebra_identities

use radford::field::PrimeModulus;
use radford::free_bialgebra::{c_sum, nc_comul, run_identity_suite, NCPolynomial};

fn main() {
    let modulus = PrimeModulus::new(5).unwrap();
    let bound = 6;

    // a taste of the objects involved
    let c21 = c_sum(2, 1, modulus, bound).unwrap();
    println!("C_{{2,1}} = {c21}");
    let x = NCPolynomial::generator_x(modulus, bound);
    let x2 = x.nc_mul(&x).unwrap();
    println!("Δ(x²) has {} tensor terms", nc_comul(&x2).unwrap().terms().count());
    println!();

    for report in run_identity_suite(modulus, bound) {
        println!(
            "{:<20} {:>4} cases, {} counterexamples",
            report.name,
            report.cases,
            report.counterexamples.len()
        );
        for c in &report.counterexamples {
            println!("  counterexample at {c}");
        }
    }
}
