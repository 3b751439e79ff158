//! Minimal polynomials of indicator sequences via Berlekamp-Massey, with
//! the escalation ladder that verifies the fitted recurrence on freshly
//! computed terms past the fitting window.
//!
//!     cargo run --example minimal_polynomials

use radford::field::PrimeModulus;
use radford::hopf::HopfAlgebra;
use radford::indicators::{berlekamp_massey, minimal_polynomial_of_indicators};
use radford::zoo;

fn show(name: &str, h: &HopfAlgebra) {
    let mp = minimal_polynomial_of_indicators(h).unwrap();
    let cells: Vec<String> = mp.lifted().iter().map(u64::to_string).collect();
    println!(
        "{name:<12} degree {} | {} | coefficients {} | verified on {} terms (bound {})",
        mp.degree(),
        mp.pretty(),
        cells.join(","),
        mp.verified_window,
        h.dim() * h.dim(),
    );
}

fn main() {
    let fp = |p| PrimeModulus::new(p).unwrap();
    for p in [2u64, 3, 5, 7] {
        show(&format!("radford:{p}"), &zoo::build_radford(fp(p)).unwrap());
    }
    show(
        "group:c1:5",
        &zoo::build_group_algebra(fp(5), &zoo::cyclic_cayley(1), zoo::cyclic_labels(1)).unwrap(),
    );
    show(
        "group:c4:5",
        &zoo::build_group_algebra(fp(5), &zoo::cyclic_cayley(4), zoo::cyclic_labels(4)).unwrap(),
    );
    println!();

    // Berlekamp-Massey on a hand-made sequence: Fibonacci mod 5
    let p = fp(5);
    let mut fib = vec![p.element(1), p.element(1)];
    for i in 2..20 {
        let next = fib[i - 1] + fib[i - 2];
        fib.push(next);
    }
    let mp = berlekamp_massey(&fib, p);
    println!("fibonacci mod 5: minimal polynomial {}", mp.pretty());
}
