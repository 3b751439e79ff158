//! Compute all four integral spaces (left/right in the algebra and in its
//! dual) and the normalized pair (λ, Λ) with λ(Λ) = 1.
//!
//!     cargo run --example integral_spaces

use radford::field::PrimeModulus;
use radford::hopf::HopfAlgebra;
use radford::integrals::{dual_integral_space, integral_space, normalized_pair, Side};
use radford::zoo;

fn dual_string(h: &HopfAlgebra, coeffs: &radford::linalg::VectorFp) -> String {
    (0..h.dim())
        .filter(|&i| !coeffs.get(i).is_zero())
        .map(|i| format!("{}·δ({})", coeffs.get(i), h.label(i)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn show(name: &str, h: &HopfAlgebra) {
    println!("{name} (dim {}):", h.dim());
    for side in [Side::Left, Side::Right] {
        let primal = integral_space(h, side).unwrap();
        println!("  {side:>5} integral:       {}", h.format_element(primal.representative()));
        let dual = dual_integral_space(h, side).unwrap();
        println!("  {side:>5} dual integral:  {}", dual_string(h, dual.representative()));
    }
    let pair = normalized_pair(h, Side::Left).unwrap();
    println!(
        "  normalized left pair: λ = {}, λ(Λ) = {}",
        dual_string(h, pair.dual_integral.coeffs()),
        h.apply_dual(&pair.dual_integral, &pair.integral)
    );
    println!();
}

fn main() {
    let fp = |p| PrimeModulus::new(p).unwrap();
    show("radford:3", &zoo::build_radford(fp(3)).unwrap());
    show("radford:5", &zoo::build_radford(fp(5)).unwrap());
    show(
        "group:c3:5",
        &zoo::build_group_algebra(fp(5), &zoo::cyclic_cayley(3), zoo::cyclic_labels(3)).unwrap(),
    );
}
