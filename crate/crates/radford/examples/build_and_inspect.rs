//! Build the p²-dimensional Hopf algebra R(p) from its relations and poke
//! at its structure: products, coproducts, and the derived antipode.
//!
//!     cargo run --example build_and_inspect

use radford::field::PrimeModulus;
use radford::zoo;

fn main() {
    let p = 5u64;
    let modulus = PrimeModulus::new(p).unwrap();
    let h = zoo::build_radford(modulus).unwrap();

    println!("built R({p}): dimension {}, verified: {}", h.dim(), h.is_verified());
    println!("basis: {}", h.basis_labels().join(", "));
    println!("canonical id: {}", h.canonical_id());
    println!();

    let g = h.basis_element(p as usize);
    let x = h.basis_element(1);

    // the defining relations, seen through the multiplication tensor
    let mut g_power = h.unit_element();
    for _ in 0..p {
        g_power = h.multiply(&g_power, &g);
    }
    println!("g^{p}      = {}", h.format_element(g_power.coeffs()));

    let mut x_power = h.unit_element();
    for _ in 0..p {
        x_power = h.multiply(&x_power, &x);
    }
    println!("x^{p}      = {}", h.format_element(x_power.coeffs()));

    let commutator = h.multiply(&g, &x).sub(&h.multiply(&x, &g));
    println!("[g, x]   = {}", h.format_element(commutator.coeffs()));
    println!();

    // x is skew-primitive: Δ(x) = x⊗1 + g⊗x
    let dx = h.comultiply(&x);
    print!("Δ(x)     =");
    let mut first = true;
    for (idx, _) in dx.coeffs().as_slice().iter().enumerate().filter(|(_, &v)| v != 0) {
        let (a, b) = (idx / h.dim(), idx % h.dim());
        print!(
            "{} {}⊗{}",
            if first { "" } else { " +" },
            h.label(a),
            h.label(b)
        );
        first = false;
    }
    println!();

    // the antipode was derived by solving the convolution-inverse system
    println!("S(g)     = {}", h.format_element(h.antipode_of(&g).coeffs()));
    println!("S(x)     = {}", h.format_element(h.antipode_of(&x).coeffs()));
    let s2x = h.antipode_of(&h.antipode_of(&x));
    println!("S²(x)    = {}   (S² is not the identity)", h.format_element(s2x.coeffs()));
}
