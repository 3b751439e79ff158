//! Helpers shared by the integration suites.
#![allow(dead_code)] // each suite uses its own subset

use std::process::Command;

use radford::field::PrimeModulus;
use radford::hopf::{AlgebraElement, HopfAlgebra};
use radford::zoo;

/// Run the CLI binary; returns (exit code, stdout, stderr).
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_radford"))
        .args(args)
        .output()
        .expect("failed to spawn the radford binary");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        String::from_utf8(out.stderr).expect("stderr is UTF-8"),
    )
}

pub fn fp(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

pub fn radford_algebra(p: u64) -> HopfAlgebra {
    zoo::build_radford(fp(p)).unwrap()
}

pub fn cyclic_group_algebra(n: usize, p: u64) -> HopfAlgebra {
    zoo::build_group_algebra(fp(p), &zoo::cyclic_cayley(n), zoo::cyclic_labels(n)).unwrap()
}

/// The explicit left integral (Σ_i g^i)(Σ_{i=1}^{p-1} (-1)^i x^i).
pub fn paper_left_integral(h: &HopfAlgebra) -> AlgebraElement {
    let p = h.modulus().get() as usize;
    let mut sum_g = h.zero_element();
    for i in 0..p {
        sum_g = sum_g.add(&h.basis_element(i * p));
    }
    let mut alt_x = h.zero_element();
    for i in 1..p {
        let sign = h.modulus().element_from_i64(if i % 2 == 0 { 1 } else { -1 });
        alt_x = alt_x.add(&h.basis_element(i).scale(sign));
    }
    h.multiply(&sum_g, &alt_x)
}

/// The explicit right integral (Σ_{i=1}^{p-1} x^i)(Σ_i g^i).
pub fn paper_right_integral(h: &HopfAlgebra) -> AlgebraElement {
    let p = h.modulus().get() as usize;
    let mut sum_g = h.zero_element();
    for i in 0..p {
        sum_g = sum_g.add(&h.basis_element(i * p));
    }
    let mut sum_x = h.zero_element();
    for i in 1..p {
        sum_x = sum_x.add(&h.basis_element(i));
    }
    h.multiply(&sum_x, &sum_g)
}

/// Brute-force indicator oracle for a group algebra: |{g : g^n = e}| mod p.
pub fn group_power_count(cayley: &[Vec<usize>], identity: usize, n: usize, p: u64) -> u64 {
    let mut count = 0u64;
    for g in 0..cayley.len() {
        let mut acc = identity;
        for _ in 0..n {
            acc = cayley[acc][g];
        }
        if acc == identity {
            count += 1;
        }
    }
    count % p
}
