//! Run the eight-axiom verification over the built-in algebras, then
//! deliberately break an antipode and watch the checks localize the
//! failure with a witness.
//!
//!     cargo run --example axiom_checks

use radford::field::PrimeModulus;
use radford::hopf::HopfAlgebra;
use radford::zoo;

fn fp(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

fn main() {
    let builtins: Vec<(String, HopfAlgebra)> = vec![
        ("radford:2".into(), zoo::build_radford(fp(2)).unwrap()),
        ("radford:3".into(), zoo::build_radford(fp(3)).unwrap()),
        ("radford:5".into(), zoo::build_radford(fp(5)).unwrap()),
        (
            "group:c3:5".into(),
            zoo::build_group_algebra(fp(5), &zoo::cyclic_cayley(3), zoo::cyclic_labels(3)).unwrap(),
        ),
        (
            "group:s3:5".into(),
            zoo::build_group_algebra(fp(5), &zoo::s3_cayley(), zoo::s3_labels()).unwrap(),
        ),
    ];

    for (name, h) in &builtins {
        let report = h.verify_axioms();
        let passed = report.checks.iter().filter(|c| c.passed).count();
        println!("{name:<12} dim {:>2}: {passed}/8 checks pass", h.dim());
    }
    println!();

    // negative control: replace the antipode of R(3) with the identity
    let h = zoo::build_radford(fp(3)).unwrap();
    let broken = HopfAlgebra::from_parts_unverified(
        h.modulus(),
        h.basis_labels().to_vec(),
        h.mult_tensor().clone(),
        h.unit_vector().clone(),
        h.comult_tensor().clone(),
        h.counit_vector().clone(),
        h.identity_operator(),
    )
    .unwrap();
    println!("radford:3 with S := id:");
    for check in &broken.verify_axioms().checks {
        match (&check.passed, &check.witness) {
            (true, _) => println!("  PASS {}", check.name),
            (false, Some(w)) => println!("  FAIL {} (witness: {w})", check.name),
            (false, None) => println!("  FAIL {}", check.name),
        }
    }
}
