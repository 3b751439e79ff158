//! Save an algebra to its canonical JSON file, reload it (the loader
//! re-verifies all eight axioms), and confirm the round trip is exact.
//!
//!     cargo run --example file_round_trip

use radford::field::PrimeModulus;
use radford::zoo;

fn main() {
    let modulus = PrimeModulus::new(3).unwrap();
    let h = zoo::build_radford(modulus).unwrap();

    let dir = std::env::temp_dir();
    let path = dir.join("radford_r3_roundtrip.json");
    zoo::save_algebra(&h, &path).unwrap();
    println!("saved to {}", path.display());

    let text = std::fs::read_to_string(&path).unwrap();
    println!("file is {} bytes; first lines:", text.len());
    for line in text.lines().take(5) {
        println!("  {line}");
    }

    let loaded = zoo::load_algebra(&path).unwrap();
    println!("reloaded, verified: {}", loaded.is_verified());
    println!("tensor-for-tensor equal: {}", loaded == h);
    println!(
        "canonical bytes identical: {}",
        zoo::algebra_to_canonical_json(&h) == zoo::algebra_to_canonical_json(&loaded)
    );

    std::fs::remove_file(&path).ok();
}
