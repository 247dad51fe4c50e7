//! Writing and reading the plain-text witness format.
//!
//!     cargo run --example witness_files

use lattice_cubes::{construct_witness, verify_witness, CubeWitness, DimensionPair, Natural};

fn main() -> lattice_cubes::Result<()> {
    let w = construct_witness(&Natural::from(6u64), DimensionPair::new(3, 5)?)?;
    let text = w.to_text();
    print!("{text}");

    let back = CubeWitness::parse(&text)?;
    assert_eq!(back, w);
    println!("round trip ok, valid = {}", verify_witness(&back).valid);

    for bad in ["2 2 13\n3 2\n", "2 2 13\n3 2\n-2 three\n", "2 2 13\n3 2\n-2 3\nextra\n"] {
        match CubeWitness::parse(bad) {
            Ok(_) => println!("unexpectedly parsed {bad:?}"),
            Err(e) => println!("{e}"),
        }
    }
    Ok(())
}
