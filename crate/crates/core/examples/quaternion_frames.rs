//! Four mutually orthogonal rows from a quaternion, and the shift from a
//! (d, n) frame to a (d + 4, n + 4) frame by appending such a block.
//!
//!     cargo run --example quaternion_frames

use lattice_cubes::construct::quaternion_parameters;
use lattice_cubes::{block_extend, construct_witness, quaternion_basis, verify_witness, DimensionPair, Natural};

fn main() -> lattice_cubes::Result<()> {
    let m = Natural::from(7u64);
    let [a, b, c, d] = quaternion_parameters(&m);
    println!("7 = {a}^2 + {b}^2 + {c}^2 + {d}^2");
    let q = quaternion_basis(&a, &b, &c, &d);
    for row in q.rows() {
        println!("    {row}");
    }
    println!("orthogonal: {}", verify_witness(&q).valid);

    let small = construct_witness(&Natural::from(2u64), DimensionPair::new(2, 3)?)?;
    let big = block_extend(&small);
    println!("\n({},{}) -> ({},{}):", small.d(), small.n(), big.d(), big.n());
    print!("{}", big.to_text());
    println!("valid: {}", verify_witness(&big).valid);
    Ok(())
}
