//! Builds integer cube frames for several (m, d, n), checks them, and lists
//! the vertices of a small cube.
//!
//!     cargo run --example construct_and_verify

use lattice_cubes::construct::max_entry;
use lattice_cubes::{construct_witness, expand_cube, verify_witness, DimensionPair, LatticeVector, Natural};

fn main() -> lattice_cubes::Result<()> {
    for (m, d, n) in [(13u64, 2, 2), (9, 3, 3), (5, 3, 4), (7, 4, 4), (6, 7, 8), (3, 9, 9)] {
        let p = DimensionPair::new(d, n)?;
        match construct_witness(&Natural::from(m), p) {
            Ok(w) => {
                let report = verify_witness(&w);
                println!("m={m} (d,n)=({d},{n}): valid={} max|entry|={}", report.valid, max_entry(&w));
                for row in w.rows() {
                    println!("    {row}");
                }
            }
            Err(e) => println!("m={m} (d,n)=({d},{n}): {e}"),
        }
    }

    // The eight vertices of a cube of side 3 in Z^3.
    let w = construct_witness(&Natural::from(9u64), DimensionPair::new(3, 3)?)?;
    let vertices = expand_cube(&w, &LatticeVector::zeros(3))?;
    let list: Vec<String> = vertices.iter().map(ToString::to_string).collect();
    println!("\nvertices: {}", list.join(" "));
    Ok(())
}
