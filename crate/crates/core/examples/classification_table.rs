//! Prints the classification table of J(d, n) and the first few members of
//! each set.
//!
//!     cargo run --example classification_table

use lattice_cubes::{descriptor_for, is_member, DimensionPair, Natural, SetDescriptor};

fn main() {
    println!("d mod 4 \\ n-d |  0   1   2   >=3");
    for r in 0..4 {
        // Smallest d with the given residue.
        let d = if r == 0 { 4 } else { r };
        let cells: Vec<String> = (0..4)
            .map(|slack| format!("{:<3}", descriptor_for(DimensionPair::new(d, d + slack).unwrap())))
            .collect();
        println!("{r:>13} | {}", cells.join(" "));
    }
    println!();

    for (desc, d, n) in [
        (SetDescriptor::I1, 3, 3),
        (SetDescriptor::I2, 2, 3),
        (SetDescriptor::I3, 1, 3),
        (SetDescriptor::N0, 4, 4),
    ] {
        let p = DimensionPair::new(d, n).unwrap();
        let members: Vec<u64> = (0..=30).filter(|&m| is_member(&Natural::from(m), p).member).collect();
        println!("J({d},{n}) = {desc}: {members:?} ...");
    }

    let p = DimensionPair::new(2, 3).unwrap();
    let verdict = is_member(&Natural::from(21u64), p);
    println!("\n21 in J(2,3)? {} ({})", verdict.member, verdict.reason.unwrap());
}
