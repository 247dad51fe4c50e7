//! Brute-force search for cube frames in Z^n, compared with the
//! classification, plus a frame census.
//!
//!     cargo run --release --example oracle_census

use lattice_cubes::{is_member, DimensionPair, Natural, Oracle, SearchBudget};

fn main() -> lattice_cubes::Result<()> {
    let oracle = Oracle::new(SearchBudget::default()).parallel(true);

    let p = DimensionPair::new(2, 3)?;
    for m in 1..=12u64 {
        let verdict = oracle.oracle_is_member(&Natural::from(m), p)?;
        let table = is_member(&Natural::from(m), p).member;
        let rows = verdict
            .witness
            .map(|w| w.rows().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .unwrap_or_default();
        println!("m={m:>2} search={:<5} table={table:<5} {rows}", verdict.member);
    }

    println!("\ncensus (d,n) = (3,4):");
    for row in oracle.census(3, 4, 20)? {
        println!("  m={:>2} member={:<5} frames={}{}", row.m, row.member, row.frames, if row.capped { "+" } else { "" });
    }
    Ok(())
}
