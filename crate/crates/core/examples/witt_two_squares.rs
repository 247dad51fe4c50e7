//! Two orthogonal vectors of squared norm m in Z^3 exhibit m as a sum of two
//! rational squares.
//!
//!     cargo run --example witt_two_squares

use lattice_cubes::{remark_identity_check, witt_extract_two_squares, LatticeVector, Natural, Oracle, SearchBudget};

fn main() -> lattice_cubes::Result<()> {
    let pairs = [([1, 2, 2], [2, 1, -2]), ([1, 1, 0], [1, -1, 0]), ([2, 3, 6], [6, 2, -3])];
    for (v, w) in pairs {
        let (v, w) = (LatticeVector::from_i64s(&v), LatticeVector::from_i64s(&w));
        let t = witt_extract_two_squares(&v, &w)?;
        println!(
            "{v} {w}: {} = ({})^2 + ({})^2{}  identity holds: {}",
            t.m,
            t.x,
            t.y,
            if t.sign_flipped { " [w negated]" } else { "" },
            remark_identity_check(&v, &w)?
        );
    }

    // Every orthogonal pair of squared norm 25 found by the search.
    let oracle = Oracle::new(SearchBudget::default());
    let all = oracle.orthogonal_pairs(&Natural::from(25u64), 3)?;
    let distinct: std::collections::BTreeSet<String> = all
        .iter()
        .map(|(v, w)| {
            let t = witt_extract_two_squares(v, w).unwrap();
            format!("({})^2+({})^2", t.x, t.y)
        })
        .collect();
    println!("\n25: {} ordered pairs give {} expressions, e.g. {}", all.len(), distinct.len(), distinct.iter().next().unwrap());
    Ok(())
}
