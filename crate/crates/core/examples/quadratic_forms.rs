//! Diagonal quadratic forms over Q: completing a partial frame, equivalence
//! certificates and the cross-product completion <1,1,1> ~ <m,m,m^2>.
//!
//!     cargo run --example quadratic_forms

use lattice_cubes::qform::{cross_product_completion, determinant};
use lattice_cubes::{
    basis_to_equivalence, direct_sum, gram_schmidt_extend, verify_equivalence, DiagonalForm, RationalVector,
};

fn main() -> lattice_cubes::Result<()> {
    let rows = [RationalVector::from_i64s(&[1, 2, 2]), RationalVector::from_i64s(&[2, 1, -2])];
    let ext = gram_schmidt_extend(&rows)?;
    for v in &ext.basis {
        println!("    {v}");
    }
    let eq = basis_to_equivalence(&ext.basis)?;
    println!("{} ~ {}: {}  det = {}", eq.source, eq.target, verify_equivalence(&eq)?, determinant(&eq.transform)?);

    // Appended vectors are scaled to primitive integer vectors.
    let rows = [RationalVector::from_i64s(&[1, 1, 0, 0, 0])];
    let ext = gram_schmidt_extend(&rows)?;
    let norms: Vec<String> = ext.basis.iter().map(|v| v.norm_squared().to_string()).collect();
    println!("\n(1,1,0,0,0) extends with squared norms {}", norms.join(", "));

    let v = RationalVector::from_i64s(&[0, 1, 1]);
    let w = RationalVector::from_i64s(&[0, 1, -1]);
    let eq = cross_product_completion(&v, &w)?;
    println!("\n{} ~ {}: {}", eq.source, eq.target, verify_equivalence(&eq)?);

    let f = DiagonalForm::from_i64s(&[1, 2])?;
    println!("{f} + {f} = {}", direct_sum(&f, &f));
    Ok(())
}
