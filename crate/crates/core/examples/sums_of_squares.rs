//! Canonical decompositions into two, three and four squares, including
//! inputs far beyond machine integers.
//!
//!     cargo run --example sums_of_squares

use lattice_cubes::squares::{fermat_obstruction, strip_fours};
use lattice_cubes::{
    decompose_four_squares, decompose_n_squares, decompose_three_squares, decompose_two_squares, factorize,
    Natural,
};

fn show(label: &str, m: &Natural, r: lattice_cubes::Result<lattice_cubes::SquareDecomposition>) {
    match r {
        Ok(d) => {
            let terms: Vec<String> = d.terms().iter().map(ToString::to_string).collect();
            println!("{label:<6} {m} = sum of squares of ({})", terms.join(", "));
        }
        Err(e) => println!("{label:<6} {e}"),
    }
}

fn main() {
    for m in [7u64, 25, 50, 61, 112, 1105] {
        let m = Natural::from(m);
        show("two", &m, decompose_two_squares(&m));
        show("three", &m, decompose_three_squares(&m));
        show("four", &m, Ok(decompose_four_squares(&m)));
    }

    let m = Natural::from(21u64);
    println!("\n21: Fermat obstruction {:?}", fermat_obstruction(&m).map(|p| p.to_string()));
    let (k, ell) = strip_fours(&Natural::from(112u64));
    println!("112 = 4^{k} * {ell}");

    let big: Natural = "1000000000000000000000000000001".parse().unwrap();
    let f: Vec<String> = factorize(&big).unwrap().factors().iter().map(|(p, e)| format!("{p}^{e}")).collect();
    println!("\n{big} = {}", f.join(" * "));
    show("two", &big, decompose_two_squares(&big));
    show("six", &big, decompose_n_squares(&big, 6));
}
