//! Exact arithmetic for hypercubes with vertices in `Z^n`.
//!
//! Given a cube dimension `d`, an ambient dimension `n` and a squared side
//! length `m`, this crate decides whether such a cube exists
//! ([`classify`]), builds an explicit integer frame when it does
//! ([`construct`]), explains why not when it does not, and checks both
//! answers against an exhaustive search ([`oracle`]). The [`qform`] module
//! carries the rational quadratic-form side: equivalence certificates,
//! orthogonal completion and an explicit two-square extraction.
//!
//! ```
//! use lattice_cubes::{construct_witness, is_member, verify_witness, DimensionPair, Natural};
//!
//! let p = DimensionPair::new(2, 2).unwrap();
//! let m = Natural::from(13u64);
//! assert!(is_member(&m, p).member);
//! let frame = construct_witness(&m, p).unwrap();
//! assert_eq!(frame.to_text(), "2 2 13\n3 2\n-2 3\n");
//! assert!(verify_witness(&frame).valid);
//! ```

pub mod classify;
pub mod cli;
pub mod construct;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod qform;
pub mod squares;

pub use classify::{descriptor_for, is_member, DimensionPair, MembershipVerdict, Refutation, SetDescriptor};
pub use construct::{
    base_witness, block_extend, construct_witness, expand_cube, quaternion_basis, verify_witness, CubeWitness,
    LatticeVector, VerificationReport,
};
pub use error::{Error, Result};
pub use exact::{factorize, int_sqrt, Factorization, Natural, Ratio};
pub use oracle::{CensusRow, Oracle, OracleVerdict, SearchBudget};
pub use qform::{
    basis_to_equivalence, cross_product, direct_sum, gram_schmidt_extend, remark_identity_check,
    verify_equivalence, witt_extract_two_squares, DiagonalForm, EquivalenceWitness, RationalVector,
};
pub use squares::{
    decompose_four_squares, decompose_n_squares, decompose_three_squares, decompose_two_squares, is_in_i2,
    is_in_i3, SquareDecomposition,
};
