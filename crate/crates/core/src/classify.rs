//! The classification table for `J(d, n)`, the set of squared side lengths
//! of `d`-cubes with vertices in `Z^n`, and the membership test built on it.
//!
//! The set depends only on `d mod 4` and `min(n - d, 3)`:
//!
//! ```text
//!  n-d | d≡1  d≡2  d≡3  d≡0
//! -----+--------------------
//!   0  |  I1   I2   I1   N0
//!   1  |  I2   I2   N0   N0
//!   2  |  I3   N0   N0   N0
//!  ≥3  |  N0   N0   N0   N0
//! ```

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int_sqrt, Natural};
use crate::squares::{fermat_obstruction, is_in_i3, strip_fours};

/// One of the four sets that can occur as `J(d, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SetDescriptor {
    /// Perfect squares.
    I1,
    /// Sums of two squares.
    I2,
    /// Sums of three squares.
    I3,
    /// All non-negative integers.
    N0,
}

impl fmt::Display for SetDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SetDescriptor::I1 => "I1",
            SetDescriptor::I2 => "I2",
            SetDescriptor::I3 => "I3",
            SetDescriptor::N0 => "N0",
        };
        f.write_str(s)
    }
}

/// Cube dimension `d` and ambient dimension `n`, `1 ≤ d ≤ n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DimensionPair {
    d: usize,
    n: usize,
}

impl DimensionPair {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        if d < 1 || d > n {
            return Err(Error::InvalidDimensions { d, n });
        }
        Ok(DimensionPair { d, n })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn codimension(&self) -> usize {
        self.n - self.d
    }

    /// `(d mod 4, n - d)`, the coordinates of the table cell.
    pub fn table_coordinates(&self) -> (usize, usize) {
        (self.d % 4, self.n - self.d)
    }
}

impl fmt::Display for DimensionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d, self.n)
    }
}

pub fn descriptor_for(p: DimensionPair) -> SetDescriptor {
    use SetDescriptor::*;
    match (p.d % 4, p.codimension().min(3)) {
        (1, 0) | (3, 0) => I1,
        (2, 0) | (2, 1) | (1, 1) => I2,
        (1, 2) => I3,
        _ => N0,
    }
}

/// Why `m` falls outside `J(d, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    /// `m` is not a perfect square; `floor_root` is `⌊√m⌋`.
    NotSquare { floor_root: Natural },
    /// `prime ≡ 3 (mod 4)` divides `m` to an odd power.
    Fermat { prime: Natural },
    /// `m = 4^k · ell` with `ell ≡ 7 (mod 8)`.
    Legendre { k: u64, ell: Natural },
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refutation::NotSquare { floor_root } => write!(
                f,
                "I1 violation: not a perfect square (floor root {floor_root})"
            ),
            Refutation::Fermat { prime } => {
                write!(f, "I2 violation: prime {prime} odd exponent")
            }
            Refutation::Legendre { k, ell } => {
                write!(f, "I3 violation: 4^{k}*{ell} with {ell} = 7 mod 8")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub member: bool,
    pub descriptor: SetDescriptor,
    pub reason: Option<Refutation>,
}

/// Decides whether `m` belongs to the set described by `descriptor`,
/// returning the violated criterion otherwise.
pub fn check_descriptor(m: &Natural, descriptor: SetDescriptor) -> Option<Refutation> {
    match descriptor {
        SetDescriptor::I1 => {
            let (floor_root, exact) = int_sqrt(m);
            (!exact).then_some(Refutation::NotSquare { floor_root })
        }
        SetDescriptor::I2 => fermat_obstruction(m).map(|prime| Refutation::Fermat { prime }),
        SetDescriptor::I3 => (!is_in_i3(m)).then(|| {
            let (k, ell) = strip_fours(m);
            Refutation::Legendre { k, ell }
        }),
        SetDescriptor::N0 => None,
    }
}

pub fn is_member(m: &Natural, p: DimensionPair) -> MembershipVerdict {
    let descriptor = descriptor_for(p);
    let reason = check_descriptor(m, descriptor);
    MembershipVerdict {
        member: reason.is_none(),
        descriptor,
        reason,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SetDescriptor::*;

    fn pair(d: usize, n: usize) -> DimensionPair {
        DimensionPair::new(d, n).unwrap()
    }

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn table_examples() {
        assert_eq!(descriptor_for(pair(1, 1)), I1);
        assert_eq!(descriptor_for(pair(2, 2)), I2);
        assert_eq!(descriptor_for(pair(3, 3)), I1);
        assert_eq!(descriptor_for(pair(4, 4)), N0);
        assert_eq!(descriptor_for(pair(5, 6)), I2);
        assert_eq!(descriptor_for(pair(1, 3)), I3);
        assert_eq!(descriptor_for(pair(2, 5)), N0);
        assert_eq!(descriptor_for(pair(1, 400)), N0);
    }

    #[test]
    fn invalid_dimensions() {
        assert_eq!(
            DimensionPair::new(5, 4),
            Err(Error::InvalidDimensions { d: 5, n: 4 })
        );
        assert!(DimensionPair::new(0, 3).is_err());
    }

    #[test]
    fn shift_by_four_preserves_descriptor() {
        for n in 1..=20 {
            for d in 1..=n {
                assert_eq!(descriptor_for(pair(d, n)), descriptor_for(pair(d + 4, n + 4)));
            }
        }
    }

    #[test]
    fn membership_examples() {
        let v = is_member(&nat(3), pair(2, 3));
        assert!(!v.member);
        assert_eq!(v.reason, Some(Refutation::Fermat { prime: nat(3) }));
        assert_eq!(
            v.reason.unwrap().to_string(),
            "I2 violation: prime 3 odd exponent"
        );

        assert!(is_member(&nat(13), pair(2, 2)).member);

        let v = is_member(&nat(7), pair(1, 3));
        assert_eq!(v.reason, Some(Refutation::Legendre { k: 0, ell: nat(7) }));

        assert!(is_member(&nat(5), pair(4, 7)).member);

        let v = is_member(&nat(7), pair(3, 3));
        assert!(matches!(v.reason, Some(Refutation::NotSquare { .. })));
    }

    #[test]
    fn zero_is_always_a_member() {
        for n in 1..=10 {
            for d in 1..=n {
                assert!(is_member(&nat(0), pair(d, n)).member);
            }
        }
    }

    #[test]
    fn membership_is_monotone_in_ambient_dimension() {
        for n in 1..=10 {
            for d in 1..=n {
                for m in 0..=200u64 {
                    if is_member(&nat(m), pair(d, n)).member {
                        for n2 in n..=12 {
                            assert!(is_member(&nat(m), pair(d, n2)).member);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn segments_agree_with_square_decompositions() {
        for n in 1..=4 {
            for m in 0..=2000u64 {
                let by_table = is_member(&nat(m), pair(1, n)).member;
                let by_search = crate::squares::decompose_n_squares(&nat(m), n).is_ok();
                assert_eq!(by_table, by_search, "m = {m}, n = {n}");
            }
        }
    }
}
