//! Membership tests and canonical decompositions for sums of one, two,
//! three and four squares.
//!
//! Every decomposition returned here is the lexicographically smallest
//! non-decreasing tuple, so repeated calls agree and golden values are stable.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorize, is_square, isqrt, Natural};

/// `target = Σ terms²`, terms sorted non-decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareDecomposition {
    terms: Vec<Natural>,
    target: Natural,
}

impl SquareDecomposition {
    fn from_terms(terms: Vec<BigUint>, target: &BigUint) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0] <= w[1]));
        let sum: BigUint = terms.iter().map(|t| t * t).sum();
        assert_eq!(&sum, target, "decomposition does not sum to its target");
        SquareDecomposition {
            terms: terms.into_iter().map(Natural::new).collect(),
            target: Natural::new(target.clone()),
        }
    }

    pub fn terms(&self) -> &[Natural] {
        &self.terms
    }

    pub fn target(&self) -> &Natural {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as machine integers, when they fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.terms.iter().map(|t| t.value().to_i64()).collect()
    }
}

pub fn is_perfect_square(m: &Natural) -> bool {
    is_square(m.value())
}

/// Smallest prime `p ≡ 3 (mod 4)` dividing `m` to an odd power, if any.
pub fn fermat_obstruction(m: &Natural) -> Option<Natural> {
    if m.is_zero() {
        return None;
    }
    let f = factorize(m).expect("m is non-zero");
    f.factors()
        .iter()
        .find(|(p, e)| (p.value() % 4u32) == BigUint::from(3u32) && e % 2 == 1)
        .map(|(p, _)| p.clone())
}

/// Fermat's criterion for sums of two squares.
pub fn is_in_i2(m: &Natural) -> bool {
    fermat_obstruction(m).is_none()
}

/// Writes `m = 4^k · ℓ` with `4 ∤ ℓ`. For `m = 0` returns `(0, 0)`.
pub fn strip_fours(m: &Natural) -> (u64, Natural) {
    let mut rest = m.value().clone();
    if rest.is_zero() {
        return (0, Natural::zero());
    }
    let mut k = 0;
    while (&rest % 4u32).is_zero() {
        rest >>= 2u32;
        k += 1;
    }
    (k, Natural::new(rest))
}

/// Legendre's criterion: `m` is a sum of three squares unless `m = 4^k(8j+7)`.
pub fn is_in_i3(m: &Natural) -> bool {
    let (_, ell) = strip_fours(m);
    ell.value() % 8u32 != BigUint::from(7u32)
}

/// Membership in `I_k`: perfect squares, Fermat, Legendre, then everything.
pub fn is_in_i(m: &Natural, k: usize) -> bool {
    match k {
        0 => m.is_zero(),
        1 => is_perfect_square(m),
        2 => is_in_i2(m),
        3 => is_in_i3(m),
        _ => true,
    }
}

// Lexicographically smallest non-decreasing k-tuple with every entry ≥ lo
// whose squares sum to m. Candidates are pruned with the membership
// criteria, which ignore the lower bound, so a branch may still fail.
fn lexmin(m: &BigUint, k: usize, lo: &BigUint) -> Option<Vec<BigUint>> {
    match k {
        0 => m.is_zero().then(Vec::new),
        1 => {
            let r = isqrt(m);
            (&r * &r == *m && r >= *lo).then(|| vec![r])
        }
        2 => two_square_representations(m)
            .into_iter()
            .find(|(a, _)| a >= lo)
            .map(|(a, b)| vec![a, b]),
        _ => {
            let nat = Natural::new(m.clone());
            if k <= 3 && !is_in_i(&nat, k) {
                return None;
            }
            let mut a = lo.clone();
            let kk = BigUint::from(k);
            while &kk * &a * &a <= *m {
                let rest = m - &a * &a;
                if let Some(mut tail) = lexmin(&rest, k - 1, &a) {
                    tail.insert(0, a);
                    return Some(tail);
                }
                a += BigUint::one();
            }
            None
        }
    }
}

// p = x² + y² for a prime p ≡ 1 (mod 4), by running the Euclidean
// algorithm on p and a square root of -1 mod p (Hermite–Serret).
fn split_prime(p: &BigUint) -> (BigUint, BigUint) {
    let minus_one = p - 1u32;
    let half = &minus_one >> 1u32;
    let quarter = &minus_one >> 2u32;
    let mut c = BigUint::from(2u32);
    while c.modpow(&half, p) != minus_one {
        c += 1u32;
    }
    let root = isqrt(p);
    let (mut a, mut b) = (p.clone(), c.modpow(&quarter, p));
    while b > root {
        let r = &a % &b;
        a = b;
        b = r;
    }
    let y = isqrt(&(p - &b * &b));
    debug_assert_eq!(&b * &b + &y * &y, *p);
    (b, y)
}

type Gaussian = (BigInt, BigInt);

fn gmul(u: &Gaussian, v: &Gaussian) -> Gaussian {
    (&u.0 * &v.0 - &u.1 * &v.1, &u.0 * &v.1 + &u.1 * &v.0)
}

fn gpow(u: &Gaussian, e: u32) -> Gaussian {
    (0..e).fold((BigInt::one(), BigInt::zero()), |acc, _| gmul(&acc, u))
}

// Every (a, b) with a ≤ b and a² + b² = m, in increasing order of a.
// Each is read off a Gaussian integer of norm m assembled from the
// factorization of m.
fn two_square_representations(m: &BigUint) -> Vec<(BigUint, BigUint)> {
    if m.is_zero() {
        return vec![(BigUint::zero(), BigUint::zero())];
    }
    let mut zs: Vec<Gaussian> = vec![(BigInt::one(), BigInt::zero())];
    let f = factorize(&Natural::new(m.clone())).expect("m is non-zero");
    for (p, e) in f.factors() {
        let p = p.value();
        let fixed = match (p % 4u32).to_u32() {
            Some(2) => gpow(&(BigInt::one(), BigInt::one()), *e),
            Some(3) if e % 2 == 0 => (BigInt::from(p.pow(e / 2)), BigInt::zero()),
            Some(3) => return Vec::new(),
            _ => {
                let (x, y) = split_prime(p);
                let pi = (BigInt::from(x), BigInt::from(y));
                let conj = (pi.0.clone(), -&pi.1);
                let (pi, conj) = (&pi, &conj);
                zs = zs
                    .iter()
                    .flat_map(|z| {
                        (0..=*e).map(move |j| gmul(z, &gmul(&gpow(pi, j), &gpow(conj, e - j))))
                    })
                    .collect();
                continue;
            }
        };
        zs = zs.iter().map(|z| gmul(z, &fixed)).collect();
    }
    let reps: BTreeSet<(BigUint, BigUint)> = zs
        .into_iter()
        .map(|(x, y)| {
            let (x, y) = (x.abs().to_biguint().unwrap(), y.abs().to_biguint().unwrap());
            if x <= y { (x, y) } else { (y, x) }
        })
        .collect();
    reps.into_iter().collect()
}

fn decompose_exact(m: &Natural, k: usize) -> Result<SquareDecomposition> {
    lexmin(m.value(), k, &BigUint::zero())
        .map(|terms| SquareDecomposition::from_terms(terms, m.value()))
        .ok_or_else(|| Error::NotRepresentable {
            m: m.to_string(),
            k,
        })
}

/// `m = a² + b²` with `a ≤ b`, lexicographically minimal.
pub fn decompose_two_squares(m: &Natural) -> Result<SquareDecomposition> {
    if !is_in_i2(m) {
        return Err(Error::NotRepresentable {
            m: m.to_string(),
            k: 2,
        });
    }
    decompose_exact(m, 2)
}

/// `m = a² + b² + c²`, sorted and lexicographically minimal.
pub fn decompose_three_squares(m: &Natural) -> Result<SquareDecomposition> {
    if !is_in_i3(m) {
        return Err(Error::NotRepresentable {
            m: m.to_string(),
            k: 3,
        });
    }
    decompose_exact(m, 3)
}

/// Lagrange: always succeeds.
pub fn decompose_four_squares(m: &Natural) -> SquareDecomposition {
    decompose_exact(m, 4).expect("every natural number is a sum of four squares")
}

/// `n` squares summing to `m`; for `n ≥ 4` the four-square decomposition is
/// left-padded with zeros, which keeps it sorted and minimal.
pub fn decompose_n_squares(m: &Natural, n: usize) -> Result<SquareDecomposition> {
    match n {
        0 => Err(Error::PreconditionViolated(
            "number of squares must be at least 1".into(),
        )),
        1..=3 => decompose_exact(m, n),
        _ => {
            let four = decompose_four_squares(m);
            let mut terms = vec![BigUint::zero(); n - 4];
            terms.extend(four.terms.into_iter().map(Natural::into_inner));
            Ok(SquareDecomposition::from_terms(terms, m.value()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Roots;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn terms(d: &SquareDecomposition) -> Vec<u64> {
        d.terms().iter().map(|t| t.to_u64().unwrap()).collect()
    }

    // Smallest sorted tuple by exhaustive search.
    fn brute_lexmin(m: u64, k: usize) -> Option<Vec<u64>> {
        fn go(m: u64, k: usize, lo: u64, acc: &mut Vec<u64>) -> bool {
            if k == 0 {
                return m == 0;
            }
            let mut a = lo;
            while a * a <= m {
                acc.push(a);
                if go(m - a * a, k - 1, a, acc) {
                    return true;
                }
                acc.pop();
                a += 1;
            }
            false
        }
        let mut acc = Vec::new();
        go(m, k, 0, &mut acc).then_some(acc)
    }

    #[test]
    fn i2_examples() {
        assert!(is_in_i2(&nat(13)));
        assert!(!is_in_i2(&nat(21)));
        assert!(is_in_i2(&nat(0)));
        assert_eq!(fermat_obstruction(&nat(21)), Some(nat(3)));
        assert_eq!(fermat_obstruction(&nat(9 * 7)), Some(nat(7)));
    }

    #[test]
    fn i3_examples() {
        assert!(!is_in_i3(&nat(7)));
        assert!(is_in_i3(&nat(3)));
        assert!(!is_in_i3(&nat(28)));
        assert!(is_in_i3(&nat(0)));
    }

    #[test]
    fn two_square_examples() {
        assert_eq!(terms(&decompose_two_squares(&nat(13)).unwrap()), [2, 3]);
        assert_eq!(terms(&decompose_two_squares(&nat(25)).unwrap()), [0, 5]);
        assert!(matches!(
            decompose_two_squares(&nat(21)),
            Err(Error::NotRepresentable { k: 2, .. })
        ));
    }

    #[test]
    fn three_square_examples() {
        assert_eq!(terms(&decompose_three_squares(&nat(3)).unwrap()), [1, 1, 1]);
        assert_eq!(terms(&decompose_three_squares(&nat(6)).unwrap()), [1, 1, 2]);
        assert!(decompose_three_squares(&nat(7)).is_err());
    }

    #[test]
    fn four_square_examples() {
        assert_eq!(terms(&decompose_four_squares(&nat(7))), [1, 1, 1, 2]);
        assert_eq!(terms(&decompose_four_squares(&nat(0))), [0, 0, 0, 0]);
        assert_eq!(terms(&decompose_four_squares(&nat(15))), [1, 1, 2, 3]);
    }

    #[test]
    fn n_square_examples() {
        assert_eq!(terms(&decompose_n_squares(&nat(25), 1).unwrap()), [5]);
        assert_eq!(
            terms(&decompose_n_squares(&nat(7), 5).unwrap()),
            [0, 1, 1, 1, 2]
        );
        assert!(decompose_n_squares(&nat(7), 3).is_err());
        assert!(decompose_n_squares(&nat(7), 0).is_err());
    }

    #[test]
    fn deciders_match_exhaustive_search() {
        for m in 0..=5000u64 {
            let r = m.sqrt() + 1;
            let two = (0..=r).any(|a| (a..=r).any(|b| a * a + b * b == m));
            assert_eq!(is_in_i2(&nat(m)), two, "I2 at {m}");
            assert_eq!(is_perfect_square(&nat(m)), (0..=r).any(|a| a * a == m));
        }
        for m in 0..=1500u64 {
            let r = m.sqrt() + 1;
            let three = (0..=r).any(|a| {
                (a..=r).any(|b| (b..=r).any(|c| a * a + b * b + c * c == m))
            });
            assert_eq!(is_in_i3(&nat(m)), three, "I3 at {m}");
        }
    }

    #[test]
    fn decompositions_are_lexicographically_minimal() {
        for m in 0..=600u64 {
            for k in 1..=5 {
                let ours = decompose_n_squares(&nat(m), k).ok().map(|d| terms(&d));
                assert_eq!(ours, brute_lexmin(m, k), "m = {m}, k = {k}");
            }
        }
    }

    #[test]
    fn lagrange_totality() {
        for m in 0..=100_000u64 {
            let d = decompose_four_squares(&nat(m));
            let s: u64 = terms(&d).iter().map(|t| t * t).sum();
            assert_eq!(s, m);
        }
    }

    #[test]
    fn deterministic() {
        for m in [0u64, 1, 97, 1000, 4093] {
            assert_eq!(decompose_four_squares(&nat(m)), decompose_four_squares(&nat(m)));
        }
    }

    #[test]
    fn large_input() {
        let m = nat(10_000_000_019);
        let d = decompose_four_squares(&m);
        assert_eq!(d.target(), &m);
    }

    #[test]
    fn two_square_representations_exhaustive() {
        for m in 0..=3000u64 {
            let want: Vec<(BigUint, BigUint)> = (0..=m.sqrt())
                .filter_map(|a| {
                    let b = (m - a * a).sqrt();
                    (a <= b && a * a + b * b == m).then(|| (BigUint::from(a), BigUint::from(b)))
                })
                .collect();
            assert_eq!(two_square_representations(&BigUint::from(m)), want, "m = {m}");
        }
    }

    #[test]
    fn split_primes() {
        for p in [5u32, 13, 17, 29, 1_000_000_009, 4_294_967_197] {
            let (x, y) = split_prime(&BigUint::from(p));
            assert_eq!(&x * &x + &y * &y, BigUint::from(p));
        }
    }

    #[test]
    fn huge_inputs_decompose() {
        let m: Natural = "100000000000000000000000000001".parse().unwrap();
        for k in 1..=5 {
            if let Ok(d) = decompose_n_squares(&m, k) {
                assert_eq!(d.target(), &m);
                assert_eq!(d.len(), k);
            } else {
                assert!(k < 4);
            }
        }
        // 10^30 + 1 is a product of seven primes ≡ 1 (mod 4).
        let m: Natural = "1000000000000000000000000000001".parse().unwrap();
        assert!(decompose_two_squares(&m).is_ok());
    }
}
