//! Exact scalars and the elementary number theory the rest of the crate
//! leans on: integer square roots, primality and factorization.
//!
//! Nothing here touches floating point. [`Natural`] wraps an unbounded
//! unsigned integer, [`Ratio`] an always-reduced rational.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative integer.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

impl Natural {
    pub fn new(value: BigUint) -> Self {
        Natural(value)
    }

    pub fn zero() -> Self {
        Natural(BigUint::zero())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.0.clone())
    }

    /// Converts a signed integer, rejecting negatives.
    pub fn from_bigint(value: &BigInt) -> Option<Self> {
        value.to_biguint().map(Natural)
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<u64> for Natural {
    fn from(v: u64) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<u32> for Natural {
    fn from(v: u32) -> Self {
        Natural(BigUint::from(v))
    }
}

impl From<BigUint> for Natural {
    fn from(v: BigUint) -> Self {
        Natural(v)
    }
}

impl FromStr for Natural {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("`{s}` is not a non-negative decimal integer"));
        }
        BigUint::from_str(s).map(Natural).map_err(|e| e.to_string())
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Exact rational number, stored in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ratio(BigRational);

impl Ratio {
    /// Builds `num / den`; fails on a zero denominator.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::PreconditionViolated("zero denominator".into()));
        }
        // BigRational::new reduces and normalizes the sign of the denominator.
        Ok(Ratio(BigRational::new(num, den)))
    }

    pub fn zero() -> Self {
        Ratio(BigRational::zero())
    }

    pub fn one() -> Self {
        Ratio(BigRational::one())
    }

    pub fn from_integer(value: BigInt) -> Self {
        Ratio(BigRational::from_integer(value))
    }

    pub fn from_i64(value: i64) -> Self {
        Ratio::from_integer(BigInt::from(value))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn square(&self) -> Ratio {
        Ratio(&self.0 * &self.0)
    }

    /// `None` when dividing by zero.
    pub fn checked_div(&self, other: &Ratio) -> Option<Ratio> {
        if other.is_zero() {
            None
        } else {
            Some(Ratio(&self.0 / &other.0))
        }
    }

    pub fn recip(&self) -> Option<Ratio> {
        Ratio::one().checked_div(self)
    }
}

impl From<i64> for Ratio {
    fn from(v: i64) -> Self {
        Ratio::from_i64(v)
    }
}

impl From<BigInt> for Ratio {
    fn from(v: BigInt) -> Self {
        Ratio::from_integer(v)
    }
}

impl From<&Natural> for Ratio {
    fn from(v: &Natural) -> Self {
        Ratio::from_integer(v.to_bigint())
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! ratio_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Ratio> for &Ratio {
            type Output = Ratio;
            fn $method(self, rhs: &Ratio) -> Ratio {
                Ratio($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Ratio> for Ratio {
            type Output = Ratio;
            fn $method(self, rhs: Ratio) -> Ratio {
                Ratio($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Ratio> for Ratio {
            type Output = Ratio;
            fn $method(self, rhs: &Ratio) -> Ratio {
                Ratio($trait::$method(self.0, &rhs.0))
            }
        }
    };
}

ratio_binop!(Add, add);
ratio_binop!(Sub, sub);
ratio_binop!(Mul, mul);

impl Neg for Ratio {
    type Output = Ratio;
    fn neg(self) -> Ratio {
        Ratio(-self.0)
    }
}

impl Neg for &Ratio {
    type Output = Ratio;
    fn neg(self) -> Ratio {
        Ratio(-&self.0)
    }
}

/// Floor of the square root by Newton iteration, plus whether it is exact.
pub fn int_sqrt(m: &Natural) -> (Natural, bool) {
    let root = isqrt(m.value());
    let exact = &root * &root == *m.value();
    (Natural(root), exact)
}

pub(crate) fn isqrt(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    // Start above the root; the iterates decrease monotonically to ⌊√n⌋.
    let bits = n.bits();
    let mut x = BigUint::one() << bits.div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1u32;
        if y >= x {
            return x;
        }
        x = y;
    }
}

pub(crate) fn is_square(n: &BigUint) -> bool {
    let r = isqrt(n);
    &r * &r == *n
}

/// Prime factorization, primes strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(Natural, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(Natural, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> Natural {
        let mut acc = BigUint::one();
        for (p, e) in &self.factors {
            acc *= p.value().pow(*e);
        }
        Natural(acc)
    }

    pub fn exponent_of(&self, p: &Natural) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map_or(0, |(_, e)| *e)
    }
}

const TRIAL_LIMIT: u32 = 1_000_000;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

/// Factors `m` by trial division up to 10^6, then Pollard's rho on whatever
/// composite cofactor remains.
pub fn factorize(m: &Natural) -> Result<Factorization> {
    if m.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = m.value().clone();

    if let Some(mut small) = rest.to_u64() {
        for &p in small_primes() {
            let p = p as u64;
            if p * p > small {
                break;
            }
            if small % p == 0 {
                let mut e = 0;
                while small % p == 0 {
                    small /= p;
                    e += 1;
                }
                factors.push((BigUint::from(p), e));
            }
        }
        rest = BigUint::from(small);
    } else {
        for &p in small_primes() {
            let pb = BigUint::from(p);
            if &pb * &pb > rest {
                break;
            }
            let mut e = 0;
            while (&rest % p).is_zero() {
                rest /= p;
                e += 1;
            }
            if e > 0 {
                factors.push((pb, e));
            }
        }
    }

    if !rest.is_one() {
        let bound = BigUint::from(TRIAL_LIMIT) * BigUint::from(TRIAL_LIMIT);
        if rest < bound {
            // No factor below 10^6 and below 10^12: prime.
            factors.push((rest, 1));
        } else {
            let mut large = Vec::new();
            split_large(rest, &mut large);
            large.sort();
            for p in large {
                match factors.last_mut() {
                    Some((q, e)) if *q == p => *e += 1,
                    _ => factors.push((p, 1)),
                }
            }
        }
    }

    Ok(Factorization {
        factors: factors
            .into_iter()
            .map(|(p, e)| (Natural(p), e))
            .collect(),
    })
}

fn split_large(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    if is_square(&n) {
        let r = isqrt(&n);
        split_large(r.clone(), out);
        split_large(r, out);
        return;
    }
    let d = pollard_rho(&n);
    let q = &n / &d;
    split_large(d, out);
    split_large(q, out);
}

// Brent's variant with batched gcds. Returns a non-trivial factor of a
// composite, odd, non-square n.
fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let batch = 128.min(r - k);
                for _ in 0..batch {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += batch;
            }
            r *= 2;
        }
        if &g == n {
            // The batch overshot; step one at a time from the saved point.
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

// Witness set that is deterministic below 3.3 * 10^24; above that bound the
// test is probabilistic with the same bases.
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Miller–Rabin with fixed bases.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for &p in &MR_BASES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'bases: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Deterministic primality check.
pub fn is_prime(n: &Natural) -> bool {
    is_probable_prime(n.value())
}
