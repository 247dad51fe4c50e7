//! Diagonal quadratic forms over `Q`, equivalence certificates, orthogonal
//! basis completion, and the explicit two-square extraction obtained from a
//! pair of orthogonal equal-length vectors in `Z^3`.
//!
//! An orthogonal basis `v_1, …, v_n` of `Q^n` certifies
//! `n·⟨1⟩ ≃ ⟨‖v_1‖², …, ‖v_n‖²⟩`: with the `v_i` as columns of `A`,
//! `Aᵗ A` is exactly the diagonal Gram matrix.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::construct::LatticeVector;
use crate::error::{Error, Result};
use crate::exact::{Natural, Ratio};

/// `⟨a_1, …, a_n⟩ = Σ a_i x_i²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalForm(Vec<Ratio>);

impl DiagonalForm {
    pub fn new(entries: Vec<Ratio>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::PreconditionViolated(
                "a diagonal form needs at least one entry".into(),
            ));
        }
        Ok(DiagonalForm(entries))
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self> {
        DiagonalForm::new(entries.iter().map(|&a| Ratio::from_i64(a)).collect())
    }

    /// `k·⟨a⟩ = ⟨a, …, a⟩`.
    pub fn repeated(a: Ratio, k: usize) -> Result<Self> {
        DiagonalForm::new(vec![a; k])
    }

    pub fn entries(&self) -> &[Ratio] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Value of the form at `x`.
    pub fn evaluate(&self, x: &[Ratio]) -> Result<Ratio> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.len(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(x)
            .fold(Ratio::zero(), |acc, (a, xi)| acc + a * &xi.square()))
    }
}

impl fmt::Display for DiagonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "⟩")
    }
}

pub fn direct_sum(f: &DiagonalForm, g: &DiagonalForm) -> DiagonalForm {
    let mut entries = f.0.clone();
    entries.extend(g.0.iter().cloned());
    DiagonalForm(entries)
}

/// Rational coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalVector(Vec<Ratio>);

impl RationalVector {
    pub fn new(coords: Vec<Ratio>) -> Self {
        RationalVector(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        RationalVector(coords.iter().map(|&c| Ratio::from_i64(c)).collect())
    }

    pub fn from_lattice(v: &LatticeVector) -> Self {
        RationalVector(v.coords().iter().cloned().map(Ratio::from_integer).collect())
    }

    pub fn coords(&self) -> &[Ratio] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dot(&self, other: &RationalVector) -> Ratio {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Ratio::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm_squared(&self) -> Ratio {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Ratio::is_zero)
    }

    pub fn scale(&self, c: &Ratio) -> RationalVector {
        RationalVector(self.0.iter().map(|x| x * c).collect())
    }

    fn sub_scaled(&mut self, c: &Ratio, other: &RationalVector) {
        for (x, y) in self.0.iter_mut().zip(&other.0) {
            *x = &*x - &(c * y);
        }
    }

    /// Rescales to an integer vector with coprime entries, keeping the
    /// direction. The zero vector is returned unchanged.
    pub fn primitive(&self) -> RationalVector {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        RationalVector(ints.into_iter().map(|x| Ratio::from_integer(x / &gcd)).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Ratio::is_integer)
    }

    pub fn negated(&self) -> RationalVector {
        RationalVector(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Square rational matrix stored by rows.
pub type Matrix = Vec<Vec<Ratio>>;

/// Determinant by Gaussian elimination over `Q`.
pub fn determinant(a: &Matrix) -> Result<Ratio> {
    let n = a.len();
    if let Some(row) = a.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: row.len(),
        });
    }
    let mut m = a.clone();
    let mut det = Ratio::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Ok(Ratio::zero());
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = det * &p;
        let inv = p.recip().expect("pivot is non-zero");
        let pivot_row = m[col].clone();
        for row in m.iter_mut().skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = &*x - &(&factor * y);
            }
        }
    }
    Ok(det)
}

/// Certificate that `target ≃ source` via `transformᵗ · diag(source) · transform = diag(target)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub source: DiagonalForm,
    pub target: DiagonalForm,
    pub transform: Matrix,
}

pub fn verify_equivalence(w: &EquivalenceWitness) -> Result<bool> {
    let n = w.source.dim();
    if w.target.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: w.target.dim(),
        });
    }
    if w.transform.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: w.transform.len(),
        });
    }
    if determinant(&w.transform)?.is_zero() {
        return Ok(false);
    }
    let a = &w.transform;
    let q = w.source.entries();
    for i in 0..n {
        for j in i..n {
            // (Aᵗ Q A)_{ij} = Σ_k A_{ki} q_k A_{kj}
            let entry = (0..n).fold(Ratio::zero(), |acc, k| acc + &(&a[k][i] * &q[k]) * &a[k][j]);
            let expected = if i == j {
                w.target.entries()[i].clone()
            } else {
                Ratio::zero()
            };
            if entry != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_orthogonal(rows: &[RationalVector], n: usize) -> Result<()> {
    for (i, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: r.len(),
            });
        }
        if r.is_zero() {
            return Err(Error::ZeroVector { index: i });
        }
    }
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if !rows[i].dot(&rows[j]).is_zero() {
                return Err(Error::NotOrthogonal { i, j });
            }
        }
    }
    Ok(())
}

/// An orthogonal basis of `Q^n` as an equivalence `n·⟨1⟩ ≃ ⟨‖v_i‖²⟩`.
pub fn basis_to_equivalence(rows: &[RationalVector]) -> Result<EquivalenceWitness> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    }
    check_orthogonal(rows, n)?;
    let transform: Matrix = (0..n)
        .map(|i| rows.iter().map(|v| v.coords()[i].clone()).collect())
        .collect();
    Ok(EquivalenceWitness {
        source: DiagonalForm::repeated(Ratio::one(), n)?,
        target: DiagonalForm::new(rows.iter().map(RationalVector::norm_squared).collect())?,
        transform,
    })
}

pub fn cross_product(v: &RationalVector, w: &RationalVector) -> Result<RationalVector> {
    for x in [v, w] {
        if x.len() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: x.len(),
            });
        }
    }
    let (a, b) = (v.coords(), w.coords());
    let comp = |i: usize, j: usize| &a[i] * &b[j] - &a[j] * &b[i];
    Ok(RationalVector(vec![comp(1, 2), comp(2, 0), comp(0, 1)]))
}

/// Orthogonal basis completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExtension {
    pub basis: Vec<RationalVector>,
    /// Squared norms of the appended vectors.
    pub residual_norms: Vec<Ratio>,
}

/// Completes `d` orthogonal vectors of `Q^n` to an orthogonal basis.
///
/// Standard basis vectors are projected off the current span in order
/// `e_1, …, e_n`; the ones that vanish are skipped, the others are scaled to
/// primitive integer vectors. The last appended vector is signed so the
/// basis is positively oriented, which makes the completion of two vectors
/// in `Q^3` a multiple of their cross product.
pub fn gram_schmidt_extend(rows: &[RationalVector]) -> Result<BasisExtension> {
    let Some(first) = rows.first() else {
        return Err(Error::PreconditionViolated(
            "at least one input vector is required".into(),
        ));
    };
    let n = first.len();
    if rows.len() > n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: rows.len(),
        });
    }
    check_orthogonal(rows, n)?;

    let mut basis: Vec<RationalVector> = rows.to_vec();
    let mut norms: Vec<Ratio> = basis.iter().map(RationalVector::norm_squared).collect();
    let mut appended = 0;
    for j in 0..n {
        if basis.len() == n {
            break;
        }
        let mut u = RationalVector((0..n).map(|i| Ratio::from_i64((i == j) as i64)).collect());
        for (b, nb) in basis.iter().zip(&norms) {
            // e_j · b is just the j-th coordinate of b.
            let c = b.coords()[j].checked_div(nb).expect("basis vectors are non-zero");
            u.sub_scaled(&c, b);
        }
        if u.is_zero() {
            continue;
        }
        let u = u.primitive();
        norms.push(u.norm_squared());
        basis.push(u);
        appended += 1;
    }

    if appended > 0 {
        let matrix: Matrix = basis.iter().map(|v| v.coords().to_vec()).collect();
        if determinant(&matrix)?.is_negative() {
            let last = basis.pop().expect("appended at least one");
            basis.push(last.negated());
        }
    }
    let residual_norms = norms.split_off(rows.len());
    Ok(BasisExtension {
        basis,
        residual_norms,
    })
}

/// `m = x² + y²` over `Q`, read off from two orthogonal vectors of squared
/// norm `m` in `Z^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSquareExtraction {
    pub m: Natural,
    pub x: Ratio,
    pub y: Ratio,
    /// Whether `w` was negated to avoid a vanishing denominator.
    pub sign_flipped: bool,
}

fn frame_pair(v: &LatticeVector, w: &LatticeVector) -> Result<BigInt> {
    for x in [v, w] {
        if x.len() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: x.len(),
            });
        }
    }
    let m = v.norm_squared();
    if m.is_zero() {
        return Err(Error::PreconditionViolated("vectors must be non-zero".into()));
    }
    if w.norm_squared() != m {
        return Err(Error::PreconditionViolated(format!(
            "squared norms differ: {} vs {}",
            m,
            w.norm_squared()
        )));
    }
    if !v.dot(w).is_zero() {
        return Err(Error::PreconditionViolated(format!(
            "vectors are not orthogonal (dot product {})",
            v.dot(w)
        )));
    }
    Ok(m)
}

/// For `v = (a,b,c)`, `w = (d,e,f)` orthogonal of squared norm `m`:
///
/// ```text
/// x = m(d - b) / (bd - ae - m),   y = m(a + e) / (bd - ae - m)
/// ```
///
/// If `bd - ae = m`, `w` is replaced by `-w` first, after which the
/// denominator is `-2m`.
pub fn witt_extract_two_squares(v: &LatticeVector, w: &LatticeVector) -> Result<TwoSquareExtraction> {
    let m = frame_pair(v, w)?;
    let (a, b) = (&v.coords()[0], &v.coords()[1]);
    let mut d = w.coords()[0].clone();
    let mut e = w.coords()[1].clone();
    let mut sign_flipped = false;
    if b * &d - a * &e == m {
        d = -d;
        e = -e;
        sign_flipped = true;
    }
    let den = b * &d - a * &e - &m;
    let x = Ratio::new(&m * (&d - b), den.clone())?;
    let y = Ratio::new(&m * (a + &e), den)?;
    let nat = Natural::from_bigint(&m).expect("norm is non-negative");
    debug_assert_eq!(x.square() + y.square(), Ratio::from(&nat));
    Ok(TwoSquareExtraction {
        m: nat,
        x,
        y,
        sign_flipped,
    })
}

// Ternary quadratic form Σ c_{ij} x_i x_j, i ≤ j, over (x, y, z).
type Ternary = [[BigInt; 3]; 3];

fn square_of_linear(l: &[BigInt; 3]) -> Ternary {
    let mut q: Ternary = Default::default();
    for i in 0..3 {
        for j in i..3 {
            let c = &l[i] * &l[j];
            q[i][j] = if i == j { c } else { c * 2 };
        }
    }
    q
}

fn add_ternary(acc: &mut Ternary, q: &Ternary) {
    for i in 0..3 {
        for j in 0..3 {
            acc[i][j] += &q[i][j];
        }
    }
}

/// Checks, coefficient by coefficient in `x, y, z`, that
///
/// ```text
/// (ax+dy+(bf-ce)z)² + (bx+ey+(cd-af)z)² + (cx+fy+(ae-bd)z)² = m x² + m y² + (m z)²
/// ```
pub fn remark_identity_check(v: &LatticeVector, w: &LatticeVector) -> Result<bool> {
    let m = frame_pair(v, w)?;
    let [a, b, c] = [&v.coords()[0], &v.coords()[1], &v.coords()[2]];
    let [d, e, f] = [&w.coords()[0], &w.coords()[1], &w.coords()[2]];
    let linear = [
        [a.clone(), d.clone(), b * f - c * e],
        [b.clone(), e.clone(), c * d - a * f],
        [c.clone(), f.clone(), a * e - b * d],
    ];
    let mut lhs: Ternary = Default::default();
    for l in &linear {
        add_ternary(&mut lhs, &square_of_linear(l));
    }
    let mut rhs: Ternary = Default::default();
    rhs[0][0] = m.clone();
    rhs[1][1] = m.clone();
    rhs[2][2] = &m * &m;
    Ok(lhs == rhs)
}

/// `⟨1,1,1⟩ ≃ ⟨m, m, m²⟩` from two orthogonal vectors of squared norm `m`
/// in `Q^3`, completed by their cross product.
pub fn cross_product_completion(v: &RationalVector, w: &RationalVector) -> Result<EquivalenceWitness> {
    let third = cross_product(v, w)?;
    basis_to_equivalence(&[v.clone(), w.clone(), third])
}
