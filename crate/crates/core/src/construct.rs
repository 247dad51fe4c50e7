//! Explicit integer cube frames.
//!
//! A [`CubeWitness`] holds `d` pairwise-orthogonal rows in `Z^n` of common
//! squared norm `m`: the edges at one vertex of a `d`-cube. Frames for
//! `d ≤ 4` come from a small table of base constructions; larger `d` is
//! reached by appending `4 × 4` quaternion blocks along the diagonal.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::classify::{is_member, DimensionPair};
use crate::error::{Error, Result};
use crate::exact::{int_sqrt, Natural};
use crate::squares::{decompose_four_squares, decompose_n_squares, decompose_two_squares};

/// Integer coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector(Vec<BigInt>);

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticeVector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        LatticeVector(vec![BigInt::zero(); n])
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        LatticeVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_squared(&self) -> BigInt {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn add_assign(&mut self, other: &LatticeVector) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    fn padded(&self, lead: usize, total: usize) -> LatticeVector {
        let mut coords = vec![BigInt::zero(); lead];
        coords.extend(self.0.iter().cloned());
        coords.resize(total, BigInt::zero());
        LatticeVector(coords)
    }
}

impl fmt::Display for LatticeVector {
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

/// Edge frame of a `d`-cube in `Z^n` with squared side `m`.
///
/// Construction only enforces the shape; [`verify_witness`] checks the
/// orthogonality and norm conditions, so malformed third-party frames can
/// still be represented and diagnosed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeWitness {
    m: Natural,
    n: usize,
    rows: Vec<LatticeVector>,
}

impl CubeWitness {
    pub fn new(m: Natural, n: usize, rows: Vec<LatticeVector>) -> Result<Self> {
        DimensionPair::new(rows.len(), n)?;
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(CubeWitness { m, n, rows })
    }

    pub fn m(&self) -> &Natural {
        &self.m
    }

    pub fn d(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[LatticeVector] {
        &self.rows
    }

    pub fn dimensions(&self) -> DimensionPair {
        DimensionPair::new(self.d(), self.n).expect("checked on construction")
    }

    /// Serializes as a `d n m` header followed by one space-separated row
    /// per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.d(), self.n, self.m);
        for row in &self.rows {
            let line: Vec<String> = row.coords().iter().map(|c| c.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the format written by [`CubeWitness::to_text`].
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (header_idx, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            column: 1,
            message: "empty input, expected header `d n m`".into(),
        })?;
        let fields = tokens(header);
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: header_idx + 1,
                column: fields.get(3).map_or(header.len() + 1, |t| t.0),
                message: format!("header needs 3 fields `d n m`, found {}", fields.len()),
            });
        }
        let usize_field = |(col, tok): (usize, &str), what: &str| -> Result<usize> {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: 1,
                column: col,
                message: format!("{what} must be a non-negative integer, found `{tok}`"),
            })
        };
        let d = usize_field(fields[0], "d")?;
        let n = usize_field(fields[1], "n")?;
        let m: Natural = fields[2].1.parse().map_err(|e| Error::Parse {
            line: 1,
            column: fields[2].0,
            message: e,
        })?;
        if d < 1 || d > n {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("need 1 <= d <= n, got d = {d}, n = {n}"),
            });
        }

        let mut rows = Vec::with_capacity(d);
        for i in 0..d {
            let (idx, line) = lines.next().ok_or_else(|| Error::Parse {
                line: header_idx + i + 2,
                column: 1,
                message: format!("expected {d} rows, found {i}"),
            })?;
            let toks = tokens(line);
            if toks.len() != n {
                return Err(Error::Parse {
                    line: idx + 1,
                    column: toks.get(n).map_or(line.len() + 1, |t| t.0),
                    message: format!("row needs {n} entries, found {}", toks.len()),
                });
            }
            let coords = toks
                .into_iter()
                .map(|(col, tok)| parse_integer(tok).ok_or_else(|| Error::Parse {
                    line: idx + 1,
                    column: col,
                    message: format!("`{tok}` is not an integer"),
                }))
                .collect::<Result<Vec<_>>>()?;
            rows.push(LatticeVector::new(coords));
        }
        if let Some((idx, line)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            return Err(Error::Parse {
                line: idx + 1,
                column: line.find(|c: char| !c.is_whitespace()).unwrap_or(0) + 1,
                message: "unexpected content after the last row".into(),
            });
        }
        CubeWitness::new(m, n, rows)
    }
}

// Whitespace-separated tokens with 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_integer(tok: &str) -> Option<BigInt> {
    let digits = tok.strip_prefix('-').unwrap_or(tok);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    tok.parse().ok()
}

/// The 4 × 4 frame `q, qi, qj, qk` for `q = a+bi+cj+dk`, i.e. rows
/// `(a,b,c,d)`, `(-b,a,d,-c)`, `(-c,-d,a,b)`, `(-d,c,-b,a)`, all of squared
/// norm `a²+b²+c²+d²`.
///
/// The second row is `qi`. Writing it as `(-b,a,-d,c)` (that is `iq`)
/// breaks orthogonality against rows three and four whenever `bc ≠ ad`.
pub fn quaternion_basis(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> CubeWitness {
    let row = |xs: [BigInt; 4]| LatticeVector::new(xs.to_vec());
    let rows = vec![
        row([a.clone(), b.clone(), c.clone(), d.clone()]),
        row([-b, a.clone(), d.clone(), -c]),
        row([-c, -d, a.clone(), b.clone()]),
        row([-d, c.clone(), -b, a.clone()]),
    ];
    let m = a * a + b * b + c * c + d * d;
    CubeWitness {
        m: Natural::from_bigint(&m).expect("sum of squares"),
        n: 4,
        rows,
    }
}

/// Quaternion parameters used for `m`: the canonical four-square
/// decomposition, largest term first.
pub fn quaternion_parameters(m: &Natural) -> [BigInt; 4] {
    let t = decompose_four_squares(m);
    let big: Vec<BigInt> = t.terms().iter().rev().map(Natural::to_bigint).collect();
    [big[0].clone(), big[1].clone(), big[2].clone(), big[3].clone()]
}

fn quaternion_for(m: &Natural) -> CubeWitness {
    let [a, b, c, d] = quaternion_parameters(m);
    quaternion_basis(&a, &b, &c, &d)
}

fn refuse(m: &Natural, p: DimensionPair) -> Result<()> {
    match is_member(m, p).reason {
        None => Ok(()),
        Some(reason) => Err(Error::NotMember {
            m: m.to_string(),
            d: p.d(),
            n: p.n(),
            reason,
        }),
    }
}

/// Frame for `d ≤ 4` in `Z^(d + slack)`.
pub fn base_witness(m: &Natural, d: usize, slack: usize) -> Result<CubeWitness> {
    if !(1..=4).contains(&d) {
        return Err(Error::PreconditionViolated(format!(
            "base frames exist for 1 <= d <= 4, got d = {d}"
        )));
    }
    let n = d + slack;
    refuse(m, DimensionPair::new(d, n)?)?;

    let rows: Vec<LatticeVector> = match (d, slack) {
        (1, _) => {
            let width = n.min(4);
            let terms = decompose_n_squares(m, width)?;
            let coords: Vec<BigInt> = terms.terms().iter().rev().map(Natural::to_bigint).collect();
            vec![LatticeVector::new(coords)]
        }
        (2, 0) | (2, 1) => {
            let t = decompose_two_squares(m)?;
            let (small, large) = (t.terms()[0].to_bigint(), t.terms()[1].to_bigint());
            vec![
                LatticeVector::new(vec![large.clone(), small.clone()]),
                LatticeVector::new(vec![-small, large]),
            ]
        }
        (3, 0) => {
            let s = int_sqrt(m).0.to_bigint();
            (0..3)
                .map(|i| {
                    let mut coords = vec![BigInt::zero(); 3];
                    coords[i] = s.clone();
                    LatticeVector::new(coords)
                })
                .collect()
        }
        _ => quaternion_for(m).rows[..d].to_vec(),
    };
    let rows = rows.iter().map(|r| r.padded(0, n)).collect();
    CubeWitness::new(m.clone(), n, rows)
}

/// Integer frame for any member `(m, d, n)`: a base frame for
/// `r = ((d-1) mod 4) + 1` followed by `(d-r)/4` quaternion blocks.
pub fn construct_witness(m: &Natural, p: DimensionPair) -> Result<CubeWitness> {
    refuse(m, p)?;
    let d = p.d();
    let r = (d - 1) % 4 + 1;
    let blocks = (d - r) / 4;
    let slack = p.n() - d;

    let base = base_witness(m, r, slack)?;
    let quaternion = quaternion_for(m);
    let n = p.n();
    let base_width = r + slack;

    let mut rows: Vec<LatticeVector> = base.rows.iter().map(|row| row.padded(0, n)).collect();
    for block in 0..blocks {
        let lead = base_width + 4 * block;
        rows.extend(quaternion.rows.iter().map(|row| row.padded(lead, n)));
    }
    CubeWitness::new(m.clone(), n, rows)
}

/// Appends one quaternion block: a frame for `(d, n)` becomes a frame for
/// `(d + 4, n + 4)`.
pub fn block_extend(w: &CubeWitness) -> CubeWitness {
    let n = w.n + 4;
    let mut rows: Vec<LatticeVector> = w.rows.iter().map(|r| r.padded(0, n)).collect();
    rows.extend(quaternion_for(&w.m).rows.iter().map(|r| r.padded(w.n, n)));
    CubeWitness {
        m: w.m.clone(),
        n,
        rows,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairProduct {
    pub i: usize,
    pub j: usize,
    pub value: BigInt,
}

/// Dot products of all row pairs and `‖row‖² - m` per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub dot_products: Vec<PairProduct>,
    pub norm_deviations: Vec<BigInt>,
    pub valid: bool,
}

pub fn verify_witness(w: &CubeWitness) -> VerificationReport {
    let m = w.m.to_bigint();
    let norm_deviations: Vec<BigInt> = w.rows.iter().map(|r| r.norm_squared() - &m).collect();
    let mut dot_products = Vec::new();
    for i in 0..w.rows.len() {
        for j in i + 1..w.rows.len() {
            dot_products.push(PairProduct {
                i,
                j,
                value: w.rows[i].dot(&w.rows[j]),
            });
        }
    }
    let valid = norm_deviations.iter().all(Zero::is_zero)
        && dot_products.iter().all(|p| p.value.is_zero());
    VerificationReport {
        dot_products,
        norm_deviations,
        valid,
    }
}

pub const MAX_EXPAND_DIM: usize = 20;

/// All `2^d` vertices `anchor + Σ_{i∈S} rows[i]`; vertex `k` takes the rows
/// whose bit is set in `k`.
pub fn expand_cube(w: &CubeWitness, anchor: &LatticeVector) -> Result<Vec<LatticeVector>> {
    if anchor.len() != w.n {
        return Err(Error::DimensionMismatch {
            expected: w.n,
            found: anchor.len(),
        });
    }
    let d = w.d();
    if d > MAX_EXPAND_DIM {
        return Err(Error::TooLarge {
            d,
            limit: MAX_EXPAND_DIM,
        });
    }
    let mut out = Vec::with_capacity(1 << d);
    for mask in 0usize..(1 << d) {
        let mut v = anchor.clone();
        for (i, row) in w.rows.iter().enumerate() {
            if mask >> i & 1 == 1 {
                v.add_assign(row);
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// Largest absolute coordinate; handy for reporting witness sizes.
pub fn max_entry(w: &CubeWitness) -> BigInt {
    w.rows
        .iter()
        .flat_map(|r| r.coords().iter().map(|c| c.abs()))
        .max()
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rows_of(w: &CubeWitness) -> Vec<Vec<i64>> {
        w.rows()
            .iter()
            .map(|r| r.coords().iter().map(|c| i64::try_from(c).unwrap()).collect())
            .collect()
    }

    fn pair(d: usize, n: usize) -> DimensionPair {
        DimensionPair::new(d, n).unwrap()
    }

    fn square_13() -> CubeWitness {
        CubeWitness::new(
            nat(13),
            2,
            vec![LatticeVector::from_i64s(&[3, 2]), LatticeVector::from_i64s(&[-2, 3])],
        )
        .unwrap()
    }

    #[test]
    fn quaternion_examples() {
        let w = quaternion_basis(&big(1), &big(0), &big(0), &big(0));
        assert_eq!(w.m(), &nat(1));
        assert_eq!(
            rows_of(&w),
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]
        );

        let w = quaternion_basis(&big(2), &big(1), &big(1), &big(1));
        assert_eq!(w.m(), &nat(7));
        assert_eq!(
            rows_of(&w),
            vec![vec![2, 1, 1, 1], vec![-1, 2, 1, -1], vec![-1, -1, 2, 1], vec![-1, 1, -1, 2]]
        );

        let w = quaternion_basis(&big(1), &big(1), &big(0), &big(0));
        assert_eq!(w.m(), &nat(2));
        assert_eq!(
            rows_of(&w),
            vec![vec![1, 1, 0, 0], vec![-1, 1, 0, 0], vec![0, 0, 1, 1], vec![0, 0, -1, 1]]
        );
    }

    #[test]
    fn base_examples() {
        assert_eq!(rows_of(&base_witness(&nat(13), 2, 0).unwrap()), vec![vec![3, 2], vec![-2, 3]]);
        assert_eq!(
            rows_of(&base_witness(&nat(9), 3, 0).unwrap()),
            vec![vec![3, 0, 0], vec![0, 3, 0], vec![0, 0, 3]]
        );
        assert_eq!(
            rows_of(&base_witness(&nat(7), 2, 2).unwrap()),
            vec![vec![2, 1, 1, 1], vec![-1, 2, 1, -1]]
        );
        assert!(matches!(
            base_witness(&nat(3), 2, 1),
            Err(Error::NotMember { d: 2, n: 3, .. })
        ));
    }

    #[test]
    fn base_pads_trailing_columns() {
        let w = base_witness(&nat(7), 1, 5).unwrap();
        assert_eq!(rows_of(&w), vec![vec![2, 1, 1, 1, 0, 0]]);
        let w = base_witness(&nat(2), 2, 6).unwrap();
        assert_eq!(w.n(), 8);
        assert!(verify_witness(&w).valid);
    }

    #[test]
    fn construct_examples() {
        assert_eq!(construct_witness(&nat(13), pair(2, 2)).unwrap(), square_13());

        let w = construct_witness(&nat(2), pair(5, 6)).unwrap();
        assert_eq!(
            rows_of(&w),
            vec![
                vec![1, 1, 0, 0, 0, 0],
                vec![0, 0, 1, 1, 0, 0],
                vec![0, 0, -1, 1, 0, 0],
                vec![0, 0, 0, 0, 1, 1],
                vec![0, 0, 0, 0, -1, 1],
            ]
        );
        assert!(verify_witness(&w).valid);

        let w = construct_witness(&nat(0), pair(3, 5)).unwrap();
        assert_eq!(rows_of(&w), vec![vec![0; 5]; 3]);
        assert!(verify_witness(&w).valid);

        match construct_witness(&nat(7), pair(3, 3)) {
            Err(Error::NotMember { reason, .. }) => {
                assert!(matches!(reason, crate::classify::Refutation::NotSquare { .. }))
            }
            other => panic!("expected NotMember, got {other:?}"),
        }
    }

    #[test]
    fn verify_examples() {
        assert!(verify_witness(&square_13()).valid);

        let bad = CubeWitness::new(
            nat(3),
            3,
            vec![LatticeVector::from_i64s(&[1, 1, 1]), LatticeVector::from_i64s(&[1, -1, 0])],
        )
        .unwrap();
        let report = verify_witness(&bad);
        assert!(!report.valid);
        assert_eq!(report.norm_deviations, vec![big(0), big(-1)]);
        assert_eq!(report.dot_products, vec![PairProduct { i: 0, j: 1, value: big(0) }]);
    }

    #[test]
    fn witness_shape_is_checked() {
        assert!(matches!(
            CubeWitness::new(nat(1), 2, vec![LatticeVector::from_i64s(&[1, 0, 0])]),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        ));
        assert!(CubeWitness::new(nat(1), 2, vec![]).is_err());
    }

    #[test]
    fn expand_examples() {
        let vertices = expand_cube(&square_13(), &LatticeVector::zeros(2)).unwrap();
        let got: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
        assert_eq!(got, ["(0,0)", "(3,2)", "(-2,3)", "(1,5)"]);

        let seg = CubeWitness::new(nat(14), 3, vec![LatticeVector::from_i64s(&[1, 2, 3])]).unwrap();
        let got = expand_cube(&seg, &LatticeVector::zeros(3)).unwrap();
        assert_eq!(got, vec![LatticeVector::zeros(3), LatticeVector::from_i64s(&[1, 2, 3])]);

        let q = quaternion_basis(&big(1), &big(1), &big(0), &big(0));
        let vs = expand_cube(&q, &LatticeVector::zeros(4)).unwrap();
        assert_eq!(vs.len(), 16);
        let distinct: std::collections::BTreeSet<_> = vs.iter().collect();
        assert_eq!(distinct.len(), 16);
        for a in &vs {
            for b in &vs {
                if a == b {
                    continue;
                }
                let diff: Vec<BigInt> = a.coords().iter().zip(b.coords()).map(|(x, y)| x - y).collect();
                let dist = LatticeVector::new(diff).norm_squared();
                assert!([2, 4, 6, 8].map(big).contains(&dist), "{dist}");
            }
        }

        assert!(matches!(
            expand_cube(&square_13(), &LatticeVector::zeros(3)),
            Err(Error::DimensionMismatch { .. })
        ));
        let huge = construct_witness(&nat(1), pair(21, 21)).unwrap();
        assert!(matches!(
            expand_cube(&huge, &LatticeVector::zeros(21)),
            Err(Error::TooLarge { d: 21, .. })
        ));
    }

    #[test]
    fn expanded_distances_follow_binomial_pattern() {
        let w = construct_witness(&nat(6), pair(5, 7)).unwrap();
        let anchor = LatticeVector::from_i64s(&[1, -2, 3, 0, 0, 5, 7]);
        let vs = expand_cube(&w, &anchor).unwrap();
        assert_eq!(vs.len(), 32);
        let mut counts = [0usize; 6];
        for v in &vs {
            let diff: Vec<BigInt> = v.coords().iter().zip(anchor.coords()).map(|(x, y)| x - y).collect();
            let dist = LatticeVector::new(diff).norm_squared();
            let k = i64::try_from(&dist).unwrap() / 6;
            assert_eq!(dist, big(6 * k));
            counts[k as usize] += 1;
        }
        assert_eq!(counts, [1, 5, 10, 10, 5, 1]);
    }

    #[test]
    fn text_round_trip() {
        let w = construct_witness(&nat(13), pair(2, 2)).unwrap();
        let text = w.to_text();
        assert_eq!(text, "2 2 13\n3 2\n-2 3\n");
        assert_eq!(CubeWitness::parse(&text).unwrap(), w);
    }

    #[test]
    fn parse_errors_report_position() {
        let err = CubeWitness::parse("2 2 13\n3 2\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse { line: 3, column: 1, message: "expected 2 rows, found 1".into() }
        );
        let err = CubeWitness::parse("2 2 13\n3 x\n-2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 3, .. }));
        let err = CubeWitness::parse("2 2 13\n3 2 1\n-2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 5, .. }));
        assert!(matches!(CubeWitness::parse(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(CubeWitness::parse("3 2 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            CubeWitness::parse("1 1 1\n1\n1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(CubeWitness::parse("1 1 1\n+1\n").is_err());
    }

    proptest! {
        #[test]
        fn quaternion_rows_are_orthogonal(
            a in -100i64..=100, b in -100i64..=100, c in -100i64..=100, d in -100i64..=100
        ) {
            let w = quaternion_basis(&big(a), &big(b), &big(c), &big(d));
            let m = (a * a + b * b + c * c + d * d) as u64;
            prop_assert_eq!(w.m(), &nat(m));
            prop_assert!(verify_witness(&w).valid);
        }

        #[test]
        fn witness_text_round_trips(m in 0u64..500, d in 1usize..7, extra in 0usize..4) {
            let p = pair(d, d + extra);
            if let Ok(w) = construct_witness(&nat(m), p) {
                let text = w.to_text();
                let back = CubeWitness::parse(&text).unwrap();
                prop_assert_eq!(back.to_text(), text);
                prop_assert_eq!(back, w);
            }
        }
    }

    #[test]
    fn construction_matches_classification() {
        for n in 1..=12 {
            for d in 1..=n {
                for m in 0..=100u64 {
                    let member = is_member(&nat(m), pair(d, n)).member;
                    match construct_witness(&nat(m), pair(d, n)) {
                        Ok(w) => {
                            assert!(member, "constructed a non-member ({m}, {d}, {n})");
                            assert_eq!((w.d(), w.n()), (d, n));
                            assert!(verify_witness(&w).valid, "({m}, {d}, {n})");
                        }
                        Err(Error::NotMember { .. }) => assert!(!member),
                        Err(e) => panic!("unexpected error {e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn block_extension_shifts_dimensions() {
        for n in 1..=8 {
            for d in 1..=n {
                for m in [0u64, 1, 2, 5, 9, 13, 25, 50] {
                    if let Ok(w) = construct_witness(&nat(m), pair(d, n)) {
                        let ext = block_extend(&w);
                        assert_eq!((ext.d(), ext.n()), (d + 4, n + 4));
                        assert!(verify_witness(&ext).valid);
                    }
                }
            }
        }
    }
}
