//! Exhaustive search over `Z^n`, independent of the classification table.
//!
//! Vectors of squared norm `m` are enumerated by recursive descent on the
//! remaining norm. A `d`-frame is then searched by backtracking over
//! mutually orthogonal candidates.
//!
//! Search order: the first row runs over the sorted non-negative
//! representatives `0 ≤ x_1 ≤ … ≤ x_n` (every norm-`m` vector is one of these
//! up to a signed coordinate permutation, which preserves frames). The
//! remaining rows are sign-normalized (first non-zero entry positive) and
//! strictly increasing in lexicographic order.
//!
//! Frame counts reported by [`Oracle::census`] count *canonical frames*:
//! sets of `d` sign-normalized, pairwise orthogonal vectors of norm `m`, i.e.
//! frames up to reordering rows and negating rows. The degenerate frame of
//! zero rows counts once for `m = 0`.

use num_integer::Roots;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::classify::DimensionPair;
use crate::construct::{CubeWitness, LatticeVector};
use crate::error::{Error, Result};
use crate::exact::Natural;

/// Hard limit on the ambient dimension of a vector enumeration.
pub const MAX_ENUMERATION_DIM: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_norm: u64,
    pub max_dim: usize,
    pub max_frames: Option<u64>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_norm: 60,
            max_dim: 6,
            max_frames: Some(1_000_000),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub member: bool,
    pub witness: Option<CubeWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub m: u64,
    pub member: bool,
    pub frames: u64,
    /// `frames` hit `max_frames` and stopped counting.
    pub capped: bool,
}

type Vector = [i64; MAX_ENUMERATION_DIM];

fn dot(a: &Vector, b: &Vector) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

// All v ∈ Z^n with ‖v‖² = m, lexicographic order.
fn norm_vectors(m: i64, n: usize) -> Vec<Vector> {
    fn descend(rest: i64, pos: usize, n: usize, cur: &mut Vector, out: &mut Vec<Vector>) {
        if pos == n {
            if rest == 0 {
                out.push(*cur);
            }
            return;
        }
        let bound = rest.sqrt();
        for x in -bound..=bound {
            cur[pos] = x;
            descend(rest - x * x, pos + 1, n, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    let mut cur = [0; MAX_ENUMERATION_DIM];
    descend(m, 0, n, &mut cur, &mut out);
    out
}

fn is_sorted_nonnegative(v: &Vector, n: usize) -> bool {
    v[0] >= 0 && v[..n].windows(2).all(|w| w[0] <= w[1])
}

fn is_sign_normalized(v: &Vector, n: usize) -> bool {
    v[..n].iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

// Extends `chosen` by `need` more vectors from `cands` (indices into
// `pool`, all orthogonal to everything chosen so far), in increasing order.
fn extend_frame(pool: &[Vector], cands: &[usize], need: usize, chosen: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    if cands.len() < need {
        return false;
    }
    for (k, &i) in cands.iter().enumerate() {
        if cands.len() - k < need {
            break;
        }
        let rest: Vec<usize> = cands[k + 1..]
            .iter()
            .copied()
            .filter(|&j| dot(&pool[i], &pool[j]) == 0)
            .collect();
        chosen.push(i);
        if extend_frame(pool, &rest, need - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn count_frames(pool: &[Vector], cands: &[usize], need: usize, cap: u64, count: &mut u64) {
    if *count >= cap {
        return;
    }
    if need == 0 {
        *count += 1;
        return;
    }
    for (k, &i) in cands.iter().enumerate() {
        if cands.len() - k < need || *count >= cap {
            break;
        }
        let rest: Vec<usize> = cands[k + 1..]
            .iter()
            .copied()
            .filter(|&j| dot(&pool[i], &pool[j]) == 0)
            .collect();
        count_frames(pool, &rest, need - 1, cap, count);
    }
}

/// Brute-force ground truth for cube membership.
#[derive(Clone, Debug, Default)]
pub struct Oracle {
    budget: SearchBudget,
    parallel: bool,
}

impl Oracle {
    pub fn new(budget: SearchBudget) -> Self {
        Oracle {
            budget,
            parallel: false,
        }
    }

    /// Fans the first-row candidates out over the current rayon pool.
    /// Results are identical to the sequential search.
    pub fn parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    pub fn budget(&self) -> &SearchBudget {
        &self.budget
    }

    fn check_norm(&self, m: &Natural) -> Result<i64> {
        match m.to_u64() {
            Some(v) if v <= self.budget.max_norm => Ok(v as i64),
            _ => Err(Error::BudgetExceeded(format!(
                "m = {m} exceeds max norm {}",
                self.budget.max_norm
            ))),
        }
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n > self.budget.max_dim {
            return Err(Error::BudgetExceeded(format!(
                "n = {n} exceeds max dimension {}",
                self.budget.max_dim
            )));
        }
        Ok(())
    }

    /// Every `v ∈ Z^n` with `‖v‖² = m`, in lexicographic order.
    pub fn enumerate_norm_vectors(&self, m: &Natural, n: usize) -> Result<Vec<LatticeVector>> {
        if n == 0 || n > MAX_ENUMERATION_DIM {
            return Err(Error::BudgetExceeded(format!(
                "vector enumeration supports 1 <= n <= {MAX_ENUMERATION_DIM}, got {n}"
            )));
        }
        let m = self.check_norm(m)?;
        Ok(norm_vectors(m, n)
            .iter()
            .map(|v| LatticeVector::from_i64s(&v[..n]))
            .collect())
    }

    /// All ordered pairs `(v, w)` of orthogonal vectors with `‖v‖² = ‖w‖² = m`.
    pub fn orthogonal_pairs(&self, m: &Natural, n: usize) -> Result<Vec<(LatticeVector, LatticeVector)>> {
        let vs = self.enumerate_norm_vectors(m, n)?;
        let mut out = Vec::new();
        for v in &vs {
            for w in &vs {
                if v.dot(w) == num_bigint::BigInt::from(0) {
                    out.push((v.clone(), w.clone()));
                }
            }
        }
        Ok(out)
    }

    fn search(&self, m: i64, d: usize, n: usize) -> Option<Vec<Vector>> {
        if m == 0 {
            return Some(vec![[0; MAX_ENUMERATION_DIM]; d]);
        }
        let all = norm_vectors(m, n);
        let roots: Vec<&Vector> = all.iter().filter(|v| is_sorted_nonnegative(v, n)).collect();
        let pool: Vec<Vector> = all.iter().copied().filter(|v| is_sign_normalized(v, n)).collect();

        let try_root = |root: &&Vector| -> Option<Vec<Vector>> {
            let cands: Vec<usize> = (0..pool.len()).filter(|&j| dot(root, &pool[j]) == 0).collect();
            let mut chosen = Vec::with_capacity(d - 1);
            extend_frame(&pool, &cands, d - 1, &mut chosen).then(|| {
                std::iter::once(**root)
                    .chain(chosen.iter().map(|&i| pool[i]))
                    .collect()
            })
        };
        if self.parallel {
            roots.par_iter().find_map_first(try_root)
        } else {
            roots.iter().find_map(try_root)
        }
    }

    /// Whether a `d`-frame of norm `m` exists in `Z^n`, with the first one in
    /// search order as witness.
    pub fn oracle_is_member(&self, m: &Natural, p: DimensionPair) -> Result<OracleVerdict> {
        self.check_dim(p.n())?;
        let mv = self.check_norm(m)?;
        let n = p.n();
        Ok(match self.search(mv, p.d(), n) {
            Some(frame) => {
                let rows = frame.iter().map(|v| LatticeVector::from_i64s(&v[..n])).collect();
                OracleVerdict {
                    member: true,
                    witness: Some(CubeWitness::new(m.clone(), n, rows)?),
                }
            }
            None => OracleVerdict {
                member: false,
                witness: None,
            },
        })
    }

    /// Number of canonical frames, stopping at `cap`.
    pub fn count_frames(&self, m: &Natural, p: DimensionPair, cap: u64) -> Result<u64> {
        self.check_dim(p.n())?;
        let mv = self.check_norm(m)?;
        if mv == 0 {
            return Ok(1.min(cap));
        }
        let n = p.n();
        let pool: Vec<Vector> = norm_vectors(mv, n)
            .into_iter()
            .filter(|v| is_sign_normalized(v, n))
            .collect();
        let d = p.d();
        if self.parallel {
            // Count per first row, then merge in order so the cap applies
            // exactly as in the sequential walk.
            let per_root: Vec<u64> = (0..pool.len())
                .into_par_iter()
                .map(|i| {
                    let rest: Vec<usize> = (i + 1..pool.len())
                        .filter(|&j| dot(&pool[i], &pool[j]) == 0)
                        .collect();
                    let mut count = 0;
                    count_frames(&pool, &rest, d - 1, cap, &mut count);
                    count
                })
                .collect();
            Ok(per_root.iter().fold(0u64, |acc, c| (acc + c).min(cap)))
        } else {
            let all: Vec<usize> = (0..pool.len()).collect();
            let mut count = 0;
            count_frames(&pool, &all, d, cap, &mut count);
            Ok(count)
        }
    }

    /// Oracle verdict and capped canonical frame count for every `0 ≤ m ≤ m_max`.
    pub fn census(&self, d: usize, n: usize, m_max: u64) -> Result<Vec<CensusRow>> {
        let p = DimensionPair::new(d, n)?;
        self.check_dim(n)?;
        self.check_norm(&Natural::from(m_max))?;
        let cap = self.budget.max_frames.unwrap_or(u64::MAX);
        (0..=m_max)
            .map(|m| {
                let nat = Natural::from(m);
                let member = self.oracle_is_member(&nat, p)?.member;
                // One past the cap tells an exact count of `cap` from a cut-off one.
                let frames = if member {
                    self.count_frames(&nat, p, cap.saturating_add(1))?
                } else {
                    0
                };
                debug_assert_eq!(member, frames > 0);
                Ok(CensusRow {
                    m,
                    member,
                    frames: frames.min(cap),
                    capped: frames > cap,
                })
            })
            .collect()
    }
}

/// Converts oracle rows back to machine integers (test helper for small inputs).
pub fn to_i64_rows(w: &CubeWitness) -> Vec<Vec<i64>> {
    w.rows()
        .iter()
        .map(|r| r.coords().iter().map(|c| c.to_i64().expect("small entry")).collect())
        .collect()
}
