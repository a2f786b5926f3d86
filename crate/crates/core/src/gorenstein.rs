//! Codimension-3 Gorenstein degree sequences: validation against the Gaeta
//! conditions, the self-dual Betti table, and the `min(δ)` provider interface.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::shifts::{BettiTable, FreeModuleShifts};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GorensteinError {
    #[error("degree sequence must have odd length >= 3, got {0}")]
    NotOddLength(usize),
    #[error("degrees must be positive")]
    NotPositive,
    #[error("theta = (1/n) sum of degrees is not an integer")]
    ThetaNotIntegral,
    #[error("Gaeta condition fails at i = {0}: theta <= d_i + d_(2n+3-i)")]
    GaetaViolation(usize),
}

/// Sorted odd-length tuple of candidate generator degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<i64>);

impl DegreeSequence {
    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `n` with length `2n + 1`.
    pub fn n(&self) -> usize {
        (self.0.len() - 1) / 2
    }
}

/// A validated degree sequence together with its socle shift `ϑ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinShape {
    pub delta: DegreeSequence,
    pub theta: i64,
}

/// Checks that a raw tuple is the generator-degree sequence of a codim-3
/// Gorenstein ideal: odd length, integral `ϑ = (1/n) Σ d_i`, and the strict
/// Gaeta inequalities `ϑ > d_i + d_{2n+3-i}` for `2 <= i <= n`.
///
/// Unsorted input is sorted, not rejected.
pub fn validate_degree_sequence(raw: &[i64]) -> Result<GorensteinShape, GorensteinError> {
    let mut degrees = raw.to_vec();
    degrees.sort_unstable();
    let len = degrees.len();
    if len < 3 || len % 2 == 0 {
        return Err(GorensteinError::NotOddLength(len));
    }
    if degrees.first().copied().unwrap_or(0) < 1 {
        return Err(GorensteinError::NotPositive);
    }
    let n = ((len - 1) / 2) as i64;
    let total: i64 = degrees.iter().sum();
    if total % n != 0 {
        return Err(GorensteinError::ThetaNotIntegral);
    }
    let theta = total / n;
    // 1-based: d_i + d_{2n+3-i} < theta for 2 <= i <= n (vacuous when n = 1)
    for i in 2..=(n as usize) {
        let lhs = degrees[i - 1] + degrees[2 * n as usize + 2 - i];
        if theta <= lhs {
            return Err(GorensteinError::GaetaViolation(i));
        }
    }
    Ok(GorensteinShape {
        delta: DegreeSequence(degrees),
        theta,
    })
}

/// Self-dual codim-3 Gorenstein table: `F_1 = {d_i}`, `F_2 = {ϑ - d_i}`,
/// `F_3 = {ϑ}`.
pub fn gorenstein_betti_table(shape: &GorensteinShape) -> BettiTable {
    let f1 = FreeModuleShifts::new(shape.delta.degrees().to_vec());
    let f2 = f1.dual_twist(shape.theta);
    let f3 = FreeModuleShifts::new(vec![shape.theta]);
    BettiTable::new(3, vec![f1, f2, f3]).expect("three modules, codim 3")
}

/// Componentwise upper-bound box used by the characterization checker:
/// condition 3 of the parity theorems asks whether `min(δ)` lies in a
/// downward-closed box, so any certified member of `CI_δ` inside the box is
/// a sound witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Box3 {
    pub max: [i64; 3],
    /// strict[i] = true means the bound at coordinate i is `<`, else `<=`.
    pub strict: [bool; 3],
}

impl Box3 {
    pub fn contains(&self, m: [i64; 3]) -> bool {
        (0..3).all(|i| if self.strict[i] { m[i] < self.max[i] } else { m[i] <= self.max[i] })
    }
}

/// Answer of a `min(δ)` query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinAnswer {
    /// The exact minimal element of `CI_δ`.
    Exact([i64; 3]),
    /// A certified member of `CI_δ`, minimal only as far as the search went.
    Probable([i64; 3]),
    Unknown,
}

/// Certified answer for "does `min(δ)` lie in this box".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxWitness {
    /// A certified member of `CI_δ` inside the box.
    Yes([i64; 3]),
    /// Certified: no member of `CI_δ` lies in the box.
    No,
    Unknown,
}

/// Oracle for `min(δ)`, the unique minimal element of `CI_δ`. The explicit
/// formula lives in external work and is deliberately not implemented here;
/// providers either know the complete-intersection case exactly or search.
pub trait MinProvider: Sync {
    fn min_ci(&self, shape: &GorensteinShape) -> MinAnswer;

    /// Decide whether `min(δ)` lies in the (downward-closed) box. The default
    /// derives the answer from `min_ci`; searching providers may do better.
    fn witness_within(&self, shape: &GorensteinShape, bounds: &Box3) -> BoxWitness {
        match self.min_ci(shape) {
            MinAnswer::Exact(m) => {
                if bounds.contains(m) {
                    BoxWitness::Yes(m)
                } else {
                    BoxWitness::No
                }
            }
            MinAnswer::Probable(m) => {
                if bounds.contains(m) {
                    BoxWitness::Yes(m)
                } else {
                    BoxWitness::Unknown
                }
            }
            MinAnswer::Unknown => BoxWitness::Unknown,
        }
    }
}

/// Built-in provider: answers `(d_1, d_2, d_3)` in the complete-intersection
/// case `n = 1` and `Unknown` otherwise.
#[derive(Debug, Default, Clone, Copy)]
pub struct CiMinProvider;

impl MinProvider for CiMinProvider {
    fn min_ci(&self, shape: &GorensteinShape) -> MinAnswer {
        if shape.delta.n() == 1 {
            let d = shape.delta.degrees();
            MinAnswer::Exact([d[0], d[1], d[2]])
        } else {
            MinAnswer::Unknown
        }
    }
}

/// Delegation entry point for `min(δ)`.
pub fn min_ci(shape: &GorensteinShape, provider: &dyn MinProvider) -> MinAnswer {
    let ans = provider.min_ci(shape);
    if let MinAnswer::Exact(m) | MinAnswer::Probable(m) = ans {
        // no regular sequence below the initial degree
        debug_assert!(m[0] >= shape.delta.degrees()[0]);
    }
    ans
}
