//! Shift-level algebra of graded free modules and Betti tables.
//!
//! A free module `⊕ R(-a_i)` is represented by the multiset of its twists
//! `a_i`, kept sorted ascending; a resolution of a cyclic module by the list
//! of those multisets. No maps are stored, only shifts.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::util::binom;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BettiError {
    #[error("not a submodule: shift {0} has insufficient multiplicity")]
    NotSubmodule(i64),
    #[error("hilbert function negative at degree {0}: table is not a resolution of a cyclic module")]
    NegativeValue(i64),
    #[error("cannot cancel {count} copies of shift {shift} at homological index {index}")]
    CannotCancel { index: usize, shift: i64, count: usize },
    #[error("cancel count must be positive")]
    CountZero,
    #[error("homological index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("table has {got} modules but codim {codim}")]
    ModuleCountMismatch { codim: usize, got: usize },
    #[error("codim must be >= 1")]
    BadCodim,
}

/// Multiset of twist degrees of a graded free module `⊕ R(-a_i)`.
///
/// Canonical form is sorted ascending; the empty multiset is the zero module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FreeModuleShifts(Vec<i64>);

impl FreeModuleShifts {
    pub fn new(mut shifts: Vec<i64>) -> Self {
        shifts.sort_unstable();
        FreeModuleShifts(shifts)
    }

    pub fn empty() -> Self {
        FreeModuleShifts(Vec::new())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn multiplicity(&self, a: i64) -> usize {
        self.0.iter().filter(|&&x| x == a).count()
    }

    /// `F^∨(-d)`: the multiset `{d - a}`. An involution for fixed `d`.
    pub fn dual_twist(&self, d: i64) -> Self {
        Self::new(self.0.iter().map(|a| d - a).collect())
    }

    /// `F(-e)` at shift level: add `e` to every twist.
    pub fn twisted(&self, e: i64) -> Self {
        Self::new(self.0.iter().map(|a| a + e).collect())
    }

    /// Multiset union.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self::new(v)
    }

    pub fn is_submultiset_of(&self, other: &Self) -> bool {
        // both sorted: two-pointer sweep
        let mut it = other.0.iter();
        'outer: for &a in &self.0 {
            for &b in it.by_ref() {
                if b == a {
                    continue 'outer;
                }
                if b > a {
                    return false;
                }
            }
            return false;
        }
        true
    }

    /// Multiset difference; `other` must be a sub-multiset of `self`.
    pub fn subtract(&self, other: &Self) -> Result<Self, BettiError> {
        let mut v = self.0.clone();
        for &a in &other.0 {
            match v.iter().position(|&x| x == a) {
                Some(i) => {
                    v.remove(i);
                }
                None => return Err(BettiError::NotSubmodule(a)),
            }
        }
        Ok(FreeModuleShifts(v))
    }

    pub fn min_shift(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn max_shift(&self) -> Option<i64> {
        self.0.last().copied()
    }
}

impl FromIterator<i64> for FreeModuleShifts {
    fn from_iter<T: IntoIterator<Item = i64>>(iter: T) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub codim: usize,
    /// `F[k]` holds the shifts of `F_{k+1}`; `F_0 = R` is implicit.
    #[serde(rename = "F")]
    pub modules: Vec<FreeModuleShifts>,
}

impl BettiTable {
    pub fn new(codim: usize, modules: Vec<FreeModuleShifts>) -> Result<Self, BettiError> {
        if codim == 0 {
            return Err(BettiError::BadCodim);
        }
        if modules.len() != codim {
            return Err(BettiError::ModuleCountMismatch {
                codim,
                got: modules.len(),
            });
        }
        Ok(BettiTable { codim, modules })
    }

    /// Koszul table of a complete intersection of the given degrees.
    pub fn koszul(degrees: &[i64]) -> Self {
        let c = degrees.len();
        let mut modules = Vec::with_capacity(c);
        for i in 1..=c {
            let mut shifts = Vec::new();
            // sums of all i-element subsets of the degrees
            subset_sums(degrees, i, &mut shifts);
            modules.push(FreeModuleShifts::new(shifts));
        }
        BettiTable { codim: c, modules }
    }

    /// 1-based access: `module(0)` is the implicit `R`, `module(i)` is `F_i`.
    pub fn module(&self, i: usize) -> FreeModuleShifts {
        if i == 0 {
            FreeModuleShifts::new(vec![0])
        } else {
            self.modules[i - 1].clone()
        }
    }

    /// `1 - rank F_1 + rank F_2 - ...`; zero for resolutions of cyclic modules.
    pub fn rank_alternating_sum(&self) -> i64 {
        let mut acc = 1i64;
        let mut sign = -1i64;
        for m in &self.modules {
            acc += sign * m.rank() as i64;
            sign = -sign;
        }
        acc
    }

    /// `0 - Σ F_1 + Σ F_2 - ...`; zero for minimal tables.
    pub fn shift_alternating_sum(&self) -> i64 {
        let mut acc = 0i64;
        let mut sign = -1i64;
        for m in &self.modules {
            acc += sign * m.sum();
            sign = -sign;
        }
        acc
    }

    pub fn max_shift(&self) -> i64 {
        self.modules
            .iter()
            .filter_map(|m| m.max_shift())
            .max()
            .unwrap_or(0)
    }

    /// Hilbert function of `R/I` read off the table by the alternating
    /// binomial formula, over `c` ambient variables (artinian case).
    pub fn hilbert_function(&self, j: i64) -> Result<i64, BettiError> {
        let c = self.codim as i64;
        let mut acc = binom(j + c - 1, c - 1);
        let mut sign = -1i64;
        for m in &self.modules {
            for &a in m.shifts() {
                acc += sign * binom(j - a + c - 1, c - 1);
            }
            sign = -sign;
        }
        if acc < 0 {
            return Err(BettiError::NegativeValue(j));
        }
        Ok(acc)
    }

    /// Hilbert function values from degree 0 through extinction.
    pub fn hilbert_vector(&self) -> Result<Vec<i64>, BettiError> {
        let top = self.max_shift() - self.codim as i64;
        let mut out = Vec::new();
        for j in 0..=top.max(0) {
            out.push(self.hilbert_function(j)?);
        }
        Ok(out)
    }

    /// Remove `count` copies of shift `a` from `F_i` and `F_{i+1}`
    /// (a formal cancellation; semantic validity is the caller's burden).
    pub fn cancel(&self, i: usize, a: i64, count: usize) -> Result<Self, BettiError> {
        if count == 0 {
            return Err(BettiError::CountZero);
        }
        if i == 0 || i >= self.codim {
            return Err(BettiError::IndexOutOfRange(i));
        }
        for idx in [i, i + 1] {
            if self.modules[idx - 1].multiplicity(a) < count {
                return Err(BettiError::CannotCancel {
                    index: i,
                    shift: a,
                    count,
                });
            }
        }
        let removal = FreeModuleShifts::new(vec![a; count]);
        let mut modules = self.modules.clone();
        modules[i - 1] = modules[i - 1].subtract(&removal)?;
        modules[i] = modules[i].subtract(&removal)?;
        Ok(BettiTable {
            codim: self.codim,
            modules,
        })
    }

    /// Greedily cancel every shift common to adjacent modules. The result is
    /// only "formally minimalized": formal cancellation can differ from the
    /// true minimal table of an actual ideal.
    pub fn formally_minimalize(&self) -> Self {
        let mut table = self.clone();
        loop {
            let mut changed = false;
            for i in 1..table.codim {
                let common: Vec<i64> = table.modules[i - 1]
                    .shifts()
                    .iter()
                    .copied()
                    .filter(|&a| table.modules[i].multiplicity(a) > 0)
                    .collect();
                if let Some(&a) = common.first() {
                    table = table.cancel(i, a, 1).expect("common shift cancels");
                    changed = true;
                    break;
                }
            }
            if !changed {
                return table;
            }
        }
    }
}

fn subset_sums(degrees: &[i64], k: usize, out: &mut Vec<i64>) {
    fn rec(degrees: &[i64], k: usize, start: usize, acc: i64, out: &mut Vec<i64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..degrees.len() {
            rec(degrees, k - 1, i + 1, acc + degrees[i], out);
        }
    }
    rec(degrees, k, 0, 0, out);
}
