//! Recognition and characterization of codimension-3 almost complete
//! intersection Betti tables: the parity-split shape, extraction of the
//! invariant `d*`, and the iff conditions tying a candidate table to the
//! linked Gorenstein degree sequence.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gorenstein::{
    validate_degree_sequence, Box3, BoxWitness, DegreeSequence, GorensteinError, MinProvider,
};
use crate::shifts::{BettiError, BettiTable, FreeModuleShifts};
use crate::util::ord;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AciError {
    #[error("not ACI ranks: expected codim 3, rank F1 = 4, rank F2 = t + 3, rank F3 = t >= 2; got F1 = {f1}, F2 = {f2}, F3 = {f3}")]
    NotAciRanks { f1: usize, f2: usize, f3: usize },
    #[error("parity formula for d* yields a non-integer")]
    NonIntegralDstar,
    #[error("parity formula for d* yields {0} <= 0")]
    NonPositiveDstar(i64),
    #[error("F3 dual (twist {0}) is not a sub-multiset of F2")]
    DualNotEmbedded(i64),
    #[error("d* = {0} does not occur among the generator degrees F1")]
    DstarNotAGenerator(i64),
    #[error("F2' mismatch: expected shift {expected} from the parity shape, found {found:?}")]
    F2PrimeMismatch { expected: i64, found: Option<i64> },
    #[error("sum identity of the parity shape fails: sum s = {got}, required {required}")]
    SumIdentityViolation { got: i64, required: i64 },
    #[error("tail shift {0} is below homological degree 3")]
    TailShiftTooSmall(i64),
    #[error("type t = {0} < 2")]
    TypeTooSmall(usize),
    #[error("linked degree sequence invalid: {0}")]
    LinkedSequenceInvalid(GorensteinError),
    #[error(transparent)]
    Betti(#[from] BettiError),
}

/// Canonical numerical data of a codim-3 ACI resolution:
/// `(d_1 <= d_2 <= d_3, d*, s_1 <= ... <= s_t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AciShape {
    pub d: [i64; 3],
    pub dstar: i64,
    pub s: Vec<i64>,
}

impl AciShape {
    pub fn new(d: [i64; 3], dstar: i64, s: Vec<i64>) -> Result<Self, AciError> {
        let shape = AciShape { d, dstar, s: ord(&s) };
        if shape.t() < 2 {
            return Err(AciError::TypeTooSmall(shape.t()));
        }
        if dstar <= 0 {
            return Err(AciError::NonPositiveDstar(dstar));
        }
        let required = shape.required_s_sum();
        let got = shape.s_q();
        if got != required {
            return Err(AciError::SumIdentityViolation { got, required });
        }
        for &si in &shape.s {
            if shape.dtotal() - si < 3 {
                return Err(AciError::TailShiftTooSmall(shape.dtotal() - si));
            }
        }
        Ok(shape)
    }

    /// Cohen-Macaulay type `t = rank F_3`.
    pub fn t(&self) -> usize {
        self.s.len()
    }

    pub fn t_even(&self) -> bool {
        self.t() % 2 == 0
    }

    /// `d = d_1 + d_2 + d_3 + d*`.
    pub fn dtotal(&self) -> i64 {
        self.d.iter().sum::<i64>() + self.dstar
    }

    /// `s_Q = Σ s_i`.
    pub fn s_q(&self) -> i64 {
        self.s.iter().sum()
    }

    /// Value of `s_Q` forced by the parity sum identity.
    pub fn required_s_sum(&self) -> i64 {
        let t = self.t() as i64;
        let d = self.dtotal();
        if self.t_even() {
            d * t / 2 - self.dstar
        } else {
            d * (t - 1) / 2 + self.dstar
        }
    }

    /// `u_Q = s_(2) + s_(3) - t d`.
    pub fn u(&self) -> i64 {
        if self.t_even() {
            self.dtotal() + 2 * self.dstar
        } else {
            2 * (self.dtotal() - self.dstar)
        }
    }

    /// The Betti table prescribed by the parity-split shape.
    pub fn build_table(&self) -> BettiTable {
        let d = self.dtotal();
        let mut f1 = vec![self.dstar, self.d[0], self.d[1], self.d[2]];
        f1.sort_unstable();
        let mut f2 = self.f2_prime_shifts();
        f2.extend_from_slice(&self.s);
        let f3: Vec<i64> = self.s.iter().map(|si| d - si).collect();
        BettiTable::new(
            3,
            vec![
                FreeModuleShifts::new(f1),
                FreeModuleShifts::new(f2),
                FreeModuleShifts::new(f3),
            ],
        )
        .expect("codim 3")
    }

    /// Shifts of `F_2'`: `{d_i + d*}` when `t` is even, `{d_i + d_j}` when odd.
    pub fn f2_prime_shifts(&self) -> Vec<i64> {
        if self.t_even() {
            self.d.iter().map(|di| di + self.dstar).collect()
        } else {
            vec![
                self.d[0] + self.d[1],
                self.d[0] + self.d[2],
                self.d[1] + self.d[2],
            ]
        }
    }

    /// The extended sorted tuple `s'` of the parity theorems.
    pub fn sprime(&self) -> Vec<i64> {
        let mut v = self.s.clone();
        if self.t_even() {
            v.push(self.dstar + self.d[0]);
        } else {
            v.push(self.d[0] + self.d[1]);
            v.push(self.d[0] + self.d[2]);
        }
        ord(&v)
    }

    /// `p(d*)`: which slot `d*` takes among `(d_2, d_3)`.
    pub fn p(&self) -> usize {
        if self.dstar <= self.d[1] {
            1
        } else if self.dstar <= self.d[2] {
            2
        } else {
            3
        }
    }

    /// `(e_1, e_2, e_3) = ord(d*, d_2, d_3)`.
    pub fn e(&self) -> [i64; 3] {
        let v = ord(&[self.dstar, self.d[1], self.d[2]]);
        [v[0], v[1], v[2]]
    }
}

/// The duality split of `F_2` plus the derived tuples of the parity theorems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeDecomposition {
    pub shape: AciShape,
    /// `F_3^∨(-d)`, embedded in `F_2`.
    pub f2_dual_part: FreeModuleShifts,
    /// `F_2' = F_2 - F_3^∨(-d)`.
    pub f2_prime: FreeModuleShifts,
    pub sprime: Vec<i64>,
    pub p: usize,
    pub e: [i64; 3],
}

impl ShapeDecomposition {
    /// Decomposition data computed from a shape alone (no table needed);
    /// used when the shape is already trusted.
    pub fn from_shape(shape: AciShape) -> Self {
        let d = shape.dtotal();
        let f2_dual_part = FreeModuleShifts::new(shape.s.clone());
        let f2_prime = FreeModuleShifts::new(shape.f2_prime_shifts());
        let sprime = shape.sprime();
        let p = shape.p();
        let e = shape.e();
        debug_assert_eq!(
            f2_dual_part,
            FreeModuleShifts::new(shape.s.iter().map(|si| d - (d - si)).collect::<Vec<_>>())
        );
        ShapeDecomposition {
            shape,
            f2_dual_part,
            f2_prime,
            sprime,
            p,
            e,
        }
    }
}

/// Raw numbers read off a candidate table before the full decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DstarData {
    pub dstar: i64,
    pub u: i64,
    pub t: usize,
    pub d: i64,
}

/// Extract `(d*, u, t)` from a codim-3 table with ACI ranks
/// (rank F1 = 4, rank F2 = t + 3, rank F3 = t).
pub fn extract_dstar(table: &BettiTable) -> Result<DstarData, AciError> {
    let ranks = (
        table.codim,
        table.modules.first().map(|m| m.rank()).unwrap_or(0),
        table.modules.get(1).map(|m| m.rank()).unwrap_or(0),
        table.modules.get(2).map(|m| m.rank()).unwrap_or(0),
    );
    let (codim, r1, r2, r3) = ranks;
    if codim != 3 || r1 != 4 || r3 < 2 || r2 != r3 + 3 {
        return Err(AciError::NotAciRanks { f1: r1, f2: r2, f3: r3 });
    }
    let t = r3;
    let d = table.modules[0].sum();
    let u = table.modules[1].sum() + table.modules[2].sum() - t as i64 * d;
    let twice_dstar = if t % 2 == 0 { u - d } else { 2 * d - u };
    if twice_dstar % 2 != 0 {
        return Err(AciError::NonIntegralDstar);
    }
    let dstar = twice_dstar / 2;
    if dstar <= 0 {
        return Err(AciError::NonPositiveDstar(dstar));
    }
    Ok(DstarData { dstar, u, t, d })
}

/// Full shape decomposition of a candidate ACI table, verifying the duality
/// embedding, the parity-prescribed `F_2'`, and the sum identity.
pub fn decompose(table: &BettiTable) -> Result<ShapeDecomposition, AciError> {
    let data = extract_dstar(table)?;
    let f2 = &table.modules[1];
    let f3 = &table.modules[2];
    let f2_dual_part = f3.dual_twist(data.d);
    if !f2_dual_part.is_submultiset_of(f2) {
        return Err(AciError::DualNotEmbedded(data.d));
    }
    let f2_prime = f2.subtract(&f2_dual_part)?;
    let f1 = &table.modules[0];
    if f1.multiplicity(data.dstar) == 0 {
        return Err(AciError::DstarNotAGenerator(data.dstar));
    }
    let ci_part = f1
        .subtract(&FreeModuleShifts::new(vec![data.dstar]))
        .expect("d* occurs in F1");
    let dvec = ci_part.shifts();
    let d = [dvec[0], dvec[1], dvec[2]];
    let s: Vec<i64> = ord(&f3.shifts().iter().map(|g| data.d - g).collect::<Vec<_>>());
    for &si in &s {
        if data.d - si < 3 {
            return Err(AciError::TailShiftTooSmall(data.d - si));
        }
    }
    // the parity-prescribed F2' must match exactly
    let prescribed = FreeModuleShifts::new(
        AciShape { d, dstar: data.dstar, s: s.clone() }.f2_prime_shifts(),
    );
    if f2_prime != prescribed {
        let found = f2_prime
            .shifts()
            .iter()
            .find(|a| f2_prime.multiplicity(**a) != prescribed.multiplicity(**a))
            .copied();
        let expected = prescribed
            .shifts()
            .iter()
            .find(|a| f2_prime.multiplicity(**a) != prescribed.multiplicity(**a))
            .copied()
            .unwrap_or(0);
        return Err(AciError::F2PrimeMismatch { expected, found });
    }
    let shape = AciShape::new(d, data.dstar, s)?;
    let mut dec = ShapeDecomposition::from_shape(shape);
    dec.f2_dual_part = f2_dual_part;
    dec.f2_prime = f2_prime;
    Ok(dec)
}

/// Why a candidate table fails the characterization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum InvalidReason {
    SumIdentity { got: i64, required: i64 },
    PairSumViolation { i: usize, lhs: i64, d: i64 },
    LinkedSequenceInvalid(String),
    MinCondition { index: usize },
    Structure(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Valid,
    Invalid(InvalidReason),
    /// The `min(δ)` question could not be answered.
    Inconclusive,
}

/// Evaluate the three iff conditions of the parity characterization theorems
/// on a decomposition. Strictness of the condition-3 inequalities differs by
/// parity exactly as stated: even `m_p <= d*`, `m_i < e_i`; odd `m_p < d*`,
/// `m_i <= e_i`.
pub fn check_characterization(
    dec: &ShapeDecomposition,
    provider: &dyn MinProvider,
) -> Verdict {
    let shape = &dec.shape;
    let d = shape.dtotal();
    let t = shape.t();

    // condition 1: parity sum identity
    let required = shape.required_s_sum();
    if shape.s_q() != required {
        return Verdict::Invalid(InvalidReason::SumIdentity {
            got: shape.s_q(),
            required,
        });
    }

    // condition 2: d > s'_i + s'_{mirror}, both directions of each pair
    let sp = &dec.sprime;
    let len = sp.len(); // t+1 even, t+2 odd
    let mirror_sum = len + 2; // t+3 resp. t+4, in 1-based indices
    for i in 2..=len {
        let j = mirror_sum - i;
        if !(1..=len).contains(&j) {
            continue;
        }
        let lhs = sp[i - 1] + sp[j - 1];
        if d <= lhs {
            return Verdict::Invalid(InvalidReason::PairSumViolation { i, lhs, d });
        }
    }

    // condition 3: min(delta_G) within the parity box
    let delta_g: Vec<i64> = sp.iter().map(|x| x - shape.d[0]).collect();
    let g_shape = match validate_degree_sequence(&delta_g) {
        Ok(s) => s,
        Err(e) => return Verdict::Invalid(InvalidReason::LinkedSequenceInvalid(e.to_string())),
    };
    let p = dec.p;
    let e = dec.e;
    let strict_at_p = !(t % 2 == 0); // even: m_p <= d*; odd: m_p < d*
    let mut max = [0i64; 3];
    let mut strict = [false; 3];
    for i in 1..=3usize {
        if i == p {
            max[i - 1] = shape.dstar;
            strict[i - 1] = strict_at_p;
        } else {
            max[i - 1] = e[i - 1];
            strict[i - 1] = !strict_at_p;
        }
    }
    match provider.witness_within(&g_shape, &Box3 { max, strict }) {
        BoxWitness::Yes(_) => Verdict::Valid,
        BoxWitness::No => Verdict::Invalid(InvalidReason::MinCondition { index: p }),
        BoxWitness::Unknown => Verdict::Inconclusive,
    }
}

/// Decompose a table and run the characterization; structural failures map
/// to `Invalid` so callers get a single verdict.
pub fn check_table(table: &BettiTable, provider: &dyn MinProvider) -> Verdict {
    match decompose(table) {
        Ok(dec) => check_characterization(&dec, provider),
        Err(AciError::SumIdentityViolation { got, required }) => {
            Verdict::Invalid(InvalidReason::SumIdentity { got, required })
        }
        Err(e) => Verdict::Invalid(InvalidReason::Structure(e.to_string())),
    }
}

/// Degrees of the linked Gorenstein ideal, its socle shift, and the
/// complete-intersection type used for the linkage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkedDegrees {
    pub delta_g: DegreeSequence,
    pub theta_g: i64,
    pub ci_type: [i64; 3],
}

/// `δ_G = (s'_i - d_1)`, `ϑ_G = d* + d_2 + d_3 - d_1`, CI type
/// `ord(d*, d_2, d_3)`. Errors if `δ_G` fails validation, signalling a
/// non-realizable input table.
pub fn linked_gorenstein_degrees(dec: &ShapeDecomposition) -> Result<LinkedDegrees, AciError> {
    let shape = &dec.shape;
    let delta_g: Vec<i64> = dec.sprime.iter().map(|x| x - shape.d[0]).collect();
    let g = validate_degree_sequence(&delta_g).map_err(AciError::LinkedSequenceInvalid)?;
    let theta_g = shape.dstar + shape.d[1] + shape.d[2] - shape.d[0];
    debug_assert_eq!(g.theta, theta_g);
    let ci = ord(&[shape.dstar, shape.d[1], shape.d[2]]);
    Ok(LinkedDegrees {
        delta_g: g.delta,
        theta_g,
        ci_type: [ci[0], ci[1], ci[2]],
    })
}
