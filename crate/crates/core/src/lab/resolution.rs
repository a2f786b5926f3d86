//! Minimal free resolution of an artinian quotient over F_p, computed as
//! Koszul homology: `beta_{i,j} = dim H_i(K(x,y,z) ⊗ R/I)_j`. Each graded
//! strand is a four-term complex of small dense matrices.

use super::fp::{Echelon, PrimeField};
use super::ideal::GradedIdealFp;
use super::poly::{mono_count, var_shift, HPoly};
use super::LabError;
use crate::shifts::{BettiTable, FreeModuleShifts};
use crate::util::binom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Quotient-space data for one degree: echelon of `I_j` plus the standard
/// (non-pivot) monomial positions giving a basis of `(R/I)_j`.
struct QuotientPiece {
    ech: Echelon,
    std_cols: Vec<usize>,
}

impl QuotientPiece {
    fn dim(&self) -> usize {
        self.std_cols.len()
    }

    /// Coordinates of a full-space vector in the quotient basis.
    fn coords(&self, mut v: Vec<u64>) -> Vec<u64> {
        self.ech.reduce(&mut v);
        self.std_cols.iter().map(|&c| v[c]).collect()
    }
}

fn rank_of_columns(field: PrimeField, cols: &[Vec<u64>], target_dim: usize) -> usize {
    let mut ech = Echelon::new(field, target_dim);
    for c in cols {
        ech.insert(c.clone());
    }
    ech.rank()
}

/// Graded Betti numbers of `R/I` for an artinian ideal `I`, as a codim-3
/// shift table. `bound` must reach three past the socle degree.
pub fn minimal_resolution_fp(
    ideal: &GradedIdealFp,
    bound: i64,
) -> Result<BettiTable, LabError> {
    let field = ideal.field;
    let raw_pieces = ideal.graded_pieces(bound);
    let pieces: Vec<QuotientPiece> = raw_pieces
        .into_iter()
        .map(|ech| {
            let std_cols = ech.standard_cols();
            QuotientPiece { ech, std_cols }
        })
        .collect();

    // socle degree: last j with (R/I)_j nonzero
    let first_zero = pieces
        .iter()
        .position(|p| p.dim() == 0)
        .ok_or(LabError::NotArtinianWithinBound(bound))?;
    let socle = first_zero as i64 - 1;
    if bound < socle + 3 {
        return Err(LabError::BoundTooSmall {
            bound,
            needed: socle + 3,
        });
    }
    let top = socle + 3;

    // mul[j][var]: columns of the multiplication map (R/I)_{j-1} -> (R/I)_j
    let mut mul: Vec<[Vec<Vec<u64>>; 3]> = Vec::with_capacity(top as usize + 1);
    mul.push([Vec::new(), Vec::new(), Vec::new()]);
    for j in 1..=top {
        let src = &pieces[(j - 1) as usize];
        let dst = &pieces[j as usize];
        let mut maps: [Vec<Vec<u64>>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        for (var, map) in maps.iter_mut().enumerate() {
            let shift = var_shift(j - 1, var);
            for &mono_pos in &src.std_cols {
                let mut v = vec![0u64; mono_count(j)];
                v[shift[mono_pos]] = 1;
                map.push(dst.coords(v));
            }
        }
        mul.push(maps);
    }

    let dim_q = |j: i64| -> usize {
        if j < 0 {
            0
        } else {
            pieces[j as usize].dim()
        }
    };

    let mut betti: [Vec<i64>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for j in 1..=top {
        let a0 = dim_q(j);
        let a1 = dim_q(j - 1);
        let a2 = dim_q(j - 2);
        let a3 = dim_q(j - 3);

        // d1: (R/I)_{j-1}^3 -> (R/I)_j, (u_0,u_1,u_2) -> sum x_l u_l
        let mut d1_cols: Vec<Vec<u64>> = Vec::with_capacity(3 * a1);
        if a1 > 0 {
            for var in 0..3 {
                for col in &mul[j as usize][var] {
                    d1_cols.push(col.clone());
                }
            }
        }
        let rank1 = rank_of_columns(field, &d1_cols, a0);

        // d2: (R/I)_{j-2}^3 -> (R/I)_{j-1}^3, e_i ∧ e_l -> x_i e_l - x_l e_i
        let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
        let mut d2_cols: Vec<Vec<u64>> = Vec::with_capacity(3 * a2);
        if a2 > 0 {
            let maps = &mul[(j - 1) as usize];
            for &(i, l) in &pairs {
                for k in 0..a2 {
                    let mut col = vec![0u64; 3 * a1];
                    for (r, &v) in maps[i][k].iter().enumerate() {
                        col[l * a1 + r] = v;
                    }
                    for (r, &v) in maps[l][k].iter().enumerate() {
                        col[i * a1 + r] = field.sub(col[i * a1 + r], v);
                    }
                    d2_cols.push(col);
                }
            }
        }
        let rank2 = rank_of_columns(field, &d2_cols, 3 * a1);

        // d3: (R/I)_{j-3} -> (R/I)_{j-2}^3,
        // e_0∧e_1∧e_2 -> x_0 e_{12} - x_1 e_{02} + x_2 e_{01}
        let mut d3_cols: Vec<Vec<u64>> = Vec::with_capacity(a3);
        if a3 > 0 {
            let maps = &mul[(j - 2) as usize];
            // blocks in C_2 ordered (0,1), (0,2), (1,2)
            for k in 0..a3 {
                let mut col = vec![0u64; 3 * a2];
                for (r, &v) in maps[0][k].iter().enumerate() {
                    col[2 * a2 + r] = v;
                }
                for (r, &v) in maps[1][k].iter().enumerate() {
                    col[a2 + r] = field.sub(col[a2 + r], v);
                }
                for (r, &v) in maps[2][k].iter().enumerate() {
                    col[r] = v;
                }
                d3_cols.push(col);
            }
        }
        let rank3 = rank_of_columns(field, &d3_cols, 3 * a2);

        let b1 = 3 * a1 as i64 - rank1 as i64 - rank2 as i64;
        let b2 = 3 * a2 as i64 - rank2 as i64 - rank3 as i64;
        let b3 = a3 as i64 - rank3 as i64;
        debug_assert!(b1 >= 0 && b2 >= 0 && b3 >= 0);
        for _ in 0..b1 {
            betti[0].push(j);
        }
        for _ in 0..b2 {
            betti[1].push(j);
        }
        for _ in 0..b3 {
            betti[2].push(j);
        }
    }

    let modules = betti
        .into_iter()
        .map(FreeModuleShifts::new)
        .collect::<Vec<_>>();
    Ok(BettiTable::new(3, modules).expect("codim 3 with 3 modules"))
}

/// Hilbert function of a complete intersection of the given degrees in
/// three variables, by inclusion-exclusion over the Koszul resolution.
pub fn hilbert_function_ci(degrees: [i64; 3], j: i64) -> i64 {
    let mut acc = 0i64;
    for mask in 0u32..8 {
        let mut shift = 0i64;
        let mut sign = 1i64;
        for (i, &d) in degrees.iter().enumerate() {
            if mask & (1 << i) != 0 {
                shift += d;
                sign = -sign;
            }
        }
        acc += sign * binom(j - shift + 2, 2);
    }
    acc
}

/// Re-checkable witness that three sampled forms of the prescribed degrees,
/// lying inside the ideal, form a regular sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegSeqWitness {
    pub p: u64,
    pub degrees: [i64; 3],
    pub forms: Vec<HPoly>,
}

impl RegSeqWitness {
    /// Recompute everything the witness asserts: membership of each form in
    /// `ideal`, and the complete-intersection Hilbert function.
    pub fn verify(&self, ideal: &GradedIdealFp) -> bool {
        if ideal.field.p != self.p || self.forms.len() != 3 {
            return false;
        }
        let max_deg = self.degrees.iter().copied().max().unwrap_or(0);
        let pieces = ideal.graded_pieces(max_deg);
        for (f, &d) in self.forms.iter().zip(&self.degrees) {
            if f.deg != d || !pieces[d as usize].contains(&f.coeffs) {
                return false;
            }
        }
        forms_have_ci_hilbert_function(ideal.field, &self.forms, self.degrees)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegSeqAnswer {
    /// Certified for this prime: the witness carries the forms.
    Yes(RegSeqWitness),
    /// All samples failed; no regular sequence of these degrees was found.
    ProbablyNo,
}

fn forms_have_ci_hilbert_function(
    field: PrimeField,
    forms: &[HPoly],
    degrees: [i64; 3],
) -> bool {
    // build (f)_j degree by degree and bail at the first mismatch
    let bound = degrees.iter().sum::<i64>() - 2;
    let mut prev: Option<Echelon> = None;
    for j in 0..=bound {
        let mut ech = Echelon::new(field, mono_count(j));
        if let Some(p) = &prev {
            for var in 0..3 {
                let shift = var_shift(j - 1, var);
                for row in p.rows() {
                    let mut lifted = vec![0u64; mono_count(j)];
                    for (i, &c) in row.iter().enumerate() {
                        if c != 0 {
                            lifted[shift[i]] = c;
                        }
                    }
                    ech.insert(lifted);
                }
            }
        }
        for f in forms {
            if f.deg == j {
                ech.insert(f.coeffs.clone());
            }
        }
        if (ech.dim() - ech.rank()) as i64 != hilbert_function_ci(degrees, j) {
            return false;
        }
        prev = Some(ech);
    }
    true
}

/// Search for a regular sequence of the given degrees inside `ideal` by
/// sampling random elements of the prescribed graded pieces.
///
/// A `Yes` is certified (for this prime): the three forms have exactly the
/// complete-intersection Hilbert function through one past its socle
/// degree, which forces them to be a regular sequence of codimension 3.
pub fn regular_sequence_test(
    ideal: &GradedIdealFp,
    degrees: [i64; 3],
    seed: u64,
    attempts: u32,
) -> Result<RegSeqAnswer, LabError> {
    let field = ideal.field;
    let max_deg = degrees.iter().copied().max().unwrap_or(0);
    let pieces = ideal.graded_pieces(max_deg);
    for &d in &degrees {
        if d < 1 || pieces[d as usize].rank() == 0 {
            return Err(LabError::DegreeBelowIdeal(d));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let forms: Vec<HPoly> = degrees
            .iter()
            .map(|&d| {
                let rows = pieces[d as usize].rows();
                let mut f = HPoly::zero(d);
                for row in rows {
                    let c = rng.gen_range(0..field.p);
                    if c == 0 {
                        continue;
                    }
                    for (i, &v) in row.iter().enumerate() {
                        if v != 0 {
                            f.coeffs[i] = field.add(f.coeffs[i], field.mul(c, v));
                        }
                    }
                }
                f
            })
            .collect();
        if forms_have_ci_hilbert_function(field, &forms, degrees) {
            return Ok(RegSeqAnswer::Yes(RegSeqWitness {
                p: field.p,
                degrees,
                forms,
            }));
        }
    }
    Ok(RegSeqAnswer::ProbablyNo)
}
