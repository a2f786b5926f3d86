//! Graded ideals over F_p: degree-by-degree echelon bases, Hilbert
//! functions, and colon ideals computed as per-degree kernels.

use super::fp::{nullspace, Echelon, PrimeField};
use super::poly::{mono_count, monomials, var_shift, HPoly};
use super::LabError;
use crate::monomial::MonomialIdeal3;
use serde::{Deserialize, Serialize};

/// Homogeneous ideal in `F_p[x,y,z]`, given by its generators.
#[derive(Debug, Clone)]
pub struct GradedIdealFp {
    pub field: PrimeField,
    pub gens: Vec<HPoly>,
}

/// JSON form: prime plus one term list `[c, [e1,e2,e3]]` per generator.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealJson {
    pub p: u64,
    pub gens: Vec<Vec<(i64, [i64; 3])>>,
}

impl GradedIdealFp {
    pub fn new(field: PrimeField, gens: Vec<HPoly>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        GradedIdealFp { field, gens }
    }

    pub fn from_monomial_ideal(field: PrimeField, ideal: &MonomialIdeal3) -> Self {
        let gens = ideal
            .generators()
            .iter()
            .map(|&[a, b, c]| HPoly::monomial([a as i64, b as i64, c as i64]))
            .collect();
        GradedIdealFp::new(field, gens)
    }

    pub fn from_json(json: &IdealJson) -> Self {
        let field = PrimeField::new(json.p);
        let gens = json
            .gens
            .iter()
            .map(|terms| {
                let deg = terms
                    .iter()
                    .map(|(_, e)| e[0] + e[1] + e[2])
                    .max()
                    .unwrap_or(0);
                for (_, e) in terms {
                    assert_eq!(e[0] + e[1] + e[2], deg, "generator is not homogeneous");
                }
                HPoly::from_terms(field, deg, terms)
            })
            .collect();
        GradedIdealFp::new(field, gens)
    }

    pub fn to_json(&self) -> IdealJson {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let ms = monomials(g.deg);
                g.coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (c as i64, ms[i]))
                    .collect()
            })
            .collect();
        IdealJson {
            p: self.field.p,
            gens,
        }
    }

    /// Echelon bases of `I_0, ..., I_bound`, built incrementally:
    /// `I_j = R_1 * I_{j-1} + (generators of degree j)`.
    pub fn graded_pieces(&self, bound: i64) -> Vec<Echelon> {
        let mut pieces: Vec<Echelon> = Vec::with_capacity(bound as usize + 1);
        for j in 0..=bound {
            let mut ech = Echelon::new(self.field, mono_count(j));
            if j > 0 {
                let prev = &pieces[(j - 1) as usize];
                for var in 0..3 {
                    let shift = var_shift(j - 1, var);
                    for row in prev.rows() {
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
            for g in &self.gens {
                if g.deg == j {
                    ech.insert(g.coeffs.clone());
                }
            }
            pieces.push(ech);
        }
        pieces
    }

    /// `dim_F (R/I)_j` for `j = 0..=bound`.
    pub fn hilbert_function(&self, bound: i64) -> Vec<i64> {
        self.graded_pieces(bound)
            .iter()
            .map(|e| (e.dim() - e.rank()) as i64)
            .collect()
    }

    pub fn min_gen_degree(&self) -> Option<i64> {
        self.gens.iter().map(|g| g.deg).min()
    }

    pub fn max_gen_degree(&self) -> Option<i64> {
        self.gens.iter().map(|g| g.deg).max()
    }
}

/// Colon ideal `Z : I`, computed degree by degree up to `bound` and
/// returned by a minimal generating set.
///
/// Requires `Z ⊆ I` (the linkage setting), checked on the generators of
/// `Z`; fails with `NotContained` otherwise. Fails with
/// `NotArtinianWithinBound` if the colon has not saturated by `bound`.
pub fn colon_ideal(
    z: &GradedIdealFp,
    i: &GradedIdealFp,
    bound: i64,
) -> Result<GradedIdealFp, LabError> {
    assert_eq!(z.field, i.field);
    let field = z.field;
    let max_q = i.max_gen_degree().unwrap_or(0);
    let z_pieces = z.graded_pieces(bound + max_q);

    // linkage precondition: Z ⊆ I, checked on generators of Z against I.
    let i_pieces = i.graded_pieces(z.max_gen_degree().unwrap_or(0));
    for g in &z.gens {
        if !i_pieces[g.deg as usize].contains(&g.coeffs) {
            return Err(LabError::NotContained(g.deg));
        }
    }

    let mut gens: Vec<HPoly> = Vec::new();
    // echelon of the ideal generated by the gens found so far, per degree
    let mut found_prev: Option<Echelon> = None;
    let mut saturated = false;

    for j in 1..=bound {
        let dim_j = mono_count(j);

        // Q_j = { g in R_j : g * q ∈ Z for every generator q of I }.
        // One constraint row per standard monomial of (R/Z)_{j+deg q}.
        let mut constraint_rows: Vec<Vec<u64>> = Vec::new();
        let j_monos = monomials(j);
        for q in &i.gens {
            let target = &z_pieces[(j + q.deg) as usize];
            let std_cols = target.standard_cols();
            if std_cols.is_empty() {
                continue;
            }
            // column k of the map = coords of reduce(m_k * q) mod Z
            let mut cols: Vec<Vec<u64>> = Vec::with_capacity(dim_j);
            for &m in &j_monos {
                let prod = HPoly::monomial(m).mul(field, q);
                let mut r = prod.coeffs;
                target.reduce(&mut r);
                cols.push(std_cols.iter().map(|&c| r[c]).collect());
            }
            for (ri, _) in std_cols.iter().enumerate() {
                constraint_rows.push(cols.iter().map(|col| col[ri]).collect());
            }
        }
        let q_basis = nullspace(field, &constraint_rows, dim_j);

        // ideal generated by gens found so far, in degree j
        let mut found = Echelon::new(field, dim_j);
        if let Some(prev) = &found_prev {
            for var in 0..3 {
                let shift = var_shift(j - 1, var);
                for row in prev.rows() {
                    let mut lifted = vec![0u64; dim_j];
                    for (idx, &c) in row.iter().enumerate() {
                        if c != 0 {
                            lifted[shift[idx]] = c;
                        }
                    }
                    found.insert(lifted);
                }
            }
        }
        for v in q_basis {
            if found.insert(v.clone()) {
                gens.push(HPoly { deg: j, coeffs: v });
            }
        }
        if found.rank() == dim_j {
            saturated = true;
            break;
        }
        found_prev = Some(found);
    }

    if !saturated {
        return Err(LabError::NotArtinianWithinBound(bound));
    }
    Ok(GradedIdealFp::new(field, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(32003)
    }

    #[test]
    fn hilbert_function_of_ci() {
        // (x^2, y^2, z^2): HF = 1, 3, 3, 1, 0
        let ideal = GradedIdealFp::new(
            f(),
            vec![
                HPoly::monomial([2, 0, 0]),
                HPoly::monomial([0, 2, 0]),
                HPoly::monomial([0, 0, 2]),
            ],
        );
        assert_eq!(ideal.hilbert_function(5), vec![1, 3, 3, 1, 0, 0]);
    }

    #[test]
    fn hilbert_function_with_general_forms() {
        // three general quadrics form a regular sequence; same HF as above
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let ideal = GradedIdealFp::new(
            f(),
            (0..3).map(|_| HPoly::random(f(), 2, &mut rng)).collect(),
        );
        assert_eq!(ideal.hilbert_function(5), vec![1, 3, 3, 1, 0, 0]);
    }

    #[test]
    fn colon_of_ci_by_itself_is_unit_saturation() {
        // Z : Z = R; we only search degrees >= 1, so the generating set
        // found is the three linear forms.
        let z = GradedIdealFp::new(
            f(),
            vec![
                HPoly::monomial([2, 0, 0]),
                HPoly::monomial([0, 2, 0]),
                HPoly::monomial([0, 0, 2]),
            ],
        );
        let q = colon_ideal(&z, &z, 10).unwrap();
        assert_eq!(q.gens.len(), 3);
        assert!(q.gens.iter().all(|g| g.deg == 1));
    }

    #[test]
    fn colon_detects_non_containment() {
        let z = GradedIdealFp::new(f(), vec![HPoly::monomial([2, 0, 0])]);
        let i = GradedIdealFp::new(f(), vec![HPoly::monomial([0, 2, 0])]);
        assert!(matches!(
            colon_ideal(&i, &z, 6),
            Err(LabError::NotContained(2))
        ));
    }

    #[test]
    fn colon_of_ci_by_larger_ideal() {
        // Z = (x^3, y^3, z^3), I = Z + (xyz). The link Z : I is the
        // complete intersection (x^2, y^2, z^2).
        let z = GradedIdealFp::new(
            f(),
            vec![
                HPoly::monomial([3, 0, 0]),
                HPoly::monomial([0, 3, 0]),
                HPoly::monomial([0, 0, 3]),
            ],
        );
        let mut gens = z.gens.clone();
        gens.push(HPoly::monomial([1, 1, 1]));
        let i = GradedIdealFp::new(f(), gens);
        let q = colon_ideal(&z, &i, 10).unwrap();
        assert_eq!(q.gens.len(), 3);
        assert!(q.gens.iter().all(|g| g.deg == 2));
        assert_eq!(q.hilbert_function(4), vec![1, 3, 3, 1, 0]);
    }

    #[test]
    fn json_round_trip() {
        let ideal = GradedIdealFp::new(
            f(),
            vec![
                HPoly::from_terms(f(), 2, &[(1, [2, 0, 0]), (-3, [1, 1, 0])]),
                HPoly::monomial([0, 0, 3]),
            ],
        );
        let json = ideal.to_json();
        let text = serde_json::to_string(&json).unwrap();
        let back: IdealJson = serde_json::from_str(&text).unwrap();
        let ideal2 = GradedIdealFp::from_json(&back);
        assert_eq!(ideal.gens, ideal2.gens);
    }

    #[test]
    fn double_link_recovers_betti_table() {
        // liaison is an involution at the table level: with Z the monomial
        // complete intersection inside Q = (x^6, y^7, z^4, x^3 y),
        // the tables of Q and Z : (Z : Q) agree
        use crate::lab::resolution::minimal_resolution_fp;
        let q = GradedIdealFp::new(
            f(),
            vec![
                HPoly::monomial([6, 0, 0]),
                HPoly::monomial([0, 7, 0]),
                HPoly::monomial([0, 0, 4]),
                HPoly::monomial([3, 1, 0]),
            ],
        );
        let z = GradedIdealFp::new(f(), q.gens[..3].to_vec());
        let g = colon_ideal(&z, &q, 20).unwrap();
        let back = colon_ideal(&z, &g, 20).unwrap();
        assert_eq!(
            minimal_resolution_fp(&back, 20).unwrap(),
            minimal_resolution_fp(&q, 20).unwrap()
        );
    }
}
