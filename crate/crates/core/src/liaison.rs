//! Shift-level liaison: mapping-cone resolutions of almost Gorenstein
//! algebras, the socle-degree special case, the F_2 duality split, and the
//! linkage from a codim-3 ACI table to its Gorenstein partner.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::aci::{linked_gorenstein_degrees, AciError, LinkedDegrees, ShapeDecomposition};
use crate::gorenstein::{gorenstein_betti_table, validate_degree_sequence};
use crate::shifts::{BettiTable, FreeModuleShifts};
use crate::util::binom;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiaisonError {
    #[error("codimension mismatch: G has {g}, K has {k}, context says {ctx}")]
    CodimMismatch { g: usize, k: usize, ctx: usize },
    #[error("K does not end in a single rank-1 module (Gorenstein tail)")]
    NotGorensteinTail,
    #[error("socle shifts inconsistent: expected theta_G = theta_Z - d*")]
    ThetaMismatch,
    #[error("G is not self-dual with socle shift {0}")]
    NotSelfDual(i64),
    #[error("deg f must satisfy 1 <= d* <= e = theta_Z - c")]
    DegreeOutOfRange,
    #[error("some generator degree {0} >= socle degree {1}: minimality not guaranteed, refusing")]
    GeneratorDegreeTooHigh(i64, i64),
    #[error("F_c dual (twist {0}) is not a sub-multiset of F_2")]
    DualNotEmbedded(i64),
    #[error(transparent)]
    Aci(#[from] AciError),
}

/// Numerics of one link: `ϑ_Z`, `d* = deg f`, codimension, and the derived
/// `ϑ_G = ϑ_Z - d*` and `d = ϑ_Z + d* = ϑ_G + 2 d*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkContext {
    pub theta_z: i64,
    pub dstar: i64,
    pub c: usize,
}

impl LinkContext {
    pub fn new(theta_z: i64, dstar: i64, c: usize) -> Result<Self, LiaisonError> {
        let e = theta_z - c as i64;
        if dstar < 1 || dstar > e {
            return Err(LiaisonError::DegreeOutOfRange);
        }
        Ok(LinkContext { theta_z, dstar, c })
    }

    pub fn theta_g(&self) -> i64 {
        self.theta_z - self.dstar
    }

    pub fn dtotal(&self) -> i64 {
        self.theta_z + self.dstar
    }

    /// Socle degree of `A_Z`.
    pub fn socle_degree(&self) -> i64 {
        self.theta_z - self.c as i64
    }
}

/// A mapping-cone output: the table plus an honest minimality marker.
/// Formal cancellation of a non-minimal cone can disagree with the true
/// minimal table of an actual ideal, so nothing downstream should treat an
/// unmarked table as minimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeTable {
    pub table: BettiTable,
    pub minimal: bool,
}

fn is_self_dual(g: &BettiTable, theta: i64) -> bool {
    let c = g.codim;
    if g.modules[c - 1] != FreeModuleShifts::new(vec![theta]) {
        return false;
    }
    (1..=c).all(|i| g.module(i) == g.module(c - i).dual_twist(theta))
}

/// Resolution (possibly non-minimal) of `A_Q = R/(I_Z + (f))` by mapping
/// cone: `F_1 = R(-d*) ⊕ K_1`, `F_i = G_{i-1}(-d*) ⊕ K_i` for
/// `2 <= i <= c-1`, `F_c = G_{c-1}(-d*)`.
pub fn mapping_cone_resolution(
    g: &BettiTable,
    k: &BettiTable,
    ctx: &LinkContext,
) -> Result<ConeTable, LiaisonError> {
    let c = ctx.c;
    if g.codim != c || k.codim != c {
        return Err(LiaisonError::CodimMismatch {
            g: g.codim,
            k: k.codim,
            ctx: c,
        });
    }
    if k.modules[c - 1].rank() != 1 {
        return Err(LiaisonError::NotGorensteinTail);
    }
    if k.modules[c - 1] != FreeModuleShifts::new(vec![ctx.theta_z]) {
        return Err(LiaisonError::ThetaMismatch);
    }
    let theta_g = ctx.theta_g();
    if !is_self_dual(g, theta_g) {
        return Err(LiaisonError::NotSelfDual(theta_g));
    }
    let mut modules = Vec::with_capacity(c);
    modules.push(FreeModuleShifts::new(vec![ctx.dstar]).direct_sum(&k.module(1)));
    for i in 2..c {
        modules.push(g.module(i - 1).twisted(ctx.dstar).direct_sum(&k.module(i)));
    }
    modules.push(g.module(c - 1).twisted(ctx.dstar));
    let table = BettiTable::new(c, modules).expect("c modules");
    debug_assert!(cone_hilbert_identity(&table, g, k, ctx));
    Ok(ConeTable {
        table,
        minimal: false,
    })
}

/// `HF(Q, j) = HF(Z, j) - HF(G, e_Z - j)` with `e_Z = ϑ_Z - c` the socle
/// degree of `A_Z`, from the liaison exact sequence.
pub fn cone_hilbert_identity(
    q: &BettiTable,
    g: &BettiTable,
    k: &BettiTable,
    ctx: &LinkContext,
) -> bool {
    let e = ctx.socle_degree();
    let top = q.max_shift().max(k.max_shift());
    (0..=top).all(|j| {
        let lhs = q.hilbert_function(j);
        let hz = k.hilbert_function(j);
        let hg = if e - j < 0 {
            Ok(0)
        } else {
            g.hilbert_function(e - j)
        };
        matches!((lhs, hz, hg), (Ok(a), Ok(b), Ok(c)) if a == b - c)
    })
}

/// Minimal resolution of `A_Q = R/(I_Z + (f))` in the socle-degree case
/// `deg f = e`: `F_1 = K_1 ⊕ R(-e)`,
/// `F_i = K_i ⊕ R(-(e+i-1))^{C(c, i-1)}` for `2 <= i <= c-1`,
/// `F_c = R(-(e+c-1))^{C(c, c-1)}`. Requires `I_Z` generated in degrees
/// below `e`, which is what makes the cone minimal.
pub fn socle_degree_resolution(
    k: &BettiTable,
    c: usize,
    e: i64,
) -> Result<BettiTable, LiaisonError> {
    if k.codim != c {
        return Err(LiaisonError::CodimMismatch {
            g: c,
            k: k.codim,
            ctx: c,
        });
    }
    if k.modules[c - 1] != FreeModuleShifts::new(vec![e + c as i64]) {
        return Err(LiaisonError::ThetaMismatch);
    }
    if let Some(max) = k.modules[0].max_shift() {
        if max >= e {
            return Err(LiaisonError::GeneratorDegreeTooHigh(max, e));
        }
    }
    let mut modules = Vec::with_capacity(c);
    modules.push(k.module(1).direct_sum(&FreeModuleShifts::new(vec![e])));
    for i in 2..c {
        let copies = binom(c as i64, i as i64 - 1) as usize;
        let extra = FreeModuleShifts::new(vec![e + i as i64 - 1; copies]);
        modules.push(k.module(i).direct_sum(&extra));
    }
    let copies = binom(c as i64, c as i64 - 1) as usize;
    modules.push(FreeModuleShifts::new(vec![e + c as i64 - 1; copies]));
    Ok(BettiTable::new(c, modules).expect("c modules"))
}

/// Duality split `F_2 ≅ F_c^∨(-d) ⊕ F_2'` with `d = Σ F_1` (the almost
/// complete intersection corollary, any codim >= 3).
pub fn verify_fc_duality(
    b: &BettiTable,
) -> Result<(FreeModuleShifts, FreeModuleShifts), LiaisonError> {
    let d = b.modules[0].sum();
    let dual = b.modules[b.codim - 1].dual_twist(d);
    if !dual.is_submultiset_of(&b.modules[1]) {
        return Err(LiaisonError::DualNotEmbedded(d));
    }
    let prime = b.modules[1].subtract(&dual).expect("embedded");
    Ok((dual, prime))
}

/// Result of linking an ACI table to its Gorenstein partner.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkedGorenstein {
    /// Mapping-cone table before the canonical cancellations.
    pub raw: BettiTable,
    /// The minimal linked table (for even `t` with `d* = d_1`, the
    /// uncancelled table: the formally cancellable pair is genuine and
    /// must stay).
    pub table: BettiTable,
    /// For even `t` with `d* = d_1`: a `t+1`-generator Gorenstein table
    /// carrying the same graded Betti numbers as the linked ideal.
    pub same_betti_witness: Option<BettiTable>,
    /// True when `t` is odd: that case reduces to the even one.
    pub analogous_case: bool,
    pub degrees: LinkedDegrees,
}

/// Link a decomposed ACI table to a Gorenstein table in a complete
/// intersection of type `ord(d*, d_2, d_3)`.
pub fn link_aci_to_gorenstein(
    dec: &ShapeDecomposition,
) -> Result<LinkedGorenstein, LiaisonError> {
    let shape = &dec.shape;
    let degrees = linked_gorenstein_degrees(dec)?;
    let theta_z = shape.dstar + shape.d[1] + shape.d[2];
    let theta_g = degrees.theta_g;
    let d1 = shape.d[0];

    // pre-cancellation mapping-cone table:
    //   G_1 = F_3^∨(-ϑ_Z) ⊕ R(-d*) ⊕ R(-d_2) ⊕ R(-d_3)
    //   G_2 = F_3(d_1) ⊕ F_2'^∨(-ϑ_Z)
    //   G_3 = R(-ϑ_G)
    let f3 = FreeModuleShifts::new(shape.s.iter().map(|si| shape.dtotal() - si).collect());
    let g1 = f3
        .dual_twist(theta_z)
        .direct_sum(&FreeModuleShifts::new(vec![shape.dstar, shape.d[1], shape.d[2]]));
    let g2 = f3
        .twisted(-d1)
        .direct_sum(&dec.f2_prime.dual_twist(theta_z));
    let g3 = FreeModuleShifts::new(vec![theta_g]);
    let raw = BettiTable::new(3, vec![g1, g2, g3]).expect("codim 3");

    if shape.t_even() {
        if shape.dstar != d1 {
            // cancel the redundant R(-d_2) and R(-d_3)
            let table = raw
                .cancel(1, shape.d[1], 1)
                .and_then(|t| t.cancel(1, shape.d[2], 1))
                .expect("redundant pair cancels");
            debug_assert!(is_self_dual(&table, theta_g));
            Ok(LinkedGorenstein {
                raw: raw.clone(),
                table,
                same_betti_witness: None,
                analogous_case: false,
                degrees,
            })
        } else {
            // d* = d_1: the pair is formally cancellable but must stay;
            // attach the t+1-generator existence witness instead
            let g = validate_degree_sequence(degrees.delta_g.degrees())
                .expect("linked degrees validated");
            let witness = gorenstein_betti_table(&g);
            debug_assert!(is_self_dual(&raw, theta_g));
            Ok(LinkedGorenstein {
                raw: raw.clone(),
                table: raw,
                same_betti_witness: Some(witness),
                analogous_case: false,
                degrees,
            })
        }
    } else {
        // odd t: apply the construction analogously, generators δ_G
        let g = validate_degree_sequence(degrees.delta_g.degrees())
            .expect("linked degrees validated");
        let table = gorenstein_betti_table(&g);
        Ok(LinkedGorenstein {
            raw,
            table,
            same_betti_witness: None,
            analogous_case: true,
            degrees,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aci::decompose;
    use crate::monomial::resolution_mont3;

    fn fms(v: &[i64]) -> FreeModuleShifts {
        FreeModuleShifts::new(v.to_vec())
    }

    #[test]
    fn mapping_cone_socle_case() {
        let k = BettiTable::koszul(&[2, 2, 2]);
        let g = BettiTable::koszul(&[1, 1, 1]);
        let ctx = LinkContext::new(6, 3, 3).unwrap();
        let cone = mapping_cone_resolution(&g, &k, &ctx).unwrap();
        assert!(!cone.minimal);
        assert_eq!(
            cone.table,
            resolution_mont3([2, 2, 2], [1, 1, 1]).unwrap()
        );
        // d* = 0 rejected at context construction
        assert!(LinkContext::new(6, 0, 3).is_err());
    }

    #[test]
    fn socle_degree_examples() {
        let k = BettiTable::koszul(&[2, 2, 2]);
        let b = socle_degree_resolution(&k, 3, 3).unwrap();
        assert_eq!(b.modules[0], fms(&[2, 2, 2, 3]));
        assert_eq!(b.modules[1], fms(&[4, 4, 4, 4, 4, 4]));
        assert_eq!(b.modules[2], fms(&[5, 5, 5]));

        let k = BettiTable::koszul(&[1, 2, 3]);
        assert!(matches!(
            socle_degree_resolution(&k, 3, 3),
            Err(LiaisonError::GeneratorDegreeTooHigh(3, 3))
        ));

        let k = BettiTable::koszul(&[2, 2, 2, 2]);
        let b = socle_degree_resolution(&k, 4, 4).unwrap();
        assert_eq!(b.modules[3], fms(&[7, 7, 7, 7]));
        assert_eq!(b.rank_alternating_sum(), 0);
        assert_eq!(b.shift_alternating_sum(), 0);
    }

    #[test]
    fn fc_duality() {
        let a = crate::aci::tests::golden_a();
        let (dual, prime) = verify_fc_duality(&a).unwrap();
        assert_eq!(dual, fms(&[19, 19, 19, 19, 20, 20, 20, 20, 21, 21, 21]));
        assert_eq!(prime, fms(&[17, 18, 19]));

        let koszul = BettiTable::koszul(&[2, 2, 2]);
        assert!(matches!(
            verify_fc_duality(&koszul),
            Err(LiaisonError::DualNotEmbedded(6))
        ));
    }

    #[test]
    fn link_golden_b() {
        let dec = decompose(&crate::aci::tests::golden_b()).unwrap();
        let link = link_aci_to_gorenstein(&dec).unwrap();
        // d* = d_1 = 4: the linked table keeps the formally cancellable pair
        assert_eq!(link.table.modules[0], fms(&[3, 4, 6, 6, 7]));
        assert_eq!(link.table.modules[1], fms(&[6, 7, 7, 9, 10]));
        assert_eq!(link.table.modules[2], fms(&[13]));
        assert!(!link.analogous_case);
        let witness = link.same_betti_witness.unwrap();
        let expect = gorenstein_betti_table(&validate_degree_sequence(&[3, 4, 6]).unwrap());
        assert_eq!(witness, expect);
    }

    #[test]
    fn link_t2_distinct_dstar() {
        // (x^3, y^4, z^5, x y^2): shape d = (3,3,4), d* = 5, s = (5,5)
        let table = crate::monomial::resolution_mont2(3, 4, 5, 1, 2).unwrap();
        let dec = decompose(&table).unwrap();
        assert_eq!(dec.shape.d, [3, 3, 4]);
        assert_eq!(dec.shape.dstar, 5);
        assert_eq!(dec.shape.s, vec![5, 5]);
        let link = link_aci_to_gorenstein(&dec).unwrap();
        assert_eq!(link.degrees.delta_g.degrees(), &[2, 2, 5]);
        assert_eq!(link.degrees.theta_g, 9);
        assert_eq!(link.degrees.ci_type, [3, 4, 5]);
        let expect = gorenstein_betti_table(&validate_degree_sequence(&[2, 2, 5]).unwrap());
        assert_eq!(link.table, expect);
        assert!(link.same_betti_witness.is_none());
    }

    #[test]
    fn link_odd_analogous() {
        let dec = decompose(&crate::aci::tests::golden_c()).unwrap();
        let link = link_aci_to_gorenstein(&dec).unwrap();
        assert!(link.analogous_case);
        let expect = gorenstein_betti_table(&validate_degree_sequence(&[2, 2, 2, 4, 4]).unwrap());
        assert_eq!(link.table, expect);
    }

    #[test]
    fn cone_reversal_reproduces_aci_table() {
        // reverse of the worked t=2 example: cone over G = Gorenstein(3,4,6)
        // inside K = Koszul(4,6,7) with d* = 4 gives a non-minimal table that
        // formally minimalizes to the printed ACI table
        let g = gorenstein_betti_table(&validate_degree_sequence(&[3, 4, 6]).unwrap());
        let k = BettiTable::koszul(&[4, 6, 7]);
        let ctx = LinkContext::new(17, 4, 3).unwrap();
        let cone = mapping_cone_resolution(&g, &k, &ctx).unwrap();
        // only the tail redundancy R(-13) may be cancelled; greedy formal
        // cancellation would also delete the genuine 7 shared by F_1 and F_2
        let minimal = cone.table.cancel(2, 13, 1).unwrap();
        assert_eq!(minimal, crate::aci::tests::golden_b());
    }
}
