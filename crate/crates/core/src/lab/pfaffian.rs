//! Random skew-symmetric models of codim-3 Gorenstein ideals: sample a
//! skew matrix with the degree pattern forced by the degree sequence, take
//! its maximal sub-pfaffians, and verify the resulting Betti table.

use super::fp::PrimeField;
use super::ideal::GradedIdealFp;
use super::poly::HPoly;
use super::resolution::minimal_resolution_fp;
use super::LabError;
use crate::gorenstein::{gorenstein_betti_table, GorensteinShape};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// A sampled ideal together with its verified minimal Betti table.
#[derive(Debug, Clone)]
pub struct PfaffianSample {
    pub ideal: GradedIdealFp,
    pub table: crate::shifts::BettiTable,
}

/// Degree pattern of the skew presentation matrix: entry `(i,j)` has degree
/// `ϑ - d_i - d_j`; nonpositive degrees force the entry to vanish.
fn degree_matrix(shape: &GorensteinShape) -> Result<Vec<Vec<i64>>, LabError> {
    let d = shape.delta.degrees();
    let m = d.len();
    let mut e = vec![vec![0i64; m]; m];
    for i in 0..m {
        for j in 0..m {
            e[i][j] = shape.theta - d[i] - d[j];
        }
    }
    // a row with every off-diagonal entry forced to zero makes the matrix
    // degenerate: no skew matrix with this pattern has the right pfaffians
    for i in 0..m {
        if (0..m).all(|j| j == i || e[i][j] <= 0) {
            return Err(LabError::NoConsistentDegreeMatrix);
        }
    }
    Ok(e)
}

/// Pfaffian of the skew submatrix on the index subset `mask`, memoized
/// across subsets. `entries[i][j]` is `None` where the degree pattern
/// forces a zero. Returns `None` for the zero polynomial.
fn pfaffian(
    field: PrimeField,
    entries: &Vec<Vec<Option<HPoly>>>,
    mask: u32,
    memo: &mut HashMap<u32, Option<HPoly>>,
) -> Option<HPoly> {
    if mask == 0 {
        return Some(HPoly::monomial([0, 0, 0]));
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let idx: Vec<usize> = (0..32).filter(|&b| mask & (1 << b) != 0).collect();
    debug_assert!(idx.len() % 2 == 0);
    let i = idx[0];
    let mut acc: Option<HPoly> = None;
    for (t, &j) in idx.iter().enumerate().skip(1) {
        let Some(m_ij) = &entries[i][j] else {
            continue;
        };
        let sub_mask = mask & !(1 << i) & !(1 << j);
        let Some(sub) = pfaffian(field, entries, sub_mask, memo) else {
            continue;
        };
        let mut term = m_ij.mul(field, &sub);
        if t % 2 == 0 {
            term.scale(field, field.neg(1));
        }
        match &mut acc {
            None => acc = Some(term),
            Some(a) => a.add_assign(field, &term),
        }
    }
    let acc = acc.filter(|p| !p.is_zero());
    memo.insert(mask, acc.clone());
    acc
}

/// Sample a codim-3 Gorenstein ideal with the given degree sequence over
/// F_p and verify its minimal resolution against the predicted table.
///
/// For a length-3 sequence the ideal is a complete intersection and we
/// sample three generic forms directly. Retries up to `attempts` times;
/// each returned sample is verified, so success is certified for this prime.
pub fn pfaffian_gorenstein_sample(
    shape: &GorensteinShape,
    field: PrimeField,
    seed: u64,
    attempts: u32,
) -> Result<PfaffianSample, LabError> {
    let expected = gorenstein_betti_table(shape);
    let d = shape.delta.degrees();
    let m = d.len();
    let bound = shape.theta; // socle degree is ϑ - 3
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    if m == 3 {
        for _ in 0..attempts {
            let gens: Vec<HPoly> = d.iter().map(|&a| HPoly::random(field, a, &mut rng)).collect();
            let ideal = GradedIdealFp::new(field, gens);
            if let Ok(table) = minimal_resolution_fp(&ideal, bound) {
                if table == expected {
                    return Ok(PfaffianSample { ideal, table });
                }
            }
        }
        return Err(LabError::SamplingFailed(attempts));
    }

    let deg = degree_matrix(shape)?;
    for _ in 0..attempts {
        let mut entries: Vec<Vec<Option<HPoly>>> = vec![vec![None; m]; m];
        for i in 0..m {
            for j in (i + 1)..m {
                if deg[i][j] > 0 {
                    let p = HPoly::random(field, deg[i][j], &mut rng);
                    let mut neg = p.clone();
                    neg.scale(field, field.neg(1));
                    entries[i][j] = Some(p);
                    entries[j][i] = Some(neg);
                }
            }
        }
        let full: u32 = (1 << m) - 1;
        let mut memo: HashMap<u32, Option<HPoly>> = HashMap::new();
        let mut gens: Vec<HPoly> = Vec::with_capacity(m);
        let mut degenerate = false;
        for i in 0..m {
            match pfaffian(field, &entries, full & !(1 << i), &mut memo) {
                Some(g) => {
                    debug_assert_eq!(g.deg, d[i]);
                    gens.push(g);
                }
                None => {
                    degenerate = true;
                    break;
                }
            }
        }
        if degenerate {
            continue;
        }
        let ideal = GradedIdealFp::new(field, gens);
        if let Ok(table) = minimal_resolution_fp(&ideal, bound) {
            if table == expected {
                return Ok(PfaffianSample { ideal, table });
            }
        }
    }
    Err(LabError::SamplingFailed(attempts))
}
