//! Monomial almost complete intersections in three variables: the two
//! closed-form resolutions, realizability constructions, and an independent
//! minimal-resolution oracle via upper Koszul simplicial complexes on the
//! lcm lattice (exact rational homology ranks).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::aci::{check_characterization, AciShape, ShapeDecomposition, Verdict};
use crate::gorenstein::CiMinProvider;
use crate::linalg::Matrix;
use crate::shifts::{BettiTable, FreeModuleShifts};
use crate::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonomialError {
    #[error("precondition violated: {0}")]
    PreconditionViolation(&'static str),
    #[error("shape has t = {0}, expected 2")]
    NotType2(usize),
    #[error("shape has t = {0}, expected 3")]
    NotType3(usize),
    #[error("shape fails the characterization: {0}")]
    CharacterizationFailed(String),
    #[error("no monomial realization: {0}")]
    NotRealizable(String),
    #[error("oracle supports at most 10 generators, got {0}")]
    TooManyGenerators(usize),
    #[error("ideal is not artinian: missing a pure power of variable {0}")]
    NotArtinian(usize),
}

/// Minimal monomial ideal in `k[x, y, z]`, stored as exponent triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal3 {
    #[serde(rename = "gens")]
    generators: Vec<[u32; 3]>,
}

fn divides(a: &[u32; 3], b: &[u32; 3]) -> bool {
    a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]
}

impl MonomialIdeal3 {
    /// Builds the ideal and prunes non-minimal generators.
    pub fn new(gens: Vec<[u32; 3]>) -> Self {
        let mut minimal: Vec<[u32; 3]> = Vec::new();
        for g in gens {
            if minimal.iter().any(|m| divides(m, &g)) {
                continue;
            }
            minimal.retain(|m| !divides(&g, m));
            minimal.push(g);
        }
        minimal.sort_unstable();
        MonomialIdeal3 { generators: minimal }
    }

    pub fn generators(&self) -> &[[u32; 3]] {
        &self.generators
    }

    pub fn contains_monomial(&self, m: &[u32; 3]) -> bool {
        self.generators.iter().any(|g| divides(g, m))
    }

    /// Artinian iff a pure power of each variable is present.
    pub fn is_artinian(&self) -> bool {
        (0..3).all(|v| {
            self.generators
                .iter()
                .any(|g| (0..3).all(|w| w == v || g[w] == 0))
        })
    }
}

/// Resolution of `(x^a1, y^a2, z^a3, x^b1 y^b2)`, `0 < b1 < a1`,
/// `0 < b2 < a2`, `a3 > 0`.
pub fn resolution_mont2(
    a1: i64,
    a2: i64,
    a3: i64,
    b1: i64,
    b2: i64,
) -> Result<BettiTable, MonomialError> {
    if !(0 < b1 && b1 < a1) {
        return Err(MonomialError::PreconditionViolation("0 < b1 < a1"));
    }
    if !(0 < b2 && b2 < a2) {
        return Err(MonomialError::PreconditionViolation("0 < b2 < a2"));
    }
    if a3 <= 0 {
        return Err(MonomialError::PreconditionViolation("a3 > 0"));
    }
    let f1 = FreeModuleShifts::new(vec![a1, a2, a3, b1 + b2]);
    let f2 = FreeModuleShifts::new(vec![
        b1 + a2,
        a1 + b2,
        a1 + a3,
        a2 + a3,
        b1 + b2 + a3,
    ]);
    let f3 = FreeModuleShifts::new(vec![a1 + b2 + a3, b1 + a2 + a3]);
    Ok(BettiTable::new(3, vec![f1, f2, f3]).expect("codim 3"))
}

/// Resolution of `(x^a1, y^a2, z^a3, x^b1 y^b2 z^b3)`, `0 < b_i < a_i`.
pub fn resolution_mont3(
    a: [i64; 3],
    b: [i64; 3],
) -> Result<BettiTable, MonomialError> {
    for i in 0..3 {
        if !(0 < b[i] && b[i] < a[i]) {
            return Err(MonomialError::PreconditionViolation("0 < b_i < a_i"));
        }
    }
    let f1 = FreeModuleShifts::new(vec![a[0], a[1], a[2], b[0] + b[1] + b[2]]);
    let f2 = FreeModuleShifts::new(vec![
        b[0] + b[1] + a[2],
        b[0] + a[1] + b[2],
        a[0] + b[1] + b[2],
        a[0] + a[1],
        a[0] + a[2],
        a[1] + a[2],
    ]);
    let f3 = FreeModuleShifts::new(vec![
        a[0] + a[1] + b[2],
        a[0] + b[1] + a[2],
        b[0] + a[1] + a[2],
    ]);
    Ok(BettiTable::new(3, vec![f1, f2, f3]).expect("codim 3"))
}

/// The `v_i` of the type-3 realizability proof:
/// `v_1 = a_1 + b_2 + b_3`, `v_2 = b_1 + a_2 + b_3`, `v_3 = b_1 + b_2 + a_3`;
/// `(s_1, s_2, s_3) = ord(v_1, v_2, v_3)`.
pub fn mont3_v_values(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [
        a[0] + b[1] + b[2],
        b[0] + a[1] + b[2],
        b[0] + b[1] + a[2],
    ]
}

/// Monomial realization of a type-2 shape:
/// `J = (x^{d_2}, y^{d_3}, z^{d*}, x^{s_2-d_3} y^{s_1-d_2})`.
pub fn realize_t2(shape: &AciShape) -> Result<MonomialIdeal3, MonomialError> {
    if shape.t() != 2 {
        return Err(MonomialError::NotType2(shape.t()));
    }
    let dec = ShapeDecomposition::from_shape(shape.clone());
    match check_characterization(&dec, &CiMinProvider) {
        Verdict::Valid => {}
        v => return Err(MonomialError::CharacterizationFailed(format!("{v:?}"))),
    }
    let (s1, s2) = (shape.s[0], shape.s[1]);
    let (d2, d3) = (shape.d[1], shape.d[2]);
    // the characterization forces d_3 < s_2 and d_2 < s_1
    let gens = vec![
        [d2 as u32, 0, 0],
        [0, d3 as u32, 0],
        [0, 0, shape.dstar as u32],
        [(s2 - d3) as u32, (s1 - d2) as u32, 0],
    ];
    Ok(MonomialIdeal3::new(gens))
}

/// Monomial realization of a type-3 shape, which exists iff
/// `d* < s_i < d* + d_i` for all `i`.
pub fn realize_t3(shape: &AciShape) -> Result<MonomialIdeal3, MonomialError> {
    if shape.t() != 3 {
        return Err(MonomialError::NotType3(shape.t()));
    }
    for i in 0..3 {
        if shape.s[i] <= shape.dstar {
            return Err(MonomialError::NotRealizable(format!(
                "s_{} = {} <= d* = {}",
                i + 1,
                shape.s[i],
                shape.dstar
            )));
        }
        if shape.s[i] >= shape.dstar + shape.d[i] {
            return Err(MonomialError::NotRealizable(format!(
                "s_{} = {} >= d* + d_{} = {}",
                i + 1,
                shape.s[i],
                i + 1,
                shape.dstar + shape.d[i]
            )));
        }
    }
    let b: Vec<u32> = (0..3)
        .map(|i| (shape.dstar + shape.d[i] - shape.s[i]) as u32)
        .collect();
    let gens = vec![
        [shape.d[0] as u32, 0, 0],
        [0, shape.d[1] as u32, 0],
        [0, 0, shape.d[2] as u32],
        [b[0], b[1], b[2]],
    ];
    let ideal = MonomialIdeal3::new(gens);
    // d* < s_i gives d* + d_i - s_i < d_i, so all 4 generators stay minimal
    if ideal.generators().len() != 4 {
        return Err(MonomialError::NotRealizable(
            "constructed ideal has fewer than 4 minimal generators".into(),
        ));
    }
    Ok(ideal)
}

/// Graded Betti numbers of `R/J` via upper Koszul simplicial complexes at
/// each lcm-lattice multidegree, with homology ranks over the rationals.
/// Minimal by construction; independent of the closed forms above.
pub fn minimal_resolution_oracle(ideal: &MonomialIdeal3) -> Result<BettiTable, MonomialError> {
    let gens = ideal.generators();
    if gens.len() > 10 {
        return Err(MonomialError::TooManyGenerators(gens.len()));
    }
    for v in 0..3 {
        if !gens.iter().any(|g| (0..3).all(|w| w == v || g[w] == 0)) {
            return Err(MonomialError::NotArtinian(v));
        }
    }

    // multidegrees where Betti numbers can live: lcms of generator subsets
    let mut lcms: Vec<[u32; 3]> = Vec::new();
    for mask in 1u32..(1 << gens.len()) {
        let mut l = [0u32; 3];
        for (i, g) in gens.iter().enumerate() {
            if mask & (1 << i) != 0 {
                for v in 0..3 {
                    l[v] = l[v].max(g[v]);
                }
            }
        }
        if !lcms.contains(&l) {
            lcms.push(l);
        }
    }

    let mut f = [Vec::<i64>::new(), Vec::new(), Vec::new()];
    for alpha in &lcms {
        let h = upper_koszul_homology(ideal, alpha);
        let total = (alpha[0] + alpha[1] + alpha[2]) as i64;
        for (i, dim) in h.iter().enumerate() {
            for _ in 0..*dim {
                f[i].push(total);
            }
        }
    }
    Ok(BettiTable::new(
        3,
        vec![
            FreeModuleShifts::new(f[0].clone()),
            FreeModuleShifts::new(f[1].clone()),
            FreeModuleShifts::new(f[2].clone()),
        ],
    )
    .expect("codim 3"))
}

/// Reduced homology dims `(H~_{-1}, H~_0, H~_1)` of the upper Koszul complex
/// `K^α = { W ⊆ {x,y,z} : x^{α - χ_W} ∈ J }`; these are the multigraded
/// Betti numbers `β_{1,α}, β_{2,α}, β_{3,α}` of `R/J`.
fn upper_koszul_homology(ideal: &MonomialIdeal3, alpha: &[u32; 3]) -> [usize; 3] {
    let face_in = |mask: u32| -> bool {
        let mut m = *alpha;
        for v in 0..3 {
            if mask & (1 << v) != 0 {
                if m[v] == 0 {
                    return false;
                }
                m[v] -= 1;
            }
        }
        ideal.contains_monomial(&m)
    };
    if !face_in(0) {
        return [0, 0, 0]; // void complex: x^α not in J
    }
    let faces: Vec<u32> = (1u32..8).filter(|&m| face_in(m)).collect();
    let vertices: Vec<u32> = faces.iter().copied().filter(|m| m.count_ones() == 1).collect();
    let edges: Vec<u32> = faces.iter().copied().filter(|m| m.count_ones() == 2).collect();
    let triangle = faces.iter().any(|m| m.count_ones() == 3);

    // boundary ranks over the rationals
    let d0 = if vertices.is_empty() { 0 } else { 1 }; // vertices -> empty face
    let d1 = {
        let mut m = Matrix::<Rat>::zero(vertices.len(), edges.len());
        for (c, &e) in edges.iter().enumerate() {
            let mut sign = Rat::from_integer(1);
            for (r, &v) in vertices.iter().enumerate() {
                if e & v != 0 {
                    m.set(r, c, sign.clone());
                    sign = -sign;
                }
            }
        }
        m.rank()
    };
    let d2 = if triangle && edges.len() == 3 { 1 } else { 0 };

    let h_neg1 = if vertices.is_empty() { 1 } else { 0 };
    let h0 = vertices.len() - d0 - d1;
    let h1 = edges.len() - d1 - d2;
    [h_neg1, h0, h1]
}
