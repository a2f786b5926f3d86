//! Dense homogeneous polynomials in three variables over a prime field.
//!
//! A degree-`d` form is stored as its coefficient vector over the monomial
//! basis of `R_d`, ordered by `mono_index`.

use super::fp::PrimeField;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Number of monomials of degree `d` in three variables.
pub fn mono_count(d: i64) -> usize {
    if d < 0 {
        0
    } else {
        ((d + 1) * (d + 2) / 2) as usize
    }
}

/// Position of the monomial `x^e0 y^e1 z^e2` (with `e0+e1+e2 = d`) in the
/// degree-`d` basis: blocks of fixed `e0` ascending, then `e1` ascending.
pub fn mono_index(d: i64, e: [i64; 3]) -> usize {
    debug_assert_eq!(e[0] + e[1] + e[2], d);
    debug_assert!(e.iter().all(|&v| v >= 0));
    let e0 = e[0];
    let offset = e0 * (d + 1) - e0 * (e0 - 1) / 2;
    (offset + e[1]) as usize
}

/// All degree-`d` monomial exponent triples, in `mono_index` order.
pub fn monomials(d: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::with_capacity(mono_count(d));
    for e0 in 0..=d {
        for e1 in 0..=(d - e0) {
            out.push([e0, e1, d - e0 - e1]);
        }
    }
    out
}

/// Homogeneous polynomial: degree plus dense coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPoly {
    pub deg: i64,
    pub coeffs: Vec<u64>,
}

impl HPoly {
    pub fn zero(deg: i64) -> Self {
        HPoly {
            deg,
            coeffs: vec![0; mono_count(deg)],
        }
    }

    pub fn monomial(e: [i64; 3]) -> Self {
        let d = e[0] + e[1] + e[2];
        let mut p = HPoly::zero(d);
        p.coeffs[mono_index(d, e)] = 1;
        p
    }

    pub fn from_terms(field: PrimeField, deg: i64, terms: &[(i64, [i64; 3])]) -> Self {
        let mut p = HPoly::zero(deg);
        for &(c, e) in terms {
            let idx = mono_index(deg, e);
            p.coeffs[idx] = field.add(p.coeffs[idx], field.reduce_int(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn random<R: Rng>(field: PrimeField, deg: i64, rng: &mut R) -> Self {
        let coeffs = (0..mono_count(deg))
            .map(|_| rng.gen_range(0..field.p))
            .collect();
        HPoly { deg, coeffs }
    }

    pub fn add_assign(&mut self, field: PrimeField, other: &HPoly) {
        assert_eq!(self.deg, other.deg);
        for (a, &b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = field.add(*a, b);
        }
    }

    pub fn scale(&mut self, field: PrimeField, c: u64) {
        for a in self.coeffs.iter_mut() {
            *a = field.mul(*a, c);
        }
    }

    pub fn mul(&self, field: PrimeField, other: &HPoly) -> HPoly {
        let d = self.deg + other.deg;
        let mut out = HPoly::zero(d);
        let self_monos = monomials(self.deg);
        let other_monos = monomials(other.deg);
        for (i, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            let ea = self_monos[i];
            for (j, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                let eb = other_monos[j];
                let idx = mono_index(d, [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]]);
                out.coeffs[idx] = field.add(out.coeffs[idx], field.mul(ca, cb));
            }
        }
        out
    }
}

/// Index map for multiplication by the variable `var` (0, 1 or 2):
/// position `i` in degree `d` maps to `result[i]` in degree `d+1`.
pub fn var_shift(d: i64, var: usize) -> Vec<usize> {
    monomials(d)
        .into_iter()
        .map(|mut e| {
            e[var] += 1;
            mono_index(d + 1, e)
        })
        .collect()
}
