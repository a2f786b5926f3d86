//! Dense exact linear algebra, generic over the scalar field.
//!
//! Everything here is plain Gaussian elimination; the matrices in this crate
//! are small enough that nothing cleverer is warranted. Instantiated at
//! `Rat` (exact rationals) by the monomial resolution oracle; the `lab`
//! module keeps its own specialized prime-field routines for the hot loops.

use num_traits::{One, Zero};
use std::ops::{Div, Mul, Neg, Sub};

/// Scalar requirements for exact elimination: a field with cheap clones.
pub trait FieldScalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
}

impl<T> FieldScalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
{
}

/// Row-major dense matrix over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: FieldScalar> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    /// Rank by fraction-producing Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let pivot = (rank..rows).find(|&r| !m[r * cols + col].is_zero());
            let Some(pr) = pivot else { continue };
            m.swap_chunks(pr, rank, cols);
            let inv = T::one() / m[rank * cols + col].clone();
            for c in col..cols {
                let v = m[rank * cols + c].clone() * inv.clone();
                m[rank * cols + c] = v;
            }
            for r in 0..rows {
                if r != rank && !m[r * cols + col].is_zero() {
                    let factor = m[r * cols + col].clone();
                    for c in col..cols {
                        let v = m[r * cols + c].clone()
                            - factor.clone() * m[rank * cols + c].clone();
                        m[r * cols + c] = v;
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, len: usize);
}

impl<T> SwapChunks for Vec<T> {
    fn swap_chunks(&mut self, a: usize, b: usize, len: usize) {
        if a == b {
            return;
        }
        for i in 0..len {
            self.swap(a * len + i, b * len + i);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn rank_rational() {
        let mut m = Matrix::<Rat>::zero(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                m.set(i, j, Rat::from_integer((i + j) as i64));
            }
        }
        // rows are arithmetic progressions: rank 2
        assert_eq!(m.rank(), 2);
        assert_eq!(Matrix::<Rat>::zero(4, 5).rank(), 0);
    }
}
