//! Arithmetic over F_p and dense row-echelon machinery.
//!
//! The graded pieces handled here are small (a few hundred dimensions), so
//! plain dense elimination with an incremental echelon basis is all we need.

/// Prime field context. Elements are `u64` values in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
}

pub const DEFAULT_PRIME: u64 = 32003;

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 31), "prime out of supported range");
        PrimeField { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0, "division by zero in F_p");
        self.pow(a, self.p - 2)
    }

    pub fn reduce_int(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
}

/// Incrementally built row-echelon basis of a subspace of `F_p^dim`.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: PrimeField,
    dim: usize,
    rows: Vec<Vec<u64>>,
    /// pivot column of each stored row
    pivots: Vec<usize>,
    /// column -> index of the row pivoting there
    pivot_of_col: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        Echelon {
            field,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_of_col: vec![None; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Eliminate all pivot columns from `row` in place.
    pub fn reduce(&self, row: &mut [u64]) {
        let f = self.field;
        for col in 0..self.dim {
            let v = row[col];
            if v == 0 {
                continue;
            }
            if let Some(r) = self.pivot_of_col[col] {
                let pivot_row = &self.rows[r];
                let factor = f.neg(v);
                for c in col..self.dim {
                    let pv = pivot_row[c];
                    if pv != 0 {
                        row[c] = f.add(row[c], f.mul(factor, pv));
                    }
                }
            }
        }
    }

    /// Reduce and insert; returns true if the row enlarged the space.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        self.reduce(&mut row);
        let Some(col) = row.iter().position(|&v| v != 0) else {
            return false;
        };
        let inv = self.field.inv(row[col]);
        for v in row.iter_mut().skip(col) {
            if *v != 0 {
                *v = self.field.mul(*v, inv);
            }
        }
        self.pivot_of_col[col] = Some(self.rows.len());
        self.pivots.push(col);
        self.rows.push(row);
        true
    }

    pub fn contains(&self, row: &[u64]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(|&v| v == 0)
    }

    /// Columns without a pivot, in ascending order.
    pub fn standard_cols(&self) -> Vec<usize> {
        (0..self.dim)
            .filter(|&c| self.pivot_of_col[c].is_none())
            .collect()
    }
}

/// Kernel basis of the linear map given by `rows` (each row a constraint
/// over `cols` unknowns), as vectors in `F_p^cols`.
pub fn nullspace(field: PrimeField, rows: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
    let mut ech = Echelon::new(field, cols);
    for r in rows {
        ech.insert(r.clone());
    }
    // back-substitute: for each free column build the kernel vector
    let free = ech.standard_cols();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![0u64; cols];
        v[fc] = 1;
        // solve pivot entries from bottom pivots upward
        let mut order: Vec<usize> = (0..ech.rows.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(ech.pivots[i]));
        for &i in &order {
            let pc = ech.pivots[i];
            let mut acc = 0u64;
            for c in (pc + 1)..cols {
                let rc = ech.rows[i][c];
                if rc != 0 && v[c] != 0 {
                    acc = field.add(acc, field.mul(rc, v[c]));
                }
            }
            v[pc] = field.neg(acc);
        }
        basis.push(v);
    }
    basis
}
