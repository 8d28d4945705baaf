//! Integer lattices in Hermite normal form, exact over BigInt.
//!
//! Row convention: basis rows span the lattice, pivot columns strictly
//! increase, pivots are positive, and entries above a pivot are reduced into
//! `[0, pivot)`. The HNF is the unique canonical basis, so lattice equality is
//! basis equality. Matrices here are tiny (ambient rank <= ~12), so plain
//! exact row reduction is the right tool.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;

pub type Row = Vec<BigInt>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntLattice {
    ambient: usize,
    basis: Vec<Row>,
}

pub fn row_from_i64(v: &[i64]) -> Row {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// In-place row-style Hermite normal form; returns the nonzero rows.
fn hnf_rows(mut rows: Vec<Row>, ambient: usize) -> Vec<Row> {
    let mut pivot_row = 0usize;
    for col in 0..ambient {
        // Clear column `col` below `pivot_row` by gcd steps.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..rows.len() {
                if !rows[r][col].is_zero() {
                    best = match best {
                        None => Some(r),
                        Some(b) => {
                            if rows[r][col].abs() < rows[b][col].abs() {
                                Some(r)
                            } else {
                                Some(b)
                            }
                        }
                    };
                }
            }
            let Some(b) = best else { break };
            rows.swap(pivot_row, b);
            if rows[pivot_row][col].is_negative() {
                for x in rows[pivot_row].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            let mut done = true;
            let pivot_val = rows[pivot_row][col].clone();
            for r in pivot_row + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = div_floor_bigint(&rows[r][col], &pivot_val);
                if !q.is_zero() {
                    for c in 0..ambient {
                        let s = &rows[pivot_row][c] * &q;
                        rows[r][c] -= s;
                    }
                }
                if !rows[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if pivot_row < rows.len() && !rows[pivot_row][col].is_zero() {
            pivot_row += 1;
        }
    }
    rows.truncate(pivot_row);
    // Reduce entries above each pivot into [0, pivot), walking pivots left to
    // right so earlier reductions are not disturbed.
    for i in 0..rows.len() {
        let col = rows[i].iter().position(|x| !x.is_zero()).unwrap();
        let pivot_val = rows[i][col].clone();
        for r in 0..i {
            let q = div_floor_bigint(&rows[r][col], &pivot_val);
            if q.is_zero() {
                continue;
            }
            for c in 0..rows[i].len() {
                let s = &rows[i][c] * &q;
                rows[r][c] -= s;
            }
        }
    }
    rows
}

fn div_floor_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = (a / b, a % b);
    if !r.is_zero() && (r.is_negative() != b.is_negative()) {
        q - 1
    } else {
        q
    }
}

impl IntLattice {
    /// HNF basis of the row span; zero rows are dropped.
    pub fn hnf(ambient: usize, rows: Vec<Row>) -> Result<Self> {
        for r in &rows {
            if r.len() != ambient {
                return Err(Error::AmbientMismatch(r.len(), ambient));
            }
        }
        Ok(IntLattice {
            ambient,
            basis: hnf_rows(rows, ambient),
        })
    }

    pub fn zero(ambient: usize) -> Self {
        IntLattice {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let mut basis = Vec::new();
        for i in 0..ambient {
            let mut row = vec![BigInt::zero(); ambient];
            row[i] = BigInt::from(1);
            basis.push(row);
        }
        IntLattice { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Row] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Exact membership test by back-substitution along the pivot structure.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut rem: Row = v.to_vec();
        for row in &self.basis {
            let col = row.iter().position(|x| !x.is_zero()).unwrap();
            if rem[..col].iter().any(|x| !x.is_zero()) {
                return false;
            }
            if rem[col].is_zero() {
                continue;
            }
            let (q, r) = (&rem[col] / &row[col], &rem[col] % &row[col]);
            if !r.is_zero() {
                return false;
            }
            for c in 0..self.ambient {
                let s = &row[c] * &q;
                rem[c] -= s;
            }
        }
        rem.iter().all(|x| x.is_zero())
    }

    /// Left kernel of `rows` (vectors `w` with `w * rows = 0`), as an HNF
    /// lattice in Z^(number of rows). Computed by reducing `[rows | I]` with
    /// unimodular row operations and collecting the identity parts of rows
    /// whose matrix part vanished.
    pub fn left_kernel(rows: &[Row], width: usize) -> Result<Self> {
        let n = rows.len();
        for r in rows {
            if r.len() != width {
                return Err(Error::AmbientMismatch(r.len(), width));
            }
        }
        let mut aug: Vec<Row> = Vec::with_capacity(n);
        for (i, r) in rows.iter().enumerate() {
            let mut row = r.clone();
            for j in 0..n {
                row.push(if i == j { BigInt::from(1) } else { BigInt::zero() });
            }
            aug.push(row);
        }
        // Echelonize only on the first `width` columns.
        let mut pivot_row = 0usize;
        for col in 0..width {
            loop {
                let mut best: Option<usize> = None;
                for r in pivot_row..aug.len() {
                    if !aug[r][col].is_zero() {
                        best = match best {
                            None => Some(r),
                            Some(b) => {
                                if aug[r][col].abs() < aug[b][col].abs() {
                                    Some(r)
                                } else {
                                    Some(b)
                                }
                            }
                        };
                    }
                }
                let Some(b) = best else { break };
                aug.swap(pivot_row, b);
                let mut done = true;
                let pv = aug[pivot_row][col].clone();
                for r in pivot_row + 1..aug.len() {
                    if aug[r][col].is_zero() {
                        continue;
                    }
                    let q = div_floor_bigint(&aug[r][col], &pv);
                    if !q.is_zero() {
                        for c in 0..width + n {
                            let s = &aug[pivot_row][c] * &q;
                            aug[r][c] -= s;
                        }
                    }
                    if !aug[r][col].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if pivot_row < aug.len() && !aug[pivot_row][col].is_zero() {
                pivot_row += 1;
            }
        }
        let mut kernel = Vec::new();
        for row in aug.iter().skip(pivot_row) {
            debug_assert!(row[..width].iter().all(|x| x.is_zero()));
            kernel.push(row[width..].to_vec());
        }
        IntLattice::hnf(n, kernel)
    }

    /// HNF basis of the intersection, by the kernel-of-stacked-basis
    /// construction.
    pub fn intersect(&self, other: &IntLattice) -> Result<IntLattice> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(IntLattice::zero(self.ambient));
        }
        let mut stacked: Vec<Row> = self.basis.clone();
        stacked.extend(other.basis.iter().cloned());
        let kernel = IntLattice::left_kernel(&stacked, self.ambient)?;
        let ra = self.basis.len();
        let mut rows = Vec::new();
        for w in kernel.basis() {
            let mut v = vec![BigInt::zero(); self.ambient];
            for (i, wi) in w.iter().take(ra).enumerate() {
                if wi.is_zero() {
                    continue;
                }
                for c in 0..self.ambient {
                    let s = &self.basis[i][c] * wi;
                    v[c] += s;
                }
            }
            rows.push(v);
        }
        IntLattice::hnf(self.ambient, rows)
    }
}

impl fmt::Display for IntLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return write!(f, "{{0}}");
        }
        for (i, row) in self.basis.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}
