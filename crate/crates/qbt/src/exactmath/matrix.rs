//! Dense exact matrices: rank and linear solve.
//!
//! Rank over a prime field is plain Gaussian elimination. Rank over Q clears
//! denominators and runs fraction-free Bareiss on BigInt, which keeps entry
//! growth polynomial. Solving classifies the affine system exactly.

use super::{Field, PrimeField, Rational, Rationals};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Dense row-major matrix over a field context.
#[derive(Clone, Debug)]
pub struct ExactMatrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<F::Elem>,
    field: F,
}

/// Exact classification of a linear system.
#[derive(Clone, Debug, PartialEq)]
pub enum SolveOutcome {
    Unique(Vec<Rational>),
    Inconsistent,
    /// Consistent with a solution space of the given dimension.
    Underdetermined(usize),
}

impl<F: Field> ExactMatrix<F> {
    pub fn new(rows: usize, cols: usize, entries: Vec<F::Elem>, field: F) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        ExactMatrix { rows, cols, entries, field }
    }

    pub fn zero(rows: usize, cols: usize, field: F) -> Self {
        let entries = vec![field.zero(); rows * cols];
        ExactMatrix { rows, cols, entries, field }
    }

    pub fn at(&self, i: usize, j: usize) -> &F::Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Exact rank by Gaussian elimination over the field context.
    pub fn rank(&self) -> usize {
        let f = &self.field;
        let mut m = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let mut piv = None;
            for r in rank..rows {
                if !f.is_zero(&m[r * cols + col]) {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            if piv != rank {
                for j in 0..cols {
                    m.swap(rank * cols + j, piv * cols + j);
                }
            }
            let inv = f.inv(&m[rank * cols + col]);
            for j in col..cols {
                m[rank * cols + j] = f.mul(&m[rank * cols + j], &inv);
            }
            for r in 0..rows {
                if r != rank && !f.is_zero(&m[r * cols + col]) {
                    let factor = m[r * cols + col].clone();
                    for j in col..cols {
                        let t = f.mul(&factor, &m[rank * cols + j]);
                        m[r * cols + j] = f.sub(&m[r * cols + j], &t);
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

impl ExactMatrix<Rationals> {
    pub fn from_rationals(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        Self::new(rows, cols, entries, Rationals)
    }

    /// Rank over Q via fraction-free Bareiss on the denominator-cleared
    /// integer matrix.
    pub fn rank_bareiss(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let mut lcm = BigInt::from(1);
                for j in 0..self.cols {
                    let d = self.at(i, j).denom();
                    lcm = num_integer::lcm(lcm, d.clone());
                }
                (0..self.cols)
                    .map(|j| {
                        let q = self.at(i, j);
                        q.numer() * (&lcm / q.denom())
                    })
                    .collect()
            })
            .collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0usize;
        let mut prev = BigInt::from(1);
        for col in 0..cols {
            let mut piv = None;
            for r in rank..rows {
                if !m[r][col].is_zero() {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            m.swap(rank, piv);
            for r in rank + 1..rows {
                for j in col + 1..cols {
                    let v = (&m[rank][col] * &m[r][j] - &m[r][col] * &m[rank][j]) / &prev;
                    m[r][j] = v;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[rank][col].abs();
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    /// Classifies m.x = rhs exactly. `Unique` is returned only when the
    /// kernel is trivial, and the solution satisfies the system exactly.
    pub fn solve_linear(&self, rhs: &[Rational]) -> SolveOutcome {
        assert_eq!(rhs.len(), self.rows, "rhs length must equal rows");
        let f = Rationals;
        let cols = self.cols;
        let aug = cols + 1;
        let mut m: Vec<Rational> = Vec::with_capacity(self.rows * aug);
        for i in 0..self.rows {
            for j in 0..cols {
                m.push(self.at(i, j).clone());
            }
            m.push(rhs[i].clone());
        }
        let mut rank = 0usize;
        let mut pivot_cols = Vec::new();
        for col in 0..cols {
            let mut piv = None;
            for r in rank..self.rows {
                if !m[r * aug + col].is_zero() {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            if piv != rank {
                for j in 0..aug {
                    m.swap(rank * aug + j, piv * aug + j);
                }
            }
            let inv = f.inv(&m[rank * aug + col]);
            for j in col..aug {
                m[rank * aug + j] = &m[rank * aug + j] * &inv;
            }
            for r in 0..self.rows {
                if r != rank && !m[r * aug + col].is_zero() {
                    let factor = m[r * aug + col].clone();
                    for j in col..aug {
                        let t = &factor * &m[rank * aug + j];
                        m[r * aug + j] = &m[r * aug + j] - t;
                    }
                }
            }
            pivot_cols.push(col);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        for r in rank..self.rows {
            if !m[r * aug + cols].is_zero() {
                return SolveOutcome::Inconsistent;
            }
        }
        if rank < cols {
            return SolveOutcome::Underdetermined(cols - rank);
        }
        let mut sol = vec![Rational::zero(); cols];
        for (idx, &c) in pivot_cols.iter().enumerate() {
            sol[c] = m[idx * aug + cols].clone();
        }
        SolveOutcome::Unique(sol)
    }
}

impl ExactMatrix<PrimeField> {
    pub fn from_ints_mod(rows: usize, cols: usize, entries: &[i64], field: PrimeField) -> Self {
        let e = entries.iter().map(|&v| field.elem(v)).collect();
        Self::new(rows, cols, e, field)
    }
}

/// Incremental sparse row-echelon accumulator over GF(p). Rows arrive as
/// sorted (column, coefficient) lists; the basis keeps fully reduced pivot
/// rows keyed by leading column. Used for Macaulay matrices, whose rows are
/// very sparse relative to the column count.
pub struct SparseEchelon {
    field: PrimeField,
    pivots: std::collections::BTreeMap<u32, Vec<(u32, u64)>>,
}

impl SparseEchelon {
    pub fn new(field: PrimeField) -> Self {
        SparseEchelon { field, pivots: std::collections::BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces the row against the current basis; if a nonzero remainder
    /// survives it becomes a new pivot row. Returns true when rank grew.
    pub fn insert(&mut self, row: Vec<(u32, u64)>) -> bool {
        let f = self.field;
        let mut row: std::collections::BTreeMap<u32, u64> =
            row.into_iter().filter(|&(_, v)| v != 0).collect();
        loop {
            let Some((&lead, &lead_coef)) = row.iter().next() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(piv) => {
                    for &(c, v) in piv {
                        let delta = f.mul(&lead_coef, &v);
                        let entry = row.entry(c).or_insert(0);
                        *entry = f.sub(entry, &delta);
                        if *entry == 0 {
                            row.remove(&c);
                        }
                    }
                }
                None => {
                    let inv = f.inv(&lead_coef);
                    let norm: Vec<(u32, u64)> =
                        row.iter().map(|(&c, &v)| (c, f.mul(&v, &inv))).collect();
                    self.pivots.insert(lead, norm);
                    return true;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat_i64;

    fn qmat(rows: usize, cols: usize, vals: &[i64]) -> ExactMatrix<Rationals> {
        ExactMatrix::from_rationals(rows, cols, vals.iter().map(|&v| rat_i64(v)).collect())
    }

    #[test]
    fn rank_identity() {
        let m = qmat(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.rank_bareiss(), 3);
    }

    #[test]
    fn rank_proportional_rows() {
        let m = qmat(2, 2, &[1, 2, 2, 4]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.rank_bareiss(), 1);
    }

    #[test]
    fn solve_classification() {
        let id = qmat(2, 2, &[1, 0, 0, 1]);
        assert_eq!(
            id.solve_linear(&[rat_i64(1), rat_i64(2)]),
            SolveOutcome::Unique(vec![rat_i64(1), rat_i64(2)])
        );
        let sing = qmat(2, 2, &[1, 1, 1, 1]);
        assert_eq!(sing.solve_linear(&[rat_i64(0), rat_i64(1)]), SolveOutcome::Inconsistent);
        let wide = qmat(1, 2, &[1, 1]);
        assert_eq!(wide.solve_linear(&[rat_i64(3)]), SolveOutcome::Underdetermined(1));
    }

    #[test]
    fn unique_solution_satisfies_system() {
        let m = qmat(3, 2, &[2, 1, 1, -1, 3, 0]);
        let rhs = [rat_i64(4), rat_i64(-1), rat_i64(3)];
        if let SolveOutcome::Unique(x) = m.solve_linear(&rhs) {
            for i in 0..3 {
                let lhs = m.at(i, 0) * &x[0] + m.at(i, 1) * &x[1];
                assert_eq!(lhs, rhs[i]);
            }
        } else {
            panic!("expected unique solution");
        }
    }

    #[test]
    fn modular_rank_matches_rational() {
        let vals = [3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8];
        let q = qmat(3, 4, &vals);
        let f = PrimeField::default_field();
        let p = ExactMatrix::from_ints_mod(3, 4, &vals, f);
        assert_eq!(q.rank_bareiss(), p.rank());
    }

    #[test]
    fn sparse_echelon_rank() {
        let f = PrimeField::default_field();
        let mut ech = SparseEchelon::new(f);
        assert!(ech.insert(vec![(0, 1), (2, 5)]));
        assert!(ech.insert(vec![(1, 2)]));
        assert!(!ech.insert(vec![(0, 2), (1, 4), (2, 10)]));
        assert_eq!(ech.rank(), 2);
    }
}
