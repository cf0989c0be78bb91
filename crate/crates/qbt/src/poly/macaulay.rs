//! Macaulay-matrix Hilbert functions and polynomial fitting.
//!
//! `ideal_hilbert_function` is the definition: the rank of the matrix whose
//! rows are (monomial x generator) coefficient vectors in the degree-t
//! monomial basis, i.e. the dimension of the degree-t slice of the ideal
//! generated by the given forms (not its saturation).
//!
//! `fit_hilbert_polynomial` needs h(t) in a window around t = r + 2, where
//! the matrices in the original variable count blow up. It instead cuts by
//! r + 1 seeded generic hyperplanes down to an Artinian quotient, computes
//! the small Macaulay ranks there, and integrates back with prefix sums.
//! For arithmetically Cohen-Macaulay inputs (every catalog fit target) the
//! two routes agree exactly; agreement is part of the test suite, and fits
//! are additionally confirmed at a second prime.

use super::{MultiPoly, Monomial};
use crate::exactmath::{
    binomial_u128, rat_i64, ExactMatrix, Field, PrimeField, Rational, Rationals, SolveOutcome,
    SparseEchelon,
};
use crate::hilbert::IntegerValuedPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::collections::BTreeMap;
use std::fmt;

/// Hard cap on Macaulay columns, past which the dense basis is refused.
pub const MAX_MACAULAY_COLUMNS: u128 = 500_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MacaulayError {
    MixedVariableCounts,
    NotHomogeneous,
    TooManyColumns { nvars: usize, t: u32, columns: u128 },
    TooFewVariables { nvars: usize, r: u32 },
    EmptyGenerators,
}

impl fmt::Display for MacaulayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MacaulayError::MixedVariableCounts => write!(f, "generators in mixed variable counts"),
            MacaulayError::NotHomogeneous => write!(f, "generators must be homogeneous"),
            MacaulayError::TooManyColumns { nvars, t, columns } => write!(
                f,
                "degree-{t} basis in {nvars} variables has {columns} columns (cap {MAX_MACAULAY_COLUMNS})"
            ),
            MacaulayError::TooFewVariables { nvars, r } => {
                write!(f, "{nvars} variables cannot absorb {} generic sections", r + 1)
            }
            MacaulayError::EmptyGenerators => write!(f, "no generators"),
        }
    }
}

impl std::error::Error for MacaulayError {}

/// Monomials of the given total degree, descending grevlex, with their
/// column index.
fn monomial_basis(nvars: usize, t: u32) -> BTreeMap<Monomial, u32> {
    let mut list = Vec::new();
    let mut cur = vec![0u16; nvars];
    fill(&mut list, &mut cur, 0, t as u16, nvars);
    fn fill(list: &mut Vec<Monomial>, cur: &mut Vec<u16>, i: usize, rem: u16, nvars: usize) {
        if i == nvars - 1 {
            cur[i] = rem;
            list.push(Monomial(cur.clone()));
            return;
        }
        for e in (0..=rem).rev() {
            cur[i] = e;
            fill(list, cur, i + 1, rem - e, nvars);
            cur[i] = 0;
        }
    }
    list.sort();
    list.reverse(); // descending grevlex for stable column order
    list.into_iter().enumerate().map(|(i, m)| (m, i as u32)).collect()
}

fn validate<F: Field>(gens: &[MultiPoly<F>]) -> Result<usize, MacaulayError> {
    let nv = gens.first().map(|g| g.nvars).ok_or(MacaulayError::EmptyGenerators)?;
    for g in gens {
        if g.nvars != nv {
            return Err(MacaulayError::MixedVariableCounts);
        }
        if !g.is_homogeneous() {
            return Err(MacaulayError::NotHomogeneous);
        }
    }
    Ok(nv)
}

/// Dimension of the degree-t slice of the ideal generated by `gens`, over
/// the given prime field. Rows stream into a sparse echelon basis.
pub fn ideal_hilbert_function(
    gens: &[MultiPoly<Rationals>],
    t: u32,
    field: PrimeField,
) -> Result<usize, MacaulayError> {
    let reduced: Vec<MultiPoly<PrimeField>> = gens.iter().map(|g| g.reduce_mod(&field)).collect();
    ideal_hilbert_function_mod(&reduced, t, field)
}

/// Same over Q (Bareiss rank on the dense Macaulay matrix); intended for
/// small instances and cross-checks.
pub fn ideal_hilbert_function_q(
    gens: &[MultiPoly<Rationals>],
    t: u32,
) -> Result<usize, MacaulayError> {
    let nv = validate(gens)?;
    let cols = binomial_u128((nv - 1 + t as usize) as u64, t as u64);
    if cols > MAX_MACAULAY_COLUMNS {
        return Err(MacaulayError::TooManyColumns { nvars: nv, t, columns: cols });
    }
    let basis = monomial_basis(nv, t);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in gens {
        let Some(gd) = g.total_degree() else { continue };
        if gd > t {
            continue;
        }
        for (m, _) in monomial_basis(nv, t - gd) {
            let mut row = vec![Rational::from_integer(0.into()); basis.len()];
            for (gm, c) in &g.terms {
                let col = basis[&gm.mul(&m)] as usize;
                row[col] = c.clone();
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Ok(0);
    }
    let ncols = basis.len();
    let flat: Vec<Rational> = rows.into_iter().flatten().collect();
    let nrows = flat.len() / ncols;
    Ok(ExactMatrix::from_rationals(nrows, ncols, flat).rank_bareiss())
}

pub fn ideal_hilbert_function_mod(
    gens: &[MultiPoly<PrimeField>],
    t: u32,
    field: PrimeField,
) -> Result<usize, MacaulayError> {
    let nv = validate(gens)?;
    let cols = binomial_u128((nv - 1 + t as usize) as u64, t as u64);
    if cols > MAX_MACAULAY_COLUMNS {
        return Err(MacaulayError::TooManyColumns { nvars: nv, t, columns: cols });
    }
    let basis = monomial_basis(nv, t);
    let mut ech = SparseEchelon::new(field);
    for g in gens {
        let Some(gd) = g.total_degree() else { continue };
        if gd > t {
            continue;
        }
        for (m, _) in monomial_basis(nv, t - gd) {
            let mut row: Vec<(u32, u64)> = g
                .terms
                .iter()
                .map(|(gm, &c)| (basis[&gm.mul(&m)], c))
                .collect();
            row.sort_unstable_by_key(|&(c, _)| c);
            ech.insert(row);
        }
    }
    Ok(ech.rank())
}

/// h_X(t) = C(n + t, t) - dim I_t for the projective scheme cut by the
/// generated ideal (exact for degrees where the printed ideal agrees with
/// the saturation).
pub fn hilbert_function_of_quotient(
    gens: &[MultiPoly<Rationals>],
    t: u32,
    field: PrimeField,
) -> Result<u128, MacaulayError> {
    let nv = validate(gens)?;
    let total = binomial_u128((nv - 1 + t as usize) as u64, t as u64);
    Ok(total - ideal_hilbert_function(gens, t, field)? as u128)
}

#[derive(Debug, Clone, PartialEq)]
pub enum FitOutcome {
    Fitted(IntegerValuedPoly),
    /// The degree-r interpolant through the last r+1 values missed the
    /// preceding value: the window has not stabilised.
    Unstable,
}

/// Fits the degree-r Hilbert polynomial of the quotient by the generated
/// ideal through h(t_max - r .. t_max), requiring agreement at
/// t_max - r - 1 (stability window of length r + 2). h is computed by the
/// Artinian-reduction route described in the module docs, with the seeded
/// generator fixing the generic hyperplanes.
pub fn fit_hilbert_polynomial(
    gens: &[MultiPoly<Rationals>],
    r: u32,
    t_max: u32,
    field: PrimeField,
    seed: u64,
) -> Result<FitOutcome, MacaulayError> {
    assert!(t_max >= r + 2, "need t_max >= r + 2");
    let h = quotient_hilbert_series(gens, r, t_max, field, seed)?;
    let lo = (t_max - r) as usize;
    let ts: Vec<i64> = (lo..=t_max as usize).map(|t| t as i64).collect();
    let unknowns = r as usize + 1;
    let mut entries = Vec::with_capacity(ts.len() * unknowns);
    let mut rhs = Vec::with_capacity(ts.len());
    for &t in &ts {
        for k in 0..unknowns {
            entries.push(crate::exactmath::binomial_ff_i64(t, r - k as u32));
        }
        rhs.push(Rational::from_integer(h[t as usize].into()));
    }
    let m = ExactMatrix::from_rationals(ts.len(), unknowns, entries);
    let coeffs = match m.solve_linear(&rhs) {
        SolveOutcome::Unique(c) => c,
        _ => return Ok(FitOutcome::Unstable),
    };
    let p = IntegerValuedPoly::new(coeffs);
    let probe = (t_max - r - 1) as i64;
    if p.eval(probe) != Rational::from_integer(h[probe as usize].into()) {
        return Ok(FitOutcome::Unstable);
    }
    Ok(FitOutcome::Fitted(p))
}

/// h(0..t_max) of the quotient via r + 1 generic hyperplane sections and
/// prefix sums.
fn quotient_hilbert_series(
    gens: &[MultiPoly<Rationals>],
    r: u32,
    t_max: u32,
    field: PrimeField,
    seed: u64,
) -> Result<Vec<i128>, MacaulayError> {
    let nv = validate(gens)?;
    let sections = r as usize + 1;
    if sections >= nv {
        return Err(MacaulayError::TooFewVariables { nvars: nv, r });
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ field.modulus());
    let mut cur: Vec<MultiPoly<PrimeField>> = gens.iter().map(|g| g.reduce_mod(&field)).collect();
    let mut cnv = nv;
    for _ in 0..sections {
        // substitute the last variable by a random linear form in the others
        let mut linear: Vec<u64> = (0..cnv)
            .map(|_| 1 + rng.gen_range(0..field.modulus() - 1))
            .collect();
        linear[cnv - 1] = 0;
        cur = cur
            .iter()
            .map(|g| g.substitute_var(&field, cnv - 1, &linear))
            .filter(|g| !g.is_zero())
            .collect();
        cnv -= 1;
    }
    let mut h: Vec<i128> = Vec::with_capacity(t_max as usize + 1);
    for t in 0..=t_max {
        if t == 0 {
            h.push(1);
            continue;
        }
        let total = binomial_u128((cnv - 1 + t as usize) as u64, t as u64) as i128;
        let rank = ideal_hilbert_function_mod(&cur, t, field)? as i128;
        h.push(total - rank);
    }
    for _ in 0..sections {
        let mut acc = 0i128;
        for v in h.iter_mut() {
            acc += *v;
            *v = acc;
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn gens(strs: &[&str], nv: usize) -> Vec<MultiPoly<Rationals>> {
        strs.iter().map(|s| parse_poly(s, nv, "x").unwrap()).collect()
    }

    #[test]
    fn single_generator_slice() {
        // x0^2 in 2 vars at t = 3: x0^3, x0^2 x1
        let g = gens(&["x0^2"], 2);
        let f = PrimeField::default_field();
        assert_eq!(ideal_hilbert_function(&g, 3, f).unwrap(), 2);
        assert_eq!(ideal_hilbert_function_q(&g, 3).unwrap(), 2);
        // below the generator degree the slice is empty
        assert_eq!(ideal_hilbert_function(&g, 1, f).unwrap(), 0);
    }

    #[test]
    fn monotone_and_scaling_invariant() {
        let g = gens(&["x0*x1-x2^2", "x0^2+x1*x2"], 3);
        let f = PrimeField::default_field();
        let mut prev = 0;
        for t in 2..7 {
            let v = ideal_hilbert_function(&g, t, f).unwrap();
            assert!(v >= prev);
            prev = v;
        }
        // generator order and scaling do not matter
        let g2 = gens(&["3*x0^2+3*x1*x2", "x0*x1-x2^2"], 3);
        for t in 2..6 {
            assert_eq!(
                ideal_hilbert_function(&g, t, f).unwrap(),
                ideal_hilbert_function(&g2, t, f).unwrap()
            );
        }
    }

    #[test]
    fn quotient_vs_direct_small() {
        // twisted cubic in P3: h_X(t) = 3t + 1, ACM
        let g = gens(&["x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"], 4);
        let f = PrimeField::default_field();
        for t in 1..6u32 {
            let hq = hilbert_function_of_quotient(&g, t, f).unwrap();
            assert_eq!(hq, (3 * t + 1) as u128);
        }
        let series = quotient_hilbert_series(&g, 1, 5, f, 11).unwrap();
        for t in 1..6usize {
            assert_eq!(series[t], (3 * t + 1) as i128);
        }
    }

    #[test]
    fn fit_twisted_cubic() {
        let g = gens(&["x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"], 4);
        let f = PrimeField::default_field();
        match fit_hilbert_polynomial(&g, 1, 4, f, 7).unwrap() {
            FitOutcome::Fitted(p) => {
                assert_eq!(p.coeffs(), &[rat_i64(3), rat_i64(1)]);
            }
            FitOutcome::Unstable => panic!("fit should stabilise"),
        }
    }

    #[test]
    fn errors() {
        let f = PrimeField::default_field();
        let mixed = vec![
            parse_poly("x0^2", 2, "x").unwrap(),
            parse_poly("x0*x1", 3, "x").unwrap(),
        ];
        assert!(matches!(
            ideal_hilbert_function(&mixed, 2, f),
            Err(MacaulayError::MixedVariableCounts)
        ));
        let inhom = vec![parse_poly("x0^2+x1", 2, "x").unwrap()];
        assert!(matches!(
            ideal_hilbert_function(&inhom, 2, f),
            Err(MacaulayError::NotHomogeneous)
        ));
    }
}
