//! Integer-valued polynomials in binomial basis, Hilbert-polynomial
//! interpolation for base loci, and the Castelnuovo-type bound suite.
//!
//! The canonical representation is P(t) = a_0 C(t,r) + a_1 C(t,r-1) + ... +
//! a_r; binomial coefficients extend to negative t by falling factorials, so
//! the symmetry conditions at negative arguments are exact integer
//! constraints. Overdetermination is resolved by exact consistency only.

use crate::exactmath::{
    binomial_ff, binomial_ff_i64, binomial_u128, rat_i64, ExactMatrix, Rational, SolveOutcome,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HilbertError {
    DegreeZero,
    NonIntegralIndex { r: u32, delta: u32 },
    InvalidInput(String),
}

impl fmt::Display for HilbertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HilbertError::DegreeZero => write!(f, "operation requires degree >= 1"),
            HilbertError::NonIntegralIndex { r, delta } => {
                write!(f, "index (r+delta)/2 = ({r}+{delta})/2 is not an integer")
            }
            HilbertError::InvalidInput(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for HilbertError {}

/// Polynomial in binomial basis: P(t) = sum coeffs[k] * C(t, r-k).
#[derive(Debug, Clone, PartialEq)]
pub struct IntegerValuedPoly {
    r: u32,
    coeffs: Vec<Rational>,
}

impl IntegerValuedPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty());
        IntegerValuedPoly { r: (coeffs.len() - 1) as u32, coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_i64(c)).collect())
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    /// Binomial-basis coefficients a_0..a_r.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn eval(&self, t: i64) -> Rational {
        let tb = BigInt::from(t);
        let mut acc = Rational::zero();
        for (k, a) in self.coeffs.iter().enumerate() {
            acc += a * binomial_ff(&tb, self.r - k as u32);
        }
        acc
    }

    pub fn is_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        if self.is_integer_coeffs() {
            Some(self.coeffs.iter().map(|c| c.numer().clone()).collect())
        } else {
            None
        }
    }

    /// Sectional genus g with P_C(t) = lambda t + 1 - g the curve section
    /// obtained by r-1 finite differences: g = (r-1) a_0 - a_1 + 1.
    pub fn sectional_genus(&self) -> Result<Rational, HilbertError> {
        if self.r == 0 {
            return Err(HilbertError::DegreeZero);
        }
        let rm1 = rat_i64(self.r as i64 - 1);
        Ok(&rm1 * &self.coeffs[0] - &self.coeffs[1] + Rational::one())
    }

    /// Power-basis coefficients (constant first), for display only.
    pub fn power_basis(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.r as usize + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            let d = self.r - k as u32;
            // C(t, d) = 1/d! * sum stirling-expansion; build by polynomial product
            let mut poly = vec![Rational::one()]; // constant 1
            for i in 0..d {
                // multiply by (t - i)
                let mut next = vec![Rational::zero(); poly.len() + 1];
                for (j, c) in poly.iter().enumerate() {
                    next[j + 1] += c;
                    next[j] -= c * rat_i64(i as i64);
                }
                poly = next;
            }
            let mut fact = Rational::one();
            for i in 1..=d {
                fact *= rat_i64(i as i64);
            }
            for (j, c) in poly.iter().enumerate() {
                out[j] += a * c / &fact;
            }
        }
        out
    }
}

impl fmt::Display for IntegerValuedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", strs.join(", "))
    }
}

/// Outcome of the base-locus Hilbert-polynomial interpolation.
#[derive(Debug, Clone, PartialEq)]
pub enum Interpolation {
    Determined(IntegerValuedPoly),
    Inconsistent,
    Underdetermined(usize),
}

/// Interpolates the Hilbert polynomial of an r-dimensional base locus in P^n
/// with secant defect delta > 0. Builds the i+5 point conditions
/// P(0)=1, P(1)=n+1, P(2)=(n^2+n-2)/2, P(-1)=...=P(-i+1)=0,
/// P(-i)=(-1)^r, P(-i-1)=(-1)^r (n+1), P(-i-2)=(-1)^r (n^2+n-2)/2
/// with i = (r+delta)/2, classifies the exact linear system, and on a unique
/// solution additionally verifies the functional equation
/// P(t) = (-1)^r P(-t-i) and coefficient integrality, downgrading to
/// Inconsistent on failure.
pub fn interpolate_base_hilbert(
    n: u32,
    r: u32,
    delta: u32,
) -> Result<Interpolation, HilbertError> {
    if delta < 1 {
        return Err(HilbertError::InvalidInput("delta must be >= 1".into()));
    }
    if (r + delta) % 2 != 0 {
        return Err(HilbertError::NonIntegralIndex { r, delta });
    }
    let i = ((r + delta) / 2) as i64;
    let n = n as i64;
    let sign = if r % 2 == 0 { 1 } else { -1 };
    let p2 = Rational::new(BigInt::from(n * n + n - 2), BigInt::from(2));

    let mut conditions: Vec<(i64, Rational)> = vec![
        (0, rat_i64(1)),
        (1, rat_i64(n + 1)),
        (2, p2.clone()),
    ];
    for t in (1 - i)..0 {
        conditions.push((t, Rational::zero()));
    }
    conditions.push((-i, rat_i64(sign)));
    conditions.push((-i - 1, rat_i64(sign * (n + 1))));
    conditions.push((-i - 2, rat_i64(sign) * p2));

    let unknowns = r as usize + 1;
    let mut entries = Vec::with_capacity(conditions.len() * unknowns);
    let mut rhs = Vec::with_capacity(conditions.len());
    for (t, v) in &conditions {
        for k in 0..unknowns {
            entries.push(binomial_ff_i64(*t, r - k as u32));
        }
        rhs.push(v.clone());
    }
    let m = ExactMatrix::from_rationals(conditions.len(), unknowns, entries);
    match m.solve_linear(&rhs) {
        SolveOutcome::Inconsistent => Ok(Interpolation::Inconsistent),
        SolveOutcome::Underdetermined(d) => Ok(Interpolation::Underdetermined(d)),
        SolveOutcome::Unique(coeffs) => {
            let p = IntegerValuedPoly::new(coeffs);
            // functional equation as polynomial identity: degree <= r, so
            // agreement at r+1 fresh points suffices; we check r+3.
            for t in 3..(r as i64 + 6) {
                let lhs = p.eval(t);
                let rhs = p.eval(-t - i) * rat_i64(sign);
                if lhs != rhs {
                    return Ok(Interpolation::Inconsistent);
                }
            }
            if !p.is_integer_coeffs() || p.leading().is_negative() || p.leading().is_zero() {
                return Ok(Interpolation::Inconsistent);
            }
            Ok(Interpolation::Determined(p))
        }
    }
}

/// Castelnuovo's bound pi_0(lambda, N) = C(q0,2) N + q0 r0 where
/// lambda - 1 = q0 N + r0, 0 <= r0 < N.
pub fn castelnuovo_pi0(lambda: u64, n_dim: u64) -> u64 {
    assert!(lambda >= 1 && n_dim >= 2, "requires lambda >= 1, N >= 2");
    let q0 = (lambda - 1) / n_dim;
    let r0 = (lambda - 1) % n_dim;
    (binomial_u128(q0, 2) as u64) * n_dim + q0 * r0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundError {
    ThetaOutOfRange { lambda: u64, n_dim: u64, theta: u64 },
}

impl fmt::Display for BoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundError::ThetaOutOfRange { lambda, n_dim, theta } => write!(
                f,
                "theta={theta} outside 0 < theta <= lambda - 2N - 1 for lambda={lambda}, N={n_dim}"
            ),
        }
    }
}

impl std::error::Error for BoundError {}

fn check_theta_range(lambda: u64, n_dim: u64, theta: u64) -> Result<(), BoundError> {
    if theta == 0 || lambda < 2 * n_dim + 1 + theta {
        return Err(BoundError::ThetaOutOfRange { lambda, n_dim, theta });
    }
    Ok(())
}

/// Fano's refinement: g <= pi_0(lambda - theta, N) + theta, valid for
/// 0 < theta <= lambda - 2N - 1.
pub fn fano_bound(lambda: u64, n_dim: u64, theta: u64) -> Result<u64, BoundError> {
    check_theta_range(lambda, n_dim, theta)?;
    Ok(castelnuovo_pi0(lambda - theta, n_dim) + theta)
}

/// Ciliberto's refinement theta(lambda, N): with
/// lambda - 1 = mu (2N + theta) + eta, 0 <= eta < 2N + theta, the bound is
/// mu^2 (2N+theta) - mu N + 2 mu eta, plus (eta - N) when eta >= N.
pub fn ciliberto_theta(lambda: u64, n_dim: u64, theta: u64) -> Result<u64, BoundError> {
    check_theta_range(lambda, n_dim, theta)?;
    let m = 2 * n_dim + theta;
    let mu = (lambda - 1) / m;
    let eta = (lambda - 1) % m;
    let mut v = mu * mu * m + 2 * mu * eta;
    v -= mu * n_dim;
    if eta >= n_dim {
        v += eta - n_dim;
    }
    Ok(v)
}

/// Cap on the number of points of a zero-dimensional quadratic scheme given
/// the conditions h_Lambda(2) it imposes on quadrics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointCap {
    Bounded(u64),
    /// Holds only for points in symmetric position and N >= min_n.
    BoundedSymmetric { cap: u64, min_n: u64 },
    Unbounded,
}

impl PointCap {
    pub fn value(&self) -> Option<u64> {
        match self {
            PointCap::Bounded(v) => Some(*v),
            PointCap::BoundedSymmetric { cap, .. } => Some(*cap),
            PointCap::Unbounded => None,
        }
    }
}

pub fn max_points_for_h2(n_dim: u64, h2: u64) -> Result<PointCap, HilbertError> {
    if h2 < n_dim + 1 {
        return Err(HilbertError::InvalidInput(format!(
            "h2={h2} below N+1={}",
            n_dim + 1
        )));
    }
    Ok(if h2 <= 2 * n_dim {
        PointCap::Bounded(h2)
    } else if h2 == 2 * n_dim + 1 {
        PointCap::Bounded(2 * n_dim + 2)
    } else if h2 == 2 * n_dim + 2 {
        PointCap::Bounded(2 * n_dim + 4)
    } else if h2 == 2 * n_dim + 3 {
        PointCap::BoundedSymmetric { cap: 2 * n_dim + 6, min_n: 4 }
    } else if h2 == 2 * n_dim + 4 {
        PointCap::BoundedSymmetric { cap: 2 * n_dim + 8, min_n: 6 }
    } else {
        PointCap::Unbounded
    })
}

/// Conjectural Eisenbud-Green-Harris cap: with the unique decomposition
/// m = (N+1) + C(b,2) + c, b > c >= 0, the bound is (2b - c + 1) 2^(N-b-1).
pub fn egh_bound(n_dim: u64, m: u64) -> Result<u64, HilbertError> {
    if m < n_dim + 1 {
        return Err(HilbertError::InvalidInput(format!(
            "m={m} below N+1={}; no decomposition",
            n_dim + 1
        )));
    }
    let (b, c) = egh_decompose(n_dim, m);
    if b + 1 > n_dim {
        return Err(HilbertError::InvalidInput(format!(
            "decomposition b={b} leaves negative exponent for N={n_dim}"
        )));
    }
    Ok((2 * b - c + 1) * (1u64 << (n_dim - b - 1)))
}

/// The unique (b, c) with m = (N+1) + C(b,2) + c and b > c >= 0.
pub fn egh_decompose(n_dim: u64, m: u64) -> (u64, u64) {
    let mp = m - (n_dim + 1);
    let mut b = 0u64;
    while binomial_u128(b + 1, 2) <= mp as u128 {
        b += 1;
    }
    let c = mp - binomial_u128(b, 2) as u64;
    debug_assert!(c < b || (b == 0 && c == 0));
    (b, c)
}
