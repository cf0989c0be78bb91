//! Exact scalar arithmetic and dense exact linear algebra.
//!
//! Everything downstream (Hilbert interpolation, Macaulay ranks, map
//! evaluation) runs on the two coefficient fields defined here: arbitrary
//! precision rationals and word-sized prime fields. All values are immutable
//! after construction and all operations are pure.

mod matrix;
mod primefield;

pub use matrix::{ExactMatrix, SolveOutcome};
pub use primefield::{Fp, PrimeField, DEFAULT_PRIME, SECOND_PRIME};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational. `num_rational::BigRational` maintains the
/// canonical form we need: gcd(|num|, den) = 1 and den > 0.
pub type Rational = num_rational::BigRational;

pub fn rat_i64(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn rat_frac(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact binomial coefficient C(t, k) for arbitrary integer t, via the
/// falling factorial t(t-1)...(t-k+1)/k!. This is the extension required by
/// the Hilbert-polynomial symmetry conditions at negative arguments.
pub fn binomial_ff(t: &BigInt, k: u32) -> Rational {
    let mut num = BigInt::one();
    for i in 0..k {
        num *= t - BigInt::from(i);
    }
    let mut den = BigInt::one();
    for i in 1..=k {
        den *= BigInt::from(i);
    }
    Rational::new(num, den)
}

pub fn binomial_ff_i64(t: i64, k: u32) -> Rational {
    binomial_ff(&BigInt::from(t), k)
}

/// C(n, k) for non-negative machine integers, as u128. Panics on overflow.
pub fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128).expect("binomial overflow");
        acc /= (i + 1) as u128;
    }
    acc
}

/// Abstract field context. Elements are plain data; the context owns the
/// arithmetic. This keeps prime-field elements at one machine word and lets
/// the same elimination code run over Q and GF(p).
pub trait Field: Clone {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_rational(&self, q: &Rational) -> Self::Elem;
}

/// The rational field as a context.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn inv(&self, a: &Rational) -> Rational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_rational(&self, q: &Rational) -> Rational {
        q.clone()
    }
}

/// Integer content helpers used by the Bareiss elimination.
pub fn rational_is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

pub fn rational_to_bigint(q: &Rational) -> Option<BigInt> {
    if rational_is_integer(q) {
        Some(q.numer().clone())
    } else {
        None
    }
}

pub fn bigint_abs(v: &BigInt) -> BigInt {
    v.abs()
}
