//! Word-sized prime fields GF(p), p < 2^31.

use super::{Field, Rational};
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Default modulus: the largest prime below 2^31. Products of two reduced
/// elements stay below 2^62 and fit in a u64 without overflow.
pub const DEFAULT_PRIME: u64 = 2_147_483_629;

/// Second prime used to double-check ranks that gate acceptance; an unlucky
/// prime can drop a rank, two independent ones agreeing bounds the risk.
pub const SECOND_PRIME: u64 = 2_147_483_587;

/// A prime-field context. Elements are reduced u64 values in [0, p).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

/// An element of GF(p) tagged with its modulus, for use at API boundaries
/// where a bare u64 would be ambiguous.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub value: u64,
    pub modulus: u64,
}

impl PrimeField {
    /// Builds the field, checking the modulus is prime, >= 2^20 and < 2^31.
    pub fn new(p: u64) -> Result<Self, String> {
        if p < (1 << 20) {
            return Err(format!("modulus {p} below 2^20"));
        }
        if p >= (1 << 31) {
            return Err(format!("modulus {p} not below 2^31"));
        }
        if !is_prime_u64(p) {
            return Err(format!("modulus {p} is not prime"));
        }
        Ok(PrimeField { p })
    }

    pub fn default_field() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }

    pub fn second_field() -> Self {
        PrimeField { p: SECOND_PRIME }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: i64) -> u64 {
        let p = self.p as i128;
        (((v as i128 % p) + p) % p) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    pub fn tag(&self, value: u64) -> Fp {
        Fp { value: value % self.p, modulus: self.p }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in GF(p)");
        self.pow(*a, self.p - 2)
    }
    fn from_rational(&self, q: &Rational) -> u64 {
        let p_big = num_bigint::BigInt::from(self.p);
        let num = q.numer().mod_floor(&p_big).to_u64().unwrap();
        let den = q.denom().mod_floor(&p_big).to_u64().unwrap();
        assert!(den != 0, "denominator divisible by modulus");
        self.mul(&num, &self.inv(&den))
    }
}

/// Deterministic primality for u64 below 2^31: trial division by odd numbers
/// up to sqrt(p). The bound keeps this instantaneous.
pub fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_primes_are_prime() {
        assert!(is_prime_u64(DEFAULT_PRIME));
        assert!(is_prime_u64(SECOND_PRIME));
        assert!(DEFAULT_PRIME < 1 << 31);
        assert!(PrimeField::new(DEFAULT_PRIME).is_ok());
        assert!(PrimeField::new(1 << 21).is_err()); // not prime
        assert!(PrimeField::new(65537).is_err()); // below 2^20
    }

    #[test]
    fn field_ops() {
        let f = PrimeField::default_field();
        let a = f.elem(-3);
        assert_eq!(f.add(&a, &3), 0);
        let b = 123456789u64;
        assert_eq!(f.mul(&b, &f.inv(&b)), 1);
    }
}
