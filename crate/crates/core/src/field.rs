//! Arithmetic in the prime field F_p for an odd word-sized prime p.
//!
//! Elements are plain `u64` values in `[0, p)`. The modulus is capped at
//! 2^31 so that a product of two reduced elements fits in a `u64` before
//! reduction.

use crate::{Error, Result};

const MAX_MODULUS: u64 = 1 << 31;

/// An odd prime modulus, verified at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldCtx {
    p: u64,
}

impl FieldCtx {
    /// Builds the context for F_p, rejecting composites, 2, and moduli
    /// above 2^31.
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(Error::NotAnOddPrime(p));
        }
        Ok(FieldCtx { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        // a, b < 2^31, so the product fits in a u64.
        (a * b) % self.p
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    ///
    /// Panics on zero: callers always guard the pivot.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        let (mut old_r, mut r) = (a as i64, self.p as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1);
        old_s.rem_euclid(self.p as i64) as u64
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    pub fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }
}

/// Deterministic Miller-Rabin; the witness set {2, 7, 61} is exact for
/// every n < 4_759_123_141, which covers the 2^31 modulus cap.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 7, 61] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_odd_primes_only() {
        for p in [3u64, 5, 7, 11, 101, 2147483647] {
            assert!(FieldCtx::new(p).is_ok(), "{p} should be accepted");
        }
        for p in [0u64, 1, 2, 4, 9, 15, 2147483649] {
            assert!(FieldCtx::new(p).is_err(), "{p} should be rejected");
        }
    }

    #[test]
    fn field_axioms_small() {
        let f = FieldCtx::new(7).unwrap();
        for a in 0..7 {
            for b in 0..7 {
                assert_eq!(f.add(a, b), (a + b) % 7);
                assert_eq!(f.sub(f.add(a, b), b), a);
                assert_eq!(f.mul(a, b), (a * b) % 7);
            }
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }

    #[test]
    fn inverse_near_modulus_cap() {
        let f = FieldCtx::new(2147483647).unwrap();
        for a in [1u64, 2, 12345, 2147483646] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }
}
