use std::fmt;

use num_prime::nt_funcs::{factorize128, is_prime64};
use serde::Serialize;

use crate::error::{Error, Result};

/// A rational prime, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    pub const TWO: Prime = Prime(2);

    pub fn new(p: u64) -> Result<Self> {
        if is_prime64(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Like [`Prime::new`] but also rejects 2.
    pub fn odd(p: u64) -> Result<Self> {
        let p = Self::new(p)?;
        if p.is_two() {
            return Err(Error::EvenPrime(2));
        }
        Ok(p)
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_two(self) -> bool {
        self.0 == 2
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

/// Primes `p` with `lo <= p <= hi`, ascending.
pub fn primes_between(lo: u64, hi: u64) -> Vec<Prime> {
    (lo.max(2)..=hi)
        .filter(|&m| is_prime64(m))
        .map(Prime)
        .collect()
}

/// Distinct prime divisors of `m`, ascending. Empty for `m` in {0, 1}.
pub fn prime_divisors(m: u128) -> Vec<Prime> {
    if m < 2 {
        return Vec::new();
    }
    factorize128(m)
        .into_keys()
        .map(|p| Prime(p as u64))
        .collect()
}

/// Smallest quadratic non-residue modulo an odd prime.
pub fn least_nonresidue(p: Prime) -> u64 {
    debug_assert!(!p.is_two());
    let m = p.get();
    (2..m)
        .find(|&a| mod_pow(a, (m - 1) / 2, m) == m - 1)
        .expect("every odd prime has a non-residue")
}

pub(crate) fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc: u128 = 1 % m128;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        assert!(Prime::new(97).is_ok());
        assert_eq!(Prime::new(91), Err(Error::NotPrime(91)));
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Prime::odd(2), Err(Error::EvenPrime(2)));
    }

    #[test]
    fn divisors() {
        let ps: Vec<u64> = prime_divisors(360).into_iter().map(Prime::get).collect();
        assert_eq!(ps, vec![2, 3, 5]);
        assert!(prime_divisors(1).is_empty());
    }

    #[test]
    fn nonresidues() {
        assert_eq!(least_nonresidue(Prime::new(3).unwrap()), 2);
        assert_eq!(least_nonresidue(Prime::new(7).unwrap()), 3);
        assert_eq!(least_nonresidue(Prime::new(17).unwrap()), 3);
        assert_eq!(least_nonresidue(Prime::new(71).unwrap()), 7);
    }
}
