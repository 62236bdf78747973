//! Hilbert symbols `(a, b)_v` over ℚ at every place `v`.
//!
//! The closed forms work on valuations and unit residues: for an odd prime
//! only `u mod p` matters, at 2 only `u mod 8`. [`hilbert_oracle`] decides the
//! same symbol by searching for a Hensel-certified zero of `z² − ax² − by²`
//! and shares no code with the closed forms.

mod oracle;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{
    legendre, parts_u128, prime_divisors, unit_part, unit_residue, vp, Prime, Rat, Sign,
};
use crate::error::{Error, Result};

pub use oracle::hilbert_oracle;

/// A place of ℚ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinity,
    Finite(Prime),
}

impl Place {
    pub fn prime(p: u64) -> Result<Self> {
        Prime::new(p).map(Place::Finite)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => f.write_str("inf"),
            Place::Finite(p) => p.fmt(f),
        }
    }
}

impl FromStr for Place {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "oo" => Ok(Place::Infinity),
            other => {
                let p: u64 = other
                    .parse()
                    .map_err(|_| Error::Domain(format!("`{other}` is not a place")))?;
                Place::prime(p)
            }
        }
    }
}

fn nonzero(a: &Rat, b: &Rat) -> Result<()> {
    if a.is_zero() || b.is_zero() {
        Err(Error::ZeroArgument)
    } else {
        Ok(())
    }
}

/// `(-1)^{αβ(p-1)/2} · (u|p)^β · (v|p)^α` from valuations and unit symbols.
pub(crate) fn odd_kernel(alpha: i64, lu: i32, beta: i64, lv: i32, p: u64) -> Sign {
    let half = ((p - 1) / 2) as i64;
    let sign = Sign::from_parity((alpha & 1) * (beta & 1) * (half & 1));
    let su = if lu > 0 { Sign::Plus } else { Sign::Minus };
    let sv = if lv > 0 { Sign::Plus } else { Sign::Minus };
    sign * su.pow(beta) * sv.pow(alpha)
}

#[inline]
pub(crate) fn epsilon(x: u64) -> i64 {
    (((x % 8) - 1) / 2 % 2) as i64
}

#[inline]
pub(crate) fn omega(x: u64) -> i64 {
    let x = x % 8;
    ((x * x - 1) / 8 % 2) as i64
}

/// `(-1)^{ε(u)ε(v) + αω(v) + βω(u)}` for odd unit residues `u, v` mod 8.
pub(crate) fn two_kernel(alpha: i64, u8: u64, beta: i64, v8: u64) -> Sign {
    debug_assert!(u8 % 2 == 1 && v8 % 2 == 1);
    Sign::from_parity(epsilon(u8) * epsilon(v8) + alpha * omega(v8) + beta * omega(u8))
}

/// Legendre symbol of a rational p-adic unit.
fn unit_legendre(u: &Rat, p: Prime) -> Result<i32> {
    let m: BigInt = u.numer() * u.denom();
    legendre(&m, p)
}

pub fn hilbert_at_odd_prime(a: &Rat, b: &Rat, p: Prime) -> Result<Sign> {
    nonzero(a, b)?;
    if p.is_two() {
        return Err(Error::EvenPrime(2));
    }
    let alpha = vp(a, p)?;
    let beta = vp(b, p)?;
    let lu = unit_legendre(&unit_part(a, p)?, p)?;
    let lv = unit_legendre(&unit_part(b, p)?, p)?;
    Ok(odd_kernel(alpha, lu, beta, lv, p.get()))
}

pub fn hilbert_at_two(a: &Rat, b: &Rat) -> Result<Sign> {
    nonzero(a, b)?;
    let two = Prime::TWO;
    let alpha = vp(a, two)?;
    let beta = vp(b, two)?;
    let u = unit_residue(&unit_part(a, two)?, 8);
    let v = unit_residue(&unit_part(b, two)?, 8);
    Ok(two_kernel(alpha, u, beta, v))
}

pub fn hilbert_at_infinity(a: &Rat, b: &Rat) -> Result<Sign> {
    nonzero(a, b)?;
    Ok(if a.is_negative() && b.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    })
}

pub fn hilbert(a: &Rat, b: &Rat, v: Place) -> Result<Sign> {
    match v {
        Place::Infinity => hilbert_at_infinity(a, b),
        Place::Finite(p) if p.is_two() => hilbert_at_two(a, b),
        Place::Finite(p) => hilbert_at_odd_prime(a, b, p),
    }
}

/// Places where `(a, b)_v` can differ from +1: ∞, 2, and the odd primes
/// dividing a numerator or denominator.
pub fn relevant_places(a: &Rat, b: &Rat) -> Result<Vec<Place>> {
    let mut primes = Vec::new();
    for x in [a, b] {
        let (n, d) = parts_u128(x)?;
        primes.extend(prime_divisors(n));
        primes.extend(prime_divisors(d));
    }
    primes.push(Prime::TWO);
    primes.sort();
    primes.dedup();
    let mut places = vec![Place::Infinity];
    places.extend(primes.into_iter().map(Place::Finite));
    Ok(places)
}

/// Product of `(a, b)_v` over all places. Always +1.
pub fn reciprocity_check(a: &Rat, b: &Rat) -> Result<Sign> {
    nonzero(a, b)?;
    relevant_places(a, b)?
        .into_iter()
        .map(|v| hilbert(a, b, v))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn fin(p: u64) -> Place {
        Place::prime(p).unwrap()
    }

    fn p(q: u64) -> Prime {
        Prime::new(q).unwrap()
    }

    #[test]
    fn odd_prime_examples() {
        assert_eq!(
            hilbert_at_odd_prime(&rat(-1, 12), &rat(-1, 3), p(3)),
            Ok(Sign::Minus)
        );
        assert_eq!(
            hilbert_at_odd_prime(&int(3), &int(3), p(3)),
            Ok(Sign::Minus)
        );
        for b in [-7, -1, 2, 3, 25] {
            assert_eq!(hilbert_at_odd_prime(&int(1), &int(b), p(3)), Ok(Sign::Plus));
        }
        assert_eq!(
            hilbert_at_odd_prime(&int(0), &int(1), p(3)),
            Err(Error::ZeroArgument)
        );
        assert_eq!(
            hilbert_at_odd_prime(&int(1), &int(1), p(2)),
            Err(Error::EvenPrime(2))
        );
    }

    #[test]
    fn two_adic_examples() {
        assert_eq!(hilbert_at_two(&int(-1), &int(-1)), Ok(Sign::Minus));
        assert_eq!(hilbert_at_two(&int(2), &int(2)), Ok(Sign::Plus));
        for b in [-6, -1, 2, 3, 5, 7] {
            assert_eq!(hilbert_at_two(&int(1), &int(b)), Ok(Sign::Plus));
        }
        // (2, 3)_2 = (-1)^{ω(3)} = -1
        assert_eq!(hilbert_at_two(&int(2), &int(3)), Ok(Sign::Minus));
    }

    #[test]
    fn real_examples() {
        assert_eq!(hilbert_at_infinity(&int(-1), &int(-1)), Ok(Sign::Minus));
        assert_eq!(hilbert_at_infinity(&int(1), &int(-1)), Ok(Sign::Plus));
        assert_eq!(hilbert_at_infinity(&rat(-1, 2), &int(-1)), Ok(Sign::Minus));
    }

    #[test]
    fn dispatch() {
        let m1 = int(-1);
        assert_eq!(hilbert(&m1, &m1, Place::Infinity), Ok(Sign::Minus));
        assert_eq!(hilbert(&m1, &m1, fin(2)), Ok(Sign::Minus));
        assert_eq!(hilbert(&m1, &m1, fin(5)), Ok(Sign::Plus));
    }

    #[test]
    fn reciprocity_examples() {
        assert_eq!(reciprocity_check(&int(-1), &int(-1)), Ok(Sign::Plus));
        assert_eq!(reciprocity_check(&int(1), &rat(-7, 3)), Ok(Sign::Plus));
        assert_eq!(reciprocity_check(&rat(-5, 3), &rat(14, 9)), Ok(Sign::Plus));
        let places: Vec<String> = relevant_places(&rat(-5, 3), &rat(14, 9))
            .unwrap()
            .iter()
            .map(Place::to_string)
            .collect();
        assert_eq!(places, ["inf", "2", "3", "5", "7"]);
    }

    #[test]
    fn place_parsing() {
        assert_eq!("inf".parse::<Place>(), Ok(Place::Infinity));
        assert_eq!("7".parse::<Place>(), Ok(fin(7)));
        assert!("8".parse::<Place>().is_err());
    }
}
