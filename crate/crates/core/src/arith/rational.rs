use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Prime;
use crate::error::{Error, Result};

/// Exact rational in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(m: i64) -> Rat {
    Rat::from_integer(BigInt::from(m))
}

/// Exponent of `p` in a nonzero integer, together with the cofactor.
pub(crate) fn split_int(m: &BigInt, p: Prime) -> (u32, BigInt) {
    debug_assert!(!m.is_zero());
    let p = BigInt::from(p.get());
    let mut rest = m.clone();
    let mut v = 0;
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            return (v, rest);
        }
        rest = q;
        v += 1;
    }
}

/// p-adic valuation of a nonzero rational.
pub fn vp(x: &Rat, p: Prime) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let (a, _) = split_int(x.numer(), p);
    let (b, _) = split_int(x.denom(), p);
    Ok(i64::from(a) - i64::from(b))
}

/// The factor `r` with `vp(r) = 0` and `x = p^vp(x) · r`.
pub fn unit_part(x: &Rat, p: Prime) -> Result<Rat> {
    if x.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let (_, a) = split_int(x.numer(), p);
    let (_, b) = split_int(x.denom(), p);
    Ok(Rat::new(a, b))
}

/// Residue of a p-adic unit `x` modulo `m`, where `m` is a power of `p`.
pub(crate) fn unit_residue(x: &Rat, m: u64) -> u64 {
    let m_big = BigInt::from(m);
    let num = x.numer().mod_floor(&m_big).to_u64().unwrap();
    let den = x.denom().mod_floor(&m_big).to_u64().unwrap();
    let inv = mod_inverse(den, m).expect("denominator is a unit");
    ((num as u128 * inv as u128) % m as u128) as u64
}

/// Inverse of `a` modulo `m`, when it exists.
pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let g = (a as i128).extended_gcd(&(m as i128));
    if !g.gcd.is_one() {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

/// Numerator and denominator magnitudes as `u128`, for factoring.
pub(crate) fn parts_u128(x: &Rat) -> Result<(u128, u128)> {
    let n = x.numer().abs().to_u128();
    let d = x.denom().to_u128();
    match (n, d) {
        (Some(n), Some(d)) => Ok((n, d)),
        _ => Err(Error::TooLarge(x.to_string())),
    }
}
