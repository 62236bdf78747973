use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Prime;
use crate::error::{Error, Result};

/// Legendre symbol `(a | p)` for an odd prime `p`.
pub fn legendre(a: &BigInt, p: Prime) -> Result<i32> {
    if p.is_two() {
        return Err(Error::EvenPrime(2));
    }
    let m = p.get();
    let r = a.mod_floor(&BigInt::from(m)).to_u64().unwrap();
    Ok(jacobi_u64(r, m))
}

/// Kronecker symbol `(a | b)`, defined for every pair of integers.
pub fn kronecker(a: &BigInt, b: &BigInt) -> i32 {
    if b.is_zero() {
        return if a.abs().is_one() { 1 } else { 0 };
    }
    let mut result = 1;
    let mut b = b.clone();
    if b.is_negative() {
        b = -b;
        if a.is_negative() {
            result = -result;
        }
    }
    let twos = b.trailing_zeros().unwrap_or(0);
    if twos > 0 {
        if a.is_even() {
            return 0;
        }
        b >>= twos;
        // (a | 2) = -1 iff a ≡ ±3 mod 8
        let a8 = a.mod_floor(&BigInt::from(8)).to_u8().unwrap();
        if twos % 2 == 1 && (a8 == 3 || a8 == 5) {
            result = -result;
        }
    }
    result * jacobi_big(a, &b)
}

/// Jacobi symbol for odd positive `n`.
fn jacobi_big(a: &BigInt, n: &BigInt) -> i32 {
    if let (Some(a), Some(n)) = (a.mod_floor(n).to_u64(), n.to_u64()) {
        return jacobi_u64(a, n);
    }
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut result = 1;
    let eight = BigInt::from(8);
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        a >>= tz;
        let n8 = n.mod_floor(&eight).to_u8().unwrap();
        if tz % 2 == 1 && (n8 == 3 || n8 == 5) {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        let a4 = a.mod_floor(&eight).to_u8().unwrap() % 4;
        let n4 = n.mod_floor(&eight).to_u8().unwrap() % 4;
        if a4 == 3 && n4 == 3 {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

pub(crate) fn jacobi_u64(mut a: u64, mut n: u64) -> i32 {
    debug_assert!(n % 2 == 1);
    a %= n;
    let mut result = 1;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && (n % 8 == 3 || n % 8 == 5) {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}
