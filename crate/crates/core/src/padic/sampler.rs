//! Constructive ℤ_p-points realising a prescribed local invariant at the
//! primes dividing `2n`.

use super::{hensel_certify, hensel_lift, PadicPoint};
use crate::arith::{least_nonresidue, legendre, mod_inverse, Prime, Sign};
use crate::error::{Error, Result};

pub const DEFAULT_PRECISION_TWO: u32 = 8;
pub const DEFAULT_PRECISION_ODD: u32 = 6;

/// Extra precision tried when rescaling pushes derivative valuations up.
const PRECISION_HEADROOM: u32 = 64;

/// Scales a base point for `n / λ` by `λ` and certifies it for `n`,
/// raising the working precision until the certificate holds.
fn rescale(
    n: u64,
    p: Prime,
    base_n: u64,
    seed: [i128; 3],
    lambda: u64,
    k: u32,
) -> Result<PadicPoint> {
    let mut last = None;
    for kk in k..=k + PRECISION_HEADROOM {
        let base = match hensel_lift(base_n, p, seed, kk) {
            Ok(pt) => pt,
            Err(Error::PrecisionTooLarge { .. }) => break,
            Err(e) => return Err(e),
        };
        let scaled = base.residues().map(|x| x.checked_mul(lambda as i128));
        let [Some(x), Some(y), Some(z)] = scaled else {
            return Err(Error::TooLarge(format!(
                "rescaling by {lambda} at precision {kk}"
            )));
        };
        let scaled = [x, y, z];
        match hensel_certify(n, p, scaled, kk) {
            Ok(pt) => return Ok(pt),
            Err(e @ Error::NotCertifiable(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or(Error::PrecisionTooLarge { p: p.get(), k }))
}

/// A point of `U_n(ℤ_p)` with local invariant `target`, for an odd prime
/// `p | n`.
///
/// With `n = p^b·n'`, the base point lives on `U_{pn'}`: `u₁ = p·a₁` where
/// `4a₁ ≡ n' (mod p)`, `u₂ = 1`, and `u₃ = c`, Newton-lifted along `u₁`.
/// There `v_p(u₁u₃) = 1`, so the invariant is `(−c | p)`; `c` is 1 when
/// `(−1 | p)` already equals `target` and the least non-residue otherwise.
/// The base is then scaled by `p^{b−1}`, which keeps the ratios `u_i/u_3`.
pub fn sample_bad_odd_prime(n: u64, p: Prime, target: Sign, k: u32) -> Result<PadicPoint> {
    if p.is_two() {
        return Err(Error::EvenPrime(2));
    }
    if n == 0 || !n.is_multiple_of(p.get()) {
        return Err(Error::Domain(format!("{p} does not divide n = {n}")));
    }
    let q = p.get();
    let mut rest = n;
    while rest.is_multiple_of(q) {
        rest /= q;
    }
    let base_n = q * rest;
    let lambda = n / base_n;

    let a1 = (rest % q) * mod_inverse(4 % q, q).expect("p is odd") % q;
    let minus_one = legendre(&(-1).into(), p)?;
    let c = if Sign::try_from(minus_one)? == target {
        1
    } else {
        least_nonresidue(p)
    };
    let seed = [(q * a1) as i128, 1, c as i128];
    rescale(n, p, base_n, seed, lambda, k)
}

/// A point of `U_n(ℤ_2)` with local invariant `target`, for even `n`.
///
/// For `n = 2` the invariant −1 is realised by the integral point
/// `(1, 2, 2)`; +1 by the 2-adic lift of `(6, 4, 4) mod 8`, the class of
/// the rational point `(2/3, 4, 4)`. Other even `n` rescale by `n/2`.
///
/// The class `(−1, 2, 2) mod 8` does lift, but every lift has invariant −1
/// (one lift is the rational point `(−1, 2, 2/5)`), so it cannot serve
/// as the +1 representative.
pub fn sample_even_two(n: u64, target: Sign, k: u32) -> Result<PadicPoint> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::Domain(format!("n = {n} is not even")));
    }
    let seed = match target {
        Sign::Minus => [1, 2, 2],
        Sign::Plus => [6, 4, 4],
    };
    rescale(n, Prime::TWO, 2, seed, n / 2, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(q: u64) -> Prime {
        Prime::new(q).unwrap()
    }

    #[test]
    fn bad_prime_examples() {
        let minus = sample_bad_odd_prime(5, p(5), Sign::Minus, 6).unwrap();
        assert_eq!(minus.invariant(), Sign::Minus);
        assert_eq!(minus.valuations()[0], 1);
        let [_, u2, u3] = minus.residues();
        // (−u₂/u₃ | 5) with u₂ = 1
        assert_eq!(legendre(&(-u2 * u3).into(), p(5)).unwrap(), -1);

        let plus = sample_bad_odd_prime(5, p(5), Sign::Plus, 6).unwrap();
        assert_eq!(plus.invariant(), Sign::Plus);
        let [_, u2, u3] = plus.residues();
        assert_eq!(legendre(&(-u2 * u3).into(), p(5)).unwrap(), 1);
    }

    #[test]
    fn rescaled_branch() {
        let pt = sample_bad_odd_prime(45, p(3), Sign::Minus, 6).unwrap();
        assert_eq!(pt.invariant(), Sign::Minus);
        assert_eq!(pt.valuations(), [2, 1, 1]);
        assert_eq!(pt.n(), 45);
    }

    #[test]
    fn bad_prime_errors() {
        assert!(matches!(
            sample_bad_odd_prime(7, p(5), Sign::Plus, 6),
            Err(Error::Domain(_))
        ));
        assert_eq!(
            sample_bad_odd_prime(6, p(2), Sign::Plus, 6),
            Err(Error::EvenPrime(2))
        );
    }

    #[test]
    fn two_adic_examples() {
        let minus = sample_even_two(2, Sign::Minus, 8).unwrap();
        assert_eq!(minus.residues(), [1, 2, 2]);
        assert_eq!(minus.invariant(), Sign::Minus);

        let plus = sample_even_two(2, Sign::Plus, 8).unwrap();
        assert_eq!(plus.invariant(), Sign::Plus);

        let six = sample_even_two(6, Sign::Minus, 8).unwrap();
        assert_eq!(six.residues(), [3, 6, 6]);
        assert_eq!(six.invariant(), Sign::Minus);

        assert!(sample_even_two(5, Sign::Plus, 8).is_err());
    }

    #[test]
    fn highly_even_n_raises_precision() {
        for n in [8, 16, 48, 96] {
            for t in [Sign::Plus, Sign::Minus] {
                let pt = sample_even_two(n, t, DEFAULT_PRECISION_TWO).unwrap();
                assert_eq!(pt.invariant(), t, "n={n}");
                assert!(pt.precision() >= DEFAULT_PRECISION_TWO);
            }
        }
    }
}
