//! Exact integer and rational arithmetic, plus the quadratic symbols
//! everything else is built on.

mod prime;
mod rational;
mod sign;
mod symbol;

pub use prime::{least_nonresidue, prime_divisors, primes_between, Prime};
pub use rational::{int, rat, unit_part, vp, Rat};
pub use sign::Sign;
pub use symbol::{kronecker, legendre};

pub(crate) use rational::{mod_inverse, parts_u128, split_int, unit_residue};
