//! Exhaustive 2-adic census of the local invariant.

use rayon::prelude::*;
use serde::Serialize;

use super::hensel_certify;
use crate::arith::{Prime, Sign};
use crate::error::{Error, Result};
use crate::hilbert::{epsilon, omega};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TwoAdicReport {
    pub n: u64,
    pub precision: u32,
    /// Residue triples mod `2^k` satisfying the equation.
    pub solutions: u64,
    pub plus: u64,
    pub minus: u64,
    /// Solutions without a Hensel certificate at this precision (including
    /// classes with a coordinate ≡ 0 mod `2^k`).
    pub unresolved: u64,
    /// Certified classes whose sorted valuations break `s₁ = s₂ > s₃`.
    pub pattern_violations: u64,
}

impl TwoAdicReport {
    /// Odd `n`: every certified class has invariant +1 and the valuation
    /// pattern holds. Even `n`: both invariant values occur.
    pub fn pass(&self) -> bool {
        if self.n % 2 == 1 {
            self.minus == 0 && self.pattern_violations == 0 && self.plus > 0
        } else {
            self.plus > 0 && self.minus > 0
        }
    }

    fn merge(mut self, other: TwoAdicReport) -> TwoAdicReport {
        self.solutions += other.solutions;
        self.plus += other.plus;
        self.minus += other.minus;
        self.unresolved += other.unresolved;
        self.pattern_violations += other.pattern_violations;
        self
    }
}

/// Inverse of an odd number modulo 2^64.
fn odd_inverse(c: u64) -> u64 {
    let mut x = c;
    for _ in 0..6 {
        x = x.wrapping_mul(2u64.wrapping_sub(c.wrapping_mul(x)));
    }
    x
}

fn pattern_holds(mut s: [u32; 3]) -> bool {
    s.sort_unstable_by(|a, b| b.cmp(a));
    s[0] == s[1] && s[0] > s[2]
}

/// Enumerates every residue triple mod `2^k` on the surface and tallies
/// the invariants of the Hensel-certified ones.
///
/// For fixed `(a₁, a₂)` the equation is linear in `a₃`:
/// `(4a₁a₂ − n(a₁ + a₂))·a₃ ≡ n·a₁a₂ (mod 2^k)`.
pub fn exhaust_two_adic(n: u64, k: u32) -> Result<TwoAdicReport> {
    if k < 4 {
        return Err(Error::Domain(format!("precision {k} is below 4")));
    }
    if k > 12 {
        return Err(Error::PrecisionTooLarge { p: 2, k });
    }
    let m: u64 = 1 << k;
    let mask = m - 1;
    let base = TwoAdicReport {
        n,
        precision: k,
        ..Default::default()
    };
    let report = (0..m)
        .into_par_iter()
        .map(|a1| {
            let mut acc = base;
            for a2 in 0..m {
                let c = (4u64.wrapping_mul(a1).wrapping_mul(a2))
                    .wrapping_sub(n.wrapping_mul(a1 + a2))
                    & mask;
                let rhs = n.wrapping_mul(a1).wrapping_mul(a2) & mask;
                let t = if c == 0 { k } else { c.trailing_zeros() };
                if rhs & ((1u64 << t) - 1) != 0 {
                    continue;
                }
                let sub = m >> t;
                let x0 = ((rhs >> t).wrapping_mul(odd_inverse(c >> t.min(63)))) & (sub - 1);
                for j in 0..(1u64 << t) {
                    let a3 = x0 + j * sub;
                    acc.solutions += 1;
                    match hensel_certify(n, Prime::TWO, [a1, a2, a3].map(i128::from), k) {
                        Ok(pt) => {
                            match pt.invariant() {
                                Sign::Plus => acc.plus += 1,
                                Sign::Minus => acc.minus += 1,
                            }
                            if n % 2 == 1 && !pattern_holds(pt.valuations()) {
                                acc.pattern_violations += 1;
                            }
                        }
                        Err(_) => acc.unresolved += 1,
                    }
                }
            }
            acc
        })
        .reduce(|| base, TwoAdicReport::merge);
    Ok(report)
}

/// One row of the case `s₁ − s₃ = 1`: the residue class of `r₃` mod 4
/// forced by `2r₁r₂ + (r₁ + r₂)r₃ ≡ 0 (mod 8)` and the parities
/// `f = ε(−r₁/r₃)ε(−r₂/r₃)`, `g = ω(−r₂/r₃) + ω(−r₁/r₃)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub r1: u8,
    pub r2: u8,
    pub r3_mod4: u8,
    pub f: u8,
    pub g: u8,
}

impl TableRow {
    pub fn sums_vanish(&self) -> bool {
        (self.f + self.g).is_multiple_of(2)
    }
}

/// Recomputes the table from scratch over all odd residues mod 8.
///
/// Rows are the unordered pairs `r₁ ≤ r₂` with `r₁ ≡ r₂ (mod 4)`, in the
/// order `(r₁ mod 4, r₁, r₂)`. Panics if some row's admissible `r₃` do not
/// agree on `r₃ mod 4`, `f` or `g`, since then the table is not well defined.
pub fn lemma_two_table() -> Vec<TableRow> {
    let odd = [1u64, 3, 5, 7];
    let mut pairs: Vec<(u64, u64)> = odd
        .iter()
        .flat_map(|&r1| odd.iter().map(move |&r2| (r1, r2)))
        .filter(|&(r1, r2)| r1 <= r2 && r1 % 4 == r2 % 4)
        .collect();
    pairs.sort_by_key(|&(r1, r2)| (r1 % 4, r1, r2));

    pairs
        .into_iter()
        .map(|(r1, r2)| {
            let rows: Vec<TableRow> = odd
                .iter()
                .filter(|&&r3| (2 * r1 * r2 + (r1 + r2) * r3) % 8 == 0)
                .map(|&r3| {
                    let u = (8 - r1 * r3 % 8) % 8;
                    let v = (8 - r2 * r3 % 8) % 8;
                    TableRow {
                        r1: r1 as u8,
                        r2: r2 as u8,
                        r3_mod4: (r3 % 4) as u8,
                        f: (epsilon(u) * epsilon(v) % 2) as u8,
                        g: ((omega(v) + omega(u)) % 2) as u8,
                    }
                })
                .collect();
            assert!(!rows.is_empty(), "no admissible r3 for ({r1}, {r2})");
            assert!(
                rows.windows(2).all(|w| w[0] == w[1]),
                "row ({r1}, {r2}) is ambiguous"
            );
            rows[0]
        })
        .collect()
}
