//! Brute-force decision of `(a, b)_v` by searching for nontrivial zeros of
//! `z² − a x² − b y²` with a Hensel certificate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::Place;
use crate::arith::{split_int, Prime, Rat, Sign};
use crate::error::{Error, Result};

const MAX_MODULUS: u128 = 1 << 62;

/// Decides `(a, b)_v` by search, independently of the closed-form symbols.
///
/// At a finite place the search runs over primitive residue triples mod
/// `p^j` for `j = 1..=depth`, normalising one coordinate to 1. It returns +1
/// as soon as some triple has `v(F) > 2·v(∂F)` for one partial derivative,
/// and −1 once no primitive residue solution survives. Anything else is
/// [`Error::Inconclusive`].
pub fn hilbert_oracle(a: &Rat, b: &Rat, v: Place, depth: u32) -> Result<Sign> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument);
    }
    if depth == 0 {
        return Err(Error::Inconclusive { depth });
    }
    match v {
        Place::Infinity => {
            // a > 0 gives (1, 0, √a); otherwise z² = ax² + by² ≤ 0
            let sign = if a.is_negative() && b.is_negative() {
                Sign::Minus
            } else {
                Sign::Plus
            };
            Ok(sign)
        }
        Place::Finite(p) => {
            let modulus = (p.get() as u128)
                .checked_pow(depth)
                .filter(|&m| m <= MAX_MODULUS);
            if modulus.is_none() {
                return Err(Error::PrecisionTooLarge {
                    p: p.get(),
                    k: depth,
                });
            }
            ConicSearch::new(square_free_at(a, p), square_free_at(b, p), p).run(depth)
        }
    }
}

/// An integer in the square class of `x` with `v_p` in {0, 1}.
fn square_free_at(x: &Rat, p: Prime) -> BigInt {
    let m: BigInt = x.numer() * x.denom();
    let (v, rest) = split_int(&m, p);
    if v % 2 == 1 {
        rest * BigInt::from(p.get())
    } else {
        rest
    }
}

/// Which coordinate of `(x, y, z)` is fixed to 1; the other two are free.
#[derive(Clone, Copy)]
enum Chart {
    Z,
    X,
    Y,
}

struct ConicSearch {
    a: BigInt,
    b: BigInt,
    p: u64,
    va: u32,
    vb: u32,
    v2: u32,
}

impl ConicSearch {
    fn new(a: BigInt, b: BigInt, p: Prime) -> Self {
        let va = split_int(&a, p).0;
        let vb = split_int(&b, p).0;
        let v2 = u32::from(p.is_two());
        ConicSearch {
            a,
            b,
            p: p.get(),
            va,
            vb,
            v2,
        }
    }

    fn coords(chart: Chart, s: i128, t: i128) -> (i128, i128, i128) {
        match chart {
            Chart::Z => (s, t, 1),
            Chart::X => (1, s, t),
            Chart::Y => (s, 1, t),
        }
    }

    fn reduced(&self, m: i128) -> (i128, i128) {
        let m = BigInt::from(m);
        let a = self.a.mod_floor(&m).to_i128().unwrap();
        let b = self.b.mod_floor(&m).to_i128().unwrap();
        (a, b)
    }

    /// Valuation of a residue known mod `p^level`; `None` if it vanishes there.
    fn val(&self, t: i128, level: u32) -> Option<u32> {
        if t == 0 {
            return None;
        }
        let p = self.p as i128;
        let mut t = t;
        let mut v = 0;
        while t % p == 0 {
            t /= p;
            v += 1;
        }
        (v < level).then_some(v)
    }

    /// Least determined valuation among the partials 2z, −2ax, −2by.
    fn derivative_valuation(&self, x: i128, y: i128, z: i128, level: u32) -> Option<u32> {
        [
            self.val(z, level).map(|v| v + self.v2),
            self.val(x, level).map(|v| v + self.v2 + self.va),
            self.val(y, level).map(|v| v + self.v2 + self.vb),
        ]
        .into_iter()
        .flatten()
        .min()
    }

    fn run(&self, depth: u32) -> Result<Sign> {
        let p = self.p as i128;
        let mut alive = [true; 3];
        let mut frontier: [Vec<(i128, i128)>; 3] = [vec![(0, 0)], vec![(0, 0)], vec![(0, 0)]];
        let charts = [Chart::Z, Chart::X, Chart::Y];
        let mut step: i128 = 1;
        for level in 1..=depth {
            let m = step * p;
            let (am, bm) = self.reduced(m);
            let sq = |t: i128| t * t % m;
            for (c, chart) in charts.iter().enumerate() {
                if !alive[c] {
                    continue;
                }
                let mut next = Vec::new();
                for &(s, t) in &frontier[c] {
                    for i in 0..p {
                        for l in 0..p {
                            let (s2, t2) = (s + i * step, t + l * step);
                            let (x, y, z) = Self::coords(*chart, s2, t2);
                            if (sq(z) - am * sq(x) % m - bm * sq(y) % m).rem_euclid(m) != 0 {
                                continue;
                            }
                            if let Some(g) = self.derivative_valuation(x, y, z, level) {
                                if level > 2 * g {
                                    return Ok(Sign::Plus);
                                }
                            }
                            next.push((s2, t2));
                        }
                    }
                }
                alive[c] = !next.is_empty();
                frontier[c] = next;
            }
            if alive.iter().all(|&x| !x) {
                return Ok(Sign::Minus);
            }
            step = m;
        }
        Err(Error::Inconclusive { depth })
    }
}
