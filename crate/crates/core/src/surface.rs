//! The affine surface `4·u₁u₂u₃ = n·(u₁u₂ + u₁u₃ + u₂u₃)` and its
//! integral solutions with nonzero coordinates.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{int, rat, vp, Prime, Rat, Sign};
use crate::error::{Error, Result};

/// The six orderings of three coordinates, identity first.
pub const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// `4u₁u₂u₃ − n(u₁u₂ + u₁u₃ + u₂u₃)`, exactly.
pub fn evaluate_form(n: u64, u: [i64; 3]) -> BigInt {
    let [a, b, c] = u.map(BigInt::from);
    let n = BigInt::from(n);
    BigInt::from(4) * &a * &b * &c - n * (&a * &b + &a * &c + &b * &c)
}

pub fn is_solution(n: u64, u: [i64; 3]) -> bool {
    u.iter().all(|&x| x != 0) && evaluate_form(n, u).is_zero()
}

/// A point of the surface with all coordinates nonzero, i.e. a solution of
/// `4/n = 1/u₁ + 1/u₂ + 1/u₃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Solution {
    n: u64,
    u: [i64; 3],
}

impl Solution {
    pub fn new(n: u64, u: [i64; 3]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("n must be positive".into()));
        }
        if !is_solution(n, u) {
            return Err(Error::NotASolution {
                n,
                u,
                value: evaluate_form(n, u).to_string(),
            });
        }
        Ok(Solution { n, u })
    }

    #[inline]
    pub fn n(&self) -> u64 {
        self.n
    }

    #[inline]
    pub fn u(&self) -> [i64; 3] {
        self.u
    }

    pub fn is_natural(&self) -> bool {
        self.u.iter().all(|&x| x > 0)
    }

    pub fn real_component(&self) -> RealComponent {
        if self.is_natural() {
            RealComponent::Plus
        } else {
            RealComponent::Minus
        }
    }

    /// The same point with coordinates reordered by `perm`.
    pub fn permuted(&self, perm: [usize; 3]) -> Solution {
        Solution {
            n: self.n,
            u: perm.map(|i| self.u[i]),
        }
    }

    pub(crate) fn coord(&self, i: usize) -> Rat {
        int(self.u[i])
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.u;
        write!(f, "n={} ({a}, {b}, {c})", self.n)
    }
}

pub fn is_natural(s: &Solution) -> bool {
    s.is_natural()
}

/// The two connected components of the real points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RealComponent {
    /// All coordinates positive.
    Plus,
    Minus,
}

impl RealComponent {
    /// The local invariant at ∞ on this component.
    pub fn invariant(self) -> Sign {
        match self {
            RealComponent::Plus => Sign::Minus,
            RealComponent::Minus => Sign::Plus,
        }
    }
}

pub fn real_component(s: &Solution) -> RealComponent {
    s.real_component()
}

/// Checks `−u_i/u_j = 1/(1 + u_j/u_k − 4u_j/n)` for `(i, j, k) = perm`.
///
/// Returns [`Error::DegeneratePermutation`] when the right-hand denominator
/// vanishes.
pub fn cross_ratio_identity(s: &Solution, perm: [usize; 3]) -> Result<bool> {
    let [i, j, k] = perm;
    let (ui, uj, uk) = (s.coord(i), s.coord(j), s.coord(k));
    let den = Rat::one() + &uj / &uk - int(4) * &uj * rat(1, s.n as i64);
    if den.is_zero() {
        return Err(Error::DegeneratePermutation { perm });
    }
    Ok(-(&ui / &uj) == den.recip())
}

/// Valuation pattern of a solution at an odd prime, with 0-based positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TypeTag {
    /// `p` divides exactly one coordinate, to valuation 1.
    Type1 {
        position: usize,
    },
    /// `p` divides exactly two coordinates, each to valuation 1.
    Type2 {
        unit_position: usize,
    },
    Other,
}

fn coordinate_valuations(s: &Solution, p: Prime) -> [i64; 3] {
    // coordinates are nonzero, so the valuation is defined
    s.u.map(|x| vp(&int(x), p).unwrap())
}

pub fn classify_type(s: &Solution, p: Prime) -> TypeTag {
    let v = coordinate_valuations(s, p);
    let ones: Vec<usize> = (0..3).filter(|&i| v[i] == 1).collect();
    let zeros: Vec<usize> = (0..3).filter(|&i| v[i] == 0).collect();
    match (ones.as_slice(), zeros.as_slice()) {
        ([i], [_, _]) => TypeTag::Type1 { position: *i },
        ([_, _], [j]) => TypeTag::Type2 { unit_position: *j },
        _ => TypeTag::Other,
    }
}

/// Lexicographically least `(i, j)`, `i < j`, with `v_p(u_i) = v_p(u_j)`.
pub fn unit_valuation_pair(s: &Solution, p: Prime) -> Option<(usize, usize)> {
    let v = coordinate_valuations(s, p);
    [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .find(|&(i, j)| v[i] == v[j])
}
