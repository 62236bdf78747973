//! Complete enumeration of the solutions of `4/n = 1/u₁ + 1/u₂ + 1/u₃`.
//!
//! Sorted by absolute value, the least coordinate satisfies `|u₁| ≤ 3n/4`.
//! Once `u₁` is fixed the residual `r = 4/n − 1/u₁ = 1/u₂ + 1/u₃` is a known
//! nonzero rational (or zero, which only happens on the degenerate families
//! `u₂ = −u₃`) and `|u₂| ≤ 2/|r|`, so every search below is finite.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::surface::Solution;

/// A solution triple sorted ascending by `(|u|, u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalTriple([i64; 3]);

impl CanonicalTriple {
    pub fn new(mut u: [i64; 3]) -> Self {
        u.sort_by_key(|&x| (x.unsigned_abs(), x));
        CanonicalTriple(u)
    }

    #[inline]
    pub fn get(&self) -> [i64; 3] {
        self.0
    }

    pub fn solution(&self, n: u64) -> Solution {
        Solution::new(n, self.0).expect("enumerated triples are solutions")
    }
}

impl fmt::Display for CanonicalTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a}, {b}, {c})")
    }
}

fn has_opposite_pair(u: [i64; 3]) -> bool {
    u[0] == -u[1] || u[0] == -u[2] || u[1] == -u[2]
}

/// `u₃` solving `1/u₃ = r − 1/u₂` for `r = rn/rd`, if it is a nonzero integer.
#[inline]
fn third_coordinate(rn: i128, rd: i128, u2: i128) -> Option<i128> {
    // 1/u₃ = (rn·u₂ − rd) / (rd·u₂)
    let den = rn * u2 - rd;
    if den == 0 {
        return None;
    }
    let num = rd * u2;
    (num % den == 0).then(|| num / den)
}

/// All sorted natural solutions `0 < u₁ ≤ u₂ ≤ u₃`.
pub fn natural_solutions(n: u64) -> BTreeSet<CanonicalTriple> {
    let n = n as i128;
    let mut out = BTreeSet::new();
    // n/4 < u₁ ≤ 3n/4
    for u1 in (n / 4 + 1)..=(3 * n / 4) {
        let (rn, rd) = (4 * u1 - n, n * u1);
        // 1/r < u₂ ≤ 2/r
        let lo = (rd / rn + 1).max(u1);
        let hi = 2 * rd / rn;
        for u2 in lo..=hi {
            if let Some(u3) = third_coordinate(rn, rd, u2) {
                if u3 >= u2 {
                    out.insert(CanonicalTriple::new([u1, u2, u3].map(|x| x as i64)));
                }
            }
        }
    }
    out
}

/// All integer solutions with nonzero coordinates and no `u_i = −u_j`,
/// up to ordering.
pub fn integer_solutions(n: u64) -> BTreeSet<CanonicalTriple> {
    let n = n as i128;
    let bound = 3 * n / 4;
    let mut out = BTreeSet::new();
    for u1 in (-bound..=bound).filter(|&x| x != 0) {
        let (mut rn, mut rd) = (4 * u1 - n, n * u1);
        if rn == 0 {
            continue;
        }
        if rd < 0 {
            rn = -rn;
            rd = -rd;
        }
        let a1 = u1.abs();
        let hi = 2 * rd / rn.abs();
        for m in a1..=hi {
            for u2 in [m, -m] {
                let Some(u3) = third_coordinate(rn, rd, u2) else {
                    continue;
                };
                if u3.abs() < m {
                    continue;
                }
                let u = [u1, u2, u3].map(|x| x as i64);
                if !has_opposite_pair(u) {
                    out.insert(CanonicalTriple::new(u));
                }
            }
        }
    }
    out
}

/// One of the three infinite families `u_i = n/4`, `u_j = −u_k = t` (t ≠ 0),
/// which exist only when `4 | n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegenerateFamily {
    pub fixed_position: usize,
    pub fixed_value: i64,
}

impl DegenerateFamily {
    /// The member with parameter `t`.
    pub fn member(&self, t: i64) -> [i64; 3] {
        let mut u = [t, t, t];
        u[self.fixed_position] = self.fixed_value;
        let last = (0..3).rev().find(|&i| i != self.fixed_position).unwrap();
        u[last] = -t;
        u
    }
}

pub fn degenerate_families(n: u64) -> Vec<DegenerateFamily> {
    if !n.is_multiple_of(4) {
        return Vec::new();
    }
    (0..3)
        .map(|fixed_position| DegenerateFamily {
            fixed_position,
            fixed_value: (n / 4) as i64,
        })
        .collect()
}

/// Scans every `(u₁, u₂)` with `|u_i| ≤ bound` and solves for `u₃`.
///
/// The third coordinate is not bounded: `(2, 15, 210)` solves `n = 7`, so
/// no box of side `O(n²)` holds every solution. The two smallest
/// coordinates do satisfy `|u| ≤ 3n²/2`, so any `bound ≥ 3n²/2` is complete.
pub fn brute_force_oracle(n: u64, bound: u64) -> BTreeSet<CanonicalTriple> {
    let n = n as i64;
    let b = bound as i64;
    (-b..=b)
        .into_par_iter()
        .filter(|&u1| u1 != 0)
        .flat_map_iter(|u1| {
            (-b..=b).filter(|&u2| u2 != 0).filter_map(move |u2| {
                let (u1w, u2w, nw) = (u1 as i128, u2 as i128, n as i128);
                let den = 4 * u1w * u2w - nw * (u1w + u2w);
                let num = nw * u1w * u2w;
                if den == 0 || num % den != 0 {
                    return None;
                }
                let u3 = num / den;
                if u3 == 0 || u3.abs() > i64::MAX as i128 {
                    return None;
                }
                let u = [u1, u2, u3 as i64];
                (!has_opposite_pair(u)).then(|| CanonicalTriple::new(u))
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::is_solution;

    fn triples(v: &[[i64; 3]]) -> BTreeSet<CanonicalTriple> {
        v.iter().copied().map(CanonicalTriple::new).collect()
    }

    #[test]
    fn natural_examples() {
        assert_eq!(natural_solutions(2), triples(&[[1, 2, 2]]));
        assert_eq!(
            natural_solutions(3),
            triples(&[[1, 4, 12], [1, 6, 6], [2, 2, 3]])
        );
        assert_eq!(
            natural_solutions(4),
            triples(&[[2, 3, 6], [2, 4, 4], [3, 3, 3]])
        );
        assert!(natural_solutions(1).is_empty());
    }

    #[test]
    fn integer_examples() {
        assert!(integer_solutions(5).contains(&CanonicalTriple::new([-5, 2, 2])));
        let nine = integer_solutions(9);
        assert!(nine.contains(&CanonicalTriple::new([-18, 4, 4])));
        assert!(nine.contains(&CanonicalTriple::new([-9, 2, 18])));
        assert_eq!(integer_solutions(2), triples(&[[1, 2, 2]]));
        assert_eq!(
            integer_solutions(3),
            triples(&[[1, 2, -6], [1, 4, 12], [1, 6, 6], [2, 2, 3]])
        );
    }

    #[test]
    fn oracle_sees_large_third_coordinates() {
        let t = CanonicalTriple::new([2, 15, 210]);
        assert!(integer_solutions(7).contains(&t));
        assert!(brute_force_oracle(7, 3 * 49).contains(&t));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(brute_force_oracle(2, 30), triples(&[[1, 2, 2]]));
        assert_eq!(brute_force_oracle(3, 40), integer_solutions(3));
        assert!(brute_force_oracle(5, 80).contains(&CanonicalTriple::new([-5, 2, 2])));
    }

    #[test]
    fn canonical_order() {
        assert_eq!(CanonicalTriple::new([-5, 2, 2]).get(), [2, 2, -5]);
        assert_eq!(CanonicalTriple::new([12, 1, 4]).get(), [1, 4, 12]);
        assert_eq!(CanonicalTriple::new([3, -3, 1]).get(), [1, -3, 3]);
    }

    #[test]
    fn families() {
        let f = degenerate_families(4);
        assert_eq!(f.len(), 3);
        assert!(f.iter().all(|d| d.fixed_value == 1));
        assert!(degenerate_families(3).is_empty());
        let f8 = degenerate_families(8);
        assert!(f8.iter().all(|d| d.fixed_value == 2));
        for d in &f8 {
            for t in [-7, 1, 5] {
                let u = d.member(t);
                assert_eq!(u[d.fixed_position], 2);
                assert!(crate::surface::evaluate_form(8, u) == 0.into());
            }
        }
    }

    #[test]
    fn everything_enumerated_is_a_solution() {
        for n in 1..=40 {
            for t in integer_solutions(n) {
                assert!(is_solution(n, t.get()), "n={n} {t}");
            }
        }
    }
}
