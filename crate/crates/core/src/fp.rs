//! Points of the affine surface over 𝔽_p and the image of the integral
//! points under reduction.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{primes_between, Prime};
use crate::enumerate::{degenerate_families, integer_solutions};
use crate::surface::PERMUTATIONS;

/// The `u₃` values solving the equation over `𝔽_p` for fixed `(u₁, u₂)`:
/// `(4u₁u₂ − n(u₁ + u₂))·u₃ = n·u₁u₂`.
fn fibre(n: u64, p: u64, u1: u64, u2: u64) -> Fibre {
    let n = n % p;
    let c = (4 * u1 % p * u2 % p + p * p - n * ((u1 + u2) % p) % p) % p;
    let rhs = n * u1 % p * u2 % p;
    match (c, rhs) {
        (0, 0) => Fibre::Line,
        (0, _) => Fibre::Empty,
        (c, rhs) => Fibre::Point(rhs * inverse(c, p) % p),
    }
}

enum Fibre {
    Empty,
    Point(u64),
    Line,
}

fn inverse(c: u64, p: u64) -> u64 {
    crate::arith::mod_inverse(c, p).expect("nonzero residue mod a prime")
}

/// `#{u ∈ 𝔽_p³ : 4u₁u₂u₃ = n(u₁u₂ + u₁u₃ + u₂u₃)}`, in `O(p²)`.
pub fn count_affine_points(n: u64, p: Prime) -> u64 {
    let q = p.get();
    (0..q)
        .into_par_iter()
        .map(|u1| {
            (0..q)
                .map(|u2| match fibre(n, q, u1, u2) {
                    Fibre::Empty => 0,
                    Fibre::Point(_) => 1,
                    Fibre::Line => q,
                })
                .sum::<u64>()
        })
        .sum()
}

/// Every point of the surface over `𝔽_p`, in lexicographic order.
pub fn affine_points(n: u64, p: Prime) -> Vec<[u64; 3]> {
    let q = p.get();
    let mut out = Vec::new();
    for u1 in 0..q {
        for u2 in 0..q {
            match fibre(n, q, u1, u2) {
                Fibre::Empty => {}
                Fibre::Point(u3) => out.push([u1, u2, u3]),
                Fibre::Line => out.extend((0..q).map(|u3| [u1, u2, u3])),
            }
        }
    }
    out
}

/// Reductions mod `p` of all integral points: the non-degenerate solutions
/// in every order, the points on the coordinate axes, and, when `4 | n`,
/// the families `(n/4, t, −t)`.
pub fn reduction_image(n: u64, p: Prime) -> BTreeSet<[u64; 3]> {
    let q = p.get();
    let red = |x: i64| x.rem_euclid(q as i64) as u64;
    let mut image = BTreeSet::new();
    for t in integer_solutions(n) {
        let u = t.get();
        for perm in PERMUTATIONS {
            image.insert(perm.map(|i| red(u[i])));
        }
    }
    for t in 0..q {
        image.insert([t, 0, 0]);
        image.insert([0, t, 0]);
        image.insert([0, 0, t]);
    }
    for fam in degenerate_families(n) {
        // t = 0 is not a member, but t = p reduces to the same class
        for t in 1..=q as i64 {
            image.insert(fam.member(t).map(red));
        }
    }
    image
}

/// The least point (lexicographically) of the surface over `𝔽_p` that no
/// integral point reduces to.
pub fn nonsurjectivity_witness(n: u64, p: Prime) -> Option<[u64; 3]> {
    let image = reduction_image(n, p);
    affine_points(n, p).into_iter().find(|x| !image.contains(x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FpCensus {
    pub n: u64,
    pub p: Prime,
    pub total: u64,
    pub image: usize,
    pub witness: Option<[u64; 3]>,
}

pub fn census(n: u64, p: Prime) -> FpCensus {
    let image = reduction_image(n, p);
    let points = affine_points(n, p);
    FpCensus {
        n,
        p,
        total: points.len() as u64,
        image: image.len(),
        witness: points.into_iter().find(|x| !image.contains(x)),
    }
}

/// Least prime `P₀` such that a witness exists at every prime in
/// `[P₀, pmax]`; `None` if there is none at the largest prime.
pub fn observed_threshold(n: u64, pmax: u64) -> Option<u64> {
    let primes = primes_between(2, pmax);
    let has: Vec<bool> = primes
        .par_iter()
        .map(|&p| nonsurjectivity_witness(n, p).is_some())
        .collect();
    let mut threshold = None;
    for (p, ok) in primes.iter().zip(has).rev() {
        if !ok {
            break;
        }
        threshold = Some(p.get());
    }
    threshold
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(q: u64) -> Prime {
        Prime::new(q).unwrap()
    }

    fn cubic_count(n: u64, q: u64) -> u64 {
        let mut count = 0;
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    if (4 * a * b * c) % q == n * (a * b + a * c + b * c) % q {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn counts() {
        assert_eq!(count_affine_points(3, p(2)), 4);
        assert_eq!(count_affine_points(2, p(3)), 10);
        for n in 1..=6 {
            for q in [2, 3, 5, 7] {
                assert_eq!(
                    count_affine_points(n, p(q)),
                    cubic_count(n, q),
                    "n={n} p={q}"
                );
                assert_eq!(affine_points(n, p(q)).len() as u64, cubic_count(n, q));
            }
        }
    }

    #[test]
    fn images() {
        assert_eq!(reduction_image(2, p(3)).len(), 10);
        assert_eq!(reduction_image(2, p(5)).len(), 16);
        let img = reduction_image(3, p(2));
        for x in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]] {
            assert!(img.contains(&x));
        }
        let img = reduction_image(4, p(5));
        for s in 0..5 {
            assert!(img.contains(&[1, s, (5 - s) % 5]));
        }
    }

    #[test]
    fn witnesses() {
        assert_eq!(nonsurjectivity_witness(2, p(3)), None);
        assert!(nonsurjectivity_witness(2, p(5)).is_some());
        assert!(nonsurjectivity_witness(3, p(11)).is_some());
        let c = census(2, p(5));
        assert_eq!(c.image, 16);
        assert!(c.total > 16);
    }
}
