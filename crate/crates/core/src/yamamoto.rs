//! Recovery of the `(a, b, c, d)` parametrisation of Type 1 and Type 2
//! solutions for prime `n = p`, and the Kronecker-symbol conditions it
//! leads to.
//!
//! Type 2, `p ∤ u₁`, `p ‖ u₂, u₃`:
//! `(u₁, u₂/p, u₃/p) = (bcd, abd, acd)`, `pa + b + c = 4abcd`, `q = 4abd − 1`.
//!
//! Type 1, `p ‖ u₁`, `p ∤ u₂u₃`:
//! `(u₁/p, u₂, u₃) = (bcd, acd, abd)`, `a + bp + cp = 4abcd`, `q = 4abd − p`.

use num_bigint::BigInt;
use num_integer::{gcd, Roots};
use serde::Serialize;

use crate::arith::{kronecker, Prime};
use crate::error::{Error, Result};
use crate::surface::{classify_type, Solution, TypeTag};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub p: u64,
    pub tag: TypeTag,
    /// Original positions of the normal-form coordinates: the distinguished
    /// one first, then the other two.
    pub order: [usize; 3],
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub q: i64,
}

impl Factorization {
    fn is_type1(&self) -> bool {
        matches!(self.tag, TypeTag::Type1 { .. })
    }

    /// Left minus right side of the defining relation.
    pub fn relation_defect(&self) -> i128 {
        let [p, a, b, c, d] = [self.p, self.a, self.b, self.c, self.d].map(i128::from);
        let lhs = if self.is_type1() {
            a + b * p + c * p
        } else {
            p * a + b + c
        };
        lhs - 4 * a * b * c * d
    }

    /// Rebuilds the solution in its original coordinate order.
    pub fn reassemble(&self) -> [i64; 3] {
        let [p, a, b, c, d] = [self.p, self.a, self.b, self.c, self.d].map(|x| x as i64);
        let normal = if self.is_type1() {
            [p * b * c * d, a * c * d, a * b * d]
        } else {
            [b * c * d, p * a * b * d, p * a * c * d]
        };
        let mut u = [0; 3];
        for (k, &i) in self.order.iter().enumerate() {
            u[i] = normal[k];
        }
        u
    }
}

fn divisors(m: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=m.sqrt())
        .filter(|k| m.is_multiple_of(*k))
        .flat_map(|k| [k, m / k])
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Tries every `d | gcd(x, y, z)`; `(x, y, z)` is the stripped normal form,
/// with `y·z/x = a²d` in both types.
fn candidates(p: u64, tag: TypeTag, order: [usize; 3], xyz: [u64; 3]) -> Vec<Factorization> {
    let type1 = matches!(tag, TypeTag::Type1 { .. });
    let [x, y, z] = xyz;
    let yz = y as u128 * z as u128;
    let mut out = Vec::new();
    for d in divisors(gcd(gcd(x, y), z)) {
        let den = x as u128 * d as u128;
        if !yz.is_multiple_of(den) {
            continue;
        }
        let a2 = yz / den;
        let a = a2.sqrt();
        if a * a != a2 {
            continue;
        }
        let a = a as u64;
        if y % (a * d) != 0 || z % (a * d) != 0 {
            continue;
        }
        // Type 2: y = abd, z = acd. Type 1: y = acd, z = abd.
        let (b, c) = if type1 {
            (z / (a * d), y / (a * d))
        } else {
            (y / (a * d), z / (a * d))
        };
        if b as u128 * c as u128 * d as u128 != x as u128 {
            continue;
        }
        let coprime = if type1 {
            gcd(a, b) == 1
                && gcd(b, c) == 1
                && gcd(c, d) == 1
                && [a, b, c, d].iter().all(|v| v % p != 0)
        } else {
            gcd(a, b) == 1
                && gcd(b, c) == 1
                && gcd(c, a) == 1
                && [b, c, d].iter().all(|v| v % p != 0)
        };
        if !coprime {
            continue;
        }
        let q = 4 * (a * b * d) as i64 - if type1 { p as i64 } else { 1 };
        let f = Factorization {
            p,
            tag,
            order,
            a,
            b,
            c,
            d,
            q,
        };
        if f.relation_defect() == 0 {
            out.push(f);
        }
    }
    out
}

/// Every verified factorization, over both orderings of the two
/// non-distinguished coordinates (original order first) and all divisor
/// choices.
pub fn recover_factorizations(s: &Solution, p: Prime) -> Result<Vec<Factorization>> {
    if p.is_two() {
        return Err(Error::EvenPrime(2));
    }
    if !s.is_natural() {
        return Err(Error::Domain(format!("{s} is not a natural solution")));
    }
    let tag = classify_type(s, p);
    let first = match tag {
        TypeTag::Type1 { position } => position,
        TypeTag::Type2 { unit_position } => unit_position,
        TypeTag::Other => return Err(Error::NotApplicable(p.get())),
    };
    let others: Vec<usize> = (0..3).filter(|&i| i != first).collect();
    let u = s.u().map(|x| x as u64);
    let q = p.get();
    let mut out = Vec::new();
    for order in [[first, others[0], others[1]], [first, others[1], others[0]]] {
        let mut xyz = order.map(|i| u[i]);
        if matches!(tag, TypeTag::Type1 { .. }) {
            xyz[0] /= q;
        } else {
            xyz[1] /= q;
            xyz[2] /= q;
        }
        for f in candidates(q, tag, order, xyz) {
            // equal outer coordinates give the same factors in both orders
            if !out
                .iter()
                .any(|g: &Factorization| (g.a, g.b, g.c, g.d) == (f.a, f.b, f.c, f.d))
            {
                out.push(f);
            }
        }
    }
    if out.is_empty() {
        return Err(Error::RecoveryFailure { p: q, u: s.u() });
    }
    Ok(out)
}

/// The first verified factorization.
pub fn recover_factorization(s: &Solution, p: Prime) -> Result<Factorization> {
    recover_factorizations(s, p).map(|v| v[0])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    /// `(p / m)` written out, e.g. `"(p/q)"`.
    pub name: &'static str,
    pub modulus: i128,
    /// Kronecker symbol value; `None` when skipped.
    pub value: Option<i32>,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YamamotoReport {
    pub factorization: Factorization,
    pub conditions: Vec<Condition>,
}

impl YamamotoReport {
    pub fn pass(&self) -> bool {
        self.conditions.iter().all(|c| c.status != Status::Fail)
    }
}

fn condition(p: u64, name: &'static str, m: i128, applies: bool) -> Condition {
    if !applies {
        return Condition {
            name,
            modulus: m,
            value: None,
            status: Status::Skipped,
        };
    }
    let k = kronecker(&BigInt::from(p), &BigInt::from(m));
    Condition {
        name,
        modulus: m,
        value: Some(k),
        status: if k == -1 { Status::Pass } else { Status::Fail },
    }
}

/// Evaluates the conditions for one factorization:
/// `(p/q) = −1` for Type 2; `(p/4abq) = −1` for Type 1 with `p ≡ 1 (mod 4)`;
/// `(p/4bc) = −1` for either type with `p ≡ 1 (mod 4)`.
pub fn conditions(f: &Factorization) -> Vec<Condition> {
    let p = f.p;
    let one_mod_four = p % 4 == 1;
    let (a, b, c, q) = (f.a as i128, f.b as i128, f.c as i128, f.q as i128);
    vec![
        condition(p, "(p/q)", q, !f.is_type1()),
        condition(p, "(p/4abq)", 4 * a * b * q, f.is_type1() && one_mod_four),
        condition(p, "(p/4bc)", 4 * b * c, one_mod_four),
    ]
}

/// One report per recovered factorization.
pub fn yamamoto_check(s: &Solution, p: Prime) -> Result<Vec<YamamotoReport>> {
    Ok(recover_factorizations(s, p)?
        .into_iter()
        .map(|factorization| YamamotoReport {
            conditions: conditions(&factorization),
            factorization,
        })
        .collect())
}
