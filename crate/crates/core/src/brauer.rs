//! Local and adelic invariants of the quaternion class `(−u₁/u₃, −u₂/u₃)`,
//! Brauer-set witnesses, and the verifiers built on them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::arith::{legendre, prime_divisors, primes_between, Prime, Rat, Sign};
use crate::enumerate::{integer_solutions, natural_solutions};
use crate::error::{Error, Result};
use crate::hilbert::{hilbert, Place};
use crate::padic::{
    sample_bad_odd_prime, sample_even_two, PadicPoint, DEFAULT_PRECISION_ODD, DEFAULT_PRECISION_TWO,
};
use crate::surface::{unit_valuation_pair, RealComponent, Solution};

/// Anything carrying a local point at some place.
pub trait LocalInvariant {
    fn local_invariant(&self, v: Place) -> Result<Sign>;
}

impl LocalInvariant for Solution {
    fn local_invariant(&self, v: Place) -> Result<Sign> {
        let u3 = self.coord(2);
        let a: Rat = -(self.coord(0) / &u3);
        let b: Rat = -(self.coord(1) / &u3);
        hilbert(&a, &b, v)
    }
}

impl LocalInvariant for PadicPoint {
    fn local_invariant(&self, v: Place) -> Result<Sign> {
        PadicPoint::local_invariant(self, v)
    }
}

pub fn local_invariant<T: LocalInvariant + ?Sized>(x: &T, v: Place) -> Result<Sign> {
    x.local_invariant(v)
}

/// Primes where the invariant is not forced to be +1: odd `p | n`, and 2
/// when `n` is even.
pub fn bad_primes(n: u64) -> Vec<Prime> {
    let mut ps = prime_divisors(n as u128);
    if n % 2 == 1 {
        ps.retain(|p| !p.is_two());
    }
    ps
}

/// A local point at one prime: either a global solution or a certified
/// ℤ_p-point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LocalPoint {
    Global(Solution),
    Padic(PadicPoint),
}

impl LocalPoint {
    fn n(&self) -> u64 {
        match self {
            LocalPoint::Global(s) => s.n(),
            LocalPoint::Padic(pt) => pt.n(),
        }
    }

    pub fn invariant_at(&self, p: Prime) -> Result<Sign> {
        match self {
            LocalPoint::Global(s) => s.local_invariant(Place::Finite(p)),
            LocalPoint::Padic(pt) => pt.local_invariant(Place::Finite(p)),
        }
    }
}

/// A real component together with local points at finitely many primes.
/// Primes outside the support carry points of invariant +1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdelicPoint {
    n: u64,
    real: RealComponent,
    finite: BTreeMap<Prime, LocalPoint>,
}

impl AdelicPoint {
    pub fn new(n: u64, real: RealComponent, finite: BTreeMap<Prime, LocalPoint>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("n must be positive".into()));
        }
        for (p, x) in &finite {
            if x.n() != n {
                return Err(Error::Domain(format!(
                    "local point at {p} lies on U_{}, not U_{n}",
                    x.n()
                )));
            }
            if let LocalPoint::Padic(pt) = x {
                if pt.prime() != *p {
                    return Err(Error::PlaceMismatch {
                        point: pt.prime().get(),
                        place: p.to_string(),
                    });
                }
            }
        }
        if let Some(p) = bad_primes(n).into_iter().find(|p| !finite.contains_key(p)) {
            return Err(Error::Domain(format!(
                "support is missing the bad prime {p}"
            )));
        }
        Ok(AdelicPoint { n, real, finite })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn real(&self) -> RealComponent {
        self.real
    }

    pub fn finite(&self) -> &BTreeMap<Prime, LocalPoint> {
        &self.finite
    }
}

pub fn adelic_total_invariant(x: &AdelicPoint) -> Result<Sign> {
    let mut total = x.real.invariant();
    for (&p, pt) in &x.finite {
        total *= pt.invariant_at(p)?;
    }
    Ok(total)
}

/// `(in Brauer set, obstructed)`: adelic points on the positive real
/// component with total invariant +1 and −1.
///
/// Every bad prime but one gets a +1 point; the remaining prime (2 for
/// even `n`, else the least prime factor) takes the sign that fixes the
/// total.
pub fn brauer_set_witnesses(n: u64) -> Result<(AdelicPoint, AdelicPoint)> {
    if n < 2 {
        return Err(Error::Domain(format!("n = {n} has no bad prime")));
    }
    let bad = bad_primes(n);
    let chosen = bad[0];
    let sample = |p: Prime, t: Sign| -> Result<LocalPoint> {
        let pt = if p.is_two() {
            sample_even_two(n, t, DEFAULT_PRECISION_TWO)?
        } else {
            sample_bad_odd_prime(n, p, t, DEFAULT_PRECISION_ODD)?
        };
        Ok(LocalPoint::Padic(pt))
    };
    let mut rest = BTreeMap::new();
    for &p in &bad[1..] {
        rest.insert(p, sample(p, Sign::Plus)?);
    }
    let real = RealComponent::Plus;
    let build = |total: Sign| -> Result<AdelicPoint> {
        let mut finite = rest.clone();
        finite.insert(chosen, sample(chosen, total * real.invariant())?);
        AdelicPoint::new(n, real, finite)
    };
    Ok((build(Sign::Plus)?, build(Sign::Minus)?))
}

/// Product of the invariants at the odd primes dividing `n`, one factor per
/// prime.
pub fn divisor_product(s: &Solution) -> Result<Sign> {
    if s.n().is_multiple_of(2) {
        return Err(Error::Domain(format!("n = {} is even", s.n())));
    }
    bad_primes(s.n())
        .into_iter()
        .map(|p| s.local_invariant(Place::Finite(p)))
        .product()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolutionClass {
    Natural,
    Integer,
}

impl SolutionClass {
    pub fn of(s: &Solution) -> Self {
        if s.is_natural() {
            SolutionClass::Natural
        } else {
            SolutionClass::Integer
        }
    }
}

impl fmt::Display for SolutionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolutionClass::Natural => "natural",
            SolutionClass::Integer => "integer",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: u64,
    pub u: [i64; 3],
    pub class: SolutionClass,
    pub invariants: Vec<(Place, Sign)>,
    pub product: Sign,
    pub prediction: Sign,
    pub pass: bool,
    /// Free-form remark, e.g. for flagged exceptions.
    pub note: Option<String>,
}

impl InvariantReport {
    /// `pass` is `product == prediction`.
    pub fn new(s: &Solution, invariants: Vec<(Place, Sign)>, prediction: Sign) -> Self {
        let product = invariants.iter().map(|&(_, e)| e).product();
        InvariantReport {
            n: s.n(),
            u: s.u(),
            class: SolutionClass::of(s),
            invariants,
            product,
            prediction,
            pass: product == prediction,
            note: None,
        }
    }
}

struct Invariants<'a>(&'a [(Place, Sign)]);

impl Serialize for Invariants<'_> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = ser.serialize_map(Some(self.0.len()))?;
        for (v, e) in self.0 {
            m.serialize_entry(&v.to_string(), e)?;
        }
        m.end()
    }
}

impl Serialize for InvariantReport {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let len = if self.note.is_some() { 8 } else { 7 };
        let mut st = ser.serialize_struct("InvariantReport", len)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("u", &self.u)?;
        st.serialize_field("class", &self.class)?;
        st.serialize_field("invariants", &Invariants(&self.invariants))?;
        st.serialize_field("product", &self.product)?;
        st.serialize_field("prediction", &self.prediction)?;
        st.serialize_field("pass", &self.pass)?;
        if let Some(note) = &self.note {
            st.serialize_field("note", note)?;
        }
        st.end()
    }
}

/// Invariants at ∞, 2 and every prime dividing `n·u₁u₂u₃`. Their product
/// is +1 by reciprocity.
pub fn invariant_profile(s: &Solution) -> Result<InvariantReport> {
    let mut primes = vec![Prime::TWO];
    primes.extend(prime_divisors(s.n() as u128));
    for x in s.u() {
        primes.extend(prime_divisors(x.unsigned_abs() as u128));
    }
    primes.sort();
    primes.dedup();
    let places = std::iter::once(Place::Infinity).chain(primes.into_iter().map(Place::Finite));
    let invariants = places
        .map(|v| Ok((v, s.local_invariant(v)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(InvariantReport::new(s, invariants, Sign::Plus))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    NaturalProduct,
    IntegerProduct,
    PrimeLegendre,
    SquarePatterns,
    GoodPrimes,
    TwoAdicTrivial,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::NaturalProduct,
        Check::IntegerProduct,
        Check::PrimeLegendre,
        Check::SquarePatterns,
        Check::GoodPrimes,
        Check::TwoAdicTrivial,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Check::NaturalProduct => "natural-product",
            Check::IntegerProduct => "integer-product",
            Check::PrimeLegendre => "prime-legendre",
            Check::SquarePatterns => "square-patterns",
            Check::GoodPrimes => "good-primes",
            Check::TwoAdicTrivial => "two-adic-trivial",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyParams {
    pub n: u64,
    /// Largest prime tried by `good-primes`.
    pub pmax: u64,
}

impl VerifyParams {
    pub fn new(n: u64) -> Self {
        VerifyParams { n, pmax: 100 }
    }
}

fn is_odd_square(n: u64) -> bool {
    let r = n.isqrt();
    n % 2 == 1 && n > 1 && r * r == n
}

/// `n | u_i` and `gcd(n, u_j u_k) = 1`, or `gcd(n, u_i) = 1` and `n` divides
/// both others, for some ordering.
pub fn forbidden_square_pattern(s: &Solution) -> bool {
    let n = s.n() as i128;
    let u = s.u().map(i128::from);
    let coprime = |x: i128| num_integer::gcd(n, x) == 1;
    (0..3).any(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        (u[i] % n == 0 && coprime(u[j] * u[k])) || (coprime(u[i]) && u[j] % n == 0 && u[k] % n == 0)
    })
}

fn divisor_invariants(s: &Solution) -> Result<Vec<(Place, Sign)>> {
    bad_primes(s.n())
        .into_iter()
        .map(|p| Ok((Place::Finite(p), s.local_invariant(Place::Finite(p))?)))
        .collect()
}

/// `x` with every factor `p` removed.
fn unit_int(mut x: i64, p: u64) -> i128 {
    while x % p as i64 == 0 {
        x /= p as i64;
    }
    x as i128
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::HypothesisMismatch(msg()))
    }
}

/// Runs one check for one `n`; one report per solution examined.
pub fn verify(check: Check, params: VerifyParams) -> Result<Vec<InvariantReport>> {
    let n = params.n;
    require(n >= 1, || "n must be positive".into())?;
    let odd = || require(n % 2 == 1, || format!("{check} needs odd n, got {n}"));
    let naturals = || natural_solutions(n).into_iter().map(|t| t.solution(n));
    let non_naturals = || {
        integer_solutions(n)
            .into_iter()
            .map(|t| t.solution(n))
            .filter(|s| !s.is_natural())
    };
    match check {
        Check::NaturalProduct => {
            odd()?;
            naturals()
                .map(|s| {
                    Ok(InvariantReport::new(
                        &s,
                        divisor_invariants(&s)?,
                        Sign::Minus,
                    ))
                })
                .collect()
        }
        Check::IntegerProduct => {
            odd()?;
            non_naturals()
                .map(|s| {
                    Ok(InvariantReport::new(
                        &s,
                        divisor_invariants(&s)?,
                        Sign::Plus,
                    ))
                })
                .collect()
        }
        Check::PrimeLegendre => {
            let p = Prime::odd(n).map_err(|_| {
                Error::HypothesisMismatch(format!("{check} needs an odd prime, got {n}"))
            })?;
            naturals()
                .map(|s| {
                    let Some((i, j)) = unit_valuation_pair(&s, p) else {
                        let mut r = InvariantReport::new(&s, Vec::new(), Sign::Minus);
                        r.pass = false;
                        r.note = Some("no unit pair".into());
                        return Ok(r);
                    };
                    // −u_i/u_j is a unit; its symbol is that of −r_i·r_j
                    let r = s.u().map(|x| unit_int(x, p.get()));
                    let l = legendre(&(-r[i] * r[j]).into(), p)?;
                    let mut r = InvariantReport::new(
                        &s,
                        vec![(Place::Finite(p), Sign::try_from(l)?)],
                        Sign::Minus,
                    );
                    r.note = Some(format!("pair ({}, {})", i + 1, j + 1));
                    Ok(r)
                })
                .collect()
        }
        Check::SquarePatterns => {
            require(is_odd_square(n), || {
                format!("{check} needs an odd square, got {n}")
            })?;
            let mut out: Vec<InvariantReport> = Vec::new();
            for s in naturals() {
                let mut r = InvariantReport::new(&s, divisor_invariants(&s)?, Sign::Minus);
                if forbidden_square_pattern(&s) {
                    r.pass = false;
                    r.note = Some("forbidden divisibility pattern".into());
                }
                out.push(r);
            }
            for s in non_naturals().filter(forbidden_square_pattern) {
                let mut r = InvariantReport::new(&s, divisor_invariants(&s)?, Sign::Plus);
                r.note = Some("non-natural exception".into());
                out.push(r);
            }
            Ok(out)
        }
        Check::GoodPrimes => integer_solutions(n)
            .into_iter()
            .map(|t| {
                let s = t.solution(n);
                let invs = primes_between(3, params.pmax)
                    .into_iter()
                    .filter(|p| !n.is_multiple_of(p.get()))
                    .map(|p| Ok((Place::Finite(p), s.local_invariant(Place::Finite(p))?)))
                    .collect::<Result<Vec<_>>>()?;
                let mut r = InvariantReport::new(&s, invs, Sign::Plus);
                r.pass = r.invariants.iter().all(|&(_, e)| e == Sign::Plus);
                Ok(r)
            })
            .collect(),
        Check::TwoAdicTrivial => {
            odd()?;
            integer_solutions(n)
                .into_iter()
                .map(|t| {
                    let s = t.solution(n);
                    let two = Place::Finite(Prime::TWO);
                    Ok(InvariantReport::new(
                        &s,
                        vec![(two, s.local_invariant(two)?)],
                        Sign::Plus,
                    ))
                })
                .collect()
        }
    }
}

/// [`verify`] over several `n`, in parallel, with results in input order.
pub fn verify_many(check: Check, ns: &[u64], pmax: u64) -> Result<Vec<InvariantReport>> {
    let parts = ns
        .par_iter()
        .map(|&n| verify(check, VerifyParams { n, pmax }))
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().flatten().collect())
}
