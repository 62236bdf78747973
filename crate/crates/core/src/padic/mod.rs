//! Certified p-adic integral points of the surface.
//!
//! A point is stored as a representative residue triple `a` mod `p^k`
//! together with `(v_p F(a), min_i v_p ∂_iF(a))`. When `v_p F > 2·v_p ∂F`,
//! Hensel's lemma gives a genuine ℤ_p-point agreeing with `a` modulo
//! `p^{v_p F − v_p ∂F}`. Certification also demands that this agreement
//! fixes each coordinate's valuation and enough unit digits to evaluate the
//! local invariant (one digit at odd `p`, three at `p = 2`), so a
//! certified point never reports the invariant of a non-point.

mod sampler;
mod two_adic;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::arith::{legendre, Prime, Sign};
use crate::error::{Error, Result};
use crate::hilbert::{odd_kernel, two_kernel, Place};

pub use sampler::{
    sample_bad_odd_prime, sample_even_two, DEFAULT_PRECISION_ODD, DEFAULT_PRECISION_TWO,
};
pub use two_adic::{exhaust_two_adic, lemma_two_table, TableRow, TwoAdicReport};

/// Largest supported modulus `p^k`; residues and rescaled residues stay
/// inside i128.
const MAX_MODULUS: i128 = 1 << 96;

pub(crate) fn modulus(p: Prime, k: u32) -> Result<i128> {
    let too_large = || Error::PrecisionTooLarge { p: p.get(), k };
    if k == 0 {
        return Err(Error::Domain("precision must be at least 1".into()));
    }
    (p.get() as i128)
        .checked_pow(k)
        .filter(|&m| m <= MAX_MODULUS)
        .ok_or_else(too_large)
}

/// `v_p(x)`, `None` for zero.
pub(crate) fn val(x: i128, p: u64) -> Option<u32> {
    if x == 0 {
        return None;
    }
    let p = p as i128;
    let (mut x, mut v) = (x, 0);
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    Some(v)
}

fn big_val(x: &BigInt, p: u64) -> Option<u32> {
    if x.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let (mut x, mut v) = (x.clone(), 0);
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        x = q;
        v += 1;
    }
}

fn form_checked(n: i128, a: [i128; 3]) -> Option<i128> {
    let [x, y, z] = a;
    let cubic = x.checked_mul(y)?.checked_mul(z)?.checked_mul(4)?;
    let quad = x
        .checked_mul(y)?
        .checked_add(x.checked_mul(z)?)?
        .checked_add(y.checked_mul(z)?)?;
    cubic.checked_sub(n.checked_mul(quad)?)
}

fn partials_checked(n: i128, a: [i128; 3]) -> Option<[i128; 3]> {
    let [x, y, z] = a;
    let d = |s: i128, t: i128| {
        s.checked_mul(t)?
            .checked_mul(4)?
            .checked_sub(n.checked_mul(s.checked_add(t)?)?)
    };
    Some([d(y, z)?, d(x, z)?, d(x, y)?])
}

fn form_big(n: &BigInt, a: &[BigInt; 3]) -> BigInt {
    let [x, y, z] = a;
    BigInt::from(4) * x * y * z - n * (x * y + x * z + y * z)
}

fn partials_big(n: &BigInt, a: &[BigInt; 3]) -> [BigInt; 3] {
    let [x, y, z] = a;
    let d = |s: &BigInt, t: &BigInt| BigInt::from(4) * s * t - n * (s + t);
    [d(y, z), d(x, z), d(x, y)]
}

/// `(v_p F(a), [v_p ∂_i F(a)])`, with `None` for an exact zero.
fn valuations_at(n: u64, p: u64, a: [i128; 3]) -> (Option<u32>, [Option<u32>; 3]) {
    let nn = n as i128;
    if let (Some(f), Some(d)) = (form_checked(nn, a), partials_checked(nn, a)) {
        return (val(f, p), d.map(|x| val(x, p)));
    }
    let nb = BigInt::from(n);
    let ab = a.map(BigInt::from);
    let d = partials_big(&nb, &ab);
    (
        big_val(&form_big(&nb, &ab), p),
        [0, 1, 2].map(|i| big_val(&d[i], p)),
    )
}

/// Hensel certificate of a representative: `vf` is `None` when the
/// representative is an exact zero of the form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub vf: Option<u32>,
    pub vg: u32,
}

impl Certificate {
    /// Exponent `e` such that the certified ℤ_p-point is `≡ a mod p^e`.
    fn agreement(&self) -> Option<u32> {
        self.vf.map(|vf| vf - self.vg)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PadicPoint {
    n: u64,
    p: Prime,
    k: u32,
    residues: [i128; 3],
    cert: Certificate,
}

impl PadicPoint {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.k
    }

    /// Representatives in `[0, p^k)`.
    pub fn residues(&self) -> [i128; 3] {
        self.residues
    }

    pub fn certificate(&self) -> Certificate {
        self.cert
    }

    /// Valuations of the three coordinates of the certified point.
    pub fn valuations(&self) -> [u32; 3] {
        self.residues
            .map(|a| val(a, self.p.get()).expect("certified coordinates are nonzero"))
    }

    /// The same point to precision `k`, by Newton refinement.
    pub fn refine(&self, k: u32) -> Result<PadicPoint> {
        hensel_lift(self.n, self.p, self.residues, k)
    }

    /// Local invariant of `(−u₁/u₃, −u₂/u₃)` at this point's own prime.
    pub fn invariant(&self) -> Sign {
        let p = self.p.get();
        let s = self.valuations().map(i64::from);
        let alpha = s[0] - s[2];
        let beta = s[1] - s[2];
        if self.p.is_two() {
            let r = [0, 1, 2].map(|i| ((self.residues[i] >> s[i]) & 7) as u64);
            // r₃⁻¹ ≡ r₃ mod 8
            let u = (8 - r[0] * r[2] % 8) % 8;
            let v = (8 - r[1] * r[2] % 8) % 8;
            two_kernel(alpha, u, beta, v)
        } else {
            let pp = p as i128;
            let r = [0, 1, 2].map(|i| (self.residues[i] / pp.pow(s[i] as u32)).rem_euclid(pp));
            let lu = legendre(&(-r[0] * r[2]).into(), self.p).unwrap();
            let lv = legendre(&(-r[1] * r[2]).into(), self.p).unwrap();
            odd_kernel(alpha, lu, beta, lv, p)
        }
    }

    pub fn local_invariant(&self, v: Place) -> Result<Sign> {
        match v {
            Place::Finite(q) if q == self.p => Ok(self.invariant()),
            other => Err(Error::PlaceMismatch {
                point: self.p.get(),
                place: other.to_string(),
            }),
        }
    }
}

/// Certifies the residue triple `a` (reduced mod `p^k`) as a ℤ_p-point.
pub fn hensel_certify(n: u64, p: Prime, a: [i128; 3], k: u32) -> Result<PadicPoint> {
    let m = modulus(p, k)?;
    let residues = a.map(|x| x.rem_euclid(m));
    let (vf, vd) = valuations_at(n, p.get(), residues);
    let vg = vd
        .into_iter()
        .flatten()
        .min()
        .ok_or_else(|| Error::NotCertifiable("all partial derivatives vanish".into()))?;
    let cert = Certificate { vf, vg };
    if let Some(vf) = vf {
        if vf <= 2 * vg {
            return Err(Error::NotCertifiable(format!(
                "v(F) = {vf} does not exceed 2·v(∂F) = {}",
                2 * vg
            )));
        }
    }
    let digits = if p.is_two() { 3 } else { 1 };
    for (i, &r) in residues.iter().enumerate() {
        let Some(s) = val(r, p.get()) else {
            return Err(Error::NotCertifiable(format!(
                "coordinate {} vanishes mod p^{k}",
                i + 1
            )));
        };
        if let Some(e) = cert.agreement() {
            if s + digits > e {
                return Err(Error::NotCertifiable(format!(
                    "coordinate {} has valuation {s} but only {e} digits are certified",
                    i + 1
                )));
            }
        }
    }
    Ok(PadicPoint {
        n,
        p,
        k,
        residues,
        cert,
    })
}

/// Newton-refines `a` to a residue solution mod `p^k` along the coordinate
/// with the least derivative valuation, then certifies it.
pub fn hensel_lift(n: u64, p: Prime, a: [i128; 3], k: u32) -> Result<PadicPoint> {
    let m = BigInt::from(modulus(p, k)?);
    let nb = BigInt::from(n);
    let pu = p.get();
    let mut a: [BigInt; 3] = a.map(|x| BigInt::from(x).mod_floor(&m));
    for _ in 0..128 {
        let f = form_big(&nb, &a);
        let Some(vf) = big_val(&f, pu) else { break };
        if vf >= k {
            break;
        }
        let d = partials_big(&nb, &a);
        let (j, vg) = (0..3)
            .filter_map(|i| big_val(&d[i], pu).map(|v| (i, v)))
            .min_by_key(|&(_, v)| v)
            .ok_or_else(|| Error::NotCertifiable("all partial derivatives vanish".into()))?;
        if vf <= 2 * vg {
            return Err(Error::NotCertifiable(format!(
                "v(F) = {vf} does not exceed 2·v(∂F) = {}",
                2 * vg
            )));
        }
        let scale = BigInt::from(pu).pow(vg);
        let unit = (&d[j] / &scale).mod_floor(&m);
        let g = unit.extended_gcd(&m);
        debug_assert!(g.gcd.is_one());
        let step = ((&f / &scale) * g.x).mod_floor(&m);
        a[j] = (&a[j] - step).mod_floor(&m);
    }
    let a = a.map(|x| i128::try_from(x).expect("residues are below the modulus"));
    hensel_certify(n, p, a, k)
}
