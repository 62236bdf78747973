//! Command-line front end. Every run writes a deterministic record stream
//! and exits 0 when all records pass, 1 when some record fails, 2 on a
//! usage error.

use std::ffi::OsString;
use std::io::{self, Write};
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rayon::ThreadPool;
use serde::Serialize;

use crate::arith::{primes_between, rat, Prime, Rat, Sign};
use crate::brauer::{
    invariant_profile, verify, Check, InvariantReport, SolutionClass, VerifyParams,
};
use crate::enumerate::{integer_solutions, natural_solutions};
use crate::error::{Error, Result};
use crate::fp::{census, FpCensus};
use crate::hilbert::{reciprocity_check, relevant_places};
use crate::padic::{
    exhaust_two_adic, sample_bad_odd_prime, sample_even_two, PadicPoint, TwoAdicReport,
};
use crate::surface::Solution;
use crate::yamamoto::{yamamoto_check, Condition, Factorization, Status};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Values of `n` processed per parallel batch before their records are
/// written.
const CHUNK: usize = 32;

#[derive(Parser, Debug)]
#[command(
    name = "erdos-straus",
    version,
    about = "Local invariants on the surfaces 4/n = 1/x + 1/y + 1/z"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for randomised suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Range {
    #[arg(long)]
    pub n: Option<u64>,

    /// Odd n in `A..B`, both ends included.
    #[arg(long, value_name = "A..B", value_parser = parse_range)]
    pub odd_range: Option<RangeInclusive<u64>>,

    /// Every n in `A..B`, both ends included.
    #[arg(long, value_name = "A..B", value_parser = parse_range)]
    pub range: Option<RangeInclusive<u64>>,
}

impl Range {
    fn values(&self) -> Result<Vec<u64>> {
        match (self.n, &self.odd_range, &self.range) {
            (Some(n), None, None) => Ok(vec![n]),
            (None, Some(r), None) => Ok(r.clone().filter(|n| n % 2 == 1).collect()),
            (None, None, Some(r)) => Ok(r.clone().collect()),
            (None, None, None) => Err(usage("one of --n, --odd-range, --range is required")),
            _ => Err(usage("--n, --odd-range and --range are mutually exclusive")),
        }
    }

    fn explicit(&self) -> bool {
        self.n.is_some()
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List solutions, sorted by (|u|, u).
    Enumerate {
        #[command(flatten)]
        range: Range,
        /// Include non-natural integer solutions.
        #[arg(long)]
        integer: bool,
    },
    /// Local invariants of one solution at every relevant place.
    Invariant {
        #[arg(long)]
        n: u64,
        #[arg(long, value_name = "U1,U2,U3", value_parser = parse_triple, allow_hyphen_values = true)]
        u: [i64; 3],
    },
    /// Run a verification suite.
    Verify {
        /// natural-product | integer-product | prime-legendre | square-patterns |
        /// good-primes | two-adic-trivial | yamamoto | reciprocity | two-adic
        #[arg(long)]
        check: String,
        #[command(flatten)]
        range: Range,
        /// A single prime (prime-legendre, yamamoto).
        #[arg(long)]
        p: Option<u64>,
        /// Prime bound (prime-legendre, yamamoto, good-primes).
        #[arg(long)]
        pmax: Option<u64>,
        /// Precision exponent (two-adic).
        #[arg(long, default_value_t = 8)]
        precision: u32,
        /// Random pairs (reciprocity).
        #[arg(long, default_value_t = 10_000)]
        count: usize,
    },
    /// Certified local point with a prescribed invariant at p | 2n.
    Sample {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
        target: Sign,
        #[arg(long)]
        precision: Option<u32>,
    },
    /// Point count and reduction image over F_p.
    Fp {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        pmax: Option<u64>,
    },
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<u64>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("`{s}` is not of the form A..B"))?;
    let a: u64 = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let b: u64 = b
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|e| format!("{b}: {e}"))?;
    if a == 0 || a > b {
        return Err(format!("range {a}..{b} is empty or contains 0"));
    }
    Ok(a..=b)
}

fn parse_triple(s: &str) -> std::result::Result<[i64; 3], String> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x}: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|v: Vec<i64>| format!("expected 3 coordinates, got {}", v.len()))
}

fn parse_sign(s: &str) -> std::result::Result<Sign, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// One output row.
pub trait Record: Serialize {
    const COLUMNS: &'static [&'static str];
    fn row(&self) -> Vec<String>;
    fn text(&self) -> String;
    fn pass(&self) -> bool {
        true
    }
}

fn triple(u: [i64; 3]) -> String {
    format!("{};{};{}", u[0], u[1], u[2])
}

impl Record for InvariantReport {
    const COLUMNS: &'static [&'static str] = &[
        "n",
        "u",
        "class",
        "invariants",
        "product",
        "prediction",
        "pass",
        "note",
    ];

    fn row(&self) -> Vec<String> {
        let invs: Vec<String> = self
            .invariants
            .iter()
            .map(|(v, e)| format!("{v}:{e}"))
            .collect();
        vec![
            self.n.to_string(),
            triple(self.u),
            self.class.to_string(),
            invs.join(";"),
            self.product.to_string(),
            self.prediction.to_string(),
            self.pass.to_string(),
            self.note.clone().unwrap_or_default(),
        ]
    }

    fn text(&self) -> String {
        let invs: Vec<String> = self
            .invariants
            .iter()
            .map(|(v, e)| format!("{v}:{e}"))
            .collect();
        let [a, b, c] = self.u;
        let mut line = format!(
            "n={} u=({a}, {b}, {c}) {} [{}] product={} prediction={} {}",
            self.n,
            self.class,
            invs.join(" "),
            self.product,
            self.prediction,
            if self.pass { "PASS" } else { "FAIL" }
        );
        if let Some(note) = &self.note {
            line.push_str(&format!(" ({note})"));
        }
        line
    }

    fn pass(&self) -> bool {
        self.pass
    }
}

#[derive(Serialize)]
struct SolutionRecord {
    n: u64,
    u: [i64; 3],
    class: SolutionClass,
}

impl Record for SolutionRecord {
    const COLUMNS: &'static [&'static str] = &["n", "u", "class"];

    fn row(&self) -> Vec<String> {
        vec![self.n.to_string(), triple(self.u), self.class.to_string()]
    }

    fn text(&self) -> String {
        let [a, b, c] = self.u;
        format!("n={} ({a}, {b}, {c}) {}", self.n, self.class)
    }
}

#[derive(Serialize)]
struct YamamotoRecord {
    p: u64,
    u: [i64; 3],
    factorization: Factorization,
    conditions: Vec<Condition>,
    pass: bool,
}

impl Record for YamamotoRecord {
    const COLUMNS: &'static [&'static str] = &[
        "p",
        "u",
        "type",
        "a",
        "b",
        "c",
        "d",
        "q",
        "conditions",
        "pass",
    ];

    fn row(&self) -> Vec<String> {
        let f = &self.factorization;
        let conds: Vec<String> = self.conditions.iter().map(cond_text).collect();
        vec![
            self.p.to_string(),
            triple(self.u),
            type_name(f).into(),
            f.a.to_string(),
            f.b.to_string(),
            f.c.to_string(),
            f.d.to_string(),
            f.q.to_string(),
            conds.join(";"),
            self.pass.to_string(),
        ]
    }

    fn text(&self) -> String {
        let f = &self.factorization;
        let [x, y, z] = self.u;
        let conds: Vec<String> = self.conditions.iter().map(cond_text).collect();
        format!(
            "p={} u=({x}, {y}, {z}) {} (a,b,c,d)=({}, {}, {}, {}) q={} {} {}",
            self.p,
            type_name(f),
            f.a,
            f.b,
            f.c,
            f.d,
            f.q,
            conds.join(" "),
            if self.pass { "PASS" } else { "FAIL" }
        )
    }

    fn pass(&self) -> bool {
        self.pass
    }
}

fn type_name(f: &Factorization) -> &'static str {
    match f.tag {
        crate::surface::TypeTag::Type1 { .. } => "type1",
        crate::surface::TypeTag::Type2 { .. } => "type2",
        crate::surface::TypeTag::Other => "other",
    }
}

fn cond_text(c: &Condition) -> String {
    match (c.status, c.value) {
        (Status::Skipped, _) | (_, None) => format!("{}=skipped", c.name),
        (_, Some(v)) => format!("{}[{}]={v}", c.name, c.modulus),
    }
}

#[derive(Serialize)]
struct ReciprocityRecord {
    a: String,
    b: String,
    places: usize,
    product: Sign,
    pass: bool,
}

impl Record for ReciprocityRecord {
    const COLUMNS: &'static [&'static str] = &["a", "b", "places", "product", "pass"];

    fn row(&self) -> Vec<String> {
        vec![
            self.a.clone(),
            self.b.clone(),
            self.places.to_string(),
            self.product.to_string(),
            self.pass.to_string(),
        ]
    }

    fn text(&self) -> String {
        format!(
            "({}, {}) over {} places: {} {}",
            self.a,
            self.b,
            self.places,
            self.product,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }

    fn pass(&self) -> bool {
        self.pass
    }
}

#[derive(Serialize)]
struct TwoAdicRecord {
    #[serde(flatten)]
    report: TwoAdicReport,
    pass: bool,
}

impl Record for TwoAdicRecord {
    const COLUMNS: &'static [&'static str] = &[
        "n",
        "precision",
        "solutions",
        "plus",
        "minus",
        "unresolved",
        "pattern_violations",
        "pass",
    ];

    fn row(&self) -> Vec<String> {
        let r = &self.report;
        vec![
            r.n.to_string(),
            r.precision.to_string(),
            r.solutions.to_string(),
            r.plus.to_string(),
            r.minus.to_string(),
            r.unresolved.to_string(),
            r.pattern_violations.to_string(),
            self.pass.to_string(),
        ]
    }

    fn text(&self) -> String {
        let r = &self.report;
        format!(
            "n={} mod 2^{}: {} classes, +1: {}, -1: {}, unresolved: {}, pattern violations: {} {}",
            r.n,
            r.precision,
            r.solutions,
            r.plus,
            r.minus,
            r.unresolved,
            r.pattern_violations,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }

    fn pass(&self) -> bool {
        self.pass
    }
}

#[derive(Serialize)]
struct SampleRecord {
    n: u64,
    p: u64,
    target: Sign,
    point: PadicPoint,
    invariant: Sign,
    pass: bool,
}

impl Record for SampleRecord {
    const COLUMNS: &'static [&'static str] = &[
        "n",
        "p",
        "precision",
        "residues",
        "vf",
        "vg",
        "target",
        "invariant",
        "pass",
    ];

    fn row(&self) -> Vec<String> {
        let c = self.point.certificate();
        let r = self.point.residues();
        vec![
            self.n.to_string(),
            self.p.to_string(),
            self.point.precision().to_string(),
            format!("{};{};{}", r[0], r[1], r[2]),
            c.vf.map_or("inf".into(), |v| v.to_string()),
            c.vg.to_string(),
            self.target.to_string(),
            self.invariant.to_string(),
            self.pass.to_string(),
        ]
    }

    fn text(&self) -> String {
        let c = self.point.certificate();
        let r = self.point.residues();
        format!(
            "n={} p={} u ≡ ({}, {}, {}) mod {}^{} v(F)={} v(∂F)={} invariant={} target={} {}",
            self.n,
            self.p,
            r[0],
            r[1],
            r[2],
            self.p,
            self.point.precision(),
            c.vf.map_or("inf".into(), |v| v.to_string()),
            c.vg,
            self.invariant,
            self.target,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }

    fn pass(&self) -> bool {
        self.pass
    }
}

impl Record for FpCensus {
    const COLUMNS: &'static [&'static str] = &["n", "p", "total", "image", "witness"];

    fn row(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.p.to_string(),
            self.total.to_string(),
            self.image.to_string(),
            self.witness
                .map_or(String::new(), |w| format!("{};{};{}", w[0], w[1], w[2])),
        ]
    }

    fn text(&self) -> String {
        let w = self.witness.map_or("surjective".into(), |w| {
            format!("witness ({}, {}, {})", w[0], w[1], w[2])
        });
        format!(
            "n={} p={}: {} points, image {}, {w}",
            self.n, self.p, self.total, self.image
        )
    }
}

/// Writes records as they arrive and remembers whether any failed.
struct Emitter<'a, W: Write> {
    out: &'a mut W,
    format: Format,
    started: bool,
    count: usize,
    failures: usize,
}

impl<'a, W: Write> Emitter<'a, W> {
    fn new(out: &'a mut W, format: Format) -> Self {
        Emitter {
            out,
            format,
            started: false,
            count: 0,
            failures: 0,
        }
    }

    fn emit<R: Record>(&mut self, r: &R) -> io::Result<()> {
        if !self.started {
            self.started = true;
            match self.format {
                Format::Json => writeln!(self.out, "[")?,
                Format::Csv => writeln!(self.out, "{}", R::COLUMNS.join(","))?,
                Format::Text => {}
            }
        }
        match self.format {
            Format::Json => {
                if self.count > 0 {
                    writeln!(self.out, ",")?;
                }
                serde_json::to_writer(&mut *self.out, r).map_err(io::Error::other)?;
            }
            Format::Csv => writeln!(self.out, "{}", r.row().join(","))?,
            Format::Text => writeln!(self.out, "{}", r.text())?,
        }
        self.count += 1;
        if !r.pass() {
            self.failures += 1;
        }
        Ok(())
    }

    fn finish(self) -> io::Result<i32> {
        if self.format == Format::Json {
            if self.started {
                writeln!(self.out, "\n]")?;
            } else {
                writeln!(self.out, "[]")?;
            }
        }
        self.out.flush()?;
        Ok(if self.failures == 0 {
            EXIT_PASS
        } else {
            EXIT_COUNTEREXAMPLE
        })
    }
}

enum Failure {
    Usage(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs `f` over `ns` in parallel batches, writing results in input order.
fn sweep<W, R, F>(
    pool: &ThreadPool,
    em: &mut Emitter<'_, W>,
    ns: &[u64],
    f: F,
) -> std::result::Result<(), Failure>
where
    W: Write,
    R: Record + Send,
    F: Fn(u64) -> Result<Vec<R>> + Sync,
{
    for chunk in ns.chunks(CHUNK) {
        let parts: Vec<Result<Vec<R>>> = pool.install(|| chunk.par_iter().map(|&n| f(n)).collect());
        for part in parts {
            for r in part? {
                em.emit(&r)?;
            }
        }
    }
    Ok(())
}

fn odd_primes_upto(pmax: u64) -> Vec<u64> {
    primes_between(3, pmax)
        .into_iter()
        .map(Prime::get)
        .collect()
}

fn is_odd_square(n: u64) -> bool {
    let r = n.isqrt();
    n % 2 == 1 && n > 1 && r * r == n
}

/// `n` values for a check: an explicit `--n` is passed through (so a
/// hypothesis mismatch surfaces as a usage error), a range is filtered to
/// the values the check applies to.
fn check_values(
    check: Check,
    range: &Range,
    p: Option<u64>,
    pmax: Option<u64>,
) -> Result<Vec<u64>> {
    let prime_like = matches!(check, Check::PrimeLegendre);
    if prime_like {
        if let Some(p) = p {
            return Ok(vec![p]);
        }
        if let (Some(pmax), None, None, None) = (pmax, range.n, &range.odd_range, &range.range) {
            return Ok(odd_primes_upto(pmax));
        }
    }
    let ns = range.values()?;
    if range.explicit() {
        return Ok(ns);
    }
    Ok(ns
        .into_iter()
        .filter(|&n| match check {
            Check::PrimeLegendre => n > 2 && Prime::new(n).is_ok(),
            Check::SquarePatterns => is_odd_square(n),
            Check::GoodPrimes => true,
            _ => n % 2 == 1,
        })
        .collect())
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let a: i64 = rng.gen_range(-1000..=1000);
        let b: i64 = rng.gen_range(1..=1000);
        if a != 0 {
            return rat(a, b);
        }
    }
}

fn execute<W: Write>(
    cli: &Cli,
    pool: &ThreadPool,
    out: &mut W,
) -> std::result::Result<i32, Failure> {
    let mut em = Emitter::new(out, cli.format);
    match &cli.command {
        Command::Enumerate { range, integer } => {
            let ns = range.values()?;
            let integer = *integer;
            sweep(pool, &mut em, &ns, |n| {
                let set = if integer {
                    integer_solutions(n)
                } else {
                    natural_solutions(n)
                };
                Ok(set
                    .into_iter()
                    .map(|t| {
                        let s = t.solution(n);
                        SolutionRecord {
                            n,
                            u: t.get(),
                            class: SolutionClass::of(&s),
                        }
                    })
                    .collect())
            })?;
        }
        Command::Invariant { n, u } => {
            let s = Solution::new(*n, *u)?;
            em.emit(&invariant_profile(&s)?)?;
        }
        Command::Verify {
            check,
            range,
            p,
            pmax,
            precision,
            count,
        } => match check.as_str() {
            "yamamoto" => {
                let primes = match (p, pmax) {
                    (Some(p), None) => vec![*p],
                    (None, Some(pmax)) => odd_primes_upto(*pmax),
                    _ => return Err(usage("yamamoto needs exactly one of --p, --pmax").into()),
                };
                sweep(pool, &mut em, &primes, |q| {
                    let p = Prime::odd(q).map_err(|_| {
                        Error::HypothesisMismatch(format!("{q} is not an odd prime"))
                    })?;
                    let mut out = Vec::new();
                    for t in natural_solutions(q) {
                        let s = t.solution(q);
                        match yamamoto_check(&s, p) {
                            Ok(reports) => {
                                out.extend(reports.into_iter().map(|r| YamamotoRecord {
                                    p: q,
                                    u: s.u(),
                                    pass: r.pass(),
                                    factorization: r.factorization,
                                    conditions: r.conditions,
                                }))
                            }
                            Err(Error::NotApplicable(_) | Error::RecoveryFailure { .. }) => {}
                            Err(e) => return Err(e),
                        }
                    }
                    Ok(out)
                })?;
            }
            "reciprocity" => {
                let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                let pairs: Vec<(Rat, Rat)> = (0..*count)
                    .map(|_| (random_rat(&mut rng), random_rat(&mut rng)))
                    .collect();
                for batch in pairs.chunks(1024) {
                    let recs: Vec<Result<ReciprocityRecord>> = pool.install(|| {
                        batch
                            .par_iter()
                            .map(|(a, b)| {
                                debug_assert!(!a.is_zero() && !b.is_zero());
                                let product = reciprocity_check(a, b)?;
                                Ok(ReciprocityRecord {
                                    a: a.to_string(),
                                    b: b.to_string(),
                                    places: relevant_places(a, b)?.len(),
                                    product,
                                    pass: product == Sign::Plus,
                                })
                            })
                            .collect()
                    });
                    for r in recs {
                        em.emit(&r?)?;
                    }
                }
            }
            "two-adic" => {
                if *precision < 4 {
                    return Err(usage("--precision must be at least 4").into());
                }
                let ns = range.values()?;
                // each report already runs in parallel
                for n in ns {
                    let report = pool.install(|| exhaust_two_adic(n, *precision))?;
                    em.emit(&TwoAdicRecord {
                        pass: report.pass(),
                        report,
                    })?;
                }
            }
            other => {
                let check: Check = other.parse()?;
                let ns = check_values(check, range, *p, *pmax)?;
                let pmax = pmax.unwrap_or(100);
                sweep(pool, &mut em, &ns, |n| {
                    verify(check, VerifyParams { n, pmax })
                })?;
            }
        },
        Command::Sample {
            n,
            p,
            target,
            precision,
        } => {
            if precision.is_some_and(|k| k < 4) {
                return Err(usage("--precision must be at least 4").into());
            }
            let prime = Prime::new(*p)?;
            let point = if prime.is_two() {
                sample_even_two(
                    *n,
                    *target,
                    precision.unwrap_or(crate::padic::DEFAULT_PRECISION_TWO),
                )?
            } else {
                sample_bad_odd_prime(
                    *n,
                    prime,
                    *target,
                    precision.unwrap_or(crate::padic::DEFAULT_PRECISION_ODD),
                )?
            };
            let invariant = point.invariant();
            em.emit(&SampleRecord {
                n: *n,
                p: *p,
                target: *target,
                invariant,
                pass: invariant == *target,
                point,
            })?;
        }
        Command::Fp { n, p, pmax } => {
            let primes: Vec<Prime> = match (p, pmax) {
                (Some(p), None) => vec![Prime::new(*p)?],
                (None, Some(pmax)) => primes_between(2, *pmax),
                _ => return Err(usage("fp needs exactly one of --p, --pmax").into()),
            };
            let censuses: Vec<FpCensus> =
                pool.install(|| primes.par_iter().map(|&q| census(*n, q)).collect());
            for c in &censuses {
                em.emit(c)?;
            }
        }
    }
    Ok(em.finish()?)
}

/// Parses `args` (program name first) and runs, returning the exit code.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match execute(&cli, &pool, out) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_PASS,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
