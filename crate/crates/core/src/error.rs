use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("valuation of zero is undefined")]
    ZeroValuation,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("expected an odd prime, got {0}")]
    EvenPrime(u64),

    #[error("Hilbert symbol argument must be nonzero")]
    ZeroArgument,

    #[error("{0} exceeds the machine-integer range")]
    TooLarge(String),

    #[error("search to depth {depth} could not decide the Hilbert symbol")]
    Inconclusive { depth: u32 },

    #[error("(n = {n}, u = {u:?}) is not a solution: evaluate_form = {value}")]
    NotASolution { n: u64, u: [i64; 3], value: String },

    #[error("permutation {perm:?} has a vanishing denominator")]
    DegeneratePermutation { perm: [usize; 3] },

    #[error("residue triple is not Hensel-certifiable: {0}")]
    NotCertifiable(String),

    #[error("precision {p}^{k} exceeds the supported modulus 2^96")]
    PrecisionTooLarge { p: u64, k: u32 },

    #[error("point at p = {point} queried at place {place}")]
    PlaceMismatch { point: u64, place: String },

    #[error("{0}")]
    Domain(String),

    #[error("solution is not of Type 1 or Type 2 at p = {0}")]
    NotApplicable(u64),

    #[error("no divisor choice recovers a factorization of {u:?} at p = {p}")]
    RecoveryFailure { p: u64, u: [i64; 3] },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("hypothesis mismatch: {0}")]
    HypothesisMismatch(String),
}
