use thiserror::Error;

/// Errors shared across the crate.
///
/// Contract violations that can only arise from caller bugs (mismatched
/// ranks or moduli between values that were already constructed) panic
/// instead; everything reachable from user input is represented here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank parameter n = {0} outside the supported range 2..=6")]
    RankOutOfRange(usize),
    #[error("r = {r} must be an odd prime greater than n = {n}")]
    BadModulus { r: u64, n: usize },
    #[error("enumeration of {size} points exceeds the cap {cap}")]
    EnumerationCap { size: u128, cap: u64 },
    #[error("framing {0} is divisible by r")]
    FramingDivisibleByR(i64),
    #[error("framing must be nonzero")]
    ZeroFraming,
    #[error("|b| = {0} must be smaller than r = {1}")]
    FramingTooLarge(i64, u64),
    #[error("denominator of {0} is divisible by the modulus r = {1}")]
    DenominatorHitsModulus(String, u64),
    #[error("element has valuation {0} > 0 and is not a unit")]
    NotAUnit(u64),
    #[error("exact division impossible: numerator valuation {num} < denominator valuation {den}")]
    ValuationDeficit { num: u64, den: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent {0} is not an integer")]
    NonIntegralExponent(String),
    #[error("weight lies outside the coset rho + root lattice")]
    CosetViolation,
    #[error("weight lies outside the root lattice")]
    RootLatticeViolation,
    #[error("series order {order} is below the required truncation degree {rbar}")]
    OrderBelowRbar { order: usize, rbar: usize },
    #[error("series has zero constant term and cannot be inverted")]
    NonUnitSeries,
    #[error("series is not divisible by x^{shift}: coefficient at x^{index} is nonzero")]
    NotDivisibleByX { shift: usize, index: usize },
    #[error("p_r is undefined: r = {r} does not exceed n(n-1) = {nn1}")]
    ModulusTooSmallForPr { r: u64, nn1: u64 },
    #[error("r = {r} divides the homology order {h1}")]
    HomologyDivisibleByR { r: u64, h1: u64 },
    #[error("degree {0} exceeds the supported bound {1}")]
    DegreeOutOfRange(usize, usize),
    #[error("polynomial total degree {deg} is not below |a| = {bound}")]
    DegreeNotBelowOrder { deg: usize, bound: u32 },
    #[error("affine symmetry is only checked at framing 0, got b = {0}")]
    NonZeroFraming(i64),
    #[error("framing list {0:?} is not a comma-separated list of integers")]
    BadFramingList(String),
    #[error("could not write report to {0}: {1}")]
    ReportIo(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;
