//! Exact quantum PSU(n) invariants of lens spaces and connected sums.
//!
//! The crate computes, in exact arithmetic over cyclotomic fields:
//!
//! * root-lattice Gauss sums for sl_n and their closed evaluations,
//! * quantum character values (unknot colorings, framed correlators),
//! * the SO(3)-type invariant τ_r at odd primes r from surgery
//!   presentations with diagonal framing matrices,
//! * the perturbative series τ expanded at x = ζ − 1, and
//! * the residue map p_r under which the two agree:
//!   p_r(τ) = p_r(τ_r) mod r up to x-degree (r−1−n(n−1))/2.
//!
//! All arithmetic is exact: `BigRational` coefficients in the basis
//! 1, x, ..., x^{r−2} of Z[ζ] with x = ζ − 1, truncated power series in x
//! over Q, and residue series over Z/r. Nothing is floated.
//!
//! Entry points: [`RootSystem`] for the Lie data, [`CycloNumber`] for
//! the cyclotomic ring, the `gauss`, `characters`, and `invariants`
//! modules for the sums themselves, and [`verify::run_suite`] for the
//! audited check battery behind the `verify` CLI subcommand.

mod arith;
pub mod characters;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod gauss;
pub mod invariants;
pub mod number_theory;
pub mod root_system;
pub mod series;
pub mod verify;

pub use cyclotomic::{CycloNumber, ResidueSeries};
pub use error::{Error, Result};
pub use invariants::{InvariantContext, SurgeryPresentation};
pub use root_system::{AffineWeylElement, RootSystem, Weight, WeylElement};
pub use series::TruncSeries;

use serde::Serialize;

/// Outcome of one exact comparison: both sides are kept so a failure
/// report can show what was actually computed.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult<T> {
    pub pass: bool,
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> CheckResult<T> {
    pub fn of(lhs: T, rhs: T) -> Self {
        CheckResult { pass: lhs == rhs, lhs, rhs }
    }
}

/// Outcome of one valuation estimate: `valuation ≥ bound`, where
/// `None` encodes the valuation of zero (+∞, so any bound passes).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ValuationBound {
    pub pass: bool,
    pub valuation: Option<u64>,
    pub bound: i64,
}

impl ValuationBound {
    pub fn check(valuation: Option<u64>, bound: i64) -> Self {
        let pass = match valuation {
            None => true,
            Some(v) => v as i64 >= bound,
        };
        ValuationBound { pass, valuation, bound }
    }
}
