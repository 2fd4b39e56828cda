//! High-precision verification toolkit for an elementary argument about
//! Euler's constant.
//!
//! The crate provides, bottom up:
//!
//! * [`exec`] — deterministic divide-and-conquer summation, optionally
//!   parallelized with rayon (feature `parallel`, on by default);
//! * [`exact`] — exact rational building blocks: harmonic numbers,
//!   telescoping partial sums, Bernoulli numbers;
//! * [`hpnum`] — fixed-point decimal interval arithmetic (`ScaledDecimal`,
//!   `Enclosure`) with outward rounding and a rigorous natural logarithm;
//! * [`constants`] — enclosures for ln 2 (atanh series) and Euler's constant
//!   (Euler–Maclaurin with Bernoulli correction and proven remainder bound);
//! * [`series`] — the four slowly converging series α, β, S₁, S₂ plus the
//!   partial-sum families γ_n and the alternating-sum area S′: exact term
//!   generators, exact closed-form partials, rigorous tail sandwiches, and
//!   numeric enclosures;
//! * [`audit`] — a fixed 13-node ledger of the argument's claims with exact
//!   and numeric checkers, a minimal-denominator rationality probe, and
//!   report assembly;
//! * [`cli`] — argument parsing and text/json/markdown rendering for the
//!   `gamma-audit` binary.
//!
//! Every numeric result is an enclosure: an interval with exact decimal
//! endpoints guaranteed to contain the true real value. All rounding is
//! outward, so interval containment is preserved through every operation,
//! and a reported numerical contradiction can never be a rounding artifact.

pub mod audit;
pub mod cli;
pub mod constants;
pub mod error;
pub mod exact;
pub mod exec;
pub mod hpnum;
pub mod series;

pub use error::Error;
