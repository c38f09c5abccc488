//! Exact counting and growth experiments for sum-product quantities over
//! prime fields `F_p`.
//!
//! The crate computes the countable objects of additive combinatorics over
//! `F_p` — sumsets and product sets, representation functions, additive and
//! multiplicative energies, point-line incidence histograms, collinear
//! triple/quadruple counts, pinned-ratio and cross-ratio expanders, and the
//! symplectic form `ω` — and cross-validates them against each other:
//!
//! * quantities with several algebraic routes (e.g. the collinear triple
//!   count) are computed by every route and asserted equal;
//! * identities and inequalities with explicit constants are asserted
//!   exactly, in integer arithmetic;
//! * asymptotic bounds with implicit constants are never asserted — the
//!   [`verify`] registry records their observed constants so that
//!   [`experiments`] sweeps can regress growth exponents.
//!
//! Start with the runnable examples (`cargo run --example collinear_counts`,
//! `cargo run --example check_registry`, ...); each one exercises a major
//! capability. A thin `sumprod` binary exposes the same functionality as
//! subcommands for scripted use.
//!
//! All randomness is driven by an explicit 64-bit seed through the splitmix
//! generator in [`rng`]; for a fixed seed every output is byte-reproducible
//! at any worker count.

pub mod crossratio;
mod error;
pub mod experiments;
pub mod field;
pub mod incidence;
pub mod repfn;
pub mod rng;
pub mod sets;
pub mod symplectic;
pub mod triples;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Elem, Prime, ProjPoint};
pub use sets::{FamilySpec, FpSet};

/// Default abstract operation budget for expensive counters (`~2^34` ops).
///
/// Budgets are op-count estimates, not wall-clock; see the cost models on
/// the individual operations.
pub const DEFAULT_BUDGET: u64 = 1 << 34;
