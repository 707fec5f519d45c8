//! Exact finite multiple harmonic q-series.
//!
//! Sums `Z_n[s]`, `A_n[s]` and friends are computed as rational functions
//! of `q` over the rationals, so identities between them can be checked
//! symbolically rather than numerically. Limits `n -> infinity` are handled
//! by truncation with rigorous tail bounds.
//!
//! Modules:
//! - [`qpoly`]: dense polynomials and canonical rational functions in `q`.
//! - [`compositions`]: compositions, the duality involution, words, coarsenings.
//! - [`sums`]: evaluation of the finite sums, their `q -> 1` limits and truncated limits.
//! - [`verify`]: identity checkers producing [`verify::Report`]s, and parallel sweeps.
//! - [`cli`]: the `qharmonic` command line front end.
//!
//! The `examples/` directory has one runnable program per capability:
//! `q_binomials`, `eval_sums`, `duality`, `theorem1_sweep`, `strict_sums`,
//! `inverse_pairs`, `two_parameter_family`, `limits` and `verify_reports`.
//! Run them with `cargo run --example <name>`.

pub mod cli;
pub mod compositions;
pub mod qpoly;
pub mod sums;
pub mod verify;
