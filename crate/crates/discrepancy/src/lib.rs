//! Exact and certified discrepancy computations for set systems.
//!
//! A set system on ground set `{1..n}` is a list of subsets together with its
//! 0/1 incidence matrix. This crate computes, at desk scale, the classical
//! discrepancy quantities and produces machine-checkable witnesses for each:
//!
//! * [`disc::disc_exact`] — exact discrepancy by branch-and-bound over ±1
//!   colorings, with an optimal coloring as witness.
//! * [`disc::herdisc_exact`] — exact hereditary discrepancy by subset
//!   enumeration, with the extremal restriction as witness.
//! * [`detlb::detlb_exact`] — the determinant lower bound `max |det B|^{1/k}`
//!   over all square submatrices, with the maximizing submatrix and its exact
//!   integer determinant as witness.
//! * [`vecdisc::solve_vecdisc`] — vector discrepancy by a log-barrier
//!   interior-point method on the Gram-matrix semidefinite program, returning
//!   both a primal unit-vector coloring and a dual certificate `(w, z)` whose
//!   validity is checkable without trusting the solver.
//! * [`pipeline::extract_witness`] — the constructive chain from a dual
//!   certificate to a determinant witness: support extraction, almost-constant
//!   bucketing, and an exact maximal-minor search, every inequality re-checked.
//! * [`detlb::union_bound_check`] — the blockwise determinant bound for unions
//!   of systems, verified link by link.
//!
//! Integer determinants are computed exactly (fraction-free elimination over
//! arbitrary-precision integers), so every witness certifies its bound without
//! floating-point caveats. Floating point enters only where the quantities are
//! genuinely real: eigenvalues, SDP iterates, and final root extractions.
//!
//! The [`generators`] module builds the extremal instances used throughout:
//! Sylvester–Hadamard matrices, Hoffman's tree systems, the Pálvölgyi
//! recursive pair, and seeded random systems.
//!
//! Everything is deterministic given inputs and seeds, and all types are
//! immutable after construction, so concurrent use needs no coordination.
//!
//! See the crate examples for runnable tours of each capability, and the
//! `discrepancy` binary for the file-based command-line front end.

pub mod cli;
pub mod core;
pub mod detlb;
pub mod disc;
pub mod error;
pub mod exactla;
pub mod generators;
pub mod io;
pub mod pipeline;
pub mod vecdisc;

pub use crate::core::{Coloring, GroundSubset, SetSystem};
pub use crate::error::Error;
