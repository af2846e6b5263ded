//! Exact combinatorics of permutohedra and belt polytopes under linear projection.
//!
//! Everything in this crate is computed over arbitrary-precision rationals; no
//! floating point enters any counting path. The library is organized bottom-up:
//!
//! * [`linalg`] — rational matrices, subspaces, ranks and kernels.
//! * [`combinatorics`] — Stirling numbers of both kinds for the symmetric and
//!   hyperoctahedral groups, and streams of (signed) ordered set partitions.
//! * [`simplex`] — an exact phase-1 simplex used for every feasibility question.
//! * [`cones`] — polyhedral cones in H-representation, duals, and the
//!   nontrivial-intersection test that drives all face counting.
//! * [`arrangements`] — hyperplane arrangements, flat lattices, characteristic
//!   polynomials, restrictions and general-position certification.
//! * [`permutohedra`] — types A and B permutohedra: faces, tangent/normal
//!   cones, zonotope structure.
//! * [`projection`] — face counts of images under linear maps, by closed
//!   formula and by an independent cone-intersection oracle.
//! * [`angles`] — sums of Grassmann angles and conic intrinsic volumes of
//!   tangent cones, with a Monte Carlo cross-check.
//! * [`verify`] — the desk verification suite wired into both `cargo test`
//!   and the `verify` CLI subcommand.

pub mod angles;
pub mod arrangements;
pub mod combinatorics;
pub mod cones;
pub mod linalg;
pub mod permutohedra;
pub mod projection;
pub mod report;
pub mod simplex;
pub mod verify;

use thiserror::Error;

/// Errors surfaced by fallible library operations.
///
/// Contract violations that a caller can always avoid statically (e.g. passing
/// matrices of agreeing shapes to an operation documented to require them) are
/// asserted instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid state: {0}")]
    State(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
