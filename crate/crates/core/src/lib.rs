//! Topology of spaces of non-resultant homogeneous polynomial systems in two
//! variables.
//!
//! A system of `n` real binary forms of degrees `d1 >= ... >= dn` lives in a
//! coefficient space of dimension `D = sum (d_i + 1)`. The *resultant variety*
//! is the set of systems whose forms share a nonzero root; this crate computes
//! the cohomology of its complement three independent ways:
//!
//! * [`closed_form`] — direct evaluation of the closed-form tables for real
//!   systems, complex systems, and complex m-discriminants;
//! * [`spectral`] — the filtration spectral sequence of a simplicial
//!   resolution of the resultant variety, run leaf by leaf and converted back
//!   through Alexander duality;
//! * [`oracle`] — exact-arithmetic sampling of actual integer systems,
//!   classified by component-separating invariants (winding index, zero
//!   parity, global sign) built on resultants and Sturm sequences.
//!
//! The `nrt` binary exposes all three as subcommands.

pub mod algebra;
pub mod closed_form;
pub mod oracle;
pub mod output;
pub mod spectral;

pub use algebra::{DegreeProfile, FinAbGroup, GradedGroup};
pub use closed_form::{MDiscParams, RealCohomology};
pub use oracle::{BinaryForm, ComponentReport, PolySystem};

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree profile must be non-empty")]
    EmptyProfile,
    #[error("degree {0} is not positive")]
    NonPositiveDegree(i64),
    #[error("the complex complement is empty for a single form of positive degree")]
    ComplexComplementEmpty,
    #[error("m-discriminant parameters require m >= 2 and d >= m (got d={d}, m={m})")]
    InvalidMDisc { d: i64, m: i64 },
    #[error("page does not match the first-leaf table of the profile")]
    MalformedPage,
    #[error("duality would place a non-zero group in negative dimension {0}")]
    DualityOutOfRange(i64),
    #[error("cannot add forms of degrees {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("operation is undefined for the zero form")]
    ZeroForm,
    #[error("form has a repeated real zero")]
    NonSquarefree,
    #[error("predicate form vanishes at a zero of the form")]
    PredicateVanishesAtRoot,
    #[error("system lies on the resultant variety")]
    OnResultantVariety,
    #[error("winding index requires degrees of equal parity (got {0} and {1})")]
    ParityMismatch(usize, usize),
    #[error("no witness with index {k} exists for degrees ({d1}, {d2})")]
    IllegalIndex { d1: u32, d2: u32, k: i64 },
    #[error("component census is only defined for one or two forms (profile has {0})")]
    UnsupportedProfileForCensus(usize),
    #[error("complement is empty; there is nothing to sample")]
    EmptyComplement,
}

pub type Result<T> = std::result::Result<T, Error>;
