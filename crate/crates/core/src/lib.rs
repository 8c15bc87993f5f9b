//! Exact d-path calculus and execution-space homology for bi-pointed
//! pre-cubical sets.
//!
//! A finite pre-cubical set with distinguished start and end vertices models
//! a Higher Dimensional Automaton. This crate provides:
//!
//! * the data model for such sets, with face-map algebra, validation and
//!   generators for standard examples ([`precubical`]);
//! * piecewise-linear directed paths with exact rational breakpoints, and
//!   the calculus of length, naturalization, tameness, tracks, actions,
//!   progress functions and tamification ([`dpath`]);
//! * cube chains and the cube chain category of a given length ([`chains`]);
//! * the nerve of that category as a finite chain complex ([`nerve`]);
//! * integer homology via Smith normal form ([`homology`]);
//! * a report pipeline used by the command-line interface ([`runner`]).
//!
//! All semantic computation is done in arbitrary-precision rational or
//! integer arithmetic; no floating point is used anywhere.

pub mod chains;
pub mod dpath;
pub mod homology;
pub mod nerve;
pub mod precubical;
pub mod rat;
pub mod runner;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
