//! Exact symbolic engine for finite-level quantum matrix bialgebras,
//! quantum Grassmannians, their Hopf and coaction structure, and the
//! Maya-diagram indexed ladders between levels.
//!
//! All arithmetic is exact over `Q[q, q^-1]`.

pub mod coact;
pub mod coeff;
pub mod error;
pub mod grassmann;
pub mod limits;
pub mod qmatrix;

pub use error::QgrError;
pub mod qsl;
pub mod report;
