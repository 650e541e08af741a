//! Weighted-particle laboratory for continuous-time nonlinear filtering.
//!
//! The library simulates three observation models — a diffusion observed in
//! additive Gaussian white noise, a diffusion coupled to spatial white-noise
//! channels, and a marked-point-process cluster-detection model — and computes
//! the unnormalized (`rho`) and normalized (`pi`) conditional distributions
//! through weighted particle averages. Each particle carries an exact Girsanov
//! weight together with coarse-time (Picard) discretized weights on common
//! random numbers, which makes the discretization error `rho - rho_n` directly
//! measurable. The [`error_expansion`] module measures the rescaled error
//! `U_n = n (rho - rho_n)`, checks its boundedness and first-order rate, and
//! integrates the limiting stochastic evolution equation for `U` with a
//! Galerkin closure so the two can be compared in distribution.
//!
//! Everything is deterministic given a master seed: random streams are
//! counter-based per purpose/particle/replicate, and all reductions run in a
//! fixed block order independent of the worker count.

pub mod acceptance;
pub mod cluster;
pub mod error;
pub mod error_expansion;
pub mod filter;
pub mod grid;
pub mod models;
pub mod oracle;
pub mod rng;
pub mod sde;
pub mod stats;
pub mod testfn;
pub mod weights;

pub use error::FilterLabError;
pub use grid::TimeGrid;
pub use rng::{RngStream, StreamPurpose};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, FilterLabError>;
