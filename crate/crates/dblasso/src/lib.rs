//! Debiased Lasso inference with small node-wise tuning parameters.
//!
//! The crate fits the Lasso by cyclic coordinate descent, estimates a
//! precision-matrix column with the node-wise Lasso, selects the node-wise
//! tuning parameter with the STPS rule (and cross-validation, universal, and
//! Zhang–Zhang-style baselines), and assembles debiased estimates with
//! normal-theory confidence intervals. A deterministic Monte Carlo engine
//! reproduces coverage experiments at desk scale.
//!
//! Modules map onto the pipeline stages:
//!
//! - [`data`] — dataset ingestion, centering, interaction expansion
//! - [`lasso`] — coordinate-descent solver and tuning-parameter paths
//! - [`cv`] — K-fold cross-validation with the one-standard-error rule
//! - [`nodewise`] — node-wise Lasso, bias factor f(λ), variance factor Ω̂₁,₁
//! - [`stps`] — the small-tuning-parameter selector and baselines
//! - [`debias`] — debiased estimates, studentized statistics, intervals
//! - [`sim`] — data-generating processes and the replication engine

pub mod cv;
pub mod data;
pub mod debias;
pub mod error;
pub mod lasso;
mod linalg;
pub mod nodewise;
pub mod sim;
pub mod stps;

pub use error::{Error, ErrorKind, Result};
