//! End-to-end reliability of service function chains placed over a
//! hierarchical data-center component model.
//!
//! A chain of `psi` VNF types is replicated into `k` active and `r` backup
//! sub-chains spread over a component hierarchy (data centers, racks,
//! servers, VMs by default) in which a failing component takes down
//! everything beneath it. The service survives as long as every VNF type
//! keeps at least `k` live instances. This crate computes that probability
//! three independent ways:
//!
//! - [`analytic`]: the closed combinatorial form, a product of nested
//!   binomial sums whose bounds track how many failures the backup budget
//!   still absorbs. Handles shared components, per-class placement
//!   strategies, and common roots joining several classes.
//! - [`oracle`]: ground truth over the explicit component-instance tree,
//!   by exact enumeration of all intrinsic failure states (small trees)
//!   and by reproducible Monte-Carlo simulation.
//! - [`experiments`]: the published numerical studies (the placement
//!   taxonomy, the `k`-vs-`r` study, and the two-class matrix) plus
//!   triple-engine verification, with CSV output.
//!
//! Scenarios are plain values ([`model`]) loadable from JSON
//! ([`scenario_io`]); everything is immutable after construction and safe
//! to share across threads.

pub mod analytic;
pub mod experiments;
pub mod model;
pub mod oracle;
pub mod report;
pub mod scenario_io;
