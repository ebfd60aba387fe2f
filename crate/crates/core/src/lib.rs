//! Simulation and verification laboratory for connectivity of random
//! hypergraphs with inhomogeneous hyperedge sizes.
//!
//! The crate has five layers:
//!
//! - [`model`] — size distributions, size profiles, hypergraphs, and model
//!   specifications, with validation and moment computation;
//! - [`sampling`] — exact samplers for the three hypergraph models (uniform
//!   given-sizes via rejection, i.i.d. shotgun, per-edge size profiles) plus
//!   the 2-section projection;
//! - [`structure`] — connectivity, isolated nodes, and component statistics,
//!   with brute-force oracles for small instances;
//! - [`theory`] — closed-form thresholds (`lambda`, `mu`), isolation
//!   probabilities, cut-probability bounds, and the elementary combinatorial
//!   inequalities backing them;
//! - [`harness`] — a reproducible Monte Carlo experiment engine with scenario
//!   presets, parameter sweeps, and CSV/JSON output.

pub mod binom;
pub mod harness;
pub mod model;
pub mod sampling;
pub mod serde_util;
pub mod structure;
pub mod theory;

pub use model::{Hypergraph, ModelSpec, SizeCounts, SizeDistribution, SizeProfile};
pub use sampling::RngStream;
pub use theory::ThresholdReport;
