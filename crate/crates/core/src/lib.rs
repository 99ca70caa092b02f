//! Extreme-supported nondominated points of bi-objective minimum weight
//! matroid basis problems.
//!
//! The crate is organized bottom-up:
//!
//! * [`rational`] – exact arithmetic used for every cost, slope and weight.
//! * [`matroid`] – independence oracles (graphic, uniform, partition, views).
//! * [`geometry`] – slopes, weight intervals, crossing events and frontier
//!   classification.
//! * [`solvers`] – Greedy, the global and adjacency-based sweeps, the
//!   event-driven tailored sweep and dichotomic search.
//! * [`oracle`] – brute-force ground truth and checks used by tests and the
//!   `--verify` mode of the command line tool.

// Errors carry exact rationals; boxing them buys nothing on these cold paths.
#![allow(clippy::result_large_err)]

pub mod geometry;
pub mod matroid;
pub mod oracle;
pub mod rational;
pub mod solvers;

pub use geometry::{BiCost, Point2, Slope, WeightInterval};
pub use matroid::{Basis, ElementId, MatroidInstance};
pub use rational::Rational;
