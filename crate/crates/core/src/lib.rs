//! h-influences of Boolean functions on product spaces.
//!
//! The crate works with two kinds of Boolean functions:
//!
//! * [`CubeFunction`]: truth tables on the discrete cube `{0,1}^m`, weighted
//!   by a [`ProductMeasure`] with rational biases.
//! * [`GridFunction`]: step functions on `[0,1]^n` that are constant on the
//!   cells of a uniform per-axis grid, under Lebesgue measure.
//!
//! For a kernel `h: [0,1] -> [0,1]` the h-influence of coordinate `k` is the
//! expectation over all fibers in direction `k` of `h(mean of f on the fiber)`.
//! All means and masses are exact rationals; the kernel evaluation is the only
//! floating point step.

pub mod cube;
pub mod discretize;
mod error;
mod format;
pub mod families;
pub mod grid;
pub mod kernels;
pub mod monotone;
pub mod rational;
pub mod theorems;

pub use cube::{CubeFunction, ProductMeasure};
pub use discretize::BitGrouping;
pub use error::{Error, Result};
pub use families::{FamilyInstance, Realized};
pub use grid::{FiberClass, FiberProfile, GridFunction};
pub use kernels::{entropy, InfluenceKernel};
pub use monotone::{ShiftStep, ShiftTrace};
pub use rational::Rational;
pub use theorems::InequalityReport;
