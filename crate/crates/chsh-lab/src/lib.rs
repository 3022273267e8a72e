//! Deterministic CHSH/Bell-test calculator.
//!
//! Two models of correlated photon pairs share one geometry:
//!
//! * [`hv`] — a local polarization-ensemble model. Each pair carries a
//!   definite polarization angle; filters project it through doubled-angle
//!   cosines/sines. Per-state CHSH values stay within the classical bound
//!   |S| <= 2, while the ensemble average over the full 360-degree grid of
//!   states reaches 2*sqrt(2) at the 22.5-degree setup.
//! * [`qm`] — the quantum closed forms for the unified two-photon system:
//!   pp = cos^2(a-b)/2, nn = sin^2(a-b)/2, and the standard correlator
//!   E = cos(2(a-b)). On uniform grids both models produce identical
//!   population correlators.
//!
//! [`suite`] regenerates the published tables from both models and attaches
//! the embedded published values ([`reference`]) for side-by-side deltas.
//! [`diffraction`] and [`stats`] cover the companion geometry and grouped
//! statistics tables. [`report`] renders everything as deterministic CSV,
//! JSON (schema version 1), or Markdown documents, and [`cli`] exposes the
//! whole surface as subcommands.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod core;
pub mod diffraction;
pub mod error;
pub mod hv;
pub mod qm;
pub mod reference;
pub mod report;
pub mod stats;
pub mod suite;

pub use crate::core::{
    equal_spacing_setting, make_grid, normalize_angle, AngleDeg, ChshSetting, JointQuantities,
    PolarizationGrid, DEFAULT_GRID_SIZE,
};
pub use crate::error::{Error, Result};
pub use crate::report::{Format, Report};
