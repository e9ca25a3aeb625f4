//! Pseudo-spectral simulator and verification workbench for two-dimensional
//! gravity-capillary water waves in holomorphic coordinates.
//!
//! The crate is organized as:
//! - [`grid`]: periodic spectral fields and elementary Fourier-side operators
//!   (transforms, projections, Hilbert transform, Littlewood-Paley blocks,
//!   frequency cutoffs);
//! - [`paracalc`]: paraproducts, balanced products, bilinear symbol
//!   operators and the Sobolev/Zygmund norm zoo;
//! - [`fields`]: water-wave states, the auxiliary-field pipeline
//!   (Y, J, a, b, M, c, F), conserved functionals, control norms, scaling;
//! - [`dynamics`]: right-hand sides of the evolution systems, time
//!   integration, and leading-term residual diagnostics;
//! - [`symbols`]: the normal-form symbol catalog with its defining linear
//!   systems and verification;
//! - [`energies`]: modified and linearized energies with their quadratic
//!   normal-form corrections;
//! - [`presets`]: named initial data.

pub mod dynamics;
pub mod energies;
pub mod error;
pub mod fields;
pub mod grid;
pub mod paracalc;
pub mod presets;
pub mod symbols;

pub use error::{HwError, Result};
pub use fields::{DiffState, PhysicalParams, SurfaceState};
pub use grid::{GridSpec, SpectralField};
