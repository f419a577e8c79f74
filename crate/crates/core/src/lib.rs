//! Simulation and phase optimization for phased arrays of small antennas
//! modeled as driven oscillating point charges.
//!
//! The crate computes the far-field intensity of such arrays, engineers
//! per-element phases for constructive interference at a designated
//! receiver, sweeps the parameterized phase families over `(k1, k2)`, and
//! verifies implant-deployment geometries by their intensity signature. A
//! full Liénard–Wiechert implementation ([`lienard`]) acts as the
//! independent physics oracle for the far-field model ([`fieldcore`]).
//!
//! Modules:
//!
//! * [`fieldcore`] — complex far-field superposition and intensity
//! * [`lienard`] — exact moving-charge fields and the retarded-time solver
//! * [`phases`] — optimal phases, families over `(k1, k2)`, regime taxonomy
//! * [`geometry`] — planar grids, stent layouts, deployment perturbations
//! * [`sweeps`] — `(k1, k2)` maps, peak detection, gain patterns,
//!   deployment verification
//! * [`rng`] — the pinned random generator for reproducible jitter

pub mod error;
pub mod fieldcore;
pub mod geometry;
pub mod lienard;
pub mod phases;
pub mod rng;
pub mod sweeps;
pub mod vec3;

pub use error::{Error, Result};
pub use vec3::{ComplexVec3, Vec3};
