//! Nonlocal generalized Dirac oscillator (NLGDO) in 1+1 dimensions.
//!
//! The crate implements the numerical machinery around a Dirac Hamiltonian
//! whose pseudoscalar coupling is an integral operator with kernel `f(x, x')`
//! instead of a multiplicative profile `f(x)`:
//!
//! * [`kernels`] — kernel representations and their algebra: application,
//!   star composition, symmetric derivative, adjoint, and the complex-shift
//!   pseudo-Hermiticity residual;
//! * [`partner`] — the induced pair of nonlocal Schrödinger-type partner
//!   kernels, discretized component Hamiltonians, and bound-state spectra
//!   with the relativistic energy map;
//! * [`localization`] — the current-based nonlocal→local mapping per
//!   component: Jost pairs, normalized current, damping (Perey) factor,
//!   equivalent local potential, and current-zero diagnostics;
//! * [`feff`] — the Σ/Δ compatibility test for a single effective local
//!   oscillator profile;
//! * [`separable`] — the closed-form rank-one reduction: 2×2 moment system,
//!   determinant scan, and spurious-threshold detection;
//! * [`benchmarks`] — analytic reference values (oscillator levels,
//!   convolution dispersion, complex-shift references);
//! * [`numerics`] — grids, quadrature, differentiation matrices, dense
//!   complex eigendecomposition;
//! * [`conformance`] — the end-to-end validation matrix with pinned
//!   tolerances, runnable from the test suite or the CLI.

pub mod error;
pub mod numerics;

pub mod kernels;

pub mod benchmarks;
pub mod partner;

pub mod localization;

pub mod feff;
pub mod separable;

pub mod conformance;

pub use error::{Error, Result};
