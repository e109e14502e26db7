//! Numerical information theory of hydrogenic-type quantum densities.
//!
//! The crate computes single and composite information-theoretic measures
//! (moments, variance, Fisher information, Shannon entropy, entropic moments,
//! LMC / Fisher-Shannon / Cramer-Rao complexities) of three families of
//! probability densities:
//!
//! * non-relativistic 3D hydrogenic bound states ([`hydrogenic`]),
//! * circular states of D-dimensional hydrogenic systems ([`ddim`]),
//! * Klein-Gordon (pionic) Coulomb bound states ([`kleingordon`]),
//!
//! and cross-validates every numerical result against closed-form reference
//! expressions ([`analytic`]). All integration is built on self-contained
//! special functions and Gauss rules ([`specfun`]) plus a log-singularity-aware
//! panel integrator ([`measures`]).

// Validators use `!(x > 0.0)` on purpose: it rejects NaN, `x <= 0.0` does not.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod ddim;
pub mod error;
pub mod hydrogenic;
pub mod kleingordon;
pub mod measures;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
