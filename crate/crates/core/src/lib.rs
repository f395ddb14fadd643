//! Simulation of the entanglement dynamics of two identical spin-3/2
//! fermions coupled to a shared two-level environment.
//!
//! The crate models the pair on its six-dimensional antisymmetric space,
//! applies generalized amplitude-damping and phase-damping channels
//! parameterized by a probability p ∈ [0,1], dilates every evolution to a
//! pure tripartite (fermion + fermion + environment) state, and evaluates a
//! family of entanglement quantifiers on the reductions: the conjugation
//! based pair concurrence, one-vs-rest and environment-vs-pair measures,
//! negativity, the entropy excess ε, Rényi entropic indicators, and monogamy
//! residuals. Closed-form reference curves and a verification suite tie the
//! numerical pipeline to known results.

pub mod analytic;
pub mod channels;
pub mod error;
pub mod hilbert;
pub mod measures;
pub mod numerics;
pub mod sampling;
pub mod tolerances;
pub mod verify;

pub use error::{Error, Result};
