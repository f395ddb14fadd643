//! Numerical tolerances used across the crate.
//!
//! Every threshold that decides between "rounding noise" and "real defect"
//! lives here, so the policy is auditable in one place.

/// Inputs with a Hermiticity defect below this are symmetrized to (ρ + ρ†)/2;
/// larger deviations are rejected as errors.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Eigenvalues of nominally positive-semidefinite matrices may undershoot zero
/// by at most this much; values in [-FLOOR, 0) clamp to 0, values below it are
/// errors.
pub const PSD_EIGENVALUE_FLOOR: f64 = 1e-12;

/// Density-operator traces must equal 1 within this bound.
pub const TRACE_TOL: f64 = 1e-12;

/// Pure-state vectors must be unit-normalized within this bound (squared-norm
/// deviation) before they are accepted.
pub const STATE_NORM_TOL: f64 = 1e-9;

/// A density operator on the 4⊗4 product space must have its support inside
/// the antisymmetric subspace to this accuracy, one decade above eigensolver
/// noise. Larger leaks signal a symmetry-breaking bug upstream.
pub const SUPPORT_LEAK_TOL: f64 = 1e-10;

/// Exchange-symmetry checks (P ρ P = ρ and projector invariance) accept
/// deviations up to this bound.
pub const EXCHANGE_SYMMETRY_TOL: f64 = 1e-10;

/// Defining identities evaluated through two independent routes (symmetrized
/// observables, negativity over either factor, pair/environment purity) must
/// agree to this accuracy.
pub const ROUTE_MATCH_TOL: f64 = 1e-12;

/// Squared entanglement measures clamp tiny negative values (≥ -TOL) to 0;
/// larger negatives are errors.
pub const MEASURE_CLAMP_TOL: f64 = 1e-10;

/// Spectral weights below this are excluded from entropy sums (0·log 0 := 0).
pub const ENTROPY_EIGENVALUE_CUTOFF: f64 = 1e-15;

/// Eigenvalues of a PSD product below FLOOR · ‖ρ‖_max · ‖ρ̃‖_max are treated
/// as exact zeros before the square root. Eigensolver noise sits near
/// 1e-16 · scale, so this keeps true zeros from surfacing as √noise ≈ 1e-8
/// terms in concurrence sums; a true eigenvalue this small shifts the sum by
/// at most √(floor·scale).
pub const PRODUCT_SPECTRUM_FLOOR: f64 = 1e-13;

/// Negativity at or below this value is treated as exactly zero when deciding
/// whether a fermion-environment reduction is unentangled.
pub const NEGATIVITY_ZERO_TOL: f64 = 1e-11;

/// A block-structured separable decomposition must reproduce the reduced state
/// within this bound to count as a certificate.
pub const SEPARABLE_CERTIFICATE_TOL: f64 = 1e-10;
