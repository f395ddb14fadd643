use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |A - A†| = {defect:.3e}")]
    NotHermitian { defect: f64 },

    #[error("matrix is not positive semidefinite: min eigenvalue = {min_eigenvalue:.3e}")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("trace must equal 1, got {trace:.12}")]
    TraceNotOne { trace: f64 },

    #[error("state must be unit-normalized, got squared norm {norm_sqr:.12}")]
    NotNormalized { norm_sqr: f64 },

    #[error("shape mismatch: {context}")]
    ShapeMismatch { context: String },

    #[error("factor index {index} invalid for a {nfactors}-factor shape")]
    InvalidFactor { index: usize, nfactors: usize },

    #[error("support leaks outside the antisymmetric subspace by {leak:.3e}")]
    SupportLeak { leak: f64 },

    #[error("parameter {name} = {value} lies outside its admissible range")]
    ParameterOutOfRange { name: &'static str, value: f64 },

    #[error("no (j,m) basis label with j = {j}, m = {m}")]
    InvalidAngularMomentum { j: i32, m: i32 },

    #[error("single-particle level index {index} not in 1..=4")]
    InvalidLevel { index: u8 },

    #[error("squared measure {value:.6e} lies outside [0,1] beyond the clamp tolerance")]
    MeasureOutOfRange { value: f64 },

    #[error("entropy dropped below its lower bound by {deficit:.3e}; the input cannot stem from an antisymmetric global state")]
    EntropyBelowBound { deficit: f64 },

    #[error("{context}: independent evaluation routes disagree ({left:.15e} vs {right:.15e})")]
    RouteMismatch {
        context: &'static str,
        left: f64,
        right: f64,
    },

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("dimension {dim} exceeds the supported maximum of 32")]
    DimensionTooLarge { dim: usize },
}
