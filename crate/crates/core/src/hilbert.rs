//! Single-particle and two-fermion bases, the antisymmetric embedding into
//! the 4⊗4 product space, and the reduction/transposition primitives built
//! on top of it.
//!
//! Conventions fixed here and relied on everywhere else:
//!
//! * Single-particle levels |1⟩..|4⟩ are the spin-3/2 projections
//!   m_s = 3/2, 1/2, -1/2, -3/2 in that order.
//! * The two-fermion basis is ordered |2,2⟩, |2,1⟩, |2,0⟩, |2,-1⟩, |2,-2⟩,
//!   i|0,0⟩. The sixth coordinate of a [`FermionPairState`] is the amplitude
//!   of i|0,0⟩, not |0,0⟩ ("i-absorbed" convention); this is the only phase
//!   choice under which the conjugation-based concurrence vanishes on every
//!   Slater determinant. Constructors that take |j,m⟩ amplitudes convert
//!   internally.
//! * A product ket |i⟩_a ⊗ |j⟩_b sits at row 4(i-1) + (j-1), and a factor
//!   shape [d₀, d₁, ...] is flattened row-major (first factor slowest).

use std::fmt;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics;
use crate::tolerances::{
    EXCHANGE_SYMMETRY_TOL, HERMITICITY_TOL, PSD_EIGENVALUE_FLOOR, ROUTE_MATCH_TOL,
    STATE_NORM_TOL, SUPPORT_LEAK_TOL, TRACE_TOL,
};

/// Dimension of the single-particle space (spin 3/2).
pub const SINGLE_DIM: usize = 4;
/// Dimension of the antisymmetric two-fermion space.
pub const PAIR_DIM: usize = 6;
/// Dimension of the 4⊗4 product space.
pub const PRODUCT_DIM: usize = 16;
/// Dimension of the environment.
pub const ENV_DIM: usize = 2;

fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Index of a single-particle level, 1..=4, identifying |s, m_s⟩ with s = 3/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SingleParticleIndex(u8);

impl SingleParticleIndex {
    pub fn new(index: u8) -> Result<Self> {
        if (1..=4).contains(&index) {
            Ok(Self(index))
        } else {
            Err(Error::InvalidLevel { index })
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// Twice the spin projection: |1⟩ ↦ 3, |2⟩ ↦ 1, |3⟩ ↦ -1, |4⟩ ↦ -3.
    pub fn twice_ms(self) -> i32 {
        5 - 2 * i32::from(self.0)
    }
}

/// Total-angular-momentum label (j, m) of an antisymmetric basis state.
///
/// Only even j occurs in the antisymmetric sector; the six valid labels are
/// (2,2), (2,1), (2,0), (2,-1), (2,-2) and (0,0), in bijection with basis
/// positions 0..6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AngularMomentumLabel {
    j: i32,
    m: i32,
}

impl AngularMomentumLabel {
    pub const ALL: [Self; PAIR_DIM] = [
        Self { j: 2, m: 2 },
        Self { j: 2, m: 1 },
        Self { j: 2, m: 0 },
        Self { j: 2, m: -1 },
        Self { j: 2, m: -2 },
        Self { j: 0, m: 0 },
    ];

    pub fn new(j: i32, m: i32) -> Result<Self> {
        let label = Self { j, m };
        if Self::ALL.contains(&label) {
            Ok(label)
        } else {
            Err(Error::InvalidAngularMomentum { j, m })
        }
    }

    pub fn from_index(k: usize) -> Result<Self> {
        Self::ALL
            .get(k)
            .copied()
            .ok_or(Error::InvalidAngularMomentum {
                j: -1,
                m: k as i32,
            })
    }

    /// Basis position 0..6.
    pub fn index(self) -> usize {
        Self::ALL
            .iter()
            .position(|&l| l == self)
            .expect("constructed labels are valid")
    }

    pub fn j(self) -> i32 {
        self.j
    }

    pub fn m(self) -> i32 {
        self.m
    }
}

impl fmt::Display for AngularMomentumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{}>", self.j, self.m)
    }
}

/// Pure two-fermion state as a complex 6-vector in the i-absorbed basis.
#[derive(Debug, Clone, PartialEq)]
pub struct FermionPairState {
    coords: [Complex64; PAIR_DIM],
}

impl FermionPairState {
    /// Accepts i-absorbed coordinates whose squared norm deviates from 1 by
    /// at most [`STATE_NORM_TOL`]; the stored state is unit-normalized.
    pub fn from_coords(coords: [Complex64; PAIR_DIM]) -> Result<Self> {
        let norm_sqr: f64 = coords.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > STATE_NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self::renormalized(coords))
    }

    /// Accepts any nonzero coordinate vector and normalizes it.
    pub fn from_coords_normalized(coords: [Complex64; PAIR_DIM]) -> Result<Self> {
        let norm_sqr: f64 = coords.iter().map(|z| z.norm_sqr()).sum();
        if norm_sqr <= 0.0 || !norm_sqr.is_finite() {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self::renormalized(coords))
    }

    fn renormalized(mut coords: [Complex64; PAIR_DIM]) -> Self {
        let norm: f64 = coords.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for c in &mut coords {
            *c /= norm;
        }
        Self { coords }
    }

    /// Builds a state from amplitudes of the |j,m⟩ kets themselves. The
    /// amplitude of |0,0⟩ is converted to the i-absorbed sixth coordinate.
    /// Repeated labels accumulate.
    pub fn from_jm_amplitudes(
        amplitudes: &[(AngularMomentumLabel, Complex64)],
        normalize: bool,
    ) -> Result<Self> {
        let mut coords = [cx(0.0, 0.0); PAIR_DIM];
        for &(label, amp) in amplitudes {
            let k = label.index();
            // a |0,0⟩ = (-i a) · i|0,0⟩
            coords[k] += if k == PAIR_DIM - 1 {
                amp * cx(0.0, -1.0)
            } else {
                amp
            };
        }
        if normalize {
            Self::from_coords_normalized(coords)
        } else {
            Self::from_coords(coords)
        }
    }

    /// The k-th basis state (position 0..6).
    pub fn basis_state(k: usize) -> Self {
        assert!(k < PAIR_DIM, "basis position out of range");
        let mut coords = [cx(0.0, 0.0); PAIR_DIM];
        coords[k] = cx(1.0, 0.0);
        Self { coords }
    }

    pub fn coords(&self) -> &[Complex64; PAIR_DIM] {
        &self.coords
    }

    pub fn as_vector(&self) -> DVector<Complex64> {
        DVector::from_column_slice(&self.coords)
    }

    /// Amplitude of the plain |j,m⟩ ket (undoes the i-absorption for m = 0,
    /// j = 0).
    pub fn jm_amplitude(&self, label: AngularMomentumLabel) -> Complex64 {
        let k = label.index();
        if k == PAIR_DIM - 1 {
            self.coords[k] * cx(0.0, 1.0)
        } else {
            self.coords[k]
        }
    }

    /// ρ = |ψ⟩⟨ψ| on the six-dimensional representation.
    pub fn density(&self) -> DensityOperator {
        let v = self.as_vector();
        DensityOperator::new(&v * v.adjoint(), &[PAIR_DIM])
            .expect("pure-state projectors are valid density operators")
    }
}

/// 16×16 permutation exchanging the two fermionic factors,
/// |i⟩_a ⊗ |j⟩_b ↦ |j⟩_a ⊗ |i⟩_b.
pub fn exchange_permutation() -> DMatrix<Complex64> {
    let mut p = DMatrix::<Complex64>::zeros(PRODUCT_DIM, PRODUCT_DIM);
    for i in 0..SINGLE_DIM {
        for j in 0..SINGLE_DIM {
            p[(SINGLE_DIM * j + i, SINGLE_DIM * i + j)] = cx(1.0, 0.0);
        }
    }
    p
}

/// The 16×6 isometry whose columns are the product-space coordinates of the
/// six antisymmetric basis states (sixth column: i|0,0⟩).
#[derive(Debug, Clone)]
pub struct AntisymmetricEmbedding {
    v: DMatrix<Complex64>,
}

/// Builds the embedding from the hardcoded Clebsch-Gordan expansions:
///
/// ```text
/// |2,2⟩  = (|12⟩ - |21⟩)/√2
/// |2,1⟩  = (|13⟩ - |31⟩)/√2
/// |2,0⟩  = (|23⟩ + |14⟩ - |41⟩ - |32⟩)/2
/// |2,-1⟩ = (|24⟩ - |42⟩)/√2
/// |2,-2⟩ = (|34⟩ - |43⟩)/√2
/// |0,0⟩  = (|32⟩ - |23⟩ + |14⟩ - |41⟩)/2
/// ```
pub fn build_embedding() -> AntisymmetricEmbedding {
    let mut v = DMatrix::<Complex64>::zeros(PRODUCT_DIM, PAIR_DIM);
    let row = |i: usize, j: usize| SINGLE_DIM * (i - 1) + (j - 1);
    let s = std::f64::consts::FRAC_1_SQRT_2;

    v[(row(1, 2), 0)] = cx(s, 0.0);
    v[(row(2, 1), 0)] = cx(-s, 0.0);

    v[(row(1, 3), 1)] = cx(s, 0.0);
    v[(row(3, 1), 1)] = cx(-s, 0.0);

    v[(row(2, 3), 2)] = cx(0.5, 0.0);
    v[(row(1, 4), 2)] = cx(0.5, 0.0);
    v[(row(4, 1), 2)] = cx(-0.5, 0.0);
    v[(row(3, 2), 2)] = cx(-0.5, 0.0);

    v[(row(2, 4), 3)] = cx(s, 0.0);
    v[(row(4, 2), 3)] = cx(-s, 0.0);

    v[(row(3, 4), 4)] = cx(s, 0.0);
    v[(row(4, 3), 4)] = cx(-s, 0.0);

    // i|0,0⟩
    v[(row(3, 2), 5)] = cx(0.0, 0.5);
    v[(row(2, 3), 5)] = cx(0.0, -0.5);
    v[(row(1, 4), 5)] = cx(0.0, 0.5);
    v[(row(4, 1), 5)] = cx(0.0, -0.5);

    AntisymmetricEmbedding { v }
}

impl AntisymmetricEmbedding {
    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.v
    }

    /// Projector V V† onto the antisymmetric subspace.
    pub fn projector(&self) -> DMatrix<Complex64> {
        &self.v * self.v.adjoint()
    }

    /// Product-space coordinates V ψ of a two-fermion state.
    pub fn embed_state(&self, state: &FermionPairState) -> DVector<Complex64> {
        &self.v * state.as_vector()
    }

    /// V ρ₆ V† as a density operator on the [4,4] product space.
    pub fn embed_density(&self, rho6: &DensityOperator) -> Result<DensityOperator> {
        rho6.expect_shape(&[PAIR_DIM])?;
        let embedded = &self.v * rho6.matrix() * self.v.adjoint();
        DensityOperator::new(embedded, &[SINGLE_DIM, SINGLE_DIM])
    }

    /// V† ρ₁₆ V, valid only when the support of ρ₁₆ lies in the antisymmetric
    /// subspace; otherwise a [`Error::SupportLeak`] reports the defect.
    pub fn reduce_to_antisymmetric(&self, rho16: &DensityOperator) -> Result<DensityOperator> {
        rho16.expect_shape(&[SINGLE_DIM, SINGLE_DIM])?;
        let proj = self.projector();
        let projected = &proj * rho16.matrix() * &proj;
        let leak = numerics::max_abs(&(projected - rho16.matrix()));
        if leak > SUPPORT_LEAK_TOL {
            return Err(Error::SupportLeak { leak });
        }
        let reduced = self.v.adjoint() * rho16.matrix() * &self.v;
        DensityOperator::new(reduced, &[PAIR_DIM])
    }
}

/// Hermitian, positive-semidefinite, unit-trace matrix tagged with its
/// tensor-factor shape.
#[derive(Debug, Clone)]
pub struct DensityOperator {
    mat: DMatrix<Complex64>,
    shape: Vec<usize>,
}

impl DensityOperator {
    /// Validates Hermiticity (symmetrizing sub-tolerance noise), positivity
    /// and unit trace, and that the matrix dimension matches the shape.
    pub fn new(mat: DMatrix<Complex64>, shape: &[usize]) -> Result<Self> {
        let n: usize = shape.iter().product();
        if shape.is_empty() || shape.contains(&0) || mat.nrows() != n || mat.ncols() != n {
            return Err(Error::ShapeMismatch {
                context: format!(
                    "matrix is {}x{} but shape {:?} needs {n}x{n}",
                    mat.nrows(),
                    mat.ncols(),
                    shape
                ),
            });
        }
        if mat.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let defect = numerics::hermiticity_defect(&mat);
        if defect > HERMITICITY_TOL {
            return Err(Error::NotHermitian { defect });
        }
        let sym = (&mat + mat.adjoint()).map(|z| z * 0.5);
        let trace = sym.trace().re;
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::TraceNotOne { trace });
        }
        let min_eigenvalue = numerics::hermitian_eigen(&sym)?.min_eigenvalue();
        if min_eigenvalue < -PSD_EIGENVALUE_FLOOR {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue });
        }
        Ok(Self {
            mat: sym,
            shape: shape.to_vec(),
        })
    }

    /// ρ = |ψ⟩⟨ψ| from a state vector; the residual norm defect (within
    /// [`STATE_NORM_TOL`]) is divided out so the trace is exactly 1.
    pub fn from_pure(state: &DVector<Complex64>, shape: &[usize]) -> Result<Self> {
        let norm_sqr = state.norm_squared();
        if (norm_sqr - 1.0).abs() > STATE_NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        let normalized = state / Complex64::from(norm_sqr.sqrt());
        Self::new(&normalized * normalized.adjoint(), shape)
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn expect_shape(&self, shape: &[usize]) -> Result<()> {
        if self.shape == shape {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                context: format!("expected shape {:?}, got {:?}", shape, self.shape),
            })
        }
    }

    /// Tr ρ², real.
    pub fn purity(&self) -> f64 {
        (&self.mat * &self.mat).trace().re
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        numerics::hermitian_eigen(&self.mat)
            .expect("stored density operators stay Hermitian")
            .eigenvalues()
            .to_vec()
    }

    /// Traces out every factor not listed in `keep` (strictly increasing
    /// positions). The output shape is the kept factors in original order.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityOperator> {
        let nf = self.shape.len();
        if keep.is_empty() || keep.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidFactor {
                index: keep.first().copied().unwrap_or(usize::MAX),
                nfactors: nf,
            });
        }
        if let Some(&bad) = keep.iter().find(|&&k| k >= nf) {
            return Err(Error::InvalidFactor {
                index: bad,
                nfactors: nf,
            });
        }
        let traced: Vec<usize> = (0..nf).filter(|f| !keep.contains(f)).collect();
        let kept_offsets = index_offsets(&self.shape, keep);
        let traced_offsets = index_offsets(&self.shape, &traced);
        let m = kept_offsets.len();
        let mut out = DMatrix::<Complex64>::zeros(m, m);
        for (ia, &oa) in kept_offsets.iter().enumerate() {
            for (ib, &ob) in kept_offsets.iter().enumerate() {
                let mut acc = cx(0.0, 0.0);
                for &ot in &traced_offsets {
                    acc += self.mat[(oa + ot, ob + ot)];
                }
                out[(ia, ib)] = acc;
            }
        }
        let kept_shape: Vec<usize> = keep.iter().map(|&k| self.shape[k]).collect();
        DensityOperator::new(out, &kept_shape)
    }

    /// Transposes the chosen factor's indices only. The result is Hermitian
    /// and trace-1 but in general not positive, so it is returned as a plain
    /// matrix.
    pub fn partial_transpose(&self, factor: usize) -> Result<DMatrix<Complex64>> {
        let nf = self.shape.len();
        if factor >= nf {
            return Err(Error::InvalidFactor {
                index: factor,
                nfactors: nf,
            });
        }
        Ok(partial_transpose_matrix(&self.mat, &self.shape, factor))
    }
}

fn partial_transpose_matrix(
    mat: &DMatrix<Complex64>,
    shape: &[usize],
    factor: usize,
) -> DMatrix<Complex64> {
    let strides = factor_strides(shape);
    let stride = strides[factor];
    let dim = shape[factor];
    let n = mat.nrows();
    let mut out = DMatrix::<Complex64>::zeros(n, n);
    for row in 0..n {
        let i = (row / stride) % dim;
        for col in 0..n {
            let j = (col / stride) % dim;
            let row_swapped = row - i * stride + j * stride;
            let col_swapped = col - j * stride + i * stride;
            out[(row_swapped, col_swapped)] = mat[(row, col)];
        }
    }
    out
}

/// Row-major strides: strides[f] = product of dimensions after factor f.
fn factor_strides(shape: &[usize]) -> Vec<usize> {
    let mut strides = vec![1usize; shape.len()];
    for f in (0..shape.len().saturating_sub(1)).rev() {
        strides[f] = strides[f + 1] * shape[f + 1];
    }
    strides
}

/// Flat-index contributions of the chosen factors, enumerated row-major in
/// the order the factors are listed.
fn index_offsets(shape: &[usize], factors: &[usize]) -> Vec<usize> {
    let strides = factor_strides(shape);
    let mut offsets = vec![0usize];
    for &f in factors {
        let mut next = Vec::with_capacity(offsets.len() * shape[f]);
        for &o in &offsets {
            for k in 0..shape[f] {
                next.push(o + k * strides[f]);
            }
        }
        offsets = next;
    }
    offsets
}

/// True iff ρ₁₆ is invariant under fermion exchange and supported on the
/// antisymmetric subspace, both within [`EXCHANGE_SYMMETRY_TOL`].
pub fn exchange_symmetry_holds(rho16: &DensityOperator) -> bool {
    assert_eq!(
        rho16.shape(),
        &[SINGLE_DIM, SINGLE_DIM],
        "exchange symmetry is defined on the 4x4 product space"
    );
    let p = exchange_permutation();
    let swapped = &p * rho16.matrix() * &p;
    if numerics::max_abs(&(swapped - rho16.matrix())) > EXCHANGE_SYMMETRY_TOL {
        return false;
    }
    let proj = build_embedding().projector();
    let projected = &proj * rho16.matrix() * &proj;
    numerics::max_abs(&(projected - rho16.matrix())) <= EXCHANGE_SYMMETRY_TOL
}

/// Pure state of the two fermions plus environment, shape [4,4,2], with its
/// fermionic support inside the antisymmetric subspace.
#[derive(Debug, Clone)]
pub struct TripartiteState {
    coords: DVector<Complex64>,
}

impl TripartiteState {
    pub fn new(coords: DVector<Complex64>) -> Result<Self> {
        if coords.len() != PRODUCT_DIM * ENV_DIM {
            return Err(Error::ShapeMismatch {
                context: format!("tripartite state needs 32 coordinates, got {}", coords.len()),
            });
        }
        let norm_sqr = coords.norm_squared();
        if (norm_sqr - 1.0).abs() > STATE_NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        let proj = build_embedding().projector();
        let mut leak: f64 = 0.0;
        for e in 0..ENV_DIM {
            let sub = DVector::from_fn(PRODUCT_DIM, |r, _| coords[ENV_DIM * r + e]);
            let defect = &proj * &sub - &sub;
            leak = leak.max(defect.iter().map(|z| z.norm()).fold(0.0, f64::max));
        }
        if leak > SUPPORT_LEAK_TOL {
            return Err(Error::SupportLeak { leak });
        }
        let norm = norm_sqr.sqrt();
        Ok(Self {
            coords: coords / Complex64::from(norm),
        })
    }

    pub fn coords(&self) -> &DVector<Complex64> {
        &self.coords
    }

    /// |ψ⟩⟨ψ| with shape [4,4,2].
    pub fn density(&self) -> DensityOperator {
        DensityOperator::from_pure(&self.coords, &[SINGLE_DIM, SINGLE_DIM, ENV_DIM])
            .expect("tripartite states are normalized on construction")
    }
}

/// Expectation value of the exchange-symmetrized observable
/// ½ Σᵢ (Aᵢ⊗I + I⊗Aᵢ) ⊗ Bᵢ in the tripartite state ρ.
///
/// For exchange-symmetric ρ this equals Tr[(Σᵢ Aᵢ⊗Bᵢ) ρ_aE] with
/// ρ_aE = Tr_b ρ; whenever ρ is exchange symmetric the identity is evaluated
/// through both routes and a disagreement beyond [`ROUTE_MATCH_TOL`] is an
/// error.
pub fn symmetrized_expectation(
    single_fermion_ops: &[DMatrix<Complex64>],
    environment_ops: &[DMatrix<Complex64>],
    rho: &DensityOperator,
) -> Result<f64> {
    if single_fermion_ops.len() != environment_ops.len() {
        return Err(Error::ShapeMismatch {
            context: format!(
                "{} fermion observables vs {} environment observables",
                single_fermion_ops.len(),
                environment_ops.len()
            ),
        });
    }
    rho.expect_shape(&[SINGLE_DIM, SINGLE_DIM, ENV_DIM])?;
    for a in single_fermion_ops {
        if a.shape() != (SINGLE_DIM, SINGLE_DIM) {
            return Err(Error::ShapeMismatch {
                context: "single-fermion observables must be 4x4".into(),
            });
        }
        let defect = numerics::hermiticity_defect(a);
        if defect > HERMITICITY_TOL {
            return Err(Error::NotHermitian { defect });
        }
    }
    for b in environment_ops {
        if b.shape() != (ENV_DIM, ENV_DIM) {
            return Err(Error::ShapeMismatch {
                context: "environment observables must be 2x2".into(),
            });
        }
        let defect = numerics::hermiticity_defect(b);
        if defect > HERMITICITY_TOL {
            return Err(Error::NotHermitian { defect });
        }
    }

    let identity = DMatrix::<Complex64>::identity(SINGLE_DIM, SINGLE_DIM);
    let mut observable = DMatrix::<Complex64>::zeros(PRODUCT_DIM * ENV_DIM, PRODUCT_DIM * ENV_DIM);
    for (a, b) in single_fermion_ops.iter().zip(environment_ops) {
        let symmetrized = (a.kronecker(&identity) + identity.kronecker(a)).map(|z| z * 0.5);
        observable += symmetrized.kronecker(b);
    }
    let value = (&observable * rho.matrix()).trace().re;

    let p16 = exchange_permutation();
    let env_identity = DMatrix::<Complex64>::identity(ENV_DIM, ENV_DIM);
    let p32 = p16.kronecker(&env_identity);
    let swapped = &p32 * rho.matrix() * &p32;
    if numerics::max_abs(&(swapped - rho.matrix())) <= EXCHANGE_SYMMETRY_TOL {
        let rho_ae = rho.partial_trace(&[0, 2])?;
        let mut pair_observable = DMatrix::<Complex64>::zeros(
            SINGLE_DIM * ENV_DIM,
            SINGLE_DIM * ENV_DIM,
        );
        for (a, b) in single_fermion_ops.iter().zip(environment_ops) {
            pair_observable += a.kronecker(b);
        }
        let reduced_value = (&pair_observable * rho_ae.matrix()).trace().re;
        if (value - reduced_value).abs() > ROUTE_MATCH_TOL {
            return Err(Error::RouteMismatch {
                context: "symmetrized observable",
                left: value,
                right: reduced_value,
            });
        }
    }
    Ok(value)
}
