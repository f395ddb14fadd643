//! Entanglement quantifiers: the conjugation-based pair concurrence,
//! one-vs-rest and environment-vs-pair measures, negativity, the entropy
//! excess ε, Rényi entropies with the Q^(α) indicator, monogamy residuals,
//! and the report that evaluates all of them on a tripartite state.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hilbert::{
    build_embedding, DensityOperator, TripartiteState, ENV_DIM, PAIR_DIM, SINGLE_DIM,
};
use crate::numerics;
use crate::tolerances::{
    ENTROPY_EIGENVALUE_CUTOFF, MEASURE_CLAMP_TOL, NEGATIVITY_ZERO_TOL, PSD_EIGENVALUE_FLOOR,
    ROUTE_MATCH_TOL, SEPARABLE_CERTIFICATE_TOL,
};

/// The real symmetric involution M entering the conjugation ρ̃ = M ρ* M.
///
/// In the i-absorbed basis its rows are (e₅, -e₄, e₃, -e₂, e₁, e₆): it flips
/// the spin projection m → -m with alternating signs and fixes both m = 0
/// states. M² = I and M = Mᵀ.
pub fn conjugation_matrix() -> DMatrix<Complex64> {
    let mut m = DMatrix::<Complex64>::zeros(PAIR_DIM, PAIR_DIM);
    m[(0, 4)] = Complex64::from(1.0);
    m[(1, 3)] = Complex64::from(-1.0);
    m[(2, 2)] = Complex64::from(1.0);
    m[(3, 1)] = Complex64::from(-1.0);
    m[(4, 0)] = Complex64::from(1.0);
    m[(5, 5)] = Complex64::from(1.0);
    m
}

/// The conjugated partner ρ̃ = M ρ* M, with the entrywise conjugation taken
/// in the i-absorbed basis.
pub fn spin_flipped(rho: &DensityOperator) -> DMatrix<Complex64> {
    let m = conjugation_matrix();
    &m * rho.matrix().map(|z| z.conj()) * &m
}

fn clamp01(value: f64) -> Result<f64> {
    if !(-MEASURE_CLAMP_TOL..=1.0 + MEASURE_CLAMP_TOL).contains(&value) {
        return Err(Error::MeasureOutOfRange { value });
    }
    Ok(value.clamp(0.0, 1.0))
}

/// Pair concurrence of a two-fermion state on the six-dimensional
/// representation: max{0, λ₁ - λ₂ - λ₃ - λ₄ - λ₅ - λ₆} with the λᵢ the
/// descending square roots of the eigenvalues of ρρ̃.
pub fn concurrence(rho: &DensityOperator) -> Result<f64> {
    rho.expect_shape(&[PAIR_DIM])?;
    let tilde = spin_flipped(rho);
    let lambdas = numerics::product_sqrt_spectrum(rho.matrix(), &tilde)?;
    let c = lambdas[0] - lambdas[1..].iter().sum::<f64>();
    clamp01(c.max(0.0))
}

/// Entanglement between one fermion and the rest of a pure tripartite state,
/// from the single-fermion reduction: √(max{0, 2 - 4 Tr ρ_f²}).
///
/// The prefactor normalizes the range to [0,1] for a four-dimensional
/// single-particle space; Tr ρ_f² = 1/2 (a Slater determinant) maps to 0.
pub fn c_one_vs_rest(rho_f: &DensityOperator) -> Result<f64> {
    rho_f.expect_shape(&[SINGLE_DIM])?;
    let squared = 2.0 - 4.0 * rho_f.purity();
    Ok(clamp01(squared)?.sqrt())
}

/// Entanglement between the environment and the fermion pair for a pure
/// tripartite state: √(max{0, 2(1 - Tr ρ²)}). Feeding the two-fermion
/// reduction or the environment reduction gives the same value because both
/// share the nonzero spectrum of a pure bipartition.
pub fn c_env_vs_pair(rho: &DensityOperator) -> Result<f64> {
    let squared = 2.0 * (1.0 - rho.purity());
    Ok(clamp01(squared)?.sqrt())
}

fn negative_weight(eigenvalues: &[f64]) -> f64 {
    eigenvalues
        .iter()
        .filter(|&&l| l < -PSD_EIGENVALUE_FLOOR)
        .map(|&l| -l)
        .sum()
}

/// Negativity of a bipartite state: the summed magnitude of the negative
/// eigenvalues of the partial transpose. Both transposed factors are
/// evaluated and must agree.
pub fn negativity(rho: &DensityOperator) -> Result<f64> {
    if rho.shape().len() != 2 {
        return Err(Error::ShapeMismatch {
            context: format!("negativity needs two factors, got {:?}", rho.shape()),
        });
    }
    let first = negative_weight(
        numerics::hermitian_eigen(&rho.partial_transpose(0)?)?.eigenvalues(),
    );
    let second = negative_weight(
        numerics::hermitian_eigen(&rho.partial_transpose(1)?)?.eigenvalues(),
    );
    if (first - second).abs() > ROUTE_MATCH_TOL {
        return Err(Error::RouteMismatch {
            context: "negativity over either factor",
            left: first,
            right: second,
        });
    }
    Ok(first)
}

fn von_neumann_nats(eigenvalues: &[f64]) -> f64 {
    eigenvalues
        .iter()
        .filter(|&&l| l > ENTROPY_EIGENVALUE_CUTOFF)
        .map(|&l| -l * l.ln())
        .sum()
}

/// Entropy excess ε = S_vN(ρ_f) - ln 2 in nats.
///
/// A single-fermion reduction of an antisymmetric global state always
/// satisfies S_vN ≥ ln 2; values below the bound by more than the clamp
/// tolerance signal a support or symmetry bug in the caller.
pub fn epsilon(rho_f: &DensityOperator) -> Result<f64> {
    rho_f.expect_shape(&[SINGLE_DIM])?;
    let excess = von_neumann_nats(&rho_f.eigenvalues()) - std::f64::consts::LN_2;
    if excess < -MEASURE_CLAMP_TOL {
        return Err(Error::EntropyBelowBound { deficit: -excess });
    }
    Ok(excess.max(0.0))
}

/// Logarithm base used for entropies and the Q indicator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogBase {
    E,
    Two,
}

impl LogBase {
    fn ln_of_base(self) -> f64 {
        match self {
            LogBase::E => 1.0,
            LogBase::Two => std::f64::consts::LN_2,
        }
    }

    /// log of 2 in this base: ln 2 in nats, exactly 1 in base two.
    pub fn log_two(self) -> f64 {
        std::f64::consts::LN_2 / self.ln_of_base()
    }
}

pub(crate) fn renyi_from_eigenvalues(eigenvalues: &[f64], alpha: f64, base: LogBase) -> Result<f64> {
    if alpha.is_nan() || alpha < 1.0 {
        return Err(Error::ParameterOutOfRange {
            name: "alpha",
            value: alpha,
        });
    }
    let nats = if alpha == 1.0 {
        von_neumann_nats(eigenvalues)
    } else if alpha.is_infinite() {
        let max = eigenvalues.iter().copied().fold(0.0, f64::max);
        -max.ln()
    } else {
        let power_sum: f64 = eigenvalues
            .iter()
            .filter(|&&l| l > ENTROPY_EIGENVALUE_CUTOFF)
            .map(|&l| l.powf(alpha))
            .sum();
        power_sum.ln() / (1.0 - alpha)
    };
    Ok(nats / base.ln_of_base())
}

/// Rényi entropy S^(α)(ρ) in the requested base; α = 1 is the von Neumann
/// entropy and α = ∞ is -log of the largest eigenvalue.
pub fn renyi_entropy(rho: &DensityOperator, alpha: f64, base: LogBase) -> Result<f64> {
    renyi_from_eigenvalues(&rho.eigenvalues(), alpha, base)
}

/// Entropic entanglement indicator
/// Q^(α) = S^(α)(ρ_single) - S^(α)(ρ_pair) - log 2, with the log-2 term in
/// the same base as the entropies. Separable pair states obey Q ≤ 0, so a
/// positive value certifies entanglement.
pub fn q_indicator(
    rho_pair: &DensityOperator,
    rho_single: &DensityOperator,
    alpha: f64,
    base: LogBase,
) -> Result<f64> {
    rho_pair.expect_shape(&[PAIR_DIM])?;
    rho_single.expect_shape(&[SINGLE_DIM])?;
    Ok(renyi_entropy(rho_single, alpha, base)?
        - renyi_entropy(rho_pair, alpha, base)?
        - base.log_two())
}

/// Monogamy residuals R_a = C²_{a|Eb} - C²_{aE} - C²_{ab} and
/// R_E = C²_{E|ab} - C²_{Ea} - C²_{Eb}, with C_{Ea} = C_{aE} and C_{Eb}
/// supplied separately (the two coincide for identical fermions).
pub fn residuals(
    c2_a_eb: f64,
    c2_ab: f64,
    c2_ae: f64,
    c2_e_ab: f64,
    c2_eb: f64,
) -> (f64, f64) {
    (c2_a_eb - c2_ae - c2_ab, c2_e_ab - c2_ae - c2_eb)
}

/// Environment blocks of a fermion-environment reduction that is manifestly
/// separable: ρ_aE = Σᵢ |i⟩⟨i| ⊗ Bᵢ with every Bᵢ positive semidefinite.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub env_blocks: [DMatrix<Complex64>; SINGLE_DIM],
}

fn env_block(rho_ae: &DensityOperator, level_row: usize, level_col: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(ENV_DIM, ENV_DIM, |e, f| {
        rho_ae.matrix()[(ENV_DIM * level_row + e, ENV_DIM * level_col + f)]
    })
}

/// Attempts the manifestly separable block form of a [4,2] reduction. Returns
/// `None` when any cross-level block exceeds the certificate tolerance or a
/// diagonal block fails positivity.
pub fn block_diagonal_env_decomposition(
    rho_ae: &DensityOperator,
) -> Result<Option<BlockDecomposition>> {
    rho_ae.expect_shape(&[SINGLE_DIM, ENV_DIM])?;
    for i in 0..SINGLE_DIM {
        for j in 0..SINGLE_DIM {
            if i != j && numerics::max_abs(&env_block(rho_ae, i, j)) > SEPARABLE_CERTIFICATE_TOL {
                return Ok(None);
            }
        }
    }
    let mut env_blocks: [DMatrix<Complex64>; SINGLE_DIM] = [
        env_block(rho_ae, 0, 0),
        env_block(rho_ae, 1, 1),
        env_block(rho_ae, 2, 2),
        env_block(rho_ae, 3, 3),
    ];
    for block in &mut env_blocks {
        let min = numerics::hermitian_eigen(block)?.min_eigenvalue();
        if min < -PSD_EIGENVALUE_FLOOR {
            return Ok(None);
        }
    }
    Ok(Some(BlockDecomposition { env_blocks }))
}

/// Two-product-term separable decomposition
/// ρ_aE = ½(P₁ + P₄) ⊗ env_outer + ½(P₂ + P₃) ⊗ env_inner, pairing the outer
/// (m_s = ±3/2) and inner (m_s = ±1/2) levels.
#[derive(Debug, Clone)]
pub struct TwoTermDecomposition {
    pub env_outer: DMatrix<Complex64>,
    pub env_inner: DMatrix<Complex64>,
}

impl TwoTermDecomposition {
    /// Reassembles the [4,2] matrix the two terms describe.
    pub fn reconstruction(&self) -> DMatrix<Complex64> {
        let n = SINGLE_DIM * ENV_DIM;
        let mut out = DMatrix::<Complex64>::zeros(n, n);
        for (levels, env) in [
            ([0usize, 3], &self.env_outer),
            ([1usize, 2], &self.env_inner),
        ] {
            for &level in &levels {
                for e in 0..ENV_DIM {
                    for f in 0..ENV_DIM {
                        out[(ENV_DIM * level + e, ENV_DIM * level + f)] += env[(e, f)] * 0.5;
                    }
                }
            }
        }
        out
    }

    pub fn max_residual(&self, rho_ae: &DensityOperator) -> f64 {
        numerics::max_abs(&(self.reconstruction() - rho_ae.matrix()))
    }
}

/// Attempts the two-product-term form. Requires the block-diagonal structure
/// plus equality of the paired blocks; the reconstruction then matches within
/// the certificate tolerance.
pub fn two_term_env_decomposition(rho_ae: &DensityOperator) -> Result<Option<TwoTermDecomposition>> {
    let Some(blocks) = block_diagonal_env_decomposition(rho_ae)? else {
        return Ok(None);
    };
    let [b0, b1, b2, b3] = blocks.env_blocks;
    if numerics::max_abs(&(&b0 - &b3)) > SEPARABLE_CERTIFICATE_TOL
        || numerics::max_abs(&(&b1 - &b2)) > SEPARABLE_CERTIFICATE_TOL
    {
        return Ok(None);
    }
    let decomposition = TwoTermDecomposition {
        env_outer: b0 + b3,
        env_inner: b1 + b2,
    };
    if decomposition.max_residual(rho_ae) > SEPARABLE_CERTIFICATE_TOL {
        return Ok(None);
    }
    Ok(Some(decomposition))
}

/// Monogamy residuals plus the convention they were computed under.
#[derive(Debug, Clone, Copy)]
pub struct ResidualPair {
    pub r_a: f64,
    pub r_e: f64,
    /// The fermion-environment tangle was set to zero, justified by zero
    /// negativity together with an explicit separable decomposition.
    pub assumes_zero_c_ae: bool,
}

/// Every quantifier evaluated on one tripartite state.
#[derive(Debug, Clone)]
pub struct EntanglementReport {
    /// Squared pair concurrence C²_ab.
    pub c2_ab: f64,
    /// Squared environment-vs-pair measure C²_{E|ab}.
    pub c2_e_ab: f64,
    /// Squared one-vs-rest measure C²_{a|Eb}.
    pub c2_a_eb: f64,
    /// Negativity of the fermion-environment reduction.
    pub negativity_ae: f64,
    /// Entropy excess ε in nats.
    pub epsilon_nats: f64,
    /// Q^(1), Q^(2), Q^(∞) in `log_base`.
    pub q1: f64,
    pub q2: f64,
    pub q_inf: f64,
    pub log_base: LogBase,
    /// Monogamy residuals, available only when the fermion-environment
    /// reduction is certified separable; `None` otherwise.
    pub residuals: Option<ResidualPair>,
}

/// Evaluates every quantifier on a pure tripartite state: reduces to ρ_ab
/// (six-dimensional), ρ_a, ρ_aE and ρ_E, then fills the report.
///
/// Residuals follow the zero-tangle convention: C²_aE is set to 0 only when
/// the negativity of ρ_aE vanishes and an explicit separable decomposition
/// certifies it, since a positive partial transpose alone is not sufficient
/// for separability in 2⊗4. Otherwise the residuals are reported as
/// unavailable.
pub fn report(state: &TripartiteState, base: LogBase) -> Result<EntanglementReport> {
    let rho = state.density();
    let rho_ab16 = rho.partial_trace(&[0, 1])?;
    let rho_ab = build_embedding().reduce_to_antisymmetric(&rho_ab16)?;
    let rho_a = rho.partial_trace(&[0])?;
    let rho_ae = rho.partial_trace(&[0, 2])?;
    let rho_e = rho.partial_trace(&[2])?;

    let pair_purity = rho_ab.purity();
    let env_purity = rho_e.purity();
    if (pair_purity - env_purity).abs() > ROUTE_MATCH_TOL {
        return Err(Error::RouteMismatch {
            context: "pair and environment purity of a pure tripartite state",
            left: pair_purity,
            right: env_purity,
        });
    }

    let c_ab = concurrence(&rho_ab)?;
    let c_e_ab = c_env_vs_pair(&rho_ab)?;
    let c_a_eb = c_one_vs_rest(&rho_a)?;
    let negativity_ae = negativity(&rho_ae)?;
    let epsilon_nats = epsilon(&rho_a)?;

    let pair_eigs = rho_ab.eigenvalues();
    let single_eigs = rho_a.eigenvalues();
    let q_at = |alpha: f64| -> Result<f64> {
        Ok(renyi_from_eigenvalues(&single_eigs, alpha, base)?
            - renyi_from_eigenvalues(&pair_eigs, alpha, base)?
            - base.log_two())
    };

    let c2_ab = c_ab * c_ab;
    let c2_e_ab = c_e_ab * c_e_ab;
    let c2_a_eb = c_a_eb * c_a_eb;

    let residuals = if negativity_ae <= NEGATIVITY_ZERO_TOL
        && block_diagonal_env_decomposition(&rho_ae)?.is_some()
    {
        let (r_a, r_e) = residuals(c2_a_eb, c2_ab, 0.0, c2_e_ab, 0.0);
        Some(ResidualPair {
            r_a,
            r_e,
            assumes_zero_c_ae: true,
        })
    } else {
        None
    };

    Ok(EntanglementReport {
        c2_ab,
        c2_e_ab,
        c2_a_eb,
        negativity_ae,
        epsilon_nats,
        q1: q_at(1.0)?,
        q2: q_at(2.0)?,
        q_inf: q_at(f64::INFINITY)?,
        log_base: base,
        residuals,
    })
}
