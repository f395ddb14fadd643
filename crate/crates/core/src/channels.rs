//! Generalized amplitude-damping and phase-damping channels on the
//! six-dimensional two-fermion space, and their dilations to pure tripartite
//! states.
//!
//! Both channels couple the pair to a single shared two-level environment, so
//! the evolution is global and the exchange symmetry of the pair is preserved
//! for every p. The decoherence parameter p ∈ [0,1] is the only evolution
//! parameter; channel composition semantics are deliberately not defined.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hilbert::{
    build_embedding, AngularMomentumLabel, DensityOperator, FermionPairState, TripartiteState,
    ENV_DIM, PAIR_DIM, PRODUCT_DIM,
};

/// Labels of the environment basis paired with the two Kraus operators.
pub const ENV_LABELS: [&str; ENV_DIM] = ["|0>E", "|1>E"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelKind {
    AmplitudeDamping,
    PhaseDamping,
}

/// A two-operator Kraus channel on the six-dimensional pair space, satisfying
/// Σ_μ K_μ† K_μ = I exactly by construction.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    kind: ChannelKind,
    p: f64,
    kraus: [DMatrix<Complex64>; 2],
}

fn check_probability(p: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(Error::ParameterOutOfRange { name: "p", value: p })
    }
}

/// Amplitude-damping channel: conserves the total excitation number by
/// lowering m by one unit while exciting the environment.
///
/// K₀ scales |2,m⟩ by √(1-p) for m ∈ {2,1,0,-1} and fixes |2,-2⟩ and i|0,0⟩;
/// K₁ maps |2,m⟩ to √p |2,m-1⟩ for m ∈ {2,1,0,-1} and annihilates the rest.
pub fn adc(p: f64) -> Result<KrausChannel> {
    let p = check_probability(p)?;
    let damp = Complex64::from((1.0 - p).sqrt());
    let hop = Complex64::from(p.sqrt());
    let one = Complex64::from(1.0);
    let mut k0 = DMatrix::<Complex64>::zeros(PAIR_DIM, PAIR_DIM);
    let mut k1 = DMatrix::<Complex64>::zeros(PAIR_DIM, PAIR_DIM);
    for k in 0..4 {
        k0[(k, k)] = damp;
        k1[(k + 1, k)] = hop; // |2,m⟩ → |2,m-1⟩ is one step down the ordering
    }
    k0[(4, 4)] = one;
    k0[(5, 5)] = one;
    Ok(KrausChannel {
        kind: ChannelKind::AmplitudeDamping,
        p,
        kraus: [k0, k1],
    })
}

/// Phase-damping channel: no energy exchange, pure loss of coherence between
/// the j = 2 sector and the i|0,0⟩ state.
///
/// K₀ = √(1-p) P_{j=2} + P_{j=0}, K₁ = √p P_{j=2}.
pub fn pdc(p: f64) -> Result<KrausChannel> {
    let p = check_probability(p)?;
    let damp = Complex64::from((1.0 - p).sqrt());
    let mark = Complex64::from(p.sqrt());
    let mut k0 = DMatrix::<Complex64>::zeros(PAIR_DIM, PAIR_DIM);
    let mut k1 = DMatrix::<Complex64>::zeros(PAIR_DIM, PAIR_DIM);
    for k in 0..5 {
        k0[(k, k)] = damp;
        k1[(k, k)] = mark;
    }
    k0[(5, 5)] = Complex64::from(1.0);
    Ok(KrausChannel {
        kind: ChannelKind::PhaseDamping,
        p,
        kraus: [k0, k1],
    })
}

impl KrausChannel {
    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn kraus_ops(&self) -> [&DMatrix<Complex64>; 2] {
        [&self.kraus[0], &self.kraus[1]]
    }

    /// max |Σ K†K - I|; zero up to rounding for the constructed channels.
    pub fn completeness_defect(&self) -> f64 {
        let sum = self.kraus[0].adjoint() * &self.kraus[0]
            + self.kraus[1].adjoint() * &self.kraus[1];
        let identity = DMatrix::<Complex64>::identity(PAIR_DIM, PAIR_DIM);
        crate::numerics::max_abs(&(sum - identity))
    }

    /// Σ_μ K_μ ρ K_μ† on the six-dimensional representation.
    pub fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        rho.expect_shape(&[PAIR_DIM])?;
        let out = &self.kraus[0] * rho.matrix() * self.kraus[0].adjoint()
            + &self.kraus[1] * rho.matrix() * self.kraus[1].adjoint();
        DensityOperator::new(out, &[PAIR_DIM])
    }

    /// Pure tripartite dilation Σ_μ (K_μ ψ₀) ⊗ |μ⟩_E, embedded into the
    /// [4,4,2] space. Tracing the environment recovers [`Self::apply`].
    pub fn dilate(&self, initial: &FermionPairState) -> TripartiteState {
        let embedding = build_embedding();
        let psi = initial.as_vector();
        let mut coords = DVector::<Complex64>::zeros(PRODUCT_DIM * ENV_DIM);
        for (mu, k) in self.kraus.iter().enumerate() {
            let branch = embedding.matrix() * (k * &psi);
            for r in 0..PRODUCT_DIM {
                coords[ENV_DIM * r + mu] = branch[r];
            }
        }
        TripartiteState::new(coords)
            .expect("dilations are normalized and antisymmetric by construction")
    }
}

/// Initial-state specification as amplitudes of the |j,m⟩ kets; conversion to
/// the i-absorbed convention happens when the state is realized.
#[derive(Debug, Clone)]
pub struct InitialStateSpec {
    amplitudes: Vec<(AngularMomentumLabel, Complex64)>,
}

impl InitialStateSpec {
    pub fn new(amplitudes: Vec<(AngularMomentumLabel, Complex64)>) -> Self {
        Self { amplitudes }
    }

    /// Preset: the maximally entangled basis state |2,0⟩.
    pub fn fig1() -> Self {
        Self::new(vec![(
            AngularMomentumLabel::new(2, 0).expect("valid label"),
            Complex64::from(1.0),
        )])
    }

    /// Preset: the balanced superposition (|2,1⟩ + |2,-1⟩)/√2.
    pub fn fig2() -> Self {
        let amp = Complex64::from(std::f64::consts::FRAC_1_SQRT_2);
        Self::new(vec![
            (AngularMomentumLabel::new(2, 1).expect("valid label"), amp),
            (AngularMomentumLabel::new(2, -1).expect("valid label"), amp),
        ])
    }

    /// Preset: (|2,0⟩ + i|0,0⟩)/√2, the maximally entangled state whose
    /// phase-damping evolution keeps the one-vs-rest measure pinned at 1.
    pub fn fig3() -> Self {
        let amp = Complex64::from(std::f64::consts::FRAC_1_SQRT_2);
        Self::new(vec![
            (AngularMomentumLabel::new(2, 0).expect("valid label"), amp),
            (
                AngularMomentumLabel::new(0, 0).expect("valid label"),
                Complex64::new(0.0, std::f64::consts::FRAC_1_SQRT_2),
            ),
        ])
    }

    pub fn amplitudes(&self) -> &[(AngularMomentumLabel, Complex64)] {
        &self.amplitudes
    }

    /// Realizes the state. Without `normalize`, squared norms off 1 by more
    /// than the state tolerance are rejected.
    pub fn to_state(&self, normalize: bool) -> Result<FermionPairState> {
        FermionPairState::from_jm_amplitudes(&self.amplitudes, normalize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::exchange_symmetry_holds;
    use crate::numerics::max_abs;
    use crate::sampling;
    use proptest::prelude::*;

    fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
        assert!((a - b).abs() <= tol, "{what}: {a} vs {b}");
    }

    #[test]
    fn adc_endpoints() {
        let identity = DMatrix::<Complex64>::identity(PAIR_DIM, PAIR_DIM);
        let ch0 = adc(0.0).unwrap();
        assert!(max_abs(&(ch0.kraus_ops()[0] - &identity)) == 0.0);
        assert!(max_abs(ch0.kraus_ops()[1]) == 0.0);

        let ch1 = adc(1.0).unwrap();
        let m0 = FermionPairState::basis_state(2).as_vector();
        let lowered = ch1.kraus_ops()[1] * &m0;
        let expected = FermionPairState::basis_state(3).as_vector();
        assert!(max_abs(&DMatrix::from_columns(&[lowered - expected])) <= 1e-15);
        let killed = ch1.kraus_ops()[0] * &m0;
        assert!(killed.iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn pdc_fixes_the_singlet() {
        for &p in &[0.0, 0.3, 0.5, 1.0] {
            let ch = pdc(p).unwrap();
            let singlet = FermionPairState::basis_state(5).as_vector();
            let k0s = ch.kraus_ops()[0] * &singlet;
            assert!((&k0s - &singlet).iter().all(|z| z.norm() <= 1e-15));
            let k1s = ch.kraus_ops()[1] * &singlet;
            assert!(k1s.iter().all(|z| z.norm() == 0.0));
        }
        let half = pdc(0.5).unwrap();
        let top = FermionPairState::basis_state(0).as_vector();
        let scaled = half.kraus_ops()[0] * &top;
        assert_close(
            scaled[0].re,
            std::f64::consts::FRAC_1_SQRT_2,
            1e-15,
            "K0 |2,2> at p = 1/2",
        );
    }

    #[test]
    fn probability_is_validated() {
        assert!(adc(-0.1).is_err());
        assert!(adc(1.1).is_err());
        assert!(pdc(f64::NAN).is_err());
    }

    #[test]
    fn completeness_is_exact_on_a_grid() {
        for k in 0..=100 {
            let p = k as f64 / 100.0;
            assert!(adc(p).unwrap().completeness_defect() <= 1e-15);
            assert!(pdc(p).unwrap().completeness_defect() <= 1e-15);
        }
    }

    #[test]
    fn dilation_of_m0_has_two_branches() {
        let p = 0.37;
        let ch = adc(p).unwrap();
        let state = ch.dilate(&FermionPairState::basis_state(2));
        let embedding = build_embedding();
        let m0 = embedding.embed_state(&FermionPairState::basis_state(2));
        let m1 = embedding.embed_state(&FermionPairState::basis_state(3));
        for r in 0..PRODUCT_DIM {
            let env0 = state.coords()[2 * r];
            let env1 = state.coords()[2 * r + 1];
            assert!((env0 - m0[r] * Complex64::from((1.0 - p).sqrt())).norm() <= 1e-14);
            assert!((env1 - m1[r] * Complex64::from(p.sqrt())).norm() <= 1e-14);
        }
    }

    #[test]
    fn pdc_dark_state_stays_product() {
        for &p in &[0.0, 0.25, 0.75, 1.0] {
            let ch = pdc(p).unwrap();
            let state = ch.dilate(&FermionPairState::basis_state(5));
            // all environment-1 components vanish: the state never entangles
            for r in 0..PRODUCT_DIM {
                assert!(state.coords()[2 * r + 1].norm() <= 1e-15);
            }
        }
    }

    #[test]
    fn adc_excitation_bookkeeping() {
        // for |2,m⟩ with m ≥ -1 the environment excitation appears exactly on
        // the branch where the pair lost one unit of m
        let p = 0.5;
        let ch = adc(p).unwrap();
        let embedding = build_embedding();
        for k in 0..4 {
            let state = ch.dilate(&FermionPairState::basis_state(k));
            let lowered = embedding.embed_state(&FermionPairState::basis_state(k + 1));
            for r in 0..PRODUCT_DIM {
                let env1 = state.coords()[2 * r + 1];
                assert!((env1 - lowered[r] * Complex64::from(p.sqrt())).norm() <= 1e-14);
            }
        }
    }

    #[test]
    fn apply_matches_two_term_mixture() {
        let p = 0.3;
        let ch = adc(p).unwrap();
        let rho0 = FermionPairState::basis_state(2).density();
        let evolved = ch.apply(&rho0).unwrap();
        assert_close(evolved.matrix()[(2, 2)].re, 1.0 - p, 1e-15, "stay weight");
        assert_close(evolved.matrix()[(3, 3)].re, p, 1e-15, "hop weight");
        let off_mass: f64 = evolved
            .matrix()
            .iter()
            .map(|z| z.norm())
            .sum::<f64>()
            - (1.0 - p)
            - p;
        assert!(off_mass.abs() <= 1e-14, "no coherences appear");
    }

    #[test]
    fn pdc_apply_fixes_diagonal_states() {
        let weights = [0.05, 0.1, 0.2, 0.25, 0.15, 0.25];
        let mut rho = DMatrix::<Complex64>::zeros(PAIR_DIM, PAIR_DIM);
        for (k, &w) in weights.iter().enumerate() {
            rho[(k, k)] = Complex64::from(w);
        }
        let rho = DensityOperator::new(rho, &[PAIR_DIM]).unwrap();
        for &p in &[0.2, 0.9] {
            let evolved = pdc(p).unwrap().apply(&rho).unwrap();
            assert!(max_abs(&(evolved.matrix() - rho.matrix())) <= 1e-15);
        }
    }

    #[test]
    fn dilation_traces_back_to_apply() {
        let mut rng = sampling::rng(15);
        for seed_channel in [0u8, 1] {
            for _ in 0..5 {
                let p = 0.1 + 0.8 * rand::Rng::gen::<f64>(&mut rng);
                let ch = if seed_channel == 0 {
                    adc(p).unwrap()
                } else {
                    pdc(p).unwrap()
                };
                let psi0 = sampling::random_pair_state(&mut rng);
                let tripartite = ch.dilate(&psi0).density();
                let rho16 = tripartite.partial_trace(&[0, 1]).unwrap();
                let reduced = build_embedding().reduce_to_antisymmetric(&rho16).unwrap();
                let direct = ch.apply(&psi0.density()).unwrap();
                assert!(max_abs(&(reduced.matrix() - direct.matrix())) <= 1e-12);
            }
        }
    }

    #[test]
    fn initial_state_spec_norm_gate() {
        let spec = InitialStateSpec::new(vec![
            (
                AngularMomentumLabel::new(2, 0).unwrap(),
                Complex64::from(1.0),
            ),
            (
                AngularMomentumLabel::new(0, 0).unwrap(),
                Complex64::from(1.0),
            ),
        ]);
        assert!(spec.to_state(false).is_err());
        let state = spec.to_state(true).unwrap();
        assert_close(
            state.as_vector().norm(),
            1.0,
            1e-15,
            "normalized on request",
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn channels_preserve_state_validity(seed in any::<u64>(), p in 0.0f64..=1.0) {
            let mut rng = sampling::rng(seed);
            let rho = sampling::random_density(&mut rng, &[PAIR_DIM]);
            // construction re-checks trace, Hermiticity and positivity
            let via_adc = adc(p).unwrap().apply(&rho).unwrap();
            prop_assert!((via_adc.matrix().trace().re - 1.0).abs() <= 1e-12);
            let via_pdc = pdc(p).unwrap().apply(&rho).unwrap();
            // populations never move under pure dephasing
            for k in 0..PAIR_DIM {
                prop_assert!(
                    (via_pdc.matrix()[(k, k)].re - rho.matrix()[(k, k)].re).abs() <= 1e-12
                );
            }
        }

        #[test]
        fn evolved_states_stay_exchange_symmetric(seed in any::<u64>(), p in 0.0f64..=1.0) {
            let mut rng = sampling::rng(seed);
            let psi0 = sampling::random_pair_state(&mut rng);
            for ch in [adc(p).unwrap(), pdc(p).unwrap()] {
                let rho6 = ch.apply(&psi0.density()).unwrap();
                let rho16 = build_embedding().embed_density(&rho6).unwrap();
                prop_assert!(exchange_symmetry_holds(&rho16));
            }
        }
    }
}
