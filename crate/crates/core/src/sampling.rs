//! Seeded, reproducible generators for random states and operators.
//!
//! The verification suite and the test corpus both draw from these, so every
//! randomized check is replayable from its seed.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::{rand_core::SeedableRng, ChaCha8Rng};

use crate::hilbert::{build_embedding, DensityOperator, FermionPairState, PAIR_DIM};

/// Deterministic RNG for a given seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn standard_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    // Box-Muller pairs give an isotropic complex Gaussian.
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (-2.0 * u1.ln()).sqrt();
    Complex64::new(r * u2.cos(), r * u2.sin())
}

/// Ginibre matrix: i.i.d. standard complex Gaussian entries.
pub fn random_ginibre(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(rows, cols, |_, _| standard_complex(rng))
}

/// Haar-distributed unitary via Gram-Schmidt on a Ginibre matrix.
pub fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<Complex64> {
    let g = random_ginibre(rng, n, n);
    let mut q = DMatrix::<Complex64>::zeros(n, n);
    for j in 0..n {
        let mut v: DVector<Complex64> = g.column(j).into();
        for k in 0..j {
            let qk: DVector<Complex64> = q.column(k).into();
            let overlap = qk.dotc(&v);
            v -= qk * overlap;
        }
        let norm = v.norm();
        q.set_column(j, &(v / Complex64::from(norm)));
    }
    q
}

/// Random Hermitian matrix with O(1) entries.
pub fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<Complex64> {
    let g = random_ginibre(rng, n, n);
    (&g + g.adjoint()).map(|z| z * 0.5)
}

/// Random full-rank density matrix G G† / Tr(G G†), as a plain matrix.
pub fn random_density_matrix(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<Complex64> {
    let g = random_ginibre(rng, n, n);
    let rho = &g * g.adjoint();
    let trace = rho.trace().re;
    rho.map(|z| z / trace)
}

/// Random density operator with the given factor shape.
pub fn random_density(rng: &mut ChaCha8Rng, shape: &[usize]) -> DensityOperator {
    let n = shape.iter().product();
    DensityOperator::new(random_density_matrix(rng, n), shape)
        .expect("randomly generated density operator is valid")
}

/// Random normalized state vector.
pub fn random_state_vector(rng: &mut ChaCha8Rng, n: usize) -> DVector<Complex64> {
    let v = DVector::from_fn(n, |_, _| standard_complex(rng));
    let norm = v.norm();
    v / Complex64::from(norm)
}

/// Random pure two-fermion state in the six-dimensional representation.
pub fn random_pair_state(rng: &mut ChaCha8Rng) -> FermionPairState {
    let v = random_state_vector(rng, PAIR_DIM);
    FermionPairState::from_coords(v.as_slice().try_into().expect("six coordinates"))
        .expect("normalized by construction")
}

/// Random Slater determinant: two orthonormal single-particle states drawn
/// from a Haar unitary, antisymmetrized and expressed in the six-dimensional
/// representation.
pub fn random_slater_determinant(rng: &mut ChaCha8Rng) -> FermionPairState {
    let u = random_unitary(rng, 4);
    let phi = u.column(0);
    let chi = u.column(1);
    let mut product = DVector::<Complex64>::zeros(16);
    let inv_sqrt2 = Complex64::from(std::f64::consts::FRAC_1_SQRT_2);
    for i in 0..4 {
        for j in 0..4 {
            product[4 * i + j] = (phi[i] * chi[j] - chi[i] * phi[j]) * inv_sqrt2;
        }
    }
    let coords = build_embedding().matrix().adjoint() * product;
    FermionPairState::from_coords(coords.as_slice().try_into().expect("six coordinates"))
        .expect("Slater determinants are normalized")
}

/// Random convex mixture of Slater-determinant projectors (a separable
/// two-fermion state), with up to `max_terms` terms.
pub fn random_slater_mixture(rng: &mut ChaCha8Rng, max_terms: usize) -> DensityOperator {
    let terms = rng.gen_range(1..=max_terms.max(1));
    let mut weights: Vec<f64> = (0..terms).map(|_| -f64::ln(rng.gen_range(f64::EPSILON..1.0))).collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    let mut rho = DMatrix::<Complex64>::zeros(PAIR_DIM, PAIR_DIM);
    for &w in &weights {
        let state = random_slater_determinant(rng);
        let v = DVector::from_column_slice(state.coords());
        rho += (&v * v.adjoint()).map(|z| z * w);
    }
    DensityOperator::new(rho, &[PAIR_DIM]).expect("convex mixtures of projectors are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::max_abs;

    #[test]
    fn unitary_is_unitary() {
        let mut r = rng(5);
        let u = random_unitary(&mut r, 6);
        let gram = u.adjoint() * &u;
        let identity = DMatrix::<Complex64>::identity(6, 6);
        assert!(max_abs(&(gram - identity)) < 1e-12);
    }

    #[test]
    fn density_is_normalized() {
        let mut r = rng(7);
        let rho = random_density(&mut r, &[4, 2]);
        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn same_seed_same_draw() {
        let a = random_density_matrix(&mut rng(99), 5);
        let b = random_density_matrix(&mut rng(99), 5);
        assert!(max_abs(&(a - b)) == 0.0);
    }
}
