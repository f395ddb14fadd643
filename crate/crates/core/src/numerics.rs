//! Dense Hermitian spectral primitives for small complex matrices.
//!
//! Everything operates on plain `DMatrix<Complex64>` values; domain types are
//! layered on top elsewhere. The eigensolver is a cyclic complex Jacobi
//! iteration: for the n ≤ 32 matrices used throughout it converges in a
//! handful of sweeps, is deterministic, and reconstructs its input to a few
//! ulps without any external backend.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tolerances::{HERMITICITY_TOL, PSD_EIGENVALUE_FLOOR};

/// Largest matrix dimension the spectral routines accept.
pub const MAX_DIM: usize = 32;

const MAX_JACOBI_SWEEPS: usize = 64;

/// Eigendecomposition of a Hermitian matrix: real eigenvalues in ascending
/// order and a unitary matrix whose columns are the matching eigenvectors.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: DMatrix<Complex64>,
}

impl Spectrum {
    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unitary matrix of eigenvector columns, ordered like the eigenvalues.
    pub fn eigenvectors(&self) -> &DMatrix<Complex64> {
        &self.eigenvectors
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    /// Rebuilds U Λ U†.
    pub fn reconstruct(&self) -> DMatrix<Complex64> {
        let mut scaled = self.eigenvectors.clone();
        for (j, &lambda) in self.eigenvalues.iter().enumerate() {
            let mut col = scaled.column_mut(j);
            col *= Complex64::from(lambda);
        }
        scaled * self.eigenvectors.adjoint()
    }
}

/// Largest entry magnitude.
pub fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// max |A - A†|, zero exactly when A is Hermitian.
pub fn hermiticity_defect(m: &DMatrix<Complex64>) -> f64 {
    let n = m.nrows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

fn check_square(m: &DMatrix<Complex64>) -> Result<usize> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::ShapeMismatch {
            context: format!("expected a square matrix, got {}x{}", m.nrows(), m.ncols()),
        });
    }
    if n == 0 {
        return Err(Error::ShapeMismatch {
            context: "empty matrix".into(),
        });
    }
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge { dim: n });
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(n)
}

/// Eigendecomposition of a Hermitian matrix (n ≤ 32).
///
/// Inputs with a Hermiticity defect below [`HERMITICITY_TOL`] are symmetrized
/// to (A + A†)/2 first; larger defects are errors. Output is deterministic
/// for identical input.
pub fn hermitian_eigen(h: &DMatrix<Complex64>) -> Result<Spectrum> {
    let n = check_square(h)?;
    let defect = hermiticity_defect(h);
    if defect > HERMITICITY_TOL {
        return Err(Error::NotHermitian { defect });
    }
    let sym = (h + h.adjoint()).map(|z| z * 0.5);
    Ok(jacobi(sym, n))
}

fn jacobi(mut a: DMatrix<Complex64>, n: usize) -> Spectrum {
    let mut u = DMatrix::<Complex64>::identity(n, n);
    if n == 1 {
        return Spectrum {
            eigenvalues: vec![a[(0, 0)].re],
            eigenvectors: u,
        };
    }
    let frob = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let stop = frob * f64::EPSILON;

    for _ in 0..MAX_JACOBI_SWEEPS {
        let off = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= stop {
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let h = a[(p, q)];
                let habs = h.norm();
                if habs == 0.0 {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let tau = (app - aqq) / (2.0 * habs);
                // smaller-magnitude root of t² + 2τt − 1 = 0
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (tau - (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let phase = h / Complex64::from(habs);
                let mix_cols = |m: &mut DMatrix<Complex64>| {
                    for k in 0..n {
                        let kp = m[(k, p)];
                        let kq = m[(k, q)];
                        m[(k, p)] = kp * c + kq * (phase.conj() * s);
                        m[(k, q)] = kq * c - kp * (phase * s);
                    }
                };
                mix_cols(&mut a);
                for k in 0..n {
                    let pk = a[(p, k)];
                    let qk = a[(q, k)];
                    a[(p, k)] = pk * c + qk * (phase * s);
                    a[(q, k)] = qk * c - pk * (phase.conj() * s);
                }
                mix_cols(&mut u);
                a[(p, p)] = Complex64::from(a[(p, p)].re);
                a[(q, q)] = Complex64::from(a[(q, q)].re);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(i, i)]
            .re
            .partial_cmp(&a[(j, j)].re)
            .expect("finite eigenvalues")
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut eigenvectors = DMatrix::<Complex64>::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        eigenvectors.set_column(dst, &u.column(src));
    }
    Spectrum {
        eigenvalues,
        eigenvectors,
    }
}

/// Clamp a nominally nonnegative spectrum: values in [-floor, 0) become 0,
/// values below -floor are errors.
fn clamp_nonnegative(eigenvalues: &[f64]) -> Result<Vec<f64>> {
    let min = eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    if min < -PSD_EIGENVALUE_FLOOR {
        return Err(Error::NotPositiveSemidefinite {
            min_eigenvalue: min,
        });
    }
    Ok(eigenvalues.iter().map(|&l| l.max(0.0)).collect())
}

/// Principal square root of a positive-semidefinite Hermitian matrix.
pub fn psd_sqrt(m: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    let spectrum = hermitian_eigen(m)?;
    let clamped = clamp_nonnegative(spectrum.eigenvalues())?;
    let u = spectrum.eigenvectors();
    let mut scaled = u.clone();
    for (j, &lambda) in clamped.iter().enumerate() {
        let mut col = scaled.column_mut(j);
        col *= Complex64::from(lambda.sqrt());
    }
    Ok(scaled * u.adjoint())
}

/// Descending square roots of the eigenvalues of ρρ̃ for two PSD matrices.
///
/// The product of two PSD matrices has real nonnegative spectrum; it is
/// computed here through the Hermitian form √ρ ρ̃ √ρ, which shares the
/// spectrum of ρρ̃ and keeps the whole path inside the Hermitian solver.
pub fn product_sqrt_spectrum(
    rho: &DMatrix<Complex64>,
    rho_tilde: &DMatrix<Complex64>,
) -> Result<Vec<f64>> {
    if rho.shape() != rho_tilde.shape() {
        return Err(Error::ShapeMismatch {
            context: format!(
                "product spectrum needs equal shapes, got {:?} and {:?}",
                rho.shape(),
                rho_tilde.shape()
            ),
        });
    }
    let root = psd_sqrt(rho)?;
    let sandwich = &root * rho_tilde * &root;
    let spectrum = hermitian_eigen(&sandwich)?;
    let noise_floor =
        crate::tolerances::PRODUCT_SPECTRUM_FLOOR * max_abs(rho) * max_abs(rho_tilde);
    let mut values: Vec<f64> = clamp_nonnegative(spectrum.eigenvalues())?
        .into_iter()
        .map(|l| if l <= noise_floor { 0.0 } else { l.sqrt() })
        .collect();
    values.sort_by(|x, y| y.partial_cmp(x).expect("finite spectrum"));
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling;
    use proptest::prelude::*;

    fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
        assert!(
            (a - b).abs() <= tol,
            "{what}: {a} vs {b} (|Δ| = {:.3e} > {tol:.1e})",
            (a - b).abs()
        );
    }

    fn diag(values: &[f64]) -> DMatrix<Complex64> {
        let n = values.len();
        DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::from(values[i])
            } else {
                Complex64::from(0.0)
            }
        })
    }

    /// Brute-force oracle: eigenvalues of the plain (non-Hermitian) product
    /// ρρ̃ via a real 2n×2n embedding and the Schur-based complex eigenvalue
    /// solver, fully independent of the √ρ ρ̃ √ρ route.
    fn brute_product_sqrt(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> Vec<f64> {
        let m = a * b;
        let n = m.nrows();
        let mut big = DMatrix::<f64>::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                big[(i, j)] = m[(i, j)].re;
                big[(i, n + j)] = -m[(i, j)].im;
                big[(n + i, j)] = m[(i, j)].im;
                big[(n + i, n + j)] = m[(i, j)].re;
            }
        }
        // the embedding doubles every eigenvalue of m (spectrum of m and m̄)
        let mut doubled: Vec<f64> = big.complex_eigenvalues().iter().map(|z| z.re).collect();
        doubled.sort_by(|x, y| y.partial_cmp(x).unwrap());
        doubled
            .into_iter()
            .step_by(2)
            .map(|l| l.max(0.0).sqrt())
            .collect()
    }

    #[test]
    fn eigen_of_diagonal() {
        let spectrum = hermitian_eigen(&diag(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(spectrum.eigenvalues(), &[1.0, 2.0, 3.0]);
    }

    #[test]
    fn eigen_of_pauli_x() {
        let mut m = DMatrix::<Complex64>::zeros(2, 2);
        m[(0, 1)] = Complex64::from(1.0);
        m[(1, 0)] = Complex64::from(1.0);
        let spectrum = hermitian_eigen(&m).unwrap();
        assert_close(spectrum.eigenvalues()[0], -1.0, 1e-14, "lower");
        assert_close(spectrum.eigenvalues()[1], 1.0, 1e-14, "upper");
    }

    #[test]
    fn eigen_reconstructs_random_hermitian() {
        let mut rng = sampling::rng(11);
        for _ in 0..20 {
            let h = sampling::random_hermitian(&mut rng, 8);
            let spectrum = hermitian_eigen(&h).unwrap();
            let residual = max_abs(&(&h - spectrum.reconstruct()));
            assert!(
                residual <= 1e-11 * max_abs(&h).max(1.0),
                "reconstruction residual {residual:.3e}"
            );
            let gram = spectrum.eigenvectors().adjoint() * spectrum.eigenvectors();
            let identity = DMatrix::<Complex64>::identity(8, 8);
            assert!(max_abs(&(gram - identity)) <= 1e-12);
        }
    }

    #[test]
    fn eigen_rejects_non_hermitian() {
        let mut m = DMatrix::<Complex64>::zeros(2, 2);
        m[(0, 1)] = Complex64::from(1.0);
        assert!(matches!(
            hermitian_eigen(&m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn psd_sqrt_of_identity_and_diagonal() {
        let identity = DMatrix::<Complex64>::identity(3, 3);
        assert!(max_abs(&(psd_sqrt(&identity).unwrap() - identity.clone())) <= 1e-14);
        let root = psd_sqrt(&diag(&[4.0, 9.0])).unwrap();
        assert!(max_abs(&(root - diag(&[2.0, 3.0]))) <= 1e-14);
    }

    #[test]
    fn psd_sqrt_squares_back() {
        let mut rng = sampling::rng(3);
        for _ in 0..10 {
            let rho = sampling::random_density_matrix(&mut rng, 6);
            let root = psd_sqrt(&rho).unwrap();
            assert!(max_abs(&(&root * &root - &rho)) <= 1e-10);
        }
    }

    #[test]
    fn psd_sqrt_rejects_indefinite() {
        assert!(matches!(
            psd_sqrt(&diag(&[1.0, -0.5])),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
    }

    #[test]
    fn product_spectrum_of_projector() {
        let mut proj = DMatrix::<Complex64>::zeros(6, 6);
        proj[(2, 2)] = Complex64::from(1.0);
        let values = product_sqrt_spectrum(&proj, &proj).unwrap();
        assert_close(values[0], 1.0, 1e-14, "top");
        assert!(values[1..].iter().all(|&v| v.abs() <= 1e-14));
    }

    #[test]
    fn product_spectrum_two_level_block() {
        // ρ carries 0.7 on level 3 and 0.3 on level 4; its conjugated partner
        // moves the 0.3 onto level 2, so only the 0.7 projector survives.
        let rho = diag(&[0.0, 0.0, 0.7, 0.3, 0.0, 0.0]);
        let tilde = diag(&[0.0, 0.3, 0.7, 0.0, 0.0, 0.0]);
        let values = product_sqrt_spectrum(&rho, &tilde).unwrap();
        assert_close(values[0], 0.7, 1e-12, "surviving weight");
        assert!(values[1..].iter().all(|&v| v.abs() <= 1e-12));
        let brute = brute_product_sqrt(&rho, &tilde);
        for (v, b) in values.iter().zip(brute.iter()) {
            assert_close(*v, *b, 1e-9, "vs brute force");
        }
    }

    #[test]
    fn product_spectrum_matches_brute_force() {
        let mut rng = sampling::rng(17);
        for _ in 0..15 {
            let a = sampling::random_density_matrix(&mut rng, 6);
            let b = sampling::random_density_matrix(&mut rng, 6);
            let fast = product_sqrt_spectrum(&a, &b).unwrap();
            let brute = brute_product_sqrt(&a, &b);
            for (f, o) in fast.iter().zip(brute.iter()) {
                assert_close(*f, *o, 1e-9, "multiset entry");
            }
        }
    }

    #[test]
    fn product_spectrum_with_self_is_spectrum() {
        let mut rng = sampling::rng(29);
        let rho = sampling::random_density_matrix(&mut rng, 6);
        let via_product = product_sqrt_spectrum(&rho, &rho).unwrap();
        let mut direct = hermitian_eigen(&rho).unwrap().eigenvalues().to_vec();
        direct.reverse();
        for (p, d) in via_product.iter().zip(direct.iter()) {
            assert_close(*p, *d, 1e-10, "spectrum entry");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn spectra_are_permutation_stable(seed in any::<u64>()) {
            let mut rng = sampling::rng(seed);
            let a = sampling::random_density_matrix(&mut rng, 5);
            let b = sampling::random_density_matrix(&mut rng, 5);
            let base = product_sqrt_spectrum(&a, &b).unwrap();

            let mut perm = DMatrix::<Complex64>::zeros(5, 5);
            let order = [3usize, 0, 4, 1, 2];
            for (row, &col) in order.iter().enumerate() {
                perm[(row, col)] = Complex64::from(1.0);
            }
            let shuffled = product_sqrt_spectrum(
                &(&perm * &a * perm.transpose()),
                &(&perm * &b * perm.transpose()),
            )
            .unwrap();
            for (x, y) in base.iter().zip(shuffled.iter()) {
                prop_assert!((x - y).abs() <= 1e-10);
            }
        }

        #[test]
        fn reconstruction_holds_for_random_sizes(seed in any::<u64>(), n in 2usize..10) {
            let mut rng = sampling::rng(seed);
            let h = sampling::random_hermitian(&mut rng, n);
            let spectrum = hermitian_eigen(&h).unwrap();
            let residual = max_abs(&(&h - spectrum.reconstruct()));
            prop_assert!(residual <= 1e-11 * max_abs(&h).max(1.0));
        }
    }
}
