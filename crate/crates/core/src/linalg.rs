//! Dense complex matrix substrate.
//!
//! Everything downstream (states, projectors, SU(d) generators, channels) is
//! a small dense complex matrix, so a single newtype over [`nalgebra`]'s
//! dynamic matrix carries all of them. Target dimensions are d <= 8; all
//! algorithms are dense O(d^3) with no sparse path.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Eigenvalues below this threshold are treated as outside the support for
/// logarithms and entropies.
pub const SUPPORT_CUTOFF: f64 = 1e-12;

/// Tolerance for Hermiticity checks at construction time.
pub const HERMITICITY_TOL: f64 = 1e-12;

const EIG_MAX_ITERS: usize = 10_000;

/// Square complex matrix of dimension >= 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    data: DMatrix<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from a row-major slice of entries.
    pub fn from_rows(dim: usize, entries: &[Complex64]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionTooSmall { min: 1, got: 0 });
        }
        if entries.len() != dim * dim {
            return Err(Error::NotSquare {
                rows: entries.len() / dim.max(1),
                cols: dim,
            });
        }
        Ok(Self {
            data: DMatrix::from_row_slice(dim, dim, entries),
        })
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        Self {
            data: DMatrix::from_fn(dim, dim, f),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            data: DMatrix::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            data: DMatrix::identity(dim, dim),
        }
    }

    /// Diagonal matrix from real entries.
    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        Self::from_fn(diag.len(), |i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    /// Rank-1 projector |v><v| from a (not necessarily normalized) vector.
    pub fn outer(v: &[Complex64]) -> Self {
        let n2: f64 = v.iter().map(|c| c.norm_sqr()).sum();
        Self::from_fn(v.len(), |i, j| v[i] * v[j].conj() / n2)
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.data[(i, j)] = value;
    }

    pub fn trace(&self) -> Complex64 {
        self.data.diagonal().sum()
    }

    pub fn adjoint(&self) -> Self {
        Self {
            data: self.data.adjoint(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            data: &self.data * &other.data,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            data: &self.data + &other.data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            data: &self.data - &other.data,
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            data: self.data.map(|c| c * factor),
        }
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// Kronecker product, left factor major (index a*d_b + b).
    pub fn kron(&self, other: &Self) -> Self {
        Self {
            data: self.data.kronecker(&other.data),
        }
    }

    /// Largest entry magnitude; the norm used for residual reporting.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Re Tr(A\u{2020} B), the Hilbert-Schmidt inner product restricted to
    /// Hermitian operands.
    pub fn hs_inner(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a.conj() * b).re)
            .sum()
    }

    /// Max-abs deviation from Hermiticity.
    pub fn hermiticity_residual(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let r = (self.data[(i, j)] - self.data[(j, i)].conj()).norm();
                worst = worst.max(r);
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_residual() <= tol
    }

    fn require_hermitian(&self) -> Result<()> {
        let r = self.hermiticity_residual();
        if r > HERMITICITY_TOL {
            return Err(Error::NotHermitian(r));
        }
        Ok(())
    }

    /// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
    pub fn eig_hermitian(&self) -> Result<HermitianEig> {
        self.require_hermitian()?;
        let eig = self
            .data
            .clone()
            .try_symmetric_eigen(f64::EPSILON, EIG_MAX_ITERS)
            .ok_or(Error::EigNoConvergence(EIG_MAX_ITERS))?;
        let d = self.dim();
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
        let eigenvalues: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
        let eigenvectors = ComplexMatrix {
            data: DMatrix::from_fn(d, d, |i, j| eig.eigenvectors[(i, order[j])]),
        };
        Ok(HermitianEig {
            eigenvalues,
            eigenvectors,
        })
    }

    /// Matrix logarithm restricted to the support of a Hermitian PSD matrix.
    ///
    /// Eigenvalues at or below [`SUPPORT_CUTOFF`] are excluded; eigenvalues
    /// below -1e-10 are rejected as not PSD.
    pub fn log_on_support(&self) -> Result<ComplexMatrix> {
        let eig = self.eig_hermitian()?;
        if eig.eigenvalues[0] < -1e-10 {
            return Err(Error::NotPositiveSemidefinite(eig.eigenvalues[0]));
        }
        let log_diag: Vec<f64> = eig
            .eigenvalues
            .iter()
            .map(|&l| if l > SUPPORT_CUTOFF { l.ln() } else { 0.0 })
            .collect();
        Ok(eig.recompose_with(&log_diag))
    }

    /// Smallest eigenvalue of a Hermitian matrix.
    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(self.eig_hermitian()?.eigenvalues[0])
    }
}

/// Result of [`ComplexMatrix::eig_hermitian`]: `m = V diag(eigenvalues) V\u{2020}`
/// with orthonormal eigenvector columns and eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct HermitianEig {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEig {
    /// Column `k` of the eigenvector matrix.
    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        (0..self.eigenvectors.dim())
            .map(|i| self.eigenvectors.get(i, k))
            .collect()
    }

    /// Builds `V diag(d) V\u{2020}` for a replacement real diagonal `d`.
    pub fn recompose_with(&self, diag: &[f64]) -> ComplexMatrix {
        let n = self.eigenvectors.dim();
        let v = &self.eigenvectors.data;
        let d = DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        ComplexMatrix {
            data: v * d * v.adjoint(),
        }
    }

    pub fn recompose(&self) -> ComplexMatrix {
        self.recompose_with(&self.eigenvalues)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_hermitian(dim: usize, seed: u64) -> ComplexMatrix {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let raw = ComplexMatrix::from_fn(dim, dim, |_, _| {
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        raw.add(&raw.adjoint()).scale_re(0.5)
    }

    #[test]
    fn eig_diagonal_matrix_sorted_ascending() {
        let m = ComplexMatrix::from_real_diagonal(&[0.9, 0.1]);
        let eig = m.eig_hermitian().unwrap();
        assert!((eig.eigenvalues[0] - 0.1).abs() < 1e-14);
        assert!((eig.eigenvalues[1] - 0.9).abs() < 1e-14);
    }

    #[test]
    fn eig_pauli_x_spectrum() {
        let m = ComplexMatrix::from_rows(2, &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]).unwrap();
        let eig = m.eig_hermitian().unwrap();
        assert!((eig.eigenvalues[0] + 1.0).abs() < 1e-12);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eig_reconstructs_random_4x4() {
        let m = random_hermitian(4, 7);
        let eig = m.eig_hermitian().unwrap();
        assert!(eig.recompose().sub(&m).max_abs() <= 1e-10);
        // orthonormal columns
        let gram = eig.eigenvectors.adjoint().mul(&eig.eigenvectors);
        assert!(gram.sub(&ComplexMatrix::identity(4)).max_abs() <= 1e-10);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = ComplexMatrix::from_rows(2, &[c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.)]).unwrap();
        assert!(matches!(m.eig_hermitian(), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn log_of_scaled_identity() {
        let m = ComplexMatrix::identity(2).scale_re(0.5);
        let expected = ComplexMatrix::identity(2).scale_re(-(2.0_f64.ln()));
        assert!(m.log_on_support().unwrap().sub(&expected).max_abs() < 1e-12);
    }

    #[test]
    fn log_excludes_kernel() {
        let m = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]);
        let log = m.log_on_support().unwrap();
        assert!(log.max_abs() < 1e-12);
    }

    #[test]
    fn log_matches_scalar_oracle() {
        let m = ComplexMatrix::from_real_diagonal(&[0.9, 0.1]);
        let expected = ComplexMatrix::from_real_diagonal(&[0.9_f64.ln(), 0.1_f64.ln()]);
        assert!(m.log_on_support().unwrap().sub(&expected).max_abs() < 1e-12);
    }

    #[test]
    fn log_rejects_negative_eigenvalue() {
        let m = ComplexMatrix::from_real_diagonal(&[1.0, -0.2]);
        assert!(matches!(
            m.log_on_support(),
            Err(Error::NotPositiveSemidefinite(_))
        ));
    }

    #[test]
    fn log_inverts_exp_on_full_rank() {
        // exp of a Hermitian via its eigendecomposition, then log back
        let h = random_hermitian(3, 11);
        let eig = h.eig_hermitian().unwrap();
        let exp_diag: Vec<f64> = eig.eigenvalues.iter().map(|l| l.exp()).collect();
        let exp_h = eig.recompose_with(&exp_diag);
        assert!(exp_h.log_on_support().unwrap().sub(&h).max_abs() < 1e-8);
    }

    #[test]
    fn min_eigenvalue_identity_and_pauli_z() {
        assert!((ComplexMatrix::identity(3).min_eigenvalue().unwrap() - 1.0).abs() < 1e-14);
        let z = ComplexMatrix::from_real_diagonal(&[1.0, -1.0]);
        assert!((z.min_eigenvalue().unwrap() + 1.0).abs() < 1e-14);
    }

    #[test]
    fn min_eigenvalue_consistent_with_eig() {
        let m = random_hermitian(5, 23);
        let eig = m.eig_hermitian().unwrap();
        assert_eq!(m.min_eigenvalue().unwrap(), eig.eigenvalues[0]);
    }

    #[test]
    fn trace_equals_eigenvalue_sum() {
        for seed in 0..5 {
            let m = random_hermitian(4, seed);
            let eig = m.eig_hermitian().unwrap();
            let sum: f64 = eig.eigenvalues.iter().sum();
            assert!((m.trace().re - sum).abs() <= 1e-10);
            assert!(m.trace().im.abs() <= 1e-12);
        }
    }
}
