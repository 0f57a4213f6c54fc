//! Exact diagonalization, degenerate-sector classification, and gap tracking
//! along interpolation schedules.
//!
//! Diagonalization is dense LAPACK under the hood; every returned
//! decomposition is validated against its own residuals before anyone gets to
//! use it. Sector classification answers "which eigenvectors live in the
//! codespace" even inside degenerate clusters, where the raw eigenvectors are
//! an arbitrary basis of the cluster: the cluster is rotated so each vector is
//! a clean eigenvector of the projector.

use crate::error::Error;
use crate::matrix;
use crate::pauli::PauliSum;
use crate::{tol, Result};
use ndarray::{s, Array1, Array2};
use ndarray_linalg::{EigValsh, Eigh, UPLO};
use num_complex::Complex64;
use rayon::prelude::*;

/// A validated eigendecomposition, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// Eigenvectors as columns, in eigenvalue order.
    pub eigenvectors: Array2<Complex64>,
    /// Set by [`classify_sectors`]: whether each eigenvector lies in the
    /// codespace.
    pub sector_flags: Option<Vec<bool>>,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn ground_energy(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Energy difference between the two lowest eigenvalues.
    pub fn gap(&self) -> f64 {
        self.eigenvalues[1] - self.eigenvalues[0]
    }

    /// Number of eigenvalues within the degeneracy tolerance of the lowest.
    pub fn ground_multiplicity(&self) -> usize {
        self.eigenvalues
            .iter()
            .take_while(|&&w| w - self.eigenvalues[0] <= tol::DEGENERACY_GROUPING)
            .count()
    }

    /// Lowest eigenvector. With a degenerate ground space this is one basis
    /// vector of it; use [`Spectrum::ground_projector`] when the choice
    /// matters.
    pub fn ground_state(&self) -> Array1<Complex64> {
        self.eigenvectors.column(0).to_owned()
    }

    /// Orthogonal projector onto the full ground eigenspace.
    pub fn ground_projector(&self) -> Array2<Complex64> {
        let g = self.ground_multiplicity();
        let basis = self.eigenvectors.slice(s![.., 0..g]);
        let mut proj = Array2::zeros((self.dim(), self.dim()));
        for col in basis.columns() {
            for r in 0..self.dim() {
                for c in 0..self.dim() {
                    proj[(r, c)] += col[r] * col[c].conj();
                }
            }
        }
        proj
    }
}

/// Eigendecomposition with the eigenvectors in columns.
///
/// The LAPACK binding reads a row-major Hermitian matrix as its transpose,
/// which for Hermitian input is the conjugate, so the raw eigenvectors come
/// back conjugated. The input is forced to row-major here and the output
/// conjugated back; [`diagonalize`] then validates the residuals of every
/// returned pair, so a change in the underlying convention cannot pass
/// silently.
pub(crate) fn eigh_columns(h: &Array2<Complex64>) -> Result<(Vec<f64>, Array2<Complex64>)> {
    let std_h = h.as_standard_layout();
    let (vals, vecs) = std_h
        .eigh(UPLO::Lower)
        .map_err(|e| Error::Numerical(format!("eigensolver failed: {e}")))?;
    Ok((vals.to_vec(), vecs.mapv(|v| v.conj())))
}

/// Full eigendecomposition of a Hermitian matrix, with the result checked:
/// each pair must satisfy `‖Hv − ωv‖ ≤ 1e-8` or the decomposition is
/// rejected as numerically unsound.
pub fn diagonalize(h: &Array2<Complex64>) -> Result<Spectrum> {
    if h.nrows() != h.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "cannot diagonalize a {:?} matrix",
            h.dim()
        )));
    }
    let herm = matrix::hermiticity_error(h);
    if herm > tol::HERMITICITY_DRIFT {
        return Err(Error::InvalidParameter(format!(
            "matrix is not Hermitian: max |H - H†| entry is {herm:.3e}"
        )));
    }
    let (vals, vecs) = eigh_columns(h)?;
    let hv = h.dot(&vecs);
    for (j, &w) in vals.iter().enumerate() {
        let residual: f64 = (0..h.nrows())
            .map(|r| (hv[(r, j)] - vecs[(r, j)] * w).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if residual > tol::EIGH_RESIDUAL {
            return Err(Error::Numerical(format!(
                "eigenpair {j} has residual {residual:.3e}"
            )));
        }
    }
    Ok(Spectrum {
        eigenvalues: vals,
        eigenvectors: vecs,
        sector_flags: None,
    })
}

/// Labels every eigenvector as inside or outside the subspace of
/// `projector`, rotating degenerate clusters so the labels are exact.
///
/// Within each cluster of eigenvalues closer than the degeneracy tolerance,
/// the projector is diagonalized on the cluster; its eigenvalues there must
/// be within `1e-6` of 0 or 1 (anything else means the projector does not
/// commute with the Hamiltonian and the question is ill-posed). Cluster
/// members are reordered in-subspace first, so ties resolve deterministically.
pub fn classify_sectors(spectrum: &mut Spectrum, projector: &Array2<Complex64>) -> Result<()> {
    let dim = spectrum.dim();
    if projector.dim() != (dim, dim) {
        return Err(Error::DimensionMismatch(format!(
            "projector is {:?}, spectrum dimension is {dim}",
            projector.dim()
        )));
    }
    let mut flags = vec![false; dim];
    let mut start = 0usize;
    while start < dim {
        let mut end = start + 1;
        while end < dim
            && spectrum.eigenvalues[end] - spectrum.eigenvalues[end - 1] <= tol::DEGENERACY_GROUPING
        {
            end += 1;
        }
        let cluster = spectrum.eigenvectors.slice(s![.., start..end]).to_owned();
        let pc = projector.dot(&cluster);
        let overlap = cluster.mapv(|v| v.conj()).t().dot(&pc);
        let (vals, rot) = eigh_columns(&overlap)?;
        for &v in vals.iter() {
            if v.min(1.0 - v).abs() > tol::SECTOR_AMBIGUITY {
                return Err(Error::Numerical(format!(
                    "projector expectation {v:.6} in a degenerate cluster is neither 0 nor 1; \
                     the projector does not commute with the Hamiltonian"
                )));
            }
        }
        // Ascending eigh puts out-of-subspace (≈0) first; emit in-subspace
        // vectors first instead.
        let mut order: Vec<usize> = (0..vals.len()).collect();
        order.sort_by(|&a, &b| vals[b].partial_cmp(&vals[a]).unwrap());
        let rotated = cluster.dot(&rot);
        for (slot, &src) in order.iter().enumerate() {
            spectrum
                .eigenvectors
                .slice_mut(s![.., start + slot])
                .assign(&rotated.column(src));
            flags[start + slot] = vals[src] > 0.5;
        }
        start = end;
    }
    spectrum.sector_flags = Some(flags);
    Ok(())
}

/// Linear interpolation between two Hamiltonians over a total evolution time.
#[derive(Debug, Clone)]
pub struct Schedule {
    h_start: PauliSum,
    h_end: PauliSum,
    total_time: f64,
}

impl Schedule {
    pub fn new(h_start: PauliSum, h_end: PauliSum, total_time: f64) -> Result<Schedule> {
        if h_start.num_qubits() != h_end.num_qubits() {
            return Err(Error::DimensionMismatch(format!(
                "endpoints act on {} and {} qubits",
                h_start.num_qubits(),
                h_end.num_qubits()
            )));
        }
        if !total_time.is_finite() || total_time <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "total evolution time must be positive, got {total_time}"
            )));
        }
        Ok(Schedule {
            h_start,
            h_end,
            total_time,
        })
    }

    pub fn h_start(&self) -> &PauliSum {
        &self.h_start
    }

    pub fn h_end(&self) -> &PauliSum {
        &self.h_end
    }

    pub fn num_qubits(&self) -> usize {
        self.h_start.num_qubits()
    }

    pub fn total_time(&self) -> f64 {
        self.total_time
    }

    /// A schedule whose endpoints coincide describes a static Hamiltonian.
    pub fn is_static(&self) -> bool {
        self.h_start == self.h_end
    }

    /// `(1−s) H_start + s H_end` as an operator sum.
    pub fn hamiltonian_at(&self, s: f64) -> Result<PauliSum> {
        let mut h = PauliSum::new(self.num_qubits())?;
        h.add_scaled(1.0 - s, &self.h_start)?;
        h.add_scaled(s, &self.h_end)?;
        Ok(h)
    }

    /// Dense endpoint matrices, built once so path sweeps and integrators
    /// can interpolate with a linear combination per point.
    pub fn endpoint_matrices(&self) -> Result<(Array2<Complex64>, Array2<Complex64>)> {
        Ok((self.h_start.to_matrix()?, self.h_end.to_matrix()?))
    }

    /// As [`Schedule::endpoint_matrices`] with an explicit qubit cap.
    pub fn endpoint_matrices_with_limit(
        &self,
        limit: usize,
    ) -> Result<(Array2<Complex64>, Array2<Complex64>)> {
        Ok((
            self.h_start.to_matrix_with_limit(limit)?,
            self.h_end.to_matrix_with_limit(limit)?,
        ))
    }

    /// Largest coefficient 1-norm along the path, an upper bound on ‖H(s)‖
    /// used for step-size control.
    pub fn norm_bound(&self) -> f64 {
        self.h_start.coeff_norm().max(self.h_end.coeff_norm())
    }
}

/// One sampled point of a gap sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct GapPoint {
    pub s: f64,
    pub omega_0: f64,
    pub omega_1: f64,
    /// Difference of the two lowest eigenvalues of the full Hamiltonian.
    pub gap: f64,
    /// Same difference after restricting to the codespace basis, when one
    /// was supplied.
    pub gap_in_codespace: Option<f64>,
}

/// Sweeps `s` over a uniform grid of `samples ≥ 2` points including both
/// endpoints, recording the low end of the spectrum at each. When a
/// codespace basis (orthonormal columns) is given, the spectrum of the
/// restricted Hamiltonian is tracked alongside, and the returned minimum is
/// the minimum restricted gap; otherwise it is the minimum full gap.
pub fn min_gap_along_path(
    schedule: &Schedule,
    samples: usize,
    codespace_basis: Option<&Array2<Complex64>>,
) -> Result<(f64, Vec<GapPoint>)> {
    if samples < 2 {
        return Err(Error::InvalidParameter(format!(
            "gap sweep needs at least 2 samples, got {samples}"
        )));
    }
    let (m0, m1) = schedule.endpoint_matrices()?;
    let restricted = match codespace_basis {
        Some(basis) => {
            if basis.ncols() < 2 {
                return Err(Error::InvalidParameter(
                    "codespace basis has fewer than 2 columns; no gap is defined there".into(),
                ));
            }
            Some((matrix::restrict(&m0, basis)?, matrix::restrict(&m1, basis)?))
        }
        None => None,
    };

    let rows: Vec<Result<GapPoint>> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let s = i as f64 / (samples - 1) as f64;
            let h = matrix::lincomb(1.0 - s, &m0, s, &m1);
            let vals = h
                .eigvalsh(UPLO::Lower)
                .map_err(|e| Error::Numerical(format!("eigensolver failed at s={s}: {e}")))?;
            let gap_in_codespace = match &restricted {
                Some((r0, r1)) => {
                    let hr = matrix::lincomb(1.0 - s, r0, s, r1);
                    let rvals = hr.eigvalsh(UPLO::Lower).map_err(|e| {
                        Error::Numerical(format!("restricted eigensolver failed at s={s}: {e}"))
                    })?;
                    Some(rvals[1] - rvals[0])
                }
                None => None,
            };
            Ok(GapPoint {
                s,
                omega_0: vals[0],
                omega_1: vals[1],
                gap: vals[1] - vals[0],
                gap_in_codespace,
            })
        })
        .collect();
    let rows: Vec<GapPoint> = rows.into_iter().collect::<Result<_>>()?;
    let min = rows
        .iter()
        .map(|r| r.gap_in_codespace.unwrap_or(r.gap))
        .fold(f64::INFINITY, f64::min);
    Ok((min, rows))
}
