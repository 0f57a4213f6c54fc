//! Dense complex-matrix helpers shared by the spectral and dynamics code.
//!
//! Everything downstream of exact diagonalization works on `Array2<Complex64>`
//! in the computational basis with qubit 0 as the most significant index bit.
//! The helpers here are thin; the point of the module is to keep dimension
//! guards and norm conventions in one place.

use crate::error::Error;
use crate::Result;
use ndarray::{Array1, Array2};
use num_complex::Complex64;

/// Largest qubit count the dense paths accept by default (a 16384² complex
/// matrix, 4 GiB for one copy being the practical ceiling).
pub const DEFAULT_MATRIX_QUBITS: usize = 14;

/// Default cap for density-matrix evolution, which holds several dim² arrays
/// and diagonalizes repeatedly.
pub const DEFAULT_OPEN_SYSTEM_QUBITS: usize = 10;

/// Guard used by every dense entry point.
pub fn check_matrix_qubits(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::ResourceLimit(format!(
            "{n} qubits exceeds the dense-matrix limit of {limit}; raise the limit explicitly if the memory is available"
        )));
    }
    Ok(())
}

/// Largest |entry| of a matrix.
pub fn max_abs_entry(m: &Array2<Complex64>) -> f64 {
    m.iter().fold(0.0f64, |acc, v| acc.max(v.norm()))
}

/// Largest |M[i,j] − conj(M[j,i])|; zero for an exactly Hermitian matrix.
pub fn hermiticity_error(m: &Array2<Complex64>) -> f64 {
    let dim = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..dim {
        for j in i..dim {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Largest |entry| of AB − BA.
pub fn commutator_max_entry(a: &Array2<Complex64>, b: &Array2<Complex64>) -> Result<f64> {
    if a.dim() != b.dim() || a.nrows() != a.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "commutator of {:?} and {:?} matrices",
            a.dim(),
            b.dim()
        )));
    }
    let comm = a.dot(b) - b.dot(a);
    Ok(max_abs_entry(&comm))
}

/// `alpha·A + beta·B` for real weights, used to assemble interpolated
/// Hamiltonians from precomputed endpoint matrices.
pub fn lincomb(
    alpha: f64,
    a: &Array2<Complex64>,
    beta: f64,
    b: &Array2<Complex64>,
) -> Array2<Complex64> {
    let mut out = a.mapv(|v| v * alpha);
    out.scaled_add(Complex64::new(beta, 0.0), b);
    out
}

/// `B† M B` for a (dim × r) basis matrix `B` with orthonormal columns:
/// the operator restricted to the subspace the columns span.
pub fn restrict(m: &Array2<Complex64>, basis: &Array2<Complex64>) -> Result<Array2<Complex64>> {
    if m.ncols() != basis.nrows() || m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "cannot restrict a {:?} matrix by a {:?} basis",
            m.dim(),
            basis.dim()
        )));
    }
    let mb = m.dot(basis);
    Ok(basis.mapv(|v| v.conj()).t().dot(&mb))
}

/// ⟨u|v⟩ with the conjugate on the left argument.
pub fn inner(u: &Array1<Complex64>, v: &Array1<Complex64>) -> Complex64 {
    u.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum()
}

/// Euclidean norm of a state vector.
pub fn vector_norm(v: &Array1<Complex64>) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}
