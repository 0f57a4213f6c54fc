//! The penalty-protected encoding of a spin Hamiltonian.
//!
//! Each qubit of the input becomes one block of a stabilizer code. Every
//! single-qubit operator in the input is rewritten as the corresponding
//! logical operator on its block, which preserves the algebra and therefore
//! the spectrum on the codespace; the generators of every block then enter
//! as a penalty term `−E_p Σ G` that pushes everything outside the joint
//! codespace up by at least twice the penalty weight. Because logical
//! operators commute with every generator, the rewritten Hamiltonian and the
//! penalty commute exactly, and the encoded spectrum restricted to the
//! codespace reproduces the input spectrum shifted by the constant penalty
//! energy.

use crate::error::Error;
use crate::matrix;
use crate::pauli::{PauliString, PauliSum};
use crate::spectral::{classify_sectors, diagonalize};
use crate::stabilizer::{extract_codewords, StabilizerCode};
use crate::Result;
use ndarray::{Array1, Array2};
use num_complex::Complex64;

/// A Hamiltonian rewritten over code blocks, with its penalty term.
#[derive(Debug, Clone)]
pub struct EncodedHamiltonian {
    code: StabilizerCode,
    num_blocks: usize,
    penalty_weight: f64,
    logical: PauliSum,
    penalty: PauliSum,
    total: PauliSum,
}

/// Encodes `h` with one code block per input qubit and a penalty of weight
/// `penalty_weight > 0` on every generator of every block.
pub fn encode(
    h: &PauliSum,
    code: &StabilizerCode,
    penalty_weight: f64,
) -> Result<EncodedHamiltonian> {
    if !penalty_weight.is_finite() || penalty_weight <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "penalty weight must be positive, got {penalty_weight}"
        )));
    }
    build(h, code, penalty_weight)
}

/// As [`encode`] but also accepts a zero penalty, which the leakage-rate
/// reports use as their unprotected baseline.
pub(crate) fn build(
    h: &PauliSum,
    code: &StabilizerCode,
    penalty_weight: f64,
) -> Result<EncodedHamiltonian> {
    if !penalty_weight.is_finite() || penalty_weight < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "penalty weight must be nonnegative, got {penalty_weight}"
        )));
    }
    let num_blocks = h.num_qubits();
    let m = code.num_qubits();
    let logical = h.substitute(&code.logical_map())?;
    let total_qubits = logical.num_qubits();

    let mut penalty = PauliSum::new(total_qubits)?;
    for block in 0..num_blocks {
        for g in code.generators() {
            let shifted = PauliString::from_masks(
                total_qubits,
                g.x_mask() << (block * m),
                g.z_mask() << (block * m),
            )?;
            let sign = g
                .hermitian_sign()
                .expect("validated generators are Hermitian");
            penalty.add_term(-penalty_weight * sign, shifted)?;
        }
    }

    let mut total = logical.clone();
    total.add_scaled(1.0, &penalty)?;
    Ok(EncodedHamiltonian {
        code: code.clone(),
        num_blocks,
        penalty_weight,
        logical,
        penalty,
        total,
    })
}

impl EncodedHamiltonian {
    pub fn code(&self) -> &StabilizerCode {
        &self.code
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    pub fn num_physical_qubits(&self) -> usize {
        self.total.num_qubits()
    }

    pub fn penalty_weight(&self) -> f64 {
        self.penalty_weight
    }

    /// The rewritten Hamiltonian alone.
    pub fn logical_part(&self) -> &PauliSum {
        &self.logical
    }

    /// The penalty term alone, weight included.
    pub fn penalty_part(&self) -> &PauliSum {
        &self.penalty
    }

    /// Logical part plus penalty; the operator everything downstream uses.
    pub fn total(&self) -> &PauliSum {
        &self.total
    }

    /// Codespace energy of the penalty: every generator of every block
    /// contributes `−E_p` there, so the encoded codespace spectrum is the
    /// input spectrum shifted by this constant.
    pub fn energy_offset(&self) -> f64 {
        -self.penalty_weight * (self.code.generators().len() * self.num_blocks) as f64
    }

    /// Orthonormal basis of the joint codespace: one column per logical
    /// basis state, built as tensor products of block codewords. Column
    /// order matches the computational basis of the input Hamiltonian.
    pub fn codespace_basis(&self) -> Result<Array2<Complex64>> {
        matrix::check_matrix_qubits(self.num_physical_qubits(), matrix::DEFAULT_MATRIX_QUBITS)?;
        let (zero, one) = extract_codewords(&self.code)?;
        let dim = 1usize << self.num_physical_qubits();
        let logical_dim = 1usize << self.num_blocks;
        let mut basis = Array2::zeros((dim, logical_dim));
        for l in 0..logical_dim {
            let mut column = Array1::from_elem(1, Complex64::new(1.0, 0.0));
            for block in 0..self.num_blocks {
                let bit = l >> (self.num_blocks - 1 - block) & 1;
                let word = if bit == 0 { &zero } else { &one };
                column = kron_vec(&column, word);
            }
            basis.column_mut(l).assign(&column);
        }
        Ok(basis)
    }

    /// Projector onto the joint codespace, `B B†`.
    pub fn codespace_projector(&self) -> Result<Array2<Complex64>> {
        let basis = self.codespace_basis()?;
        let dim = basis.nrows();
        let mut proj = Array2::zeros((dim, dim));
        for col in basis.columns() {
            for r in 0..dim {
                for c in 0..dim {
                    proj[(r, c)] += col[r] * col[c].conj();
                }
            }
        }
        Ok(proj)
    }
}

fn kron_vec(a: &Array1<Complex64>, b: &Array1<Complex64>) -> Array1<Complex64> {
    let mut out = Array1::zeros(a.len() * b.len());
    for (i, &av) in a.iter().enumerate() {
        for (j, &bv) in b.iter().enumerate() {
            out[i * b.len() + j] = av * bv;
        }
    }
    out
}

/// Largest deviation between the encoded spectrum restricted to the
/// codespace and the bare spectrum shifted by the penalty offset, both in
/// ascending order. Zero up to solver accuracy when the encoding is correct.
pub fn codespace_spectrum_match(encoded: &EncodedHamiltonian, bare: &PauliSum) -> Result<f64> {
    if bare.num_qubits() != encoded.num_blocks() {
        return Err(Error::DimensionMismatch(format!(
            "bare Hamiltonian has {} qubits, encoding has {} blocks",
            bare.num_qubits(),
            encoded.num_blocks()
        )));
    }
    let basis = encoded.codespace_basis()?;
    let restricted = matrix::restrict(&encoded.total().to_matrix()?, &basis)?;
    let inside = diagonalize(&restricted)?;
    let reference = diagonalize(&bare.to_matrix()?)?;
    let offset = encoded.energy_offset();
    let worst = inside
        .eigenvalues
        .iter()
        .zip(reference.eigenvalues.iter())
        .map(|(got, want)| (got - (want + offset)).abs())
        .fold(0.0f64, f64::max);
    Ok(worst)
}

/// Energy cost of leaving the codespace: the lowest eigenvalue among
/// eigenstates outside the codespace minus the lowest inside. The penalty
/// construction makes this exactly twice the penalty weight, independent of
/// the input Hamiltonian.
pub fn leakage_gap(encoded: &EncodedHamiltonian) -> Result<f64> {
    let mut spectrum = diagonalize(&encoded.total().to_matrix()?)?;
    classify_sectors(&mut spectrum, &encoded.codespace_projector()?)?;
    let flags = spectrum.sector_flags.as_ref().expect("classified above");
    let mut inside = f64::INFINITY;
    let mut outside = f64::INFINITY;
    for (w, &in_code) in spectrum.eigenvalues.iter().zip(flags.iter()) {
        if in_code {
            inside = inside.min(*w);
        } else {
            outside = outside.min(*w);
        }
    }
    if !inside.is_finite() || !outside.is_finite() {
        return Err(Error::Numerical(
            "classification produced an empty sector".into(),
        ));
    }
    Ok(outside - inside)
}
