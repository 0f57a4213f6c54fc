//! Stabilizer-code encodings for adiabatic Hamiltonians.
//!
//! The crate turns an arbitrary 2-local spin Hamiltonian into a penalty-protected
//! Hamiltonian on code blocks: every logical qubit is replaced by a block of an
//! error-detecting stabilizer code, single-qubit operators are replaced by 2-local
//! (or 3-local) logical operators, and a stabilizer penalty term opens a constant
//! energy gap against leakage out of the codespace. Everything is verified by
//! exact dense linear algebra: eigendecomposition of the encoded operators,
//! exhaustive searches over candidate generator sets, and integration of a
//! thermal master equation that measures how fast the environment drives the
//! system out of the protected subspace.
//!
//! Organization:
//! - [`pauli`]: Pauli strings in symplectic form and weighted sums of them.
//! - [`stabilizer`]: code definitions, projectors, codewords, detection checks.
//! - [`encoding`]: the logical substitution plus penalty construction.
//! - [`spectral`]: dense diagonalization, interpolation schedules, gap tracking.
//! - [`dynamics`]: closed (Schrödinger) and open (master equation) evolution.
//! - [`search`]: optimality certificates from exhaustive enumeration.

pub mod dynamics;
pub mod encoding;
pub mod error;
pub mod gf2;
pub mod matrix;
pub mod pauli;
pub mod search;
pub mod spectral;
pub mod stabilizer;
pub mod tol;

pub use dynamics::{
    evolve_closed, evolve_open, leakage_suppression_report, lindblad_rhs, EvolutionResult,
    LeakageReport, LeakageRow, NoiseModel, SpectralDensity,
};
pub use encoding::{codespace_spectrum_match, encode, leakage_gap, EncodedHamiltonian};
pub use error::Error;
pub use pauli::{LogicalMap, Pauli, PauliString, PauliSum};
pub use search::{
    find_detecting_code, minimal_logical_locality, singleton_check, verify_no_3qubit_code,
    SearchCertificate,
};
pub use spectral::{
    classify_sectors, diagonalize, min_gap_along_path, GapPoint, Schedule, Spectrum,
};
pub use stabilizer::{
    codespace_projector, distance, extract_codewords, five_qubit_code, four_qubit_code,
    verify_detection, CodeReport, StabilizerCode,
};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
