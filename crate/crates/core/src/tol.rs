//! Numerical tolerances shared across the crate.
//!
//! Each constant documents why its magnitude is safe for the quantity it
//! guards. The exact-algebra checks sit far above accumulated rounding for
//! the matrix sizes this crate handles (dimension at most 2^14), while the
//! integrator bounds reflect the step-size defaults chosen in [`crate::dynamics`].

/// Identities that hold exactly in the algebra (commutators, codeword
/// orthogonality, logical action). Double-precision rounding through dense
/// products at dimension ≤ 2^14 stays below ~1e-12, so 1e-10 leaves margin.
pub const EXACT: f64 = 1e-10;

/// Agreement between a codespace-restricted spectrum and the original
/// spectrum plus the penalty offset. Two eigensolver calls each contribute
/// backward error ~1e-13 at these norms.
pub const SPECTRUM_MATCH: f64 = 1e-8;

/// Coefficients with magnitude at or below this are dropped when a Pauli sum
/// is put in canonical form.
pub const COEFF_PRUNE: f64 = 1e-12;

/// Residual allowed per eigenpair, ‖H v − ω v‖, when a diagonalization is
/// validated. LAPACK's backward error is ε·‖H‖; desk-scale norms keep that
/// under 1e-10, and degenerate-subspace rotation can widen it toward 1e-8.
pub const EIGH_RESIDUAL: f64 = 1e-8;

/// Width used to group numerically degenerate eigenvalues before rotating
/// eigenvectors into sector-pure combinations. Exact degeneracies split by
/// at most ε·‖H‖ ≪ 1e-8; distinct levels separated by more than this are
/// already sector-pure, so over-grouping is harmless.
pub const DEGENERACY_GROUPING: f64 = 1e-8;

/// After sector rotation every projector expectation must land within this
/// distance of 0 or 1; anything else means the operator does not commute
/// with the projector.
pub const SECTOR_AMBIGUITY: f64 = 1e-6;

/// Energy differences below this cutoff are treated as degenerate in the
/// master equation, where the thermal occupation factor diverges as the
/// transition energy goes to zero.
pub const ENERGY_DEGENERACY: f64 = 1e-9;

/// Allowed drift of ‖ψ‖ from 1 over a full closed-evolution run.
pub const NORM_DRIFT: f64 = 1e-8;

/// Allowed drift of Tr ρ from 1 over a full open-evolution run. The
/// dissipator is exactly traceless, so only rounding accumulates.
pub const TRACE_DRIFT: f64 = 1e-6;

/// Allowed ‖ρ − ρ†‖ during open evolution.
pub const HERMITICITY_DRIFT: f64 = 1e-8;
