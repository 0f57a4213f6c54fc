//! Closed (Schrödinger) and open (thermal master equation) time evolution.
//!
//! The open-system model couples every qubit to an independent bath at
//! inverse temperature β through its raising and lowering operators. In the
//! energy eigenbasis the generator is Davies-style: a transition between
//! eigenstates `a → b` carries the rate
//!
//! `2 λ² g(Δ)² |⟨b|σ₋ or σ₊|a⟩|² × N(βΔ)` going up in energy and
//! `… × (N(βΔ) + 1)` coming down, with `N(x) = 1/(eˣ − 1)` and `g` the bath
//! spectral amplitude at the transition energy.
//!
//! Upward and downward rates between the same pair differ by exactly the
//! Boltzmann factor, so the Gibbs state of the Hamiltonian is stationary;
//! the integrator preserves the trace identically because gain and loss
//! terms cancel in the trace by construction, not by renormalization.
//!
//! Populations and coherences decouple: coherences decay at the mean of the
//! total outflow rates of their two indices, so one right-hand side
//! evaluation is O(dim²) once the rates are assembled.

use crate::encoding;
use crate::error::Error;
use crate::matrix;
use crate::pauli::PauliSum;
use crate::spectral::{classify_sectors, diagonalize, Schedule, Spectrum};
use crate::stabilizer::StabilizerCode;
use crate::{tol, Result};
use ndarray::{Array1, Array2};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Bath spectral amplitude as a function of transition energy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectralDensity {
    /// `g(ω) = g₀`.
    Constant,
    /// `g(ω) = g₀ √ω`.
    Ohmic,
}

impl SpectralDensity {
    fn amplitude(self, omega: f64, g0: f64) -> f64 {
        match self {
            SpectralDensity::Constant => g0,
            SpectralDensity::Ohmic => g0 * omega.sqrt(),
        }
    }
}

/// Bath parameters for the thermal master equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoiseModel {
    /// Inverse temperature β.
    pub beta: f64,
    /// System–bath coupling λ; zero turns the dissipator off.
    pub lambda: f64,
    pub spectral_density: SpectralDensity,
    /// Overall amplitude g₀ of the spectral density.
    pub g0: f64,
}

impl NoiseModel {
    pub fn new(
        beta: f64,
        lambda: f64,
        spectral_density: SpectralDensity,
        g0: f64,
    ) -> Result<NoiseModel> {
        let model = NoiseModel {
            beta,
            lambda,
            spectral_density,
            g0,
        };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.beta.is_finite() || self.beta <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "inverse temperature must be positive, got {}",
                self.beta
            )));
        }
        if !self.lambda.is_finite() || self.lambda < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "coupling must be nonnegative, got {}",
                self.lambda
            )));
        }
        if !self.g0.is_finite() || self.g0 < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "spectral amplitude must be nonnegative, got {}",
                self.g0
            )));
        }
        Ok(())
    }

    fn is_dissipative(&self) -> bool {
        self.lambda > 0.0 && self.g0 > 0.0
    }
}

/// `N(x) = 1/(eˣ − 1)` for `x > 0`; underflows cleanly to 0 for large `x`.
fn bose_occupation(x: f64) -> f64 {
    1.0 / x.exp_m1()
}

/// Dissipative generator of one fixed Hamiltonian, held in its eigenbasis.
pub(crate) struct ThermalGenerator {
    dim: usize,
    eigenvalues: Vec<f64>,
    eigenvectors: Array2<Complex64>,
    /// `rates[(a, b)]` is half the population transfer rate `a → b`.
    rates: Array2<f64>,
    /// Total outflow `Σ_b rates[(a, b)]` per state.
    outflow: Vec<f64>,
    dissipative: bool,
}

impl ThermalGenerator {
    /// Builds the generator from an eigendecomposition of the Hamiltonian.
    /// Any orthonormal eigenbasis works; degenerate rotations change matrix
    /// elements but not sector-summed rates.
    pub(crate) fn from_spectrum(
        spectrum: &Spectrum,
        noise: &NoiseModel,
    ) -> Result<ThermalGenerator> {
        noise.validate()?;
        let dim = spectrum.dim();
        let n = dim.trailing_zeros() as usize;
        if 1usize << n != dim {
            return Err(Error::DimensionMismatch(format!(
                "dimension {dim} is not a power of two"
            )));
        }
        let mut rates = Array2::zeros((dim, dim));
        let dissipative = noise.is_dissipative();
        if dissipative {
            // couplings[(b, a)] = Σ_i |⟨b|σ₊⁽ⁱ⁾|a⟩|², σ₊ = |0⟩⟨1| per qubit.
            let mut couplings: Array2<f64> = Array2::zeros((dim, dim));
            let vdag = spectrum.eigenvectors.mapv(|v| v.conj()).t().to_owned();
            for qubit in 0..n {
                let bit = 1usize << (n - 1 - qubit);
                let mut sv: Array2<Complex64> = Array2::zeros((dim, dim));
                for r in 0..dim {
                    if r & bit == 0 {
                        sv.row_mut(r).assign(&spectrum.eigenvectors.row(r | bit));
                    }
                }
                let a = vdag.dot(&sv);
                for r in 0..dim {
                    for c in 0..dim {
                        couplings[(r, c)] += a[(r, c)].norm_sqr();
                    }
                }
            }
            let lam_sq = noise.lambda * noise.lambda;
            for a in 0..dim {
                for b in 0..dim {
                    let up = spectrum.eigenvalues[b] - spectrum.eigenvalues[a];
                    let rate = if up > tol::ENERGY_DEGENERACY {
                        let g = noise.spectral_density.amplitude(up, noise.g0);
                        bose_occupation(noise.beta * up) * lam_sq * g * g * couplings[(b, a)]
                    } else if -up > tol::ENERGY_DEGENERACY {
                        let down = -up;
                        let g = noise.spectral_density.amplitude(down, noise.g0);
                        (bose_occupation(noise.beta * down) + 1.0)
                            * lam_sq
                            * g
                            * g
                            * couplings[(a, b)]
                    } else {
                        0.0
                    };
                    rates[(a, b)] = rate;
                }
            }
        }
        let outflow = (0..dim)
            .map(|a| (0..dim).map(|b| rates[(a, b)]).sum())
            .collect();
        Ok(ThermalGenerator {
            dim,
            eigenvalues: spectrum.eigenvalues.clone(),
            eigenvectors: spectrum.eigenvectors.clone(),
            rates,
            outflow,
            dissipative,
        })
    }

    /// Right-hand side in the eigenbasis representation.
    fn rhs_tilde(&self, rt: &Array2<Complex64>) -> Array2<Complex64> {
        let dim = self.dim;
        let mut out = Array2::zeros((dim, dim));
        for j in 0..dim {
            for k in 0..dim {
                let factor = Complex64::new(
                    -(self.outflow[j] + self.outflow[k]),
                    -(self.eigenvalues[j] - self.eigenvalues[k]),
                );
                out[(j, k)] = factor * rt[(j, k)];
            }
        }
        if self.dissipative {
            for j in 0..dim {
                let gain: f64 = (0..dim)
                    .map(|a| 2.0 * self.rates[(a, j)] * rt[(a, a)].re)
                    .sum();
                out[(j, j)] += Complex64::new(gain, 0.0);
            }
        }
        out
    }

    fn to_eigenbasis(&self, rho: &Array2<Complex64>) -> Array2<Complex64> {
        let vr = rho.dot(&self.eigenvectors);
        self.eigenvectors.mapv(|v| v.conj()).t().dot(&vr)
    }

    fn to_computational(&self, rt: &Array2<Complex64>) -> Array2<Complex64> {
        let vr = rt.dot(&self.eigenvectors.mapv(|v| v.conj()).t());
        self.eigenvectors.dot(&vr)
    }
}

/// One right-hand side of the master equation, `dρ/dt` at fixed `h`.
///
/// Diagonalizes `h` on every call; the integrators cache the decomposition
/// instead, so treat this as the reference implementation for checks and
/// single evaluations.
pub fn lindblad_rhs(
    h: &Array2<Complex64>,
    rho: &Array2<Complex64>,
    noise: &NoiseModel,
) -> Result<Array2<Complex64>> {
    if h.dim() != rho.dim() {
        return Err(Error::DimensionMismatch(format!(
            "Hamiltonian is {:?}, state is {:?}",
            h.dim(),
            rho.dim()
        )));
    }
    let spectrum = diagonalize(h)?;
    let gen = ThermalGenerator::from_spectrum(&spectrum, noise)?;
    let rt = gen.to_eigenbasis(rho);
    Ok(gen.to_computational(&gen.rhs_tilde(&rt)))
}

/// Time series of the quantities every evolution records.
#[derive(Debug, Clone)]
pub struct EvolutionResult {
    pub times: Vec<f64>,
    /// Overlap with the instantaneous ground eigenspace.
    pub ground_fidelity: Vec<f64>,
    /// Weight inside the codespace; 1 everywhere when no projector is given.
    pub codespace_population: Vec<f64>,
    /// |‖ψ‖ − 1| for closed runs, |tr ρ − 1| for open runs.
    pub trace_error: Vec<f64>,
    /// Step size actually used after rounding to an integer step count.
    pub dt: f64,
    pub steps: usize,
}

impl EvolutionResult {
    pub fn final_ground_fidelity(&self) -> f64 {
        *self
            .ground_fidelity
            .last()
            .expect("at least the initial row")
    }
}

fn resolve_steps(
    total_time: f64,
    norm_bound: f64,
    dt: Option<f64>,
    factor: f64,
) -> Result<(f64, usize)> {
    let dt_raw = match dt {
        Some(v) => {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "step size must be positive, got {v}"
                )));
            }
            v.min(total_time)
        }
        None => {
            let cap = if norm_bound > 0.0 {
                factor / norm_bound
            } else {
                f64::INFINITY
            };
            cap.min(total_time / 100.0)
        }
    };
    let steps = (total_time / dt_raw).ceil().max(1.0) as usize;
    Ok((total_time / steps as f64, steps))
}

fn record_stride(steps: usize) -> usize {
    steps.div_ceil(500).max(1)
}

/// Overlap of a pure state with the ground eigenspace of `spectrum`.
fn ground_weight_state(spectrum: &Spectrum, psi: &Array1<Complex64>) -> f64 {
    let g = spectrum.ground_multiplicity();
    (0..g)
        .map(|j| {
            let col = spectrum.eigenvectors.column(j);
            let overlap: Complex64 = col.iter().zip(psi.iter()).map(|(v, p)| v.conj() * p).sum();
            overlap.norm_sqr()
        })
        .sum()
}

/// `tr(P_g ρ)` for the ground eigenspace of `spectrum`.
fn ground_weight_density(spectrum: &Spectrum, rho: &Array2<Complex64>) -> f64 {
    let g = spectrum.ground_multiplicity();
    let mut acc = 0.0;
    for j in 0..g {
        let col = spectrum.eigenvectors.column(j);
        let mut quad = Complex64::new(0.0, 0.0);
        for r in 0..rho.nrows() {
            let mut row_dot = Complex64::new(0.0, 0.0);
            for c in 0..rho.ncols() {
                row_dot += rho[(r, c)] * col[c];
            }
            quad += col[r].conj() * row_dot;
        }
        acc += quad.re;
    }
    acc
}

fn expectation(rho_or_proj: &Array2<Complex64>, psi: &Array1<Complex64>) -> f64 {
    let applied = rho_or_proj.dot(psi);
    matrix::inner(psi, &applied).re
}

fn trace(m: &Array2<Complex64>) -> Complex64 {
    (0..m.nrows()).map(|i| m[(i, i)]).sum()
}

/// Integrates the Schrödinger equation along `schedule` with fixed-step
/// RK4, starting from the ground state of the initial Hamiltonian.
///
/// The default step keeps `‖H‖ dt ≤ 0.02`, tight enough that the norm drift
/// of the non-unitary one-step map stays below 1e-8 over long sweeps; the
/// run fails rather than returning silently drifted amplitudes.
pub fn evolve_closed(
    schedule: &Schedule,
    dt: Option<f64>,
    codespace: Option<&Array2<Complex64>>,
    qubit_limit: usize,
) -> Result<EvolutionResult> {
    matrix::check_matrix_qubits(schedule.num_qubits(), qubit_limit)?;
    let (m0, m1) = schedule.endpoint_matrices_with_limit(qubit_limit)?;
    let total_time = schedule.total_time();
    let (dt, steps) = resolve_steps(total_time, schedule.norm_bound(), dt, 0.02)?;
    let stride = record_stride(steps);

    let start_spectrum = diagonalize(&m0)?;
    let mut psi = start_spectrum.ground_state();
    let mut result = EvolutionResult {
        times: Vec::new(),
        ground_fidelity: Vec::new(),
        codespace_population: Vec::new(),
        trace_error: Vec::new(),
        dt,
        steps,
    };

    let h_at = |s: f64| matrix::lincomb(1.0 - s, &m0, s, &m1);
    let deriv = |hm: &Array2<Complex64>, v: &Array1<Complex64>| -> Array1<Complex64> {
        hm.dot(v).mapv(|x| x * Complex64::new(0.0, -1.0))
    };

    let record =
        |step: usize, psi: &Array1<Complex64>, result: &mut EvolutionResult| -> Result<()> {
            let t = step as f64 * dt;
            let spectrum = if step == 0 {
                None
            } else {
                Some(diagonalize(&h_at(t / total_time))?)
            };
            let spectrum = match &spectrum {
                Some(sp) => sp,
                None => &start_spectrum,
            };
            result.times.push(t);
            result
                .ground_fidelity
                .push(ground_weight_state(spectrum, psi));
            result
                .codespace_population
                .push(codespace.map_or(1.0, |p| expectation(p, psi)));
            result
                .trace_error
                .push((matrix::vector_norm(psi) - 1.0).abs());
            Ok(())
        };

    record(0, &psi, &mut result)?;
    let mut h_left = m0.clone();
    for step in 0..steps {
        let s_mid = (step as f64 + 0.5) / steps as f64;
        let s_right = (step as f64 + 1.0) / steps as f64;
        let h_mid = h_at(s_mid);
        let h_right = h_at(s_right);

        let k1 = deriv(&h_left, &psi);
        let half = Complex64::new(0.5 * dt, 0.0);
        let k2 = deriv(&h_mid, &(&psi + &k1.mapv(|v| v * half)));
        let k3 = deriv(&h_mid, &(&psi + &k2.mapv(|v| v * half)));
        let k4 = deriv(
            &h_right,
            &(&psi + &k3.mapv(|v| v * Complex64::new(dt, 0.0))),
        );
        let sixth = Complex64::new(dt / 6.0, 0.0);
        psi = &psi
            + &k1.mapv(|v| v * sixth)
            + k2.mapv(|v| v * sixth * 2.0)
            + k3.mapv(|v| v * sixth * 2.0)
            + k4.mapv(|v| v * sixth);

        let done = step + 1;
        if done % stride == 0 || done == steps {
            record(done, &psi, &mut result)?;
        }
        h_left = h_right;
    }

    let drift = (matrix::vector_norm(&psi) - 1.0).abs();
    if drift > tol::NORM_DRIFT {
        return Err(Error::Numerical(format!(
            "state norm drifted by {drift:.3e}; reduce the step size"
        )));
    }
    Ok(result)
}

/// Integrates the thermal master equation along `schedule` with fixed-step
/// RK4, starting from the (possibly degenerate) ground-space projector of
/// the initial Hamiltonian, normalized to unit trace.
///
/// Static schedules diagonalize once and integrate in the eigenbasis, where
/// one step is O(dim²). Interpolated schedules with a nonzero coupling
/// rebuild the generator at every stage, which costs a diagonalization each
/// time; with λ = 0 they skip straight to the commutator.
pub fn evolve_open(
    schedule: &Schedule,
    noise: &NoiseModel,
    dt: Option<f64>,
    codespace: Option<&Array2<Complex64>>,
    qubit_limit: usize,
) -> Result<EvolutionResult> {
    noise.validate()?;
    matrix::check_matrix_qubits(schedule.num_qubits(), qubit_limit)?;
    let (m0, m1) = schedule.endpoint_matrices_with_limit(qubit_limit)?;
    let total_time = schedule.total_time();
    let (dt, steps) = resolve_steps(total_time, schedule.norm_bound(), dt, 0.05)?;
    let stride = record_stride(steps);

    let start_spectrum = diagonalize(&m0)?;
    let g0_mult = start_spectrum.ground_multiplicity();
    let rho0 = start_spectrum
        .ground_projector()
        .mapv(|v| v / g0_mult as f64);

    let mut result = EvolutionResult {
        times: Vec::new(),
        ground_fidelity: Vec::new(),
        codespace_population: Vec::new(),
        trace_error: Vec::new(),
        dt,
        steps,
    };

    if schedule.is_static() {
        let gen = ThermalGenerator::from_spectrum(&start_spectrum, noise)?;
        let mut rt = gen.to_eigenbasis(&rho0);
        let codespace_tilde = codespace.map(|p| gen.to_eigenbasis(p));
        let record = |step: usize, rt: &Array2<Complex64>, result: &mut EvolutionResult| {
            let tr = trace(rt);
            result.times.push(step as f64 * dt);
            result
                .ground_fidelity
                .push((0..g0_mult).map(|j| rt[(j, j)].re).sum());
            result.codespace_population.push(match &codespace_tilde {
                Some(p) => trace(&p.dot(rt)).re,
                None => 1.0,
            });
            result
                .trace_error
                .push((tr.re - 1.0).abs().max(tr.im.abs()));
        };
        record(0, &rt, &mut result);
        for step in 0..steps {
            rk4_density(&mut rt, dt, |m| gen.rhs_tilde(m));
            let done = step + 1;
            if done % stride == 0 || done == steps {
                record(done, &rt, &mut result);
            }
        }
        let rho_final = gen.to_computational(&rt);
        check_density_health(&rho_final)?;
        return Ok(result);
    }

    let h_at = |s: f64| matrix::lincomb(1.0 - s, &m0, s, &m1);
    let rhs_at = |s: f64, rho: &Array2<Complex64>| -> Result<Array2<Complex64>> {
        if noise.is_dissipative() {
            lindblad_rhs(&h_at(s), rho, noise)
        } else {
            let h = h_at(s);
            let hr = h.dot(rho);
            let rh = rho.dot(&h);
            Ok((&hr - &rh).mapv(|v| v * Complex64::new(0.0, -1.0)))
        }
    };

    let mut rho = rho0;
    let record =
        |step: usize, rho: &Array2<Complex64>, result: &mut EvolutionResult| -> Result<()> {
            let t = step as f64 * dt;
            let spectrum = if step == 0 {
                None
            } else {
                Some(diagonalize(&h_at(t / total_time))?)
            };
            let spectrum = match &spectrum {
                Some(sp) => sp,
                None => &start_spectrum,
            };
            let tr = trace(rho);
            result.times.push(t);
            result
                .ground_fidelity
                .push(ground_weight_density(spectrum, rho));
            result.codespace_population.push(match codespace {
                Some(p) => trace(&p.dot(rho)).re,
                None => 1.0,
            });
            result
                .trace_error
                .push((tr.re - 1.0).abs().max(tr.im.abs()));
            Ok(())
        };
    record(0, &rho, &mut result)?;
    for step in 0..steps {
        let s_left = step as f64 / steps as f64;
        let s_mid = (step as f64 + 0.5) / steps as f64;
        let s_right = (step as f64 + 1.0) / steps as f64;
        let k1 = rhs_at(s_left, &rho)?;
        let half = Complex64::new(0.5 * dt, 0.0);
        let k2 = rhs_at(s_mid, &(&rho + &k1.mapv(|v| v * half)))?;
        let k3 = rhs_at(s_mid, &(&rho + &k2.mapv(|v| v * half)))?;
        let k4 = rhs_at(s_right, &(&rho + &k3.mapv(|v| v * Complex64::new(dt, 0.0))))?;
        let sixth = Complex64::new(dt / 6.0, 0.0);
        rho = &rho
            + &k1.mapv(|v| v * sixth)
            + k2.mapv(|v| v * sixth * 2.0)
            + k3.mapv(|v| v * sixth * 2.0)
            + k4.mapv(|v| v * sixth);
        let done = step + 1;
        if done % stride == 0 || done == steps {
            record(done, &rho, &mut result)?;
        }
    }
    check_density_health(&rho)?;
    Ok(result)
}

fn rk4_density<F>(rho: &mut Array2<Complex64>, dt: f64, rhs: F)
where
    F: Fn(&Array2<Complex64>) -> Array2<Complex64>,
{
    let k1 = rhs(rho);
    let half = Complex64::new(0.5 * dt, 0.0);
    let k2 = rhs(&(&*rho + &k1.mapv(|v| v * half)));
    let k3 = rhs(&(&*rho + &k2.mapv(|v| v * half)));
    let k4 = rhs(&(&*rho + &k3.mapv(|v| v * Complex64::new(dt, 0.0))));
    let sixth = Complex64::new(dt / 6.0, 0.0);
    *rho = &*rho
        + &k1.mapv(|v| v * sixth)
        + k2.mapv(|v| v * sixth * 2.0)
        + k3.mapv(|v| v * sixth * 2.0)
        + k4.mapv(|v| v * sixth);
}

fn check_density_health(rho: &Array2<Complex64>) -> Result<()> {
    let tr = trace(rho);
    let drift = (tr.re - 1.0).abs().max(tr.im.abs());
    if drift > tol::TRACE_DRIFT {
        return Err(Error::Numerical(format!(
            "density matrix trace drifted by {drift:.3e}"
        )));
    }
    let herm = matrix::hermiticity_error(rho);
    if herm > tol::HERMITICITY_DRIFT {
        return Err(Error::Numerical(format!(
            "density matrix hermiticity drifted by {herm:.3e}"
        )));
    }
    Ok(())
}

/// One penalty weight's worth of leakage analysis.
#[derive(Debug, Clone, Serialize)]
pub struct LeakageRow {
    pub penalty_weight: f64,
    /// Lowest eigenvalue outside the codespace minus lowest inside.
    pub leakage_gap: f64,
    /// `−d/dt tr(P_C ρ)` at `t = 0` from the maximally mixed codespace
    /// state: the total thermal outflow across the sector boundary.
    pub initial_leakage_rate: f64,
    /// `N(β · gap)` for comparison; absent when the gap is zero.
    pub bose_factor_at_gap: Option<f64>,
}

/// Initial thermal leakage rates of one encoded Hamiltonian across a range
/// of penalty weights.
#[derive(Debug, Clone, Serialize)]
pub struct LeakageReport {
    pub code: String,
    pub num_blocks: usize,
    pub beta: f64,
    pub rows: Vec<LeakageRow>,
}

/// Encodes `h` at every penalty weight in `penalty_weights` (zero allowed,
/// as the unprotected baseline) and computes the exact initial leakage rate
/// out of the codespace under `noise`, starting from the maximally mixed
/// codespace state. No integration is involved; the rate is the sector-sum
/// of the generator's transition rates.
pub fn leakage_suppression_report(
    h: &PauliSum,
    code: &StabilizerCode,
    penalty_weights: &[f64],
    noise: &NoiseModel,
    qubit_limit: usize,
) -> Result<LeakageReport> {
    noise.validate()?;
    if penalty_weights.is_empty() {
        return Err(Error::InvalidParameter(
            "no penalty weights requested".into(),
        ));
    }
    let rows: Vec<Result<LeakageRow>> = penalty_weights
        .par_iter()
        .map(|&ep| {
            let encoded = encoding::build(h, code, ep)?;
            matrix::check_matrix_qubits(encoded.num_physical_qubits(), qubit_limit)?;
            let hm = encoded.total().to_matrix_with_limit(qubit_limit)?;
            let mut spectrum = diagonalize(&hm)?;
            classify_sectors(&mut spectrum, &encoded.codespace_projector()?)?;
            let flags = spectrum.sector_flags.clone().expect("classified above");

            let mut inside = f64::INFINITY;
            let mut outside = f64::INFINITY;
            for (w, &in_code) in spectrum.eigenvalues.iter().zip(flags.iter()) {
                if in_code {
                    inside = inside.min(*w);
                } else {
                    outside = outside.min(*w);
                }
            }
            let gap = outside - inside;

            let gen = ThermalGenerator::from_spectrum(&spectrum, noise)?;
            let codespace_dim = flags.iter().filter(|&&f| f).count();
            let mut rate = 0.0;
            for (a, &a_in) in flags.iter().enumerate() {
                if !a_in {
                    continue;
                }
                for (b, &b_in) in flags.iter().enumerate() {
                    if !b_in {
                        rate += 2.0 * gen.rates[(a, b)] / codespace_dim as f64;
                    }
                }
            }
            let bose = if gap > tol::ENERGY_DEGENERACY {
                Some(bose_occupation(noise.beta * gap))
            } else {
                None
            };
            Ok(LeakageRow {
                penalty_weight: ep,
                leakage_gap: gap,
                initial_leakage_rate: rate,
                bose_factor_at_gap: bose,
            })
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(LeakageReport {
        code: code.name().to_string(),
        num_blocks: h.num_qubits(),
        beta: noise.beta,
        rows,
    })
}
