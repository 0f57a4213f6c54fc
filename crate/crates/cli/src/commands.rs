//! One function per subcommand. Each loads what it needs from the config,
//! runs the corresponding library routine under the resource limit, and
//! writes its artifacts into the output directory.

use crate::artifacts::{self, RunMeta, ScheduleMeta, TermCounts};
use crate::config::{self, ExperimentConfig, ScheduleConfig};
use crate::Failure;
use stabgap::matrix::{DEFAULT_MATRIX_QUBITS, DEFAULT_OPEN_SYSTEM_QUBITS};
use stabgap::stabilizer::CodeReport;
use stabgap::{
    classify_sectors, diagonalize, encode, evolve_closed, evolve_open, find_detecting_code,
    min_gap_along_path, singleton_check, verify_no_3qubit_code, EncodedHamiltonian, PauliSum,
    Schedule, StabilizerCode,
};
use std::fs;
use std::path::Path;

pub struct Ctx<'a> {
    pub config_path: Option<&'a Path>,
    pub out: &'a Path,
    pub matrix_limit: Option<usize>,
}

impl Ctx<'_> {
    fn limit(&self) -> usize {
        self.matrix_limit.unwrap_or(DEFAULT_MATRIX_QUBITS)
    }

    fn open_system_limit(&self) -> usize {
        self.matrix_limit.unwrap_or(DEFAULT_OPEN_SYSTEM_QUBITS)
    }

    fn ensure_out(&self) -> Result<(), Failure> {
        fs::create_dir_all(self.out)?;
        Ok(())
    }
}

/// `verify-code`: build the code (which already checks the group and
/// logical-frame algebra), print the full report, and fail if any
/// single-qubit error escapes detection.
pub fn verify_code(selector: &str) -> Result<(), Failure> {
    let code = config::resolve_selector(selector)?;
    let report = CodeReport::for_code(&code)?;
    let text = serde_json::to_string_pretty(&report)
        .map_err(|e| Failure::Numerical(format!("serializing report: {e}")))?;
    println!("{text}");
    if !report.all_single_errors_detected {
        return Err(Failure::Check(format!(
            "{}: an undetected single-qubit error exists (see the syndrome table above)",
            code.name()
        )));
    }
    Ok(())
}

/// `encode`: persist the physical Hamiltonian as reloadable text plus a
/// sidecar describing the encoding.
pub fn encode_cmd(ctx: &Ctx) -> Result<(), Failure> {
    let loaded = config::load(ctx.config_path)?;
    let h = loaded.config.hamiltonian()?;
    let (code, weight) = require_encoding(&loaded.config)?;
    let encoded = encode(&h, &code, weight)?;

    ctx.ensure_out()?;
    let text_path = ctx.out.join("encoded.txt");
    fs::write(&text_path, encoded.total().to_text())?;

    let mut meta = RunMeta::new(
        "encode",
        &loaded.sha256,
        encoded.num_physical_qubits(),
        ctx.limit(),
    );
    meta.code = Some(code);
    meta.penalty_weight = Some(weight);
    meta.num_blocks = Some(encoded.num_blocks());
    meta.energy_offset = Some(encoded.energy_offset());
    meta.max_locality = max_locality(encoded.total());
    meta.term_counts = Some(TermCounts {
        logical: encoded.logical_part().terms().len(),
        penalty: encoded.penalty_part().terms().len(),
        total: encoded.total().terms().len(),
    });
    artifacts::write_json(&ctx.out.join("encode_meta.json"), &meta)?;

    println!(
        "encoded {} logical qubit(s) into {} physical; wrote {}",
        h.num_qubits(),
        encoded.num_physical_qubits(),
        text_path.display()
    );
    Ok(())
}

/// `spectrum`: exact eigenvalues of the configured Hamiltonian, encoded
/// first when the config names a code, with each level flagged as inside or
/// outside the codespace.
pub fn spectrum(ctx: &Ctx) -> Result<(), Failure> {
    let loaded = config::load(ctx.config_path)?;
    let h = loaded.config.hamiltonian()?;
    let encoding = loaded.config.encoding()?;

    let mut meta = RunMeta::new("spectrum", &loaded.sha256, h.num_qubits(), ctx.limit());
    let spectrum = match &encoding {
        Some((code, weight)) => {
            let encoded = encode(&h, code, *weight)?;
            let matrix = encoded.total().to_matrix_with_limit(ctx.limit())?;
            let mut spectrum = diagonalize(&matrix)?;
            classify_sectors(&mut spectrum, &encoded.codespace_projector()?)?;
            meta.qubits = encoded.num_physical_qubits();
            meta.code = Some(code.clone());
            meta.penalty_weight = Some(*weight);
            meta.num_blocks = Some(encoded.num_blocks());
            meta.energy_offset = Some(encoded.energy_offset());
            spectrum
        }
        None => {
            let matrix = h.to_matrix_with_limit(ctx.limit())?;
            diagonalize(&matrix)?
        }
    };

    ctx.ensure_out()?;
    artifacts::write_spectrum_csv(&ctx.out.join("spectrum.csv"), &spectrum)?;
    artifacts::write_json(&ctx.out.join("spectrum_meta.json"), &meta)?;
    println!(
        "wrote {} level(s), ground energy {}",
        spectrum.dim(),
        spectrum.ground_energy()
    );
    Ok(())
}

/// `gap-path`: sample the spectral gap along the interpolation, tracking
/// the codespace-restricted gap as well when encoding is configured.
pub fn gap_path(ctx: &Ctx) -> Result<(), Failure> {
    let loaded = config::load(ctx.config_path)?;
    let sc = loaded.config.schedule()?;
    let samples = sc.samples.unwrap_or(101);
    let encoding = loaded.config.encoding()?;

    let mut meta = RunMeta::new("gap-path", &loaded.sha256, 0, ctx.limit());
    meta.samples = Some(samples);

    let (min_gap, points) = match &encoding {
        Some((code, weight)) => {
            let (schedule, e0) = encoded_schedule(sc, code, *weight)?;
            let basis = e0.codespace_basis()?;
            meta.qubits = e0.num_physical_qubits();
            meta.code = Some(code.clone());
            meta.penalty_weight = Some(*weight);
            meta.schedule = schedule_meta(&schedule);
            min_gap_along_path(&schedule, samples, Some(&basis))?
        }
        None => {
            let schedule = sc.build_bare()?;
            meta.qubits = schedule.num_qubits();
            meta.schedule = schedule_meta(&schedule);
            min_gap_along_path(&schedule, samples, None)?
        }
    };
    meta.min_gap = Some(min_gap);

    ctx.ensure_out()?;
    artifacts::write_gap_csv(&ctx.out.join("gap_path.csv"), &points)?;
    artifacts::write_json(&ctx.out.join("gap_path_meta.json"), &meta)?;
    println!("minimum gap {min_gap} over {samples} sample(s)");
    Ok(())
}

/// `evolve`: integrate the closed sweep and record the fidelity series.
pub fn evolve(ctx: &Ctx) -> Result<(), Failure> {
    let loaded = config::load(ctx.config_path)?;
    let sc = loaded.config.schedule()?;
    let encoding = loaded.config.encoding()?;

    let mut meta = RunMeta::new("evolve", &loaded.sha256, 0, ctx.limit());
    let result = match &encoding {
        Some((code, weight)) => {
            let (schedule, e0) = encoded_schedule(sc, code, *weight)?;
            let projector = e0.codespace_projector()?;
            meta.qubits = e0.num_physical_qubits();
            meta.code = Some(code.clone());
            meta.penalty_weight = Some(*weight);
            meta.schedule = schedule_meta(&schedule);
            evolve_closed(&schedule, sc.dt, Some(&projector), ctx.limit())?
        }
        None => {
            let schedule = sc.build_bare()?;
            meta.qubits = schedule.num_qubits();
            meta.schedule = schedule_meta(&schedule);
            evolve_closed(&schedule, sc.dt, None, ctx.limit())?
        }
    };
    meta.dt = Some(result.dt);
    meta.steps = Some(result.steps);

    ctx.ensure_out()?;
    artifacts::write_series_csv(&ctx.out.join("evolution.csv"), &result)?;
    artifacts::write_json(&ctx.out.join("evolution_meta.json"), &meta)?;
    println!(
        "integrated {} step(s) of size {}; final ground fidelity {}",
        result.steps,
        result.dt,
        result.final_ground_fidelity()
    );
    Ok(())
}

/// `master-eq`: the same sweep coupled to the thermal bath from the noise
/// section.
pub fn master_eq(ctx: &Ctx) -> Result<(), Failure> {
    let loaded = config::load(ctx.config_path)?;
    let sc = loaded.config.schedule()?;
    let noise = loaded.config.noise()?;
    let encoding = loaded.config.encoding()?;
    let limit = ctx.open_system_limit();

    let mut meta = RunMeta::new("master-eq", &loaded.sha256, 0, limit);
    meta.noise = Some(*noise);
    let result = match &encoding {
        Some((code, weight)) => {
            let (schedule, e0) = encoded_schedule(sc, code, *weight)?;
            let projector = e0.codespace_projector()?;
            meta.qubits = e0.num_physical_qubits();
            meta.code = Some(code.clone());
            meta.penalty_weight = Some(*weight);
            meta.schedule = schedule_meta(&schedule);
            evolve_open(&schedule, noise, sc.dt, Some(&projector), limit)?
        }
        None => {
            let schedule = sc.build_bare()?;
            meta.qubits = schedule.num_qubits();
            meta.schedule = schedule_meta(&schedule);
            evolve_open(&schedule, noise, sc.dt, None, limit)?
        }
    };
    meta.dt = Some(result.dt);
    meta.steps = Some(result.steps);

    ctx.ensure_out()?;
    artifacts::write_series_csv(&ctx.out.join("master_eq.csv"), &result)?;
    artifacts::write_json(&ctx.out.join("master_eq_meta.json"), &meta)?;
    println!(
        "integrated {} step(s) of size {}; final ground fidelity {}",
        result.steps,
        result.dt,
        result.final_ground_fidelity()
    );
    Ok(())
}

/// `search`: run an exhaustive-enumeration claim and write its certificate.
/// The exit status reflects whether the claim was confirmed.
pub fn search(
    ctx: &Ctx,
    claim: &str,
    qubits: Option<usize>,
    generators: Option<usize>,
) -> Result<(), Failure> {
    let certificate = match claim {
        "no-3qubit-code" => verify_no_3qubit_code(),
        "detecting-code" => {
            let n = qubits.ok_or_else(|| {
                Failure::Config("the detecting-code claim needs --qubits N".into())
            })?;
            find_detecting_code(n, generators.unwrap_or(n.saturating_sub(1)))?
        }
        other => {
            return Err(Failure::Config(format!(
                "unknown claim {other:?}; expected \"no-3qubit-code\" or \"detecting-code\""
            )))
        }
    };

    ctx.ensure_out()?;
    artifacts::write_json(&ctx.out.join("certificate.json"), &certificate)?;
    println!(
        "{}: {} after {} of {} candidate(s)",
        certificate.claim,
        if certificate.holds {
            "confirmed"
        } else {
            "refuted"
        },
        certificate.witnesses_checked,
        certificate.search_space_size
    );
    if !certificate.holds {
        return Err(Failure::Check(format!(
            "claim {:?} did not hold over the full enumeration",
            certificate.claim
        )));
    }
    Ok(())
}

/// `singleton`: evaluate n − k ≥ 2(d − 1); exit 0 only when the parameters
/// are admissible.
pub fn singleton(n: usize, k: usize, d: u32) -> Result<(), Failure> {
    let satisfied = singleton_check(n, k, d);
    println!("{{\"n\": {n}, \"k\": {k}, \"d\": {d}, \"satisfied\": {satisfied}}}");
    if !satisfied {
        return Err(Failure::Check(format!(
            "[[{n}, {k}, {d}]] violates n - k >= 2(d - 1)"
        )));
    }
    Ok(())
}

fn require_encoding(config: &ExperimentConfig) -> Result<(StabilizerCode, f64), Failure> {
    config.encoding()?.ok_or_else(|| {
        Failure::Config("this command needs \"code\" and \"penalty_weight\" in the config".into())
    })
}

/// Encodes both endpoints through the same code and penalty. The penalty
/// term is identical on both, so the interpolation stays penalty-protected
/// for every s.
fn encoded_schedule(
    sc: &ScheduleConfig,
    code: &StabilizerCode,
    weight: f64,
) -> Result<(Schedule, EncodedHamiltonian), Failure> {
    let (h0, h1) = sc.endpoints()?;
    let e0 = encode(&h0, code, weight)?;
    let e1 = encode(&h1, code, weight)?;
    let schedule = Schedule::new(e0.total().clone(), e1.total().clone(), sc.total_time)?;
    Ok((schedule, e0))
}

fn schedule_meta(schedule: &Schedule) -> Option<ScheduleMeta> {
    Some(ScheduleMeta {
        h_start: schedule.h_start().to_text(),
        h_end: schedule.h_end().to_text(),
        total_time: schedule.total_time(),
    })
}

fn max_locality(sum: &PauliSum) -> Option<u32> {
    sum.terms().iter().map(|(_, s)| s.weight()).max()
}
