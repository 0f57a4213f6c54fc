//! Artifact files: CSV series and JSON sidecars.
//!
//! Numbers are written with Rust's shortest-roundtrip float formatting, so
//! parsing an artifact back recovers bit-identical values, and rerunning a
//! command on the same config reproduces every file byte for byte. Each
//! writer here has a matching parser, used by the tests to hold that
//! promise in place.

use crate::Failure;
use serde::Serialize;
use stabgap::{EvolutionResult, GapPoint, NoiseModel, Spectrum, StabilizerCode};
use std::fs;
use std::path::Path;

pub const SPECTRUM_HEADER: &str = "index,eigenvalue,in_codespace";
pub const GAP_HEADER: &str = "s,omega_0,omega_1,gap,gap_in_codespace";
pub const SERIES_HEADER: &str = "t,ground_fidelity,codespace_population,trace_error";

/// Provenance sidecar written next to every data artifact. Field for field
/// it records what was actually run: the resolved code, the integrator's
/// final step size, and the hash of the config file that produced it.
/// Nothing here depends on when or where the run happened.
#[derive(Debug, Serialize)]
pub struct RunMeta {
    pub command: String,
    pub config_sha256: String,
    pub qubits: usize,
    pub matrix_limit: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub code: Option<StabilizerCode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub penalty_weight: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub num_blocks: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub energy_offset: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_locality: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub term_counts: Option<TermCounts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schedule: Option<ScheduleMeta>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub noise: Option<NoiseModel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dt: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_gap: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct TermCounts {
    pub logical: usize,
    pub penalty: usize,
    pub total: usize,
}

/// The interpolation that was integrated, with endpoints in the same text
/// form the config uses. For encoded runs these are the physical-register
/// Hamiltonians, not the configured logical ones.
#[derive(Debug, Serialize)]
pub struct ScheduleMeta {
    pub h_start: String,
    pub h_end: String,
    #[serde(rename = "T")]
    pub total_time: f64,
}

impl RunMeta {
    pub fn new(command: &str, config_sha256: &str, qubits: usize, matrix_limit: usize) -> RunMeta {
        RunMeta {
            command: command.to_string(),
            config_sha256: config_sha256.to_string(),
            qubits,
            matrix_limit,
            code: None,
            penalty_weight: None,
            num_blocks: None,
            energy_offset: None,
            max_locality: None,
            term_counts: None,
            schedule: None,
            noise: None,
            dt: None,
            steps: None,
            samples: None,
            min_gap: None,
        }
    }
}

pub fn write_json(path: &Path, value: &impl Serialize) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::Numerical(format!("serializing {}: {e}", path.display())))?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

pub fn write_spectrum_csv(path: &Path, spectrum: &Spectrum) -> Result<(), Failure> {
    let mut out = String::from(SPECTRUM_HEADER);
    out.push('\n');
    for (i, w) in spectrum.eigenvalues.iter().enumerate() {
        let flag = match &spectrum.sector_flags {
            Some(flags) => flags[i].to_string(),
            None => String::new(),
        };
        out.push_str(&format!("{i},{w},{flag}\n"));
    }
    fs::write(path, out)?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumRow {
    pub index: usize,
    pub eigenvalue: f64,
    pub in_codespace: Option<bool>,
}

pub fn parse_spectrum_csv(text: &str) -> Result<Vec<SpectrumRow>, Failure> {
    let mut lines = text.lines();
    expect_header(lines.next(), SPECTRUM_HEADER)?;
    lines
        .map(|line| {
            let f = fields(line, 3)?;
            Ok(SpectrumRow {
                index: f[0].parse().map_err(|_| bad_field(line, "index"))?,
                eigenvalue: parse_f64(f[1], line)?,
                in_codespace: match f[2] {
                    "" => None,
                    other => Some(other.parse().map_err(|_| bad_field(line, "flag"))?),
                },
            })
        })
        .collect()
}

pub fn write_gap_csv(path: &Path, points: &[GapPoint]) -> Result<(), Failure> {
    let mut out = String::from(GAP_HEADER);
    out.push('\n');
    for p in points {
        let restricted = match p.gap_in_codespace {
            Some(g) => g.to_string(),
            None => String::new(),
        };
        out.push_str(&format!(
            "{},{},{},{},{restricted}\n",
            p.s, p.omega_0, p.omega_1, p.gap
        ));
    }
    fs::write(path, out)?;
    Ok(())
}

pub fn parse_gap_csv(text: &str) -> Result<Vec<GapPoint>, Failure> {
    let mut lines = text.lines();
    expect_header(lines.next(), GAP_HEADER)?;
    lines
        .map(|line| {
            let f = fields(line, 5)?;
            Ok(GapPoint {
                s: parse_f64(f[0], line)?,
                omega_0: parse_f64(f[1], line)?,
                omega_1: parse_f64(f[2], line)?,
                gap: parse_f64(f[3], line)?,
                gap_in_codespace: match f[4] {
                    "" => None,
                    other => Some(parse_f64(other, line)?),
                },
            })
        })
        .collect()
}

pub fn write_series_csv(path: &Path, result: &EvolutionResult) -> Result<(), Failure> {
    let mut out = String::from(SERIES_HEADER);
    out.push('\n');
    for (i, t) in result.times.iter().enumerate() {
        out.push_str(&format!(
            "{t},{},{},{}\n",
            result.ground_fidelity[i], result.codespace_population[i], result.trace_error[i]
        ));
    }
    fs::write(path, out)?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesRow {
    pub t: f64,
    pub ground_fidelity: f64,
    pub codespace_population: f64,
    pub trace_error: f64,
}

pub fn parse_series_csv(text: &str) -> Result<Vec<SeriesRow>, Failure> {
    let mut lines = text.lines();
    expect_header(lines.next(), SERIES_HEADER)?;
    lines
        .map(|line| {
            let f = fields(line, 4)?;
            Ok(SeriesRow {
                t: parse_f64(f[0], line)?,
                ground_fidelity: parse_f64(f[1], line)?,
                codespace_population: parse_f64(f[2], line)?,
                trace_error: parse_f64(f[3], line)?,
            })
        })
        .collect()
}

fn expect_header(line: Option<&str>, expected: &str) -> Result<(), Failure> {
    match line {
        Some(h) if h == expected => Ok(()),
        other => Err(Failure::Config(format!(
            "expected header {expected:?}, found {other:?}"
        ))),
    }
}

fn fields(line: &str, count: usize) -> Result<Vec<&str>, Failure> {
    let f: Vec<&str> = line.split(',').collect();
    if f.len() != count {
        return Err(Failure::Config(format!(
            "row {line:?} has {} fields, expected {count}",
            f.len()
        )));
    }
    Ok(f)
}

fn parse_f64(field: &str, line: &str) -> Result<f64, Failure> {
    field.parse().map_err(|_| bad_field(line, field))
}

fn bad_field(line: &str, what: &str) -> Failure {
    Failure::Config(format!("unreadable {what} in row {line:?}"))
}
