//! The experiment configuration file.
//!
//! One JSON document drives every subcommand; each command reads the
//! sections it needs and ignores the rest, so a single file can describe a
//! whole experiment (encode it, look at the spectrum, sweep it, heat it).
//! Unknown keys are rejected everywhere so a typo cannot silently fall back
//! to a default.

use crate::Failure;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use stabgap::{five_qubit_code, four_qubit_code, NoiseModel, PauliSum, Schedule, StabilizerCode};
use std::fs;
use std::path::Path;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    /// System Hamiltonian, in `<coefficient> <string>` lines.
    pub hamiltonian: Option<String>,
    /// `"four_qubit"`, `"five_qubit"`, or an inline code object.
    pub code: Option<serde_json::Value>,
    pub penalty_weight: Option<f64>,
    pub schedule: Option<ScheduleConfig>,
    pub noise: Option<NoiseModel>,
}

/// Interpolation endpoints and timing for the sweep commands.
///
/// `dt` falls back to a step chosen from the Hamiltonian norm when absent;
/// `samples` is only read by `gap-path`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleConfig {
    pub h_start: String,
    pub h_end: String,
    #[serde(rename = "T")]
    pub total_time: f64,
    #[serde(default)]
    pub dt: Option<f64>,
    #[serde(default)]
    pub samples: Option<usize>,
}

/// A parsed config together with the SHA-256 of the raw file bytes, which
/// every artifact sidecar records for provenance.
pub struct LoadedConfig {
    pub config: ExperimentConfig,
    pub sha256: String,
}

pub fn load(path: Option<&Path>) -> Result<LoadedConfig, Failure> {
    let path = path.ok_or_else(|| {
        Failure::Config("this command needs an experiment file; pass --config PATH".into())
    })?;
    let bytes = fs::read(path)
        .map_err(|e| Failure::Config(format!("cannot read config {}: {e}", path.display())))?;
    let config = serde_json::from_slice(&bytes)
        .map_err(|e| Failure::Config(format!("config {}: {e}", path.display())))?;
    Ok(LoadedConfig {
        config,
        sha256: sha256_hex(&bytes),
    })
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut hex = String::with_capacity(64);
    for b in digest {
        hex.push_str(&format!("{b:02x}"));
    }
    hex
}

/// Turns a code selector into a code: a built-in name, an inline JSON
/// object, or a path to a JSON file in the same shape.
pub fn resolve_selector(selector: &str) -> Result<StabilizerCode, Failure> {
    match selector {
        "four_qubit" => Ok(four_qubit_code()),
        "five_qubit" => Ok(five_qubit_code()),
        inline if inline.trim_start().starts_with('{') => serde_json::from_str(inline)
            .map_err(|e| Failure::Config(format!("inline code JSON: {e}"))),
        path => {
            let text = fs::read_to_string(path).map_err(|_| {
                Failure::Config(format!(
                    "code selector {path:?} is not a built-in name, inline JSON, or a readable file"
                ))
            })?;
            serde_json::from_str(&text)
                .map_err(|e| Failure::Config(format!("code file {path}: {e}")))
        }
    }
}

impl ExperimentConfig {
    pub fn hamiltonian(&self) -> Result<PauliSum, Failure> {
        let text = self
            .hamiltonian
            .as_deref()
            .ok_or_else(|| Failure::Config("config has no \"hamiltonian\" section".into()))?;
        Ok(PauliSum::parse(text)?)
    }

    /// The code and penalty weight, when the config asks for encoding.
    /// A code without a penalty weight (or the reverse) is rejected rather
    /// than defaulted.
    pub fn encoding(&self) -> Result<Option<(StabilizerCode, f64)>, Failure> {
        match (&self.code, self.penalty_weight) {
            (None, None) => Ok(None),
            (Some(value), Some(weight)) => {
                let code = match value {
                    serde_json::Value::String(name) => resolve_selector(name)?,
                    other => serde_json::from_value(other.clone())
                        .map_err(|e| Failure::Config(format!("inline code: {e}")))?,
                };
                Ok(Some((code, weight)))
            }
            (Some(_), None) => Err(Failure::Config(
                "config names a code but no \"penalty_weight\"".into(),
            )),
            (None, Some(_)) => Err(Failure::Config(
                "config sets \"penalty_weight\" but names no code".into(),
            )),
        }
    }

    pub fn schedule(&self) -> Result<&ScheduleConfig, Failure> {
        self.schedule
            .as_ref()
            .ok_or_else(|| Failure::Config("config has no \"schedule\" section".into()))
    }

    pub fn noise(&self) -> Result<&NoiseModel, Failure> {
        self.noise
            .as_ref()
            .ok_or_else(|| Failure::Config("config has no \"noise\" section".into()))
    }
}

impl ScheduleConfig {
    pub fn endpoints(&self) -> Result<(PauliSum, PauliSum), Failure> {
        Ok((
            PauliSum::parse(&self.h_start)?,
            PauliSum::parse(&self.h_end)?,
        ))
    }

    pub fn build_bare(&self) -> Result<Schedule, Failure> {
        let (h0, h1) = self.endpoints()?;
        Ok(Schedule::new(h0, h1, self.total_time)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_keys_are_rejected() {
        let err = serde_json::from_str::<ExperimentConfig>(r#"{"hamiltonian": "1 Z", "foo": 1}"#)
            .unwrap_err();
        assert!(err.to_string().contains("foo"));
    }

    #[test]
    fn unknown_schedule_keys_are_rejected() {
        let text = r#"{"schedule": {"h_start": "-1 X", "h_end": "-1 Z", "T": 1.0, "tt": 2}}"#;
        assert!(serde_json::from_str::<ExperimentConfig>(text).is_err());
    }

    #[test]
    fn named_selectors_resolve_to_the_built_in_codes() {
        assert_eq!(resolve_selector("four_qubit").unwrap().num_qubits(), 4);
        assert_eq!(resolve_selector("five_qubit").unwrap().num_qubits(), 5);
        assert!(resolve_selector("six_qubit").is_err());
    }

    #[test]
    fn inline_selectors_go_through_full_validation() {
        let json = serde_json::to_string(&four_qubit_code()).unwrap();
        assert_eq!(resolve_selector(&json).unwrap(), four_qubit_code());
        assert!(matches!(
            resolve_selector("{\"name\": \"broken\""),
            Err(Failure::Config(_))
        ));
    }

    #[test]
    fn encoding_requires_both_halves() {
        let half: ExperimentConfig = serde_json::from_str(r#"{"code": "four_qubit"}"#).unwrap();
        assert!(matches!(half.encoding(), Err(Failure::Config(_))));
        let whole: ExperimentConfig =
            serde_json::from_str(r#"{"code": "four_qubit", "penalty_weight": 1.5}"#).unwrap();
        let (code, weight) = whole.encoding().unwrap().unwrap();
        assert_eq!(code.name(), "four_qubit");
        assert_eq!(weight, 1.5);
    }

    #[test]
    fn config_hash_is_over_the_raw_bytes() {
        assert_eq!(
            sha256_hex(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
