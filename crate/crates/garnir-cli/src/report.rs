//! Machine-readable report emitted by every subcommand.
//!
//! Field order is fixed by the struct; rationals are rendered as `p/q`
//! strings; reports are byte-identical across runs with the same inputs
//! (timings are only included when explicitly requested).

use garnir::criteria::{CriterionReport, Witness};
use serde::Serialize;

#[derive(Serialize, Debug, Clone)]
pub struct WitnessJson {
    pub c: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    pub value: String,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson {
            c: w.c,
            j: w.j,
            value: w.value.to_string(),
        }
    }
}

#[derive(Serialize, Debug, Clone, Default)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j_range: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    pub witnesses: Vec<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_specht: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_tabloid: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_quotient: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
    pub version: String,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            ..Default::default()
        }
    }

    pub fn with_criterion(mut self, rep: &CriterionReport) -> Self {
        self.verdict = Some(if rep.pass { "pass" } else { "fail" }.to_string());
        self.witnesses = rep.witnesses.iter().map(WitnessJson::from).collect();
        if let Some(range) = rep.j_range {
            self.j_range = Some(range.to_string());
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
