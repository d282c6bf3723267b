//! The JSON envelope every command emits under `--format json`.

use genusdist::analysis::{LogConcavity, MomentReport};
use genusdist::combinatorics::Partition;
use genusdist::genus::{Family, GenusPolynomial};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    /// Subcommand path, e.g. `"verify factorizations"`.
    pub command: String,
    pub inputs: Inputs,
    pub result: Payload,
    pub format: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inputs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Partition>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub all_lambda: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub handle: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Genus(GenusPolynomial),
    Table {
        family: Family,
        rows: Vec<GenusPolynomial>,
    },
    Verify(VerifyReport),
    Check(CheckReport),
    Moments(Box<MomentReport>),
    Character {
        theta: Partition,
        mu: Partition,
        value: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub mode: String,
    pub cases: Vec<VerifyCase>,
    pub pass: bool,
}

/// One comparison; `oracle` and `formula` are constant-first coefficient
/// strings (a single entry for plain counts).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyCase {
    pub case: String,
    pub oracle: Vec<String>,
    pub formula: Vec<String>,
    /// Whether the oracle total equals `∏ d_v!(d_v−1)!` (embedding mode only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total_law: Option<bool>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub m: usize,
    pub n: usize,
    pub cases: Vec<CheckCase>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCase {
    pub lambda: Partition,
    pub coeffs: Vec<String>,
    pub real_rooted: bool,
    pub nonpositive_roots: Option<bool>,
    pub log_concave: LogConcavity,
    pub pass: bool,
}

impl Payload {
    /// Whether a verify or check payload reports agreement; always true otherwise.
    pub fn passed(&self) -> bool {
        match self {
            Payload::Verify(r) => r.pass,
            Payload::Check(r) => r.pass,
            _ => true,
        }
    }
}
