//! JSON jobs in, reports out.
//!
//! A job names a mode, carries a mode-specific payload, and may set options.
//! [`execute`] turns a job into rendered output plus a process exit code:
//! 0 on success, 1 when the input is rejected, 2 when an internal check
//! fails.

pub mod dot;
pub mod exact;
pub mod report;
pub mod selftest;

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::eigen::DEFAULT_RELATION_BOUND;
use crate::error::Error;
use exact::{ExactInt, ExactRational};

pub const SCHEMA: &str = "idempotoric/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Eigen,
    Monoid,
    Cone,
    Finite,
    Selftest,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Mode::Eigen => "eigen",
            Mode::Monoid => "monoid",
            Mode::Cone => "cone",
            Mode::Finite => "finite",
            Mode::Selftest => "selftest",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Dot,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default = "default_bound")]
    pub relation_bound: u32,
    #[serde(default)]
    pub format: Format,
    #[serde(default = "default_true")]
    pub crosscheck: bool,
}

fn default_bound() -> u32 {
    DEFAULT_RELATION_BOUND
}

fn default_true() -> bool {
    true
}

impl Default for Options {
    fn default() -> Self {
        Self {
            relation_bound: DEFAULT_RELATION_BOUND,
            format: Format::Json,
            crosscheck: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EigenPayload {
    pub eigenvalues: Vec<ExactRational>,
}

/// Payload of both `monoid` and `cone` jobs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorPayload {
    pub ambient_dim: usize,
    pub generators: Vec<Vec<ExactInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FinitePayload {
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelftestPayload {
    #[serde(default = "selftest::default_seed")]
    pub seed: u64,
    #[serde(default = "selftest::default_cases")]
    pub cones: usize,
    #[serde(default = "selftest::default_cases")]
    pub eigen_lists: usize,
}

impl Default for SelftestPayload {
    fn default() -> Self {
        Self {
            seed: selftest::default_seed(),
            cones: selftest::default_cases(),
            eigen_lists: selftest::default_cases(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Eigen(EigenPayload),
    Monoid(GeneratorPayload),
    Cone(GeneratorPayload),
    Finite(FinitePayload),
    Selftest(SelftestPayload),
}

impl Payload {
    pub fn mode(&self) -> Mode {
        match self {
            Payload::Eigen(_) => Mode::Eigen,
            Payload::Monoid(_) => Mode::Monoid,
            Payload::Cone(_) => Mode::Cone,
            Payload::Finite(_) => Mode::Finite,
            Payload::Selftest(_) => Mode::Selftest,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub payload: Payload,
    pub options: Options,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawJob {
    #[serde(default)]
    schema: Option<String>,
    mode: Mode,
    #[serde(default)]
    payload: Value,
    #[serde(default)]
    options: Options,
}

/// Why a job could not produce a report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JobError {
    #[error("malformed JSON: {0}")]
    MalformedJson(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl JobError {
    pub fn exit_code(&self) -> i32 {
        match self {
            JobError::Core(e) if e.is_internal() => 2,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            JobError::MalformedJson(_) => "malformed_json",
            JobError::Schema(_) => "schema_violation",
            JobError::Core(e) => match e {
                Error::DimensionMismatch { .. } => "dimension_mismatch",
                Error::ZeroEigenvalue { .. } => "zero_eigenvalue",
                Error::NotAssociative { .. } => "not_associative",
                Error::InvalidTable(_) => "invalid_table",
                Error::NotCommutative => "not_commutative",
                Error::NotIdempotent(_) => "not_idempotent",
                Error::InvalidInput(_) => "invalid_input",
                Error::Invariant(_) => "internal_invariant",
            },
        }
    }

    /// The structured error document printed in place of a report.
    pub fn document(&self) -> Value {
        let mut err = json!({
            "kind": self.kind(),
            "message": self.to_string(),
            "exit_code": self.exit_code(),
        });
        let detail = match self {
            JobError::Core(Error::ZeroEigenvalue { position }) => {
                Some(json!({ "position": position }))
            }
            JobError::Core(Error::NotAssociative {
                x,
                y,
                z,
                left,
                right,
            }) => Some(json!({ "triple": [x, y, z], "left": left, "right": right })),
            JobError::Core(Error::DimensionMismatch { expected, found }) => {
                Some(json!({ "expected": expected, "found": found }))
            }
            _ => None,
        };
        if let Some(d) = detail {
            err["detail"] = d;
        }
        json!({ "schema": SCHEMA, "error": err })
    }
}

fn parse_json(text: &str) -> Result<Value, JobError> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| JobError::MalformedJson(e.to_string()))?;
    if let Some((path, lit)) = exact::find_float(&v) {
        return Err(JobError::Schema(format!(
            "floating-point literal {lit} at {path}; exact values must be integers or \"p/q\" strings"
        )));
    }
    Ok(v)
}

fn schema_err(e: serde_json::Error) -> JobError {
    JobError::Schema(e.to_string())
}

fn parse_payload(mode: Mode, v: Value) -> Result<Payload, JobError> {
    let v = if v.is_null() { json!({}) } else { v };
    Ok(match mode {
        Mode::Eigen => Payload::Eigen(serde_json::from_value(v).map_err(schema_err)?),
        Mode::Monoid => Payload::Monoid(serde_json::from_value(v).map_err(schema_err)?),
        Mode::Cone => Payload::Cone(serde_json::from_value(v).map_err(schema_err)?),
        Mode::Finite => Payload::Finite(serde_json::from_value(v).map_err(schema_err)?),
        Mode::Selftest => Payload::Selftest(serde_json::from_value(v).map_err(schema_err)?),
    })
}

impl JobSpec {
    /// Parses a full job document: `{"schema", "mode", "payload", "options"}`.
    pub fn from_json(text: &str) -> Result<Self, JobError> {
        let raw: RawJob = serde_json::from_value(parse_json(text)?).map_err(schema_err)?;
        if let Some(s) = &raw.schema {
            if s != SCHEMA {
                return Err(JobError::Schema(format!(
                    "unsupported schema {s:?}, expected {SCHEMA:?}"
                )));
            }
        }
        Ok(Self {
            payload: parse_payload(raw.mode, raw.payload)?,
            options: raw.options,
        })
    }

    /// Parses input for a known mode. The text may be a full job document,
    /// whose mode must then agree, or a bare payload.
    pub fn for_mode(mode: Mode, text: &str) -> Result<Self, JobError> {
        let v = parse_json(text)?;
        if v.get("mode").is_some() {
            let job = Self::from_json(text)?;
            if job.payload.mode() != mode {
                return Err(JobError::Schema(format!(
                    "document is a {} job but {mode} was requested",
                    job.payload.mode()
                )));
            }
            return Ok(job);
        }
        Ok(Self {
            payload: parse_payload(mode, v)?,
            options: Options::default(),
        })
    }

    pub fn mode(&self) -> Mode {
        self.payload.mode()
    }

    pub fn to_json(&self) -> Value {
        let payload = match &self.payload {
            Payload::Eigen(p) => serde_json::to_value(p),
            Payload::Monoid(p) | Payload::Cone(p) => serde_json::to_value(p),
            Payload::Finite(p) => serde_json::to_value(p),
            Payload::Selftest(p) => serde_json::to_value(p),
        }
        .expect("payloads serialize");
        json!({
            "schema": SCHEMA,
            "mode": self.mode(),
            "payload": payload,
            "options": self.options,
        })
    }
}

/// Rendered output and the exit status it should produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub output: String,
}

/// Runs a job and renders its report, or its error document, in the
/// requested format.
pub fn execute(job: &JobSpec) -> Outcome {
    match report::run(job).and_then(|r| r.render(job.options.format).map(|s| (r, s))) {
        Ok((r, output)) => Outcome {
            exit_code: r.exit_code(),
            output,
        },
        Err(e) => render_error(&e, job.options.format),
    }
}

pub fn render_error(e: &JobError, format: Format) -> Outcome {
    let output = match format {
        Format::Json => pretty(&e.document()),
        Format::Dot | Format::Text => format!("error ({}): {e}\n", e.kind()),
    };
    Outcome {
        exit_code: e.exit_code(),
        output,
    }
}

pub(crate) fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}
