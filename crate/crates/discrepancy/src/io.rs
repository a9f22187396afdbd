//! File formats: instances, matrices, and machine-readable reports.
//!
//! One canonical JSON schema per object, UTF-8, two-space indentation, fixed
//! key order (struct declaration order), sets sorted ascending, and a single
//! trailing newline — so canonical files round-trip byte-for-byte and golden
//! tests can compare raw bytes. Ground-set elements are 1-based in files;
//! matrix row/column indices are 0-based, matching the library. Exact
//! determinants are serialized as decimal strings since they outgrow any
//! fixed-width integer.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::core::SetSystem;
use crate::detlb::{ChainLink as UnionLink, DetlbWitness, UnionBoundReport};
use crate::error::{Error, Result};
use crate::exactla::IntMatrix;
use crate::pipeline::{ChainReport, ChainVerification};
use crate::vecdisc::DualCertificate;

/// A set system on `{1..n}`: the on-disk form of [`SetSystem`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tags: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<BTreeMap<String, String>>,
}

impl InstanceFile {
    pub fn from_system(system: &SetSystem) -> Self {
        InstanceFile {
            n: system.n(),
            sets: system.sets().to_vec(),
            tags: system.tags().map(|t| t.to_vec()),
            metadata: None,
        }
    }

    pub fn with_metadata(mut self, metadata: BTreeMap<String, String>) -> Self {
        self.metadata = Some(metadata);
        self
    }

    pub fn to_system(&self) -> Result<SetSystem> {
        SetSystem::with_tags(self.n, self.sets.clone(), self.tags.clone())
    }
}

/// A dense integer matrix, optionally with per-row provenance tags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tags: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<BTreeMap<String, String>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &IntMatrix) -> Result<Self> {
        use num_traits::ToPrimitive;
        let entries = (0..m.rows())
            .map(|i| {
                (0..m.cols())
                    .map(|j| {
                        m.entry(i, j).to_i64().ok_or_else(|| {
                            Error::InvalidParameter("matrix entry exceeds i64".into())
                        })
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MatrixFile { rows: m.rows(), cols: m.cols(), entries, tags: None, metadata: None })
    }

    pub fn to_matrix(&self) -> Result<IntMatrix> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::DimensionMismatch(format!(
                "entry grid does not match {}x{}",
                self.rows, self.cols
            )));
        }
        if let Some(t) = &self.tags {
            if t.len() != self.rows {
                return Err(Error::DimensionMismatch(format!(
                    "{} tags for {} rows",
                    t.len(),
                    self.rows
                )));
            }
        }
        Ok(IntMatrix::from_rows(&self.entries))
    }
}

/// Either kind of input document, detected by its fields.
#[derive(Debug, Clone)]
pub enum InputFile {
    Instance(InstanceFile),
    Matrix(MatrixFile),
}

/// Canonical serialization: pretty JSON plus a trailing newline.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// SHA-256 of the canonical serialization, as `sha256:<hex>`.
pub fn digest<T: Serialize>(value: &T) -> String {
    let mut hasher = Sha256::new();
    hasher.update(canonical_json(value).as_bytes());
    let out = hasher.finalize();
    let hex: String = out.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

fn parse_error(path: &str, err: &serde_json::Error) -> Error {
    Error::Parse {
        path: path.to_string(),
        message: format!("line {}, column {}: {}", err.line(), err.column(), err),
    }
}

/// Parses an instance document from a string, reporting location on failure
/// and validating ranges and orderings.
pub fn parse_instance_str(text: &str, path: &str) -> Result<InstanceFile> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| parse_error(path, &e))?;
    file.to_system()?; // validate
    Ok(file)
}

/// Parses either an instance or a matrix document, by field shape.
pub fn parse_input_str(text: &str, path: &str) -> Result<InputFile> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| parse_error(path, &e))?;
    if value.get("sets").is_some() {
        Ok(InputFile::Instance(parse_instance_str(text, path)?))
    } else if value.get("entries").is_some() {
        let file: MatrixFile = serde_json::from_str(text).map_err(|e| parse_error(path, &e))?;
        file.to_matrix()?; // validate
        Ok(InputFile::Matrix(file))
    } else {
        Err(Error::Parse {
            path: path.to_string(),
            message: "document has neither \"sets\" nor \"entries\"".into(),
        })
    }
}

/// Reads and parses an instance file; `-` reads standard input.
pub fn read_instance(path: &str) -> Result<InstanceFile> {
    parse_instance_str(&read_to_string(path)?, path)
}

pub fn read_input(path: &str) -> Result<InputFile> {
    parse_input_str(&read_to_string(path)?, path)
}

pub fn read_to_string(path: &str) -> Result<String> {
    if path == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

/// Writes atomically via a sibling temp file; `-` writes standard output.
pub fn write_output(path: &str, content: &str) -> Result<()> {
    if path == "-" {
        use std::io::Write;
        std::io::stdout().write_all(content.as_bytes())?;
        return Ok(());
    }
    let target = Path::new(path);
    let tmp = target.with_extension("tmp.partial");
    std::fs::write(&tmp, content)?;
    std::fs::rename(&tmp, target)?;
    Ok(())
}

/// Overall certification status of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportStatus {
    /// Every claimed value is backed by a completed search or verified object.
    Certified,
    /// A budget ran out; values are bounds, not optima.
    NotCertified,
}

impl ReportStatus {
    pub fn exit_code(self) -> i32 {
        match self {
            ReportStatus::Certified => 0,
            ReportStatus::NotCertified => 2,
        }
    }
}

/// A determinant witness in file form (exact determinant as decimal text).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessFile {
    pub row_indices: Vec<usize>,
    pub col_indices: Vec<usize>,
    pub det: String,
    pub value_log: f64,
}

impl WitnessFile {
    pub fn from_witness(w: &DetlbWitness) -> Self {
        WitnessFile {
            row_indices: w.row_indices.clone(),
            col_indices: w.col_indices.clone(),
            det: w.det_value.to_string(),
            value_log: w.value_log,
        }
    }

    pub fn to_witness(&self) -> Result<DetlbWitness> {
        let det = BigInt::from_str(&self.det)
            .map_err(|e| Error::InvalidParameter(format!("bad determinant literal: {e}")))?;
        Ok(DetlbWitness {
            row_indices: self.row_indices.clone(),
            col_indices: self.col_indices.clone(),
            det_value: det,
            value_log: self.value_log,
        })
    }
}

/// One inequality with its measured slack.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkFile {
    pub name: String,
    pub passed: bool,
    pub slack: f64,
}

/// The witness chain in file form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainFile {
    pub certified_d: f64,
    pub w: Vec<f64>,
    pub z: Vec<f64>,
    pub support: Vec<usize>,
    pub bucket: Vec<usize>,
    pub t_level: f64,
    pub k: usize,
    pub d_tilde: f64,
    pub lambda_min: f64,
    pub gram_det: f64,
    pub witness: Option<WitnessFile>,
    pub exact_search: bool,
    pub solver_iterations: u64,
    pub solver_converged: bool,
    pub tol: f64,
    pub links: Vec<LinkFile>,
}

impl ChainFile {
    pub fn from_report(r: &ChainReport, verification: &ChainVerification) -> Self {
        ChainFile {
            certified_d: r.certified_d,
            w: r.cert.w.clone(),
            z: r.cert.z.clone(),
            support: r.support.members().to_vec(),
            bucket: r.bucket.members().to_vec(),
            t_level: r.t_level,
            k: r.k,
            d_tilde: r.d_tilde,
            lambda_min: r.lambda_min,
            gram_det: r.gram_det,
            witness: r.witness.as_ref().map(WitnessFile::from_witness),
            exact_search: r.exact_search,
            solver_iterations: r.solver_iterations,
            solver_converged: r.solver_converged,
            tol: r.tol,
            links: verification
                .checks
                .iter()
                .map(|c| LinkFile { name: c.link.to_string(), passed: c.passed, slack: c.slack })
                .collect(),
        }
    }

    pub fn to_report(&self) -> Result<ChainReport> {
        Ok(ChainReport {
            certified_d: self.certified_d,
            cert: DualCertificate {
                w: self.w.clone(),
                z: self.z.clone(),
                certified_bound: self.z.iter().sum::<f64>().max(0.0).sqrt(),
            },
            support: crate::core::GroundSubset::new(self.support.clone()),
            bucket: crate::core::GroundSubset::new(self.bucket.clone()),
            t_level: self.t_level,
            k: self.k,
            d_tilde: self.d_tilde,
            lambda_min: self.lambda_min,
            gram_det: self.gram_det,
            witness: self.witness.as_ref().map(|w| w.to_witness()).transpose()?,
            exact_search: self.exact_search,
            solver_iterations: self.solver_iterations,
            solver_converged: self.solver_converged,
            tol: self.tol,
        })
    }
}

/// The union chain in file form, with the submatrix selection kept so the
/// whole check can be reproduced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnionCheckFile {
    pub k: usize,
    pub t: usize,
    pub block_sizes: Vec<usize>,
    /// `(part, row within part)` per row of the tested submatrix.
    pub b_rows: Vec<(usize, usize)>,
    pub b_cols: Vec<usize>,
    pub det_abs: String,
    pub det_log: f64,
    pub blockwise_log: f64,
    pub dmax_log: f64,
    pub part_detlb_logs: Vec<f64>,
    pub binom_log_sum: f64,
    pub links: Vec<LinkFile>,
    pub holds: bool,
}

impl UnionCheckFile {
    pub fn from_report(
        r: &UnionBoundReport,
        b_rows: &[(usize, usize)],
        b_cols: &[usize],
        tol: f64,
    ) -> Self {
        UnionCheckFile {
            k: r.k,
            t: r.t,
            block_sizes: r.block_sizes.clone(),
            b_rows: b_rows.to_vec(),
            b_cols: b_cols.to_vec(),
            det_abs: r.det_abs.to_string(),
            det_log: r.det_log,
            blockwise_log: r.blockwise_log,
            dmax_log: r.dmax_log,
            part_detlb_logs: r.part_detlb_logs.clone(),
            binom_log_sum: r.binom_log_sum,
            links: r
                .links
                .iter()
                .map(|l: &UnionLink| LinkFile {
                    name: l.name.to_string(),
                    passed: l.holds(tol),
                    slack: l.slack(),
                })
                .collect(),
            holds: r.holds(tol),
        }
    }
}

/// Per-command payload of a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReportResults {
    Disc {
        value: u64,
        witness: Vec<i8>,
        nodes_explored: u64,
        certified: bool,
    },
    Herdisc {
        value: u64,
        witness_subset: Vec<usize>,
        nodes_explored: u64,
        certified: bool,
    },
    Detlb {
        value: f64,
        value_log: f64,
        k: usize,
        witness: WitnessFile,
        minors_evaluated: u64,
        certified: bool,
    },
    Vecdisc {
        achieved_d: f64,
        certified_bound: f64,
        gap: f64,
        iterations: u64,
        converged: bool,
        w: Vec<f64>,
        z: Vec<f64>,
    },
    Certify {
        achieved_d: f64,
        certified_bound: f64,
        gap: f64,
        iterations: u64,
        converged: bool,
        w: Vec<f64>,
        z: Vec<f64>,
        verified: bool,
    },
    Pipeline {
        chain: ChainFile,
        verified: bool,
    },
    UnionCheck(UnionCheckFile),
    Gap {
        n: usize,
        m: usize,
        herdisc: u64,
        herdisc_certified: bool,
        detlb_value: Option<f64>,
        detlb_log: Option<f64>,
        detlb_certified: bool,
        ratio: Option<f64>,
        reference_scale: f64,
    },
    Verify {
        checks: Vec<VerifyItem>,
        all_ok: bool,
    },
}

/// One re-verified object inside a `verify` run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyItem {
    pub target: String,
    pub ok: bool,
    pub detail: String,
}

/// A complete command report: tool identity, full parameters, the instance
/// itself (so verification needs nothing else), results, and status.
/// `elapsed_ms` is informational and excluded from determinism claims.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub params: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixFile>,
    pub instance_digest: String,
    pub results: ReportResults,
    pub status: ReportStatus,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn parse(text: &str, path: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| parse_error(path, &e))
    }
}
