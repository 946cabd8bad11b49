//! Parameter sweeps with ordered JSON Lines output.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::mpsc;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{verify_one, Outcome, VerificationRecord};
use crate::closed_forms::{validate_pair, IntegralSpec, LogOrder};
use crate::error::{Error, Result};
use crate::quadrature::MIN_REL_TOL;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub a_values: Vec<f64>,
    pub m_values: Vec<Complex64>,
    pub k_values: Vec<LogOrder>,
    pub pairs: Vec<(u32, u32)>,
    pub tolerance: f64,
    pub output_path: PathBuf,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csv_path: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
}

impl Summary {
    fn count(&mut self, rec: &VerificationRecord) {
        self.total += 1;
        match rec.outcome() {
            Outcome::Pass => self.passed += 1,
            Outcome::Fail => self.failed += 1,
            Outcome::Errored => self.errored += 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
}

impl SweepConfig {
    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| Error::Domain(format!("bad config {}: {e}", path.display())))
    }

    pub fn validate(&self) -> Result<()> {
        if self.a_values.is_empty()
            || self.m_values.is_empty()
            || self.k_values.is_empty()
            || self.pairs.is_empty()
        {
            return Err(Error::Domain("every grid list must be nonempty".into()));
        }
        if !(self.tolerance >= MIN_REL_TOL) {
            return Err(Error::Domain(format!(
                "tolerance must be at least 1e-12, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }

    /// Grid cells in report order: pair, then k, then m, then a. Pairs that
    /// are not distinct even integers ≥ 2 are dropped; degenerate pairs stay
    /// and produce error-tagged records.
    pub fn cells(&self) -> Vec<IntegralSpec> {
        let mut out = Vec::new();
        for &(alpha, beta) in &self.pairs {
            if validate_pair(alpha, beta).is_err() {
                continue;
            }
            for &k in &self.k_values {
                for &m in &self.m_values {
                    for &a in &self.a_values {
                        out.push(IntegralSpec::new(a, m, k, alpha, beta));
                    }
                }
            }
        }
        out
    }
}

/// Runs the grid in parallel and streams records in grid order.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome> {
    config.validate()?;
    let cells = config.cells();
    let mut jsonl = BufWriter::new(File::create(&config.output_path)?);
    let mut csv = match &config.csv_path {
        Some(p) => Some(csv::Writer::from_path(p).map_err(|e| Error::OutputIo(e.to_string()))?),
        None => None,
    };
    if let Some(w) = csv.as_mut() {
        w.write_record(CSV_HEADER).map_err(csv_err)?;
    }

    let tol = config.tolerance;
    let mut records = Vec::with_capacity(cells.len());
    let mut summary = Summary::default();
    let mut write_error = None;
    std::thread::scope(|scope| {
        let (tx, rx) = mpsc::channel();
        let cells = &cells;
        scope.spawn(move || {
            cells
                .par_iter()
                .enumerate()
                .for_each_with(tx, |tx, (i, spec)| {
                    let _ = tx.send((i, verify_one(spec, tol)));
                });
        });
        let mut pending = BTreeMap::new();
        for (i, rec) in rx {
            pending.insert(i, rec);
            while let Some(rec) = pending.remove(&records.len()) {
                if write_error.is_none() {
                    if let Err(e) = emit(&mut jsonl, csv.as_mut(), &rec) {
                        write_error = Some(e);
                    }
                }
                summary.count(&rec);
                records.push(rec);
            }
        }
    });
    if let Some(e) = write_error {
        return Err(e);
    }
    jsonl.flush()?;
    if let Some(mut w) = csv {
        w.flush()?;
    }
    Ok(SweepOutcome { records, summary })
}

const CSV_HEADER: [&str; 15] = [
    "alpha",
    "beta",
    "a",
    "m_re",
    "m_im",
    "k",
    "closed_re",
    "closed_im",
    "oracle_re",
    "oracle_im",
    "abs_diff",
    "rel_diff",
    "tolerance",
    "pass",
    "error",
];

fn csv_err(e: csv::Error) -> Error {
    Error::OutputIo(e.to_string())
}

fn emit<W: Write>(
    jsonl: &mut W,
    csv: Option<&mut csv::Writer<File>>,
    rec: &VerificationRecord,
) -> Result<()> {
    serde_json::to_writer(&mut *jsonl, rec).map_err(|e| Error::OutputIo(e.to_string()))?;
    jsonl.write_all(b"\n")?;
    jsonl.flush()?;
    if let Some(w) = csv {
        let spec = rec.spec.expect("sweep records carry a spec");
        let num = |x: Option<f64>| x.map(|v| format!("{v:e}")).unwrap_or_default();
        let row = [
            spec.alpha.to_string(),
            spec.beta.to_string(),
            spec.a.to_string(),
            spec.m.re.to_string(),
            spec.m.im.to_string(),
            spec.k.to_string(),
            num(rec.closed_form.map(|c| c.re)),
            num(rec.closed_form.map(|c| c.im)),
            num(rec.oracle.map(|c| c.re)),
            num(rec.oracle.map(|c| c.im)),
            num(rec.abs_diff),
            num(rec.rel_diff),
            format!("{:e}", rec.tolerance),
            rec.pass.to_string(),
            rec.error.clone().unwrap_or_default(),
        ];
        w.write_record(&row).map_err(csv_err)?;
    }
    Ok(())
}
