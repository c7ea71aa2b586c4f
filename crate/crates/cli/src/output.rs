use std::io::Write;

use serde::Serialize;
use zetafam::FamilyId;

use crate::{CliError, Format};

// Field order is the CSV column order.

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalRow {
    pub sigma: f64,
    pub t: f64,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    pub family: FamilyId,
    pub a: String,
    pub location: f64,
    pub multiplicity_class: String,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BetaRow {
    pub a: String,
    pub family: FamilyId,
    pub beta: f64,
    pub prediction: f64,
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyRow {
    pub suite: String,
    pub check: String,
    pub family: FamilyId,
    pub a: String,
    pub sigma: f64,
    pub t: f64,
    pub residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountRow {
    pub family: FamilyId,
    pub a: String,
    pub sigma_min: f64,
    pub t_min: f64,
    pub sigma_max: f64,
    pub t_max: f64,
    pub count: u64,
    pub boundary_min_abs: f64,
    pub samples_used: usize,
}

#[derive(Serialize)]
pub(crate) struct Table<T> {
    command: &'static str,
    rows: Vec<T>,
}

impl<T: Serialize + Columns> Table<T> {
    pub(crate) fn new(command: &'static str, rows: Vec<T>) -> Self {
        Table { command, rows }
    }

    pub(crate) fn write(&self, fmt: Format, out: &mut dyn Write) -> Result<(), CliError> {
        match fmt {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)
                    .map_err(|e| CliError::from(std::io::Error::other(e)))?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .has_headers(false)
                    .from_writer(&mut *out);
                w.write_record(T::HEADER).map_err(csv_err)?;
                for row in &self.rows {
                    w.serialize(row).map_err(csv_err)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::from(std::io::Error::other(e))
}

/// CSV header, written even for an empty table.
pub trait Columns {
    const HEADER: &'static [&'static str];
}

impl Columns for EvalRow {
    const HEADER: &'static [&'static str] = &["sigma", "t", "re", "im"];
}

impl Columns for ScanRow {
    const HEADER: &'static [&'static str] =
        &["family", "a", "location", "multiplicity_class", "residual"];
}

impl Columns for BetaRow {
    const HEADER: &'static [&'static str] = &["a", "family", "beta", "prediction", "deviation"];
}

impl Columns for VerifyRow {
    const HEADER: &'static [&'static str] = &[
        "suite", "check", "family", "a", "sigma", "t", "residual", "pass",
    ];
}

impl Columns for CountRow {
    const HEADER: &'static [&'static str] = &[
        "family",
        "a",
        "sigma_min",
        "t_min",
        "sigma_max",
        "t_max",
        "count",
        "boundary_min_abs",
        "samples_used",
    ];
}
