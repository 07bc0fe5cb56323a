//! Canonical CSV form of sweep records.
//!
//! Floats are written in scientific notation with 17 significant digits, so
//! every `f64` survives a parse and re-serialize unchanged. Missing values are
//! empty cells. Rows end with a single `\n`.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::geometry::FieldRegion;

use super::SweepRecord;

pub const CSV_HEADER: [&str; 19] = [
    "swept_value",
    "series_value",
    "n_antennas",
    "theta",
    "psi",
    "r",
    "beta1",
    "beta2",
    "f_exact",
    "f_sum",
    "f_closed",
    "interference_power_dbm",
    "sinr_db",
    "rate",
    "rate_ideal",
    "rate_loss",
    "rate_loss_bound",
    "region",
    "approx_domain_warning",
];

fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt_float(x: Option<f64>) -> String {
    x.map(float).unwrap_or_default()
}

fn row(rec: &SweepRecord) -> [String; 19] {
    [
        float(rec.swept_value),
        opt_float(rec.series_value),
        rec.n_antennas.map(|n| n.to_string()).unwrap_or_default(),
        opt_float(rec.theta),
        opt_float(rec.psi),
        opt_float(rec.r),
        float(rec.beta1),
        float(rec.beta2),
        opt_float(rec.f_exact),
        opt_float(rec.f_sum),
        opt_float(rec.f_closed),
        opt_float(rec.interference_power_dbm),
        opt_float(rec.sinr_db),
        opt_float(rec.rate),
        opt_float(rec.rate_ideal),
        opt_float(rec.rate_loss),
        opt_float(rec.rate_loss_bound),
        rec.region
            .map(|r| r.as_str().to_string())
            .unwrap_or_default(),
        rec.approx_domain_warning
            .map(|w| w.to_string())
            .unwrap_or_default(),
    ]
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

/// Writes header and records to any writer.
pub fn write_csv<W: Write>(records: &[SweepRecord], out: W) -> Result<(), csv::Error> {
    let mut w = csv_writer(out);
    w.write_record(CSV_HEADER)?;
    for rec in records {
        w.write_record(row(rec))?;
    }
    w.flush()?;
    Ok(())
}

/// Writes records to `path`, creating or truncating it.
pub fn emit_csv(records: &[SweepRecord], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    write_csv(records, BufWriter::new(file)).map_err(|source| Error::Csv {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_err(line: u64, col: &str, value: &str) -> Error {
    Error::Config(format!("CSV line {line}: bad `{col}` value `{value}`"))
}

/// Parses CSV produced by [`write_csv`].
pub fn read_csv<R: Read>(input: R) -> Result<Vec<SweepRecord>> {
    let mut reader = csv::ReaderBuilder::new().from_reader(input);
    let to_err = |e: csv::Error| Error::Config(format!("CSV: {e}"));
    let header = reader.headers().map_err(to_err)?.clone();
    if header.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(Error::Config(format!(
            "CSV header mismatch: expected {}",
            CSV_HEADER.join(",")
        )));
    }
    let mut records = Vec::new();
    for row in reader.records() {
        let row = row.map_err(to_err)?;
        let line = row.position().map_or(0, |p| p.line());
        let cell = |i: usize| &row[i];
        let opt = |i: usize| -> Result<Option<f64>> {
            let v = cell(i);
            if v.is_empty() {
                Ok(None)
            } else {
                v.parse()
                    .map(Some)
                    .map_err(|_| parse_err(line, CSV_HEADER[i], v))
            }
        };
        let req =
            |i: usize| -> Result<f64> { opt(i)?.ok_or_else(|| parse_err(line, CSV_HEADER[i], "")) };
        let n_antennas = match cell(2) {
            "" => None,
            v => Some(v.parse().map_err(|_| parse_err(line, CSV_HEADER[2], v))?),
        };
        let region = match cell(17) {
            "" => None,
            v => Some(v.parse::<FieldRegion>()?),
        };
        let approx_domain_warning = match cell(18) {
            "" => None,
            v => Some(v.parse().map_err(|_| parse_err(line, CSV_HEADER[18], v))?),
        };
        records.push(SweepRecord {
            swept_value: req(0)?,
            series_value: opt(1)?,
            n_antennas,
            theta: opt(3)?,
            psi: opt(4)?,
            r: opt(5)?,
            beta1: req(6)?,
            beta2: req(7)?,
            f_exact: opt(8)?,
            f_sum: opt(9)?,
            f_closed: opt(10)?,
            interference_power_dbm: opt(11)?,
            sinr_db: opt(12)?,
            rate: opt(13)?,
            rate_ideal: opt(14)?,
            rate_loss: opt(15)?,
            rate_loss_bound: opt(16)?,
            region,
            approx_domain_warning,
        });
    }
    Ok(records)
}
