//! Byte-stable CSV and JSON rendering.
//!
//! Numbers are written with six decimals, undefined values as `NA`.

use std::io::Write;
use std::path::Path;

use termflux_core::Occurrence;

use crate::{Error, Result};

pub const NA: &str = "NA";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

pub fn num(v: f64) -> String {
    format!("{v:.6}")
}

pub fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| NA.to_owned(), num)
}

/// Renders a header and rows as CSV.
pub fn csv_bytes<R, I>(header: &[&str], rows: R) -> Result<Vec<u8>>
where
    R: IntoIterator<Item = I>,
    I: IntoIterator<Item = String>,
{
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row.into_iter().collect::<Vec<_>>())?;
    }
    w.into_inner().map_err(|e| Error::Other(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn json_bytes<T: serde::Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(value)?;
    out.push(b'\n');
    Ok(out)
}

/// One JSON object per line.
pub fn jsonl_bytes<'a, T: serde::Serialize + 'a>(items: impl IntoIterator<Item = &'a T>) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    for item in items {
        serde_json::to_writer(&mut out, item)?;
        out.push(b'\n');
    }
    Ok(out)
}

pub fn parse_occurrences(text: &str, path: &Path) -> Result<Vec<Occurrence>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(n, l)| {
            serde_json::from_str(l)
                .map_err(|e| Error::Parse { path: path.to_path_buf(), message: format!("line {}: {e}", n + 1) })
        })
        .collect()
}

pub fn read_occurrences(path: &Path) -> Result<Vec<Occurrence>> {
    let path = crate::manifest::resolve_data_path(path);
    parse_occurrences(&crate::manifest::read_to_string(&path)?, &path)
}

/// Writes `bytes` to `path`, or to stdout when `path` is `None` or `-`.
pub fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::write(p, bytes).map_err(|e| Error::io(p, e)),
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes).and_then(|()| out.flush()).map_err(|e| Error::io("<stdout>", e))
        }
    }
}
