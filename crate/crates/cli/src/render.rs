use std::collections::BTreeSet;
use std::io::Write;
use std::path::Path;

use hinfluence::InequalityReport;
use serde_json::{Map, Value};

use crate::args::Format;
use crate::Result;

fn csv_text<S: AsRef<[u8]>>(header: &[S], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("fields are utf-8")
}

/// A table of string cells, rendered as CSV or as JSON lines.
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Csv => out = csv_text(&self.columns, self.rows.iter().cloned()),
            Format::Json => {
                for row in &self.rows {
                    let obj: Map<String, Value> =
                        self.columns.iter().cloned().zip(row.iter().map(|c| Value::String(c.clone()))).collect();
                    out.push_str(&Value::Object(obj).to_string());
                    out.push('\n');
                }
            }
        }
        out
    }
}

/// Reports as CSV (`name,n,params...,lhs,rhs,ratio` over the union of
/// parameter keys) or as one JSON record per line.
pub fn reports(reports: &[InequalityReport], format: Format) -> String {
    match format {
        Format::Json => reports.iter().map(|r| r.to_json() + "\n").collect(),
        Format::Csv => {
            let keys: BTreeSet<&String> = reports.iter().flat_map(|r| r.params.keys()).collect();
            let mut header = vec!["name", "n"];
            header.extend(keys.iter().map(|k| k.as_str()));
            header.extend(["lhs", "rhs", "ratio"]);
            let rows = reports.iter().map(|r| {
                let mut row = vec![r.name.clone(), r.n.to_string()];
                row.extend(keys.iter().map(|k| r.params.get(*k).cloned().unwrap_or_default()));
                row.push(r.lhs.to_string());
                row.push(r.rhs.to_string());
                row.push(r.ratio.map_or("degenerate".to_string(), |x| x.to_string()));
                row
            });
            csv_text(&header, rows)
        }
    }
}

pub fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}
