//! Numeric instances of the influence inequalities.
//!
//! Every report records both sides of one inequality and their ratio, the
//! empirical value of the unspecified universal constant.

use std::collections::BTreeMap;

use serde::Serialize;

mod bounds;
mod correlation;
mod junta;
pub mod quadrature;

pub use bounds::{bkkkl_report, boundary_report, kkl_sum_report, talagrand_report};
pub use correlation::{averaged_correlation_check, correlation_report, harris_kleitman_check, normalization_constant};
pub use junta::{best_junta_error, min_junta_size, JuntaSearch};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InequalityReport {
    pub name: String,
    pub n: usize,
    pub params: BTreeMap<String, String>,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: Option<f64>,
    pub degenerate: bool,
}

impl InequalityReport {
    pub fn new(name: &str, n: usize, lhs: f64, rhs: f64) -> Self {
        let ratio = lhs / rhs;
        let ok = rhs > 0.0 && ratio.is_finite();
        InequalityReport {
            name: name.into(),
            n,
            params: BTreeMap::new(),
            lhs,
            rhs,
            ratio: ok.then_some(ratio),
            degenerate: !ok,
        }
    }

    /// A report whose inequality has no meaningful instance.
    pub fn degenerate(name: &str, n: usize, reason: &str) -> Self {
        InequalityReport {
            name: name.into(),
            n,
            params: BTreeMap::from([("reason".to_string(), reason.to_string())]),
            lhs: 0.0,
            rhs: 0.0,
            ratio: None,
            degenerate: true,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn csv_header(&self) -> String {
        let mut cols = vec!["name", "n"];
        cols.extend(self.params.keys().map(String::as_str));
        cols.extend(["lhs", "rhs", "ratio"]);
        csv_line(&cols)
    }

    /// `name,n,params...,lhs,rhs,ratio`, with `degenerate` in the ratio column
    /// when there is no ratio.
    pub fn csv_row(&self) -> String {
        let mut row = vec![self.name.clone(), self.n.to_string()];
        row.extend(self.params.values().cloned());
        row.push(self.lhs.to_string());
        row.push(self.rhs.to_string());
        row.push(self.ratio.map_or("degenerate".to_string(), |r| r.to_string()));
        csv_line(&row)
    }
}

/// One CSV record without the line terminator.
pub fn csv_line<S: AsRef<[u8]>>(fields: &[S]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(fields).expect("writing to memory");
    let mut s = String::from_utf8(w.into_inner().expect("flushing to memory")).expect("fields are utf-8");
    s.pop();
    s
}
