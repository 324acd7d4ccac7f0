//! Monotonization by shifting, and the column-exchange algorithm that
//! realises a row shift as a sequence of steps that never increase the
//! column-direction influence for a concave kernel.

use std::fmt;

use crate::cube::check_coordinate;
use crate::error::{Error, Result};
use crate::grid::{Cells, GridFunction, Lines};

/// Pushes the ones of every fiber in direction `k` to its upper end.
///
/// A line with `c` ones among `r_k` cells becomes zero on its first
/// `r_k - c` cells and one on the last `c`, so every fiber mean is kept.
pub fn monotonize_coord(f: &GridFunction, k: usize) -> Result<GridFunction> {
    check_coordinate(k, f.arity())?;
    let axis = k - 1;
    match &f.cells {
        Cells::Dense(bits) => {
            let lines = Lines::new(&f.resolutions, axis);
            let mut out = bits.clone();
            for l in 0..lines.count {
                let base = lines.base(l);
                let c = (0..lines.len).filter(|&j| bits[base + j * lines.stride]).count();
                for j in 0..lines.len {
                    out.set(base + j * lines.stride, j >= lines.len - c);
                }
            }
            Ok(GridFunction { resolutions: f.resolutions.clone(), cells: Cells::Dense(out) })
        }
        Cells::Product(axes) => {
            let mut axes = axes.clone();
            let a = &mut axes[axis];
            let c = a.count_ones();
            let len = a.len();
            for j in 0..len {
                a.set(j, j >= len - c);
            }
            Ok(GridFunction { resolutions: f.resolutions.clone(), cells: Cells::Product(axes) })
        }
    }
}

/// Shifts in every coordinate, in the order `1, 2, ..., n`.
pub fn monotonize(f: &GridFunction) -> Result<GridFunction> {
    let mut g = f.clone();
    for k in 1..=f.arity() {
        g = monotonize_coord(&g, k)?;
    }
    Ok(g)
}

pub fn is_monotone(f: &GridFunction) -> bool {
    f.is_monotone()
}

/// One step of the column-exchange algorithm. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShiftStep {
    /// Permutes the leading `perm.len()` columns: new column `j` is old column `perm[j]`.
    ColumnReorder(Vec<usize>),
    /// Swaps a one at `(row, from)` with the zero at `(row, to)`.
    MoveOne { row: usize, from: usize, to: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftTrace {
    pub initial: Vec<Vec<bool>>,
    pub steps: Vec<ShiftStep>,
    pub final_matrix: Vec<Vec<bool>>,
}

fn column_count(a: &[Vec<bool>], j: usize) -> usize {
    a.iter().filter(|row| row[j]).count()
}

impl ShiftStep {
    /// Applies the step in place.
    pub fn apply(&self, a: &mut [Vec<bool>]) -> Result<()> {
        match self {
            ShiftStep::ColumnReorder(perm) => {
                let width = a.first().map_or(0, |r| r.len());
                let mut seen = vec![false; perm.len()];
                if perm.len() > width || perm.iter().any(|&p| p >= perm.len() || std::mem::replace(&mut seen[p], true)) {
                    return Err(Error::param(format!("invalid column permutation {perm:?}")));
                }
                for row in a.iter_mut() {
                    let old: Vec<bool> = row[..perm.len()].to_vec();
                    for (j, &p) in perm.iter().enumerate() {
                        row[j] = old[p];
                    }
                }
            }
            ShiftStep::MoveOne { row, from, to } => {
                let r = a
                    .get_mut(*row)
                    .ok_or_else(|| Error::param(format!("row {row} out of range")))?;
                if *from >= r.len() || *to >= r.len() || !r[*from] || r[*to] {
                    return Err(Error::param(format!(
                        "move in row {row} from {from} to {to} does not swap a one with a zero"
                    )));
                }
                r.swap(*from, *to);
            }
        }
        Ok(())
    }
}

impl fmt::Display for ShiftStep {
    /// Line-oriented replay format, 1-based: `reorder 2,1,3` / `move r=3 from=5 to=6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShiftStep::ColumnReorder(perm) => {
                let p: Vec<String> = perm.iter().map(|j| (j + 1).to_string()).collect();
                write!(f, "reorder {}", p.join(","))
            }
            ShiftStep::MoveOne { row, from, to } => {
                write!(f, "move r={} from={} to={}", row + 1, from + 1, to + 1)
            }
        }
    }
}

fn parse_one_based(s: &str, line: usize) -> Result<usize> {
    match s.trim().parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v - 1),
        _ => Err(Error::parse(line, format!("expected a positive index, found `{s}`"))),
    }
}

impl ShiftTrace {
    /// Replays the steps from `initial`.
    pub fn replay(initial: &[Vec<bool>], steps: &[ShiftStep]) -> Result<Vec<Vec<bool>>> {
        let mut a = initial.to_vec();
        for s in steps {
            s.apply(&mut a)?;
        }
        Ok(a)
    }

    /// True when replaying the steps from `initial` reproduces `final_matrix`.
    pub fn validate(&self) -> bool {
        Self::replay(&self.initial, &self.steps).is_ok_and(|m| m == self.final_matrix)
    }

    /// Steps only, one per line.
    pub fn steps_to_text(&self) -> String {
        self.steps.iter().map(|s| format!("{s}\n")).collect()
    }

    pub fn parse_steps(text: &str) -> Result<Vec<ShiftStep>> {
        let mut steps = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let n = i + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("reorder ") {
                let perm = rest
                    .split(',')
                    .map(|s| parse_one_based(s, n))
                    .collect::<Result<Vec<_>>>()?;
                steps.push(ShiftStep::ColumnReorder(perm));
            } else if let Some(rest) = line.strip_prefix("move ") {
                let mut row = None;
                let mut from = None;
                let mut to = None;
                for field in rest.split_whitespace() {
                    match field.split_once('=') {
                        Some(("r", v)) => row = Some(parse_one_based(v, n)?),
                        Some(("from", v)) => from = Some(parse_one_based(v, n)?),
                        Some(("to", v)) => to = Some(parse_one_based(v, n)?),
                        _ => return Err(Error::parse(n, format!("unknown field `{field}`"))),
                    }
                }
                match (row, from, to) {
                    (Some(row), Some(from), Some(to)) => steps.push(ShiftStep::MoveOne { row, from, to }),
                    _ => return Err(Error::parse(n, "move needs r=, from= and to=")),
                }
            } else {
                return Err(Error::parse(n, format!("unrecognised step `{line}`")));
            }
        }
        Ok(steps)
    }
}

/// Runs the column-exchange form of the row shift on a square matrix.
///
/// For `i = 0, ..., r-1`, working on columns `0..r-i`: when the last of
/// these columns does not already hold the most ones, the columns are
/// stably sorted by increasing count; then every zero of that column whose
/// row still has a one further left is swapped with the rightmost such one.
pub fn shift_trace(a: &[Vec<bool>]) -> Result<ShiftTrace> {
    let r = a.len();
    if a.iter().any(|row| row.len() != r) {
        return Err(Error::param("shift trace needs a square matrix"));
    }
    let mut m = a.to_vec();
    let mut steps = Vec::new();
    for i in 0..r {
        let width = r - i;
        let last = width - 1;
        let counts: Vec<usize> = (0..width).map(|j| column_count(&m, j)).collect();
        let max = counts.iter().copied().max().unwrap_or(0);
        if counts[last] < max {
            let mut perm: Vec<usize> = (0..width).collect();
            perm.sort_by_key(|&j| counts[j]);
            let step = ShiftStep::ColumnReorder(perm);
            step.apply(&mut m)?;
            steps.push(step);
        }
        for row in 0..r {
            if m[row][last] {
                continue;
            }
            if let Some(from) = (0..last).rev().find(|&j| m[row][j]) {
                let step = ShiftStep::MoveOne { row, from, to: last };
                step.apply(&mut m)?;
                steps.push(step);
            }
        }
    }
    Ok(ShiftTrace { initial: a.to_vec(), steps, final_matrix: m })
}
