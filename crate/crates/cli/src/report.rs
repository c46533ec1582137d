//! Report assembly and rendering. Every command produces one `Report`;
//! the JSON form embeds the resolved configuration and is byte-stable for
//! a fixed configuration and seed.

use std::path::Path;

use serde_json::{json, Map, Value};

use stringval::polytope::RationalPolytope;
use stringval::ratio::format_rat;
use stringval::Rat;

use crate::config::{CliError, CliResult, Format};

/// Bumped whenever the JSON report layout changes.
pub const ARTIFACT_VERSION: &str = "1";

/// A rendered command outcome: a flat summary, one main table, and a
/// structured payload. `ok` drives the process exit code.
pub struct Report {
    pub command: String,
    pub ok: bool,
    pub config: Value,
    pub summary: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub data: Value,
}

impl Report {
    pub fn new(command: &str, config: Value) -> Report {
        Report {
            command: command.to_string(),
            ok: true,
            config,
            summary: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            data: Value::Null,
        }
    }

    pub fn push_summary(&mut self, key: &str, value: impl ToString) {
        self.summary.push((key.to_string(), value.to_string()));
    }

    pub fn json(&self) -> Value {
        let mut summary = Map::new();
        for (k, v) in &self.summary {
            summary.insert(k.clone(), Value::String(v.clone()));
        }
        json!({
            "artifact_version": ARTIFACT_VERSION,
            "command": self.command,
            "ok": self.ok,
            "config": self.config,
            "summary": Value::Object(summary),
            "table": { "columns": self.columns, "rows": self.rows },
            "data": self.data,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json())
                    .expect("report serialization cannot fail");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Table => self.render_table(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        if self.columns.is_empty() {
            out.push_str("key,value\n");
            for (k, v) in &self.summary {
                out.push_str(&format!("{},{}\n", csv_cell(k), csv_cell(v)));
            }
        } else {
            let header: Vec<String> = self.columns.iter().map(|c| csv_cell(c)).collect();
            out.push_str(&header.join(","));
            out.push('\n');
            for row in &self.rows {
                let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        out
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("ok: {}\n", self.ok));
        for (k, v) in &self.summary {
            out.push_str(&format!("{k}: {v}\n"));
        }
        if !self.columns.is_empty() {
            out.push('\n');
            let mut widths: Vec<usize> = self.columns.iter().map(String::len).collect();
            for row in &self.rows {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            let fmt_row = |cells: &[String]| -> String {
                let padded: Vec<String> = cells
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{:width$}", c, width = widths[i]))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            out.push_str(&fmt_row(&self.columns));
            out.push('\n');
            out.push_str(&"-".repeat(widths.iter().sum::<usize>() + 2 * (widths.len() - 1)));
            out.push('\n');
            for row in &self.rows {
                out.push_str(&fmt_row(row));
                out.push('\n');
            }
        }
        out
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Prints the report and, when `STRINGVAL_OUTDIR` is set, writes the JSON
/// artifact under `<dir>/<command>.json`.
pub fn emit(report: &Report, format: Format) -> CliResult<()> {
    print!("{}", report.render(format));
    if let Ok(dir) = std::env::var("STRINGVAL_OUTDIR") {
        if !dir.is_empty() {
            std::fs::create_dir_all(&dir).map_err(|e| {
                CliError::Usage(format!("cannot create output directory {dir:?}: {e}"))
            })?;
            let path = Path::new(&dir).join(format!("{}.json", report.command));
            std::fs::write(&path, report.render(Format::Json)).map_err(|e| {
                CliError::Usage(format!("cannot write {}: {e}", path.display()))
            })?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// JSON value helpers
// ---------------------------------------------------------------------------

pub fn rat_json(x: &Rat) -> Value {
    Value::String(format_rat(x))
}

pub fn rat_vec_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_json).collect())
}

pub fn matrix_json(m: &[Vec<Rat>]) -> Value {
    Value::Array(m.iter().map(|row| rat_vec_json(row)).collect())
}

/// Polytope as JSON: vertices as rational-string tuples, facets and
/// equations as normal/rhs pairs.
pub fn polytope_json(p: &RationalPolytope) -> Value {
    let facet = |f: &stringval::polytope::Facet| {
        json!({ "normal": rat_vec_json(&f.normal), "rhs": rat_json(&f.rhs) })
    };
    json!({
        "ambient": p.ambient,
        "dim": p.dim,
        "vertices": p.vertices.iter().map(|v| rat_vec_json(v)).collect::<Vec<_>>(),
        "facets": p.facets.iter().map(facet).collect::<Vec<_>>(),
        "equations": p.equations.iter().map(facet).collect::<Vec<_>>(),
    })
}

/// Human-readable tuple like "(1, 0, 2)".
pub fn tuple_str<T: std::fmt::Display>(xs: &[T]) -> String {
    let inner: Vec<String> = xs.iter().map(T::to_string).collect();
    format!("({})", inner.join(", "))
}

/// Human-readable rational vector.
pub fn rat_tuple_str(xs: &[Rat]) -> String {
    let inner: Vec<String> = xs.iter().map(format_rat).collect();
    format!("({})", inner.join(", "))
}
