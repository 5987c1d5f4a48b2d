use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use crate::args::Format;

/// Plain table: header plus preformatted cells.
#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Table { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

/// Result of one command: a JSON payload and, where it makes sense, a table.
pub struct Report {
    pub payload: Value,
    pub table: Table,
    /// Format used when `--out` is absent.
    pub default_format: Format,
    pub plot: Option<Plot>,
}

/// What `--gnuplot` draws.
pub struct Plot {
    /// gnuplot `using` clause, e.g. `($1/$2):5`.
    pub using: String,
    pub xlabel: &'static str,
    pub ylabel: &'static str,
    pub title: String,
}

/// Decimal with 12 significant digits; scientific outside `[1e-5, 1e15)`.
pub fn sig12(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let e = v.abs().log10().floor() as i32;
    if (-5..15).contains(&e) {
        format!("{:.*}", (11 - e).max(0) as usize, v)
    } else {
        format!("{v:.11e}")
    }
}

pub fn metadata(config: &Value, wall_time_s: f64) -> Value {
    json!({
        "tool": "ddl",
        "version": env!("CARGO_PKG_VERSION"),
        "config": config,
        "wall_time_s": wall_time_s,
    })
}

fn render(report: &Report, format: Format, meta: &Value) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json!({ "metadata": meta, "result": report.payload }))?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::new();
            s.push_str(&format!("# tool: ddl {}\n", env!("CARGO_PKG_VERSION")));
            s.push_str(&format!("# config: {}\n", serde_json::to_string(&meta["config"])?));
            s.push_str(&format!("# wall_time_s: {}\n", meta["wall_time_s"]));
            s.push_str(&report.table.header.join(","));
            s.push('\n');
            for r in &report.table.rows {
                s.push_str(&r.join(","));
                s.push('\n');
            }
            s
        }
    })
}

fn gnuplot_script(data: &Path, report: &Report) -> Option<String> {
    let p = report.plot.as_ref()?;
    Some(format!(
        "set datafile separator ','\nset datafile commentschars '#'\nset key off\nset xlabel '{}'\nset ylabel '{}'\nset title '{}'\nplot '{}' every ::1 using {} with lines\n",
        p.xlabel,
        p.ylabel,
        p.title,
        data.display(),
        p.using
    ))
}

/// Writes the report; returns the gnuplot script path when one was written.
pub fn emit(
    report: &Report,
    format: Option<Format>,
    output: Option<&Path>,
    gnuplot: bool,
    meta: &Value,
) -> Result<Option<PathBuf>> {
    let format = format.unwrap_or(report.default_format);
    let text = render(report, format, meta)?;
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    if !gnuplot {
        return Ok(None);
    }
    let Some(path) = output else {
        bail!("--gnuplot needs --output");
    };
    let Some(script) = gnuplot_script(path, report) else {
        return Ok(None);
    };
    let gp = path.with_extension("gp");
    fs::write(&gp, script).with_context(|| format!("writing {}", gp.display()))?;
    Ok(Some(gp))
}
