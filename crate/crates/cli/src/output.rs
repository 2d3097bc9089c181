use std::io::Write;

use serde_json::{json, Map, Value};

use crate::config::{Format, RunConfig};
use crate::CliError;

/// Numeric result table plus derived scalars (maxima, deviations, fitted values).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub meta: Vec<(String, String)>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Self::default()
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn meta(&mut self, key: &str, value: f64) {
        self.meta.push((key.to_string(), fmt_num(value)));
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }
}

/// Shortest representation that parses back to the same `f64`.
pub fn fmt_num(v: f64) -> String {
    format!("{v:?}")
}

pub fn write_table(cfg: &RunConfig, t: &Table, out: &mut impl Write) -> Result<(), CliError> {
    match cfg.format {
        Format::Csv => write_csv(cfg, t, out),
        Format::Json => write_json(cfg, t, out),
    }
}

fn write_csv(cfg: &RunConfig, t: &Table, out: &mut impl Write) -> Result<(), CliError> {
    for (k, v) in cfg.header().iter().chain(&t.meta) {
        writeln!(out, "# {k}={v}")?;
    }
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(&t.columns)?;
    for row in &t.rows {
        w.write_record(row.iter().map(|v| fmt_num(*v)))?;
    }
    w.flush()?;
    Ok(())
}

fn write_json(cfg: &RunConfig, t: &Table, out: &mut impl Write) -> Result<(), CliError> {
    let obj = |kv: &[(String, String)]| {
        Value::Object(
            kv.iter()
                .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                .collect::<Map<_, _>>(),
        )
    };
    let doc = json!({
        "config": obj(&cfg.header()),
        "meta": obj(&t.meta),
        "columns": t.columns,
        "rows": t.rows,
    });
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    writeln!(out)?;
    Ok(())
}

/// Parses CSV written by [`write_table`] back into header pairs and a table.
pub fn read_csv(text: &str) -> Result<(Vec<(String, String)>, Table), CliError> {
    let mut header = Vec::new();
    let mut body = String::new();
    for line in text.lines() {
        match line.strip_prefix("# ") {
            Some(kv) => {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| CliError::Validation(format!("bad header line {line:?}")))?;
                header.push((k.to_string(), v.to_string()));
            }
            None => {
                body.push_str(line);
                body.push('\n');
            }
        }
    }
    let mut r = csv::Reader::from_reader(body.as_bytes());
    let columns = r.headers()?.iter().map(String::from).collect();
    let mut rows = Vec::new();
    for rec in r.records() {
        let row = rec?
            .iter()
            .map(|s| {
                s.parse::<f64>()
                    .map_err(|e| CliError::Validation(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok((
        header,
        Table {
            columns,
            rows,
            meta: Vec::new(),
        },
    ))
}
