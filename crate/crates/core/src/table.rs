//! Deterministic tabular output (CSV, JSON, aligned text).
//!
//! Floats are written with 17 significant digits in scientific notation so
//! every f64 round-trips and output is byte-identical across runs.

use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width must match the header"
        );
        self.rows.push(row);
    }
}

/// 17 significant digits, e.g. `1.1949519617112464e3`.
pub fn format_float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "NaN".to_string()
    } else if v > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

fn plain(cell: &Cell) -> String {
    match cell {
        Cell::Int(v) => v.to_string(),
        Cell::Float(v) => format_float(*v),
        Cell::Text(s) => s.clone(),
        Cell::Bool(b) => b.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// JSON string literal with escaping.
pub fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// JSON scalar. Non-finite floats become `null`.
pub fn json_value(cell: &Cell) -> String {
    match cell {
        Cell::Float(v) if !v.is_finite() => "null".to_string(),
        Cell::Text(s) => json_string(s),
        other => plain(other),
    }
}

pub fn emit_table(table: &Table, format: Format) -> String {
    match format {
        Format::Csv => emit_csv(table),
        Format::Json => emit_json(table),
        Format::Text => emit_text(table),
    }
}

fn emit_csv(table: &Table) -> String {
    let mut out = String::new();
    let header: Vec<_> = table.columns.iter().map(|c| csv_field(c)).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in &table.rows {
        let fields: Vec<_> = row.iter().map(|c| csv_field(&plain(c))).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

fn emit_json(table: &Table) -> String {
    let mut out = String::from("[");
    for (i, row) in table.rows.iter().enumerate() {
        out.push_str(if i == 0 { "\n  {" } else { ",\n  {" });
        for (j, (name, cell)) in table.columns.iter().zip(row).enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{}: {}", json_string(name), json_value(cell));
        }
        out.push('}');
    }
    if !table.rows.is_empty() {
        out.push('\n');
    }
    out.push_str("]\n");
    out
}

fn emit_text(table: &Table) -> String {
    let cells: Vec<Vec<String>> = table
        .rows
        .iter()
        .map(|r| r.iter().map(plain).collect())
        .collect();
    let widths: Vec<usize> = table
        .columns
        .iter()
        .enumerate()
        .map(|(j, c)| {
            cells
                .iter()
                .map(|r| r[j].chars().count())
                .chain([c.chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |fields: Vec<&str>| {
        let padded: Vec<String> = fields
            .iter()
            .zip(&widths)
            .map(|(f, w)| format!("{f:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(table.columns.iter().map(String::as_str).collect());
    for r in &cells {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(["v", "E"]);
        t.push(vec![0u32.into(), 1.5f64.into()]);
        t
    }

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(format_float(1.0 / 3.0), "3.3333333333333331e-1");
        assert_eq!(format_float(1195.0), "1.1950000000000000e3");
        let s = format_float(0.1);
        assert_eq!(s.parse::<f64>().unwrap(), 0.1);
    }

    #[test]
    fn empty_table_is_header_only() {
        let t = Table::new(["a", "b"]);
        assert_eq!(emit_table(&t, Format::Csv), "a,b\n");
        assert_eq!(emit_table(&t, Format::Json), "[]\n");
    }

    #[test]
    fn one_row_csv() {
        assert_eq!(
            emit_table(&sample(), Format::Csv),
            "v,E\n0,1.5000000000000000e0\n"
        );
    }

    #[test]
    fn json_rows_are_objects() {
        let json = emit_table(&sample(), Format::Json);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v[0]["v"], 0);
        assert_eq!(v[0]["E"], 1.5);
    }

    #[test]
    fn text_is_aligned() {
        let text = emit_table(&sample(), Format::Text);
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0].len(), lines[1].len());
    }

    #[test]
    fn deterministic() {
        for f in [Format::Csv, Format::Json, Format::Text] {
            assert_eq!(emit_table(&sample(), f), emit_table(&sample(), f));
        }
    }

    #[test]
    fn csv_quotes_commas() {
        let mut t = Table::new(["name"]);
        t.push(vec!["a,b".into()]);
        assert_eq!(emit_table(&t, Format::Csv), "name\n\"a,b\"\n");
    }
}
