//! Text output formats: csv, markdown, latex for labeled tables, and the
//! two-column b-file form for single sequences.

use std::fmt::Write as _;

use treecount::ExactInt;

/// A labeled table with a row symbol (usually `m`) and a column symbol
/// (usually `n`); `None` cells render blank.
#[derive(Debug, Clone)]
pub struct Table {
    pub row_symbol: String,
    pub col_symbol: String,
    pub col_labels: Vec<String>,
    pub rows: Vec<(String, Vec<Option<String>>)>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (_, cells) in &self.rows {
            let line: Vec<&str> = cells.iter().map(|c| c.as_deref().unwrap_or("")).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "| {}\\{} | {} |",
            self.row_symbol,
            self.col_symbol,
            self.col_labels.join(" | ")
        );
        let _ = writeln!(out, "| --- |{}", " ---: |".repeat(self.col_labels.len()));
        for (label, cells) in &self.rows {
            let rendered: Vec<&str> = cells.iter().map(|c| c.as_deref().unwrap_or("")).collect();
            let _ = writeln!(out, "| {} | {} |", label, rendered.join(" | "));
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "\\begin{{tabular}}{{c|{}}}",
            "r".repeat(self.col_labels.len())
        );
        let _ = writeln!(
            out,
            "${} \\backslash {}$ & {} \\\\",
            self.row_symbol,
            self.col_symbol,
            self.col_labels.join(" & ")
        );
        let _ = writeln!(out, "\\hline");
        for (label, cells) in &self.rows {
            let rendered: Vec<&str> = cells.iter().map(|c| c.as_deref().unwrap_or("")).collect();
            let _ = writeln!(out, "{} & {} \\\\", label, rendered.join(" & "));
        }
        let _ = writeln!(out, "\\end{{tabular}}");
        out
    }
}

/// One `index value` pair per line, indices counting up from `start`.
pub fn bfile(start: i64, values: &[ExactInt]) -> String {
    let mut out = String::new();
    for (offset, value) in values.iter().enumerate() {
        let _ = writeln!(out, "{} {}", start + offset as i64, value);
    }
    out
}

/// Parses the format written by [`bfile`]; blank lines and `#` comments are
/// skipped, as in the wild.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, ExactInt)>, String> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let index = fields
            .next()
            .and_then(|f| f.parse::<i64>().ok())
            .ok_or_else(|| format!("bad b-file index in line {line:?}"))?;
        let value = fields
            .next()
            .and_then(|f| f.parse::<ExactInt>().ok())
            .ok_or_else(|| format!("bad b-file value in line {line:?}"))?;
        if fields.next().is_some() {
            return Err(format!("trailing fields in b-file line {line:?}"));
        }
        out.push((index, value));
    }
    Ok(out)
}
