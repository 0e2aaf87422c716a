//! Table files.
//!
//! The text form is the order on the first line followed by one row per
//! element, entries separated by spaces, each row optionally ending in
//! `# label`:
//!
//! ```text
//! 2
//! 0 0  # x
//! 1 1  # y
//! ```
//!
//! The structured form is a JSON object with `table`, optional `labels`,
//! and `name` / `source` metadata.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{validate, CayleyTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableFile {
    pub table: CayleyTable,
    pub name: Option<String>,
    pub source: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct TableRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<String>,
    order: usize,
    table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the text form.
pub fn parse_text(input: &str) -> Result<CayleyTable> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing order"))?;
    let n: usize = header.trim().parse().map_err(|_| {
        parse_error(
            header_line,
            format!("expected an order, got {:?}", header.trim()),
        )
    })?;
    if n == 0 {
        return Err(parse_error(header_line, "order must be positive"));
    }
    let mut rows = Vec::with_capacity(n);
    let mut labels: Vec<Option<String>> = Vec::with_capacity(n);
    for _ in 0..n {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_error(header_line + rows.len() + 1, "missing table row"))?;
        let (body, label) = match line.split_once('#') {
            Some((body, label)) => (body, Some(label.trim().to_string())),
            None => (line, None),
        };
        let row: Vec<usize> = body
            .split_whitespace()
            .map(|tok| {
                tok.parse()
                    .map_err(|_| parse_error(line_no, format!("bad entry {tok:?}")))
            })
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(parse_error(
                line_no,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        rows.push(row);
        labels.push(label);
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_error(line_no, "trailing content after the table"));
    }
    let table = validate(&rows)?;
    if labels.iter().all(Option::is_none) {
        return Ok(table);
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.unwrap_or_else(|| i.to_string()))
        .collect();
    table.with_labels(labels)
}

/// Writes the text form; [`parse_text`] inverts it exactly.
pub fn to_text(table: &CayleyTable) -> String {
    let mut out = format!("{}\n", table.order());
    for a in table.elements() {
        let row: Vec<String> = table.row(a).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        if let Some(labels) = table.labels() {
            let _ = write!(out, " # {}", labels[a]);
        }
        out.push('\n');
    }
    out
}

/// Parses either form, detected by a leading `{`.
pub fn parse_table_file(input: &str) -> Result<TableFile> {
    if input.trim_start().starts_with('{') {
        let record: TableRecord =
            serde_json::from_str(input).map_err(|e| parse_error(e.line(), e.to_string()))?;
        if record.table.len() != record.order {
            return Err(parse_error(
                1,
                format!(
                    "order {} does not match {} rows",
                    record.order,
                    record.table.len()
                ),
            ));
        }
        let mut table = validate(&record.table)?;
        if let Some(labels) = record.labels {
            table = table.with_labels(labels)?;
        }
        return Ok(TableFile {
            table,
            name: record.name,
            source: record.source,
        });
    }
    Ok(TableFile {
        table: parse_text(input)?,
        name: None,
        source: None,
    })
}

pub fn to_json_record(file: &TableFile) -> String {
    let record = TableRecord {
        name: file.name.clone(),
        source: file.source.clone(),
        order: file.table.order(),
        table: file.table.rows(),
        labels: file.table.labels().map(<[String]>::to_vec),
    };
    serde_json::to_string(&record).expect("records serialize")
}
