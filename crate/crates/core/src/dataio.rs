//! Delimited-text ingestion.
//!
//! Dialect: UTF-8, LF or CRLF line endings, a single-character delimiter, no
//! quoting, '.' as the decimal point, and `#` comment lines. Blank lines are
//! skipped. Reading files is left to the caller; [`parse`] works on text.

use std::fmt;
use std::str::FromStr;

use crate::cloud::PointCloud;
use crate::error::{Error, Result};
use crate::vecspace::Vector;

/// Selects a column by zero-based position or by header name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColumnSelector {
    Index(usize),
    Name(String),
}

impl FromStr for ColumnSelector {
    type Err = std::convert::Infallible;

    /// All-digit strings select by position, anything else by name.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        Ok(match s.parse::<usize>() {
            Ok(i) => ColumnSelector::Index(i),
            Err(_) => ColumnSelector::Name(s.to_string()),
        })
    }
}

impl fmt::Display for ColumnSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColumnSelector::Index(i) => write!(f, "#{i}"),
            ColumnSelector::Name(n) => f.write_str(n),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DatasetSpec {
    pub delimiter: char,
    /// `None` detects the header from the first row.
    pub has_header: Option<bool>,
    pub x_col: ColumnSelector,
    pub y_col: ColumnSelector,
}

impl Default for DatasetSpec {
    fn default() -> Self {
        DatasetSpec {
            delimiter: ',',
            has_header: None,
            x_col: ColumnSelector::Index(0),
            y_col: ColumnSelector::Index(1),
        }
    }
}

fn parse_number(field: &str) -> Option<f64> {
    // Rust's float grammar also takes "inf" and "NaN"; only finite values are data.
    field.parse::<f64>().ok().filter(|v| v.is_finite())
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn rows(content: &str) -> impl Iterator<Item = (usize, &str)> {
    content
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}

fn split(line: &str, delimiter: char) -> Vec<&str> {
    line.split(delimiter).map(str::trim).collect()
}

/// True iff some field of the first row is not a number.
pub fn auto_detect_header(content: &str) -> bool {
    auto_detect_header_with(content, ',')
}

pub fn auto_detect_header_with(content: &str, delimiter: char) -> bool {
    rows(content)
        .next()
        .is_some_and(|(_, line)| split(line, delimiter).iter().any(|f| parse_number(f).is_none()))
}

fn resolve(sel: &ColumnSelector, header: Option<&[&str]>) -> Result<usize> {
    match sel {
        ColumnSelector::Index(i) => Ok(*i),
        ColumnSelector::Name(name) => header
            .and_then(|h| h.iter().position(|f| f == name))
            .ok_or_else(|| Error::ColumnNotFound(name.clone())),
    }
}

/// Parses `content` into a point cloud, one point per data row in file order.
pub fn parse(spec: &DatasetSpec, content: &str) -> Result<PointCloud> {
    if spec.x_col == spec.y_col {
        return Err(Error::SameColumn);
    }
    let has_header = spec
        .has_header
        .unwrap_or_else(|| auto_detect_header_with(content, spec.delimiter));

    let mut lines = rows(content).peekable();
    let header: Option<Vec<&str>> = if has_header {
        lines.next().map(|(_, l)| split(l, spec.delimiter))
    } else {
        None
    };
    let x_idx = resolve(&spec.x_col, header.as_deref())?;
    let y_idx = resolve(&spec.y_col, header.as_deref())?;
    if x_idx == y_idx {
        return Err(Error::SameColumn);
    }
    if let Some(h) = &header {
        for (sel, idx) in [(&spec.x_col, x_idx), (&spec.y_col, y_idx)] {
            if idx >= h.len() {
                return Err(Error::ColumnNotFound(sel.to_string()));
            }
        }
    }
    let needed = x_idx.max(y_idx) + 1;

    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (line_no, line) in lines {
        let fields = split(line, spec.delimiter);
        if fields.len() < needed {
            return Err(Error::RaggedRow {
                line: line_no,
                found: fields.len(),
                needed,
            });
        }
        let value = |idx: usize| {
            let field = fields[idx];
            parse_number(field).ok_or_else(|| Error::Parse {
                line: line_no,
                column: idx + 1,
                reason: format!("{field:?} is not a finite number"),
            })
        };
        xs.push(value(x_idx)?);
        ys.push(value(y_idx)?);
    }
    if xs.is_empty() {
        return Err(Error::EmptyDataset);
    }
    PointCloud::new(Vector::new(xs)?, Vector::new(ys)?)
}

/// Writes a cloud back out as two-column delimited text with a header.
///
/// Values use Rust's shortest round-trip formatting, so [`parse`] reproduces
/// them bit for bit.
pub fn serialize(cloud: &PointCloud, x_name: &str, y_name: &str, delimiter: char) -> String {
    let mut out = format!("{x_name}{delimiter}{y_name}\n");
    for (x, y) in cloud.points() {
        out.push_str(&format!("{x}{delimiter}{y}\n"));
    }
    out
}
