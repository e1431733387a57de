//! Fit summaries for people and for programs.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cloud::PointCloud;
use crate::correlate::{self, CorrelationClass};
use crate::diagnostics;
use crate::error::{Error, Result};
use crate::regress::{self, FitResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// The fitted line `y = slope·x + intercept`, shown at four decimals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Equation {
    pub slope: f64,
    pub intercept: f64,
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.intercept.is_sign_negative() { '-' } else { '+' };
        write!(f, "y = {:.4}·x {} {:.4}", self.slope, sign, self.intercept.abs())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationParseError(String);

impl fmt::Display for EquationParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed equation: {}", self.0)
    }
}

impl std::error::Error for EquationParseError {}

impl FromStr for Equation {
    type Err = EquationParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bad = || EquationParseError(s.to_string());
        let rest = s.trim().strip_prefix("y = ").ok_or_else(bad)?;
        let (slope, rest) = rest.split_once("·x ").ok_or_else(bad)?;
        let (sign, intercept) = rest.split_once(' ').ok_or_else(bad)?;
        let slope: f64 = slope.parse().map_err(|_| bad())?;
        let magnitude: f64 = intercept.parse().map_err(|_| bad())?;
        let intercept = match sign {
            "+" => magnitude,
            "-" => -magnitude,
            _ => return Err(bad()),
        };
        Ok(Equation { slope, intercept })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// Normalised w·i and w·u, both ≈ 0 after centring.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OnesOrthogonality {
    pub i: f64,
    pub u: f64,
}

/// Everything the `fit` command reports. JSON keys follow field order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub n: usize,
    pub centroid: Point,
    pub slope: f64,
    pub intercept: f64,
    pub theta_deg: f64,
    pub r: f64,
    pub class: CorrelationClass,
    pub sse: f64,
    pub u_dot_i: f64,
    pub i_norm_sq: f64,
    pub i_norm: f64,
    pub u_norm: f64,
    /// (u − j)·i / (‖u‖‖i‖)
    pub residual_dot_i: f64,
    pub ones_orthogonality: OnesOrthogonality,
    pub equation: String,
}

impl Report {
    pub fn from_fit(fit: &FitResult) -> Result<Self> {
        let corr = correlate::correlate(&fit.centered)?;
        let diag = diagnostics::orthogonality_report(fit);
        let c = &fit.centered;
        let report = Report {
            n: fit.len(),
            centroid: Point {
                x: c.centroid_x,
                y: c.centroid_y,
            },
            slope: fit.slope,
            intercept: fit.intercept,
            theta_deg: corr.theta_deg,
            r: corr.r,
            class: corr.class,
            sse: diag.sse,
            u_dot_i: c.u_vec.dot(&c.i_vec)?,
            i_norm_sq: c.i_vec.norm_sq(),
            i_norm: c.i_vec.norm(),
            u_norm: c.u_vec.norm(),
            residual_dot_i: diag.residual_dot_i_normalized,
            ones_orthogonality: OnesOrthogonality {
                i: diag.ones_dot_i_normalized,
                u: diag.ones_dot_u_normalized,
            },
            equation: Equation {
                slope: fit.slope,
                intercept: fit.intercept,
            }
            .to_string(),
        };
        if let Some((index, value)) = report.numbers().into_iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFinite { index, value });
        }
        Ok(report)
    }

    /// Fits the cloud and summarises the result.
    pub fn build(cloud: &PointCloud) -> Result<Self> {
        Self::from_fit(&regress::fit(cloud)?)
    }

    fn numbers(&self) -> [f64; 14] {
        [
            self.centroid.x,
            self.centroid.y,
            self.slope,
            self.intercept,
            self.theta_deg,
            self.r,
            self.sse,
            self.u_dot_i,
            self.i_norm_sq,
            self.i_norm,
            self.u_norm,
            self.residual_dot_i,
            self.ones_orthogonality.i,
            self.ones_orthogonality.u,
        ]
    }
}

/// Fixed-point with at most `places` decimals, trailing zeros dropped.
///
/// Exact ties round to even, as `format!` does.
pub fn format_decimal(value: f64, places: usize) -> String {
    let s = format!("{value:.places$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

fn f6(v: f64) -> String {
    format_decimal(v, 6)
}

pub fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report fields are finite");
            s.push('\n');
            s
        }
        Format::Text => render_text(report),
    }
}

fn render_text(r: &Report) -> String {
    let rows: Vec<(&str, String)> = vec![
        ("n", r.n.to_string()),
        ("centroid", format!("({}, {})", f6(r.centroid.x), f6(r.centroid.y))),
        ("slope", format!("a = {:.4}", r.slope)),
        ("intercept", format!("b = {:.4}", r.intercept)),
        ("equation", r.equation.clone()),
        ("theta_deg", format!("{:.2}", r.theta_deg)),
        ("r", f6(r.r)),
        ("class", r.class.to_string()),
        ("sse", f6(r.sse)),
        ("u_dot_i", f6(r.u_dot_i)),
        ("i_norm_sq", f6(r.i_norm_sq)),
        ("i_norm", f6(r.i_norm)),
        ("u_norm", f6(r.u_norm)),
        ("residual_dot_i", format!("{:.3e}", r.residual_dot_i)),
        ("ones_dot_i", format!("{:.3e}", r.ones_orthogonality.i)),
        ("ones_dot_u", format!("{:.3e}", r.ones_orthogonality.u)),
    ];
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (key, value) in rows {
        out.push_str(&format!("{key:>width$}: {value}\n"));
    }
    out
}
