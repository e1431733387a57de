//! Correlation as the angle between the centred columns.
//!
//! The centred predictor i and response u are vectors of R^n. Their angle θ
//! measures how close they are to collinear, and cos θ is exactly Pearson's r.
//! [`r_textbook`] computes r a second way, from raw sums, so the two routes can
//! be checked against each other.

use std::fmt;

use serde::Serialize;

use crate::cloud::{CenteredCloud, PointCloud};
use crate::error::{Error, Result};
use crate::regress::is_degenerate;
use crate::sum::NeumaierSum;

/// Qualitative strength of a correlation, by the angle's distance from 0° or 180°.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CorrelationClass {
    TotalPositive,
    StrongPositive,
    WeakPositive,
    Null,
    WeakNegative,
    StrongNegative,
    TotalNegative,
}

impl CorrelationClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            CorrelationClass::TotalPositive => "TotalPositive",
            CorrelationClass::StrongPositive => "StrongPositive",
            CorrelationClass::WeakPositive => "WeakPositive",
            CorrelationClass::Null => "Null",
            CorrelationClass::WeakNegative => "WeakNegative",
            CorrelationClass::StrongNegative => "StrongNegative",
            CorrelationClass::TotalNegative => "TotalNegative",
        }
    }
}

impl fmt::Display for CorrelationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Band cutoffs on |r|.
///
/// Total when |r| ≥ `total`, strong when `strong` ≤ |r| < `total`, null when
/// |r| ≤ `null`, weak otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    pub total: f64,
    pub strong: f64,
    pub null: f64,
}

impl Thresholds {
    pub const DEFAULT: Thresholds = Thresholds {
        total: 0.999,
        strong: 0.8,
        null: 0.005,
    };

    pub fn classify_r(&self, r: f64) -> CorrelationClass {
        let m = r.abs();
        let positive = r > 0.0;
        if m <= self.null {
            CorrelationClass::Null
        } else if m >= self.total {
            if positive {
                CorrelationClass::TotalPositive
            } else {
                CorrelationClass::TotalNegative
            }
        } else if m >= self.strong {
            if positive {
                CorrelationClass::StrongPositive
            } else {
                CorrelationClass::StrongNegative
            }
        } else if positive {
            CorrelationClass::WeakPositive
        } else {
            CorrelationClass::WeakNegative
        }
    }
}

impl Default for Thresholds {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorrelationResult {
    /// Angle between the centred columns, in [0, 180] degrees.
    pub theta_deg: f64,
    /// cos θ, in [−1, 1].
    pub r: f64,
    pub class: CorrelationClass,
}

impl CorrelationResult {
    pub fn theta_rad(&self) -> f64 {
        self.theta_deg.to_radians()
    }
}

/// Unclamped cos θ = u·i / (‖u‖‖i‖).
fn raw_cosine(c: &CenteredCloud) -> Result<f64> {
    let ii = c.i_vec.norm_sq();
    if is_degenerate(ii, c.len(), c.max_abs_x()) {
        return Err(Error::DegenerateX);
    }
    let uu = c.u_vec.norm_sq();
    if is_degenerate(uu, c.len(), c.max_abs_y()) {
        return Err(Error::DegenerateY);
    }
    Ok(c.u_vec.dot(&c.i_vec)? / (uu.sqrt() * ii.sqrt()))
}

/// r = cos θ, clamped to [−1, 1].
pub fn r_cosine(c: &CenteredCloud) -> Result<f64> {
    Ok(raw_cosine(c)?.clamp(-1.0, 1.0))
}

/// θ = arccos(u·i / (‖u‖‖i‖)) in degrees.
pub fn theta(c: &CenteredCloud) -> Result<f64> {
    Ok(r_cosine(c)?.acos().to_degrees())
}

/// Angle, coefficient and class in one pass, using the default thresholds.
pub fn correlate(c: &CenteredCloud) -> Result<CorrelationResult> {
    correlate_with(c, &Thresholds::DEFAULT)
}

pub fn correlate_with(c: &CenteredCloud, thresholds: &Thresholds) -> Result<CorrelationResult> {
    let r = r_cosine(c)?;
    Ok(CorrelationResult {
        theta_deg: r.acos().to_degrees(),
        r,
        class: thresholds.classify_r(r),
    })
}

/// Pearson's r from raw, uncentred sums:
///
/// ```text
///            Σxy − (Σx)(Σy)/n
/// r = ─────────────────────────────────────
///     √((Σx² − (Σx)²/n) · (Σy² − (Σy)²/n))
/// ```
pub fn r_textbook(cloud: &PointCloud) -> Result<f64> {
    let n = cloud.len();
    if n < 2 {
        return Err(Error::TooFewPoints { n });
    }
    let mut sx = NeumaierSum::new();
    let mut sy = NeumaierSum::new();
    for (x, y) in cloud.points() {
        sx += x;
        sy += y;
    }
    let (sx, sy) = (sx.value(), sy.value());
    let sxx = cloud.xs().norm_sq();
    let syy = cloud.ys().norm_sq();
    let sxy = cloud.xs().dot(cloud.ys())?;
    let nf = n as f64;

    let var_x = sxx - sx * sx / nf;
    if var_x <= nf * f64::EPSILON * sxx.max(1.0) {
        return Err(Error::DegenerateX);
    }
    let var_y = syy - sy * sy / nf;
    if var_y <= nf * f64::EPSILON * syy.max(1.0) {
        return Err(Error::DegenerateY);
    }
    Ok((sxy - sx * sy / nf) / (var_x * var_y).sqrt())
}

/// Maps an angle in degrees to its qualitative class.
pub fn classify(theta_deg: f64) -> Result<CorrelationClass> {
    classify_with(theta_deg, &Thresholds::DEFAULT)
}

pub fn classify_with(theta_deg: f64, thresholds: &Thresholds) -> Result<CorrelationClass> {
    if !(0.0..=180.0).contains(&theta_deg) {
        return Err(Error::AngleOutOfRange(theta_deg));
    }
    // cos(90°) evaluates to ~6e-17, not 0, which is harmless for these bands.
    Ok(thresholds.classify_r(theta_deg.to_radians().cos()))
}
