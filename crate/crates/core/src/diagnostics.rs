//! Residual diagnostics for a fitted line.
//!
//! The residual vector u − j is normal to the centred predictor i, and both
//! centred columns are normal to the all-ones vector w, so i, j and u all lie
//! in the (n − 1)-dimensional hyperplane w⊥. The report exposes those dot
//! products raw and divided by the matching norms.

use serde::Serialize;

use crate::regress::FitResult;
use crate::vecspace::Vector;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiagnosticsReport {
    /// u − j; component k equals yₖ − a·xₖ − b.
    pub residual: Vector,
    /// Sum of squared residuals.
    pub sse: f64,
    /// (u − j)·i
    pub residual_dot_i: f64,
    /// w·i
    pub ones_dot_i: f64,
    /// w·u
    pub ones_dot_u: f64,
    /// (u − j)·i / (‖u‖‖i‖)
    pub residual_dot_i_normalized: f64,
    /// w·i / (‖w‖‖i‖)
    pub ones_dot_i_normalized: f64,
    /// w·u / (‖w‖‖u‖); zero when u is the zero vector.
    pub ones_dot_u_normalized: f64,
}

pub fn residuals(fit: &FitResult) -> Vector {
    fit.centered
        .u_vec
        .sub(&fit.j_vec)
        .expect("fit vectors share the cloud's dimension")
}

/// Sum of squared residuals S = Σ dᵢ².
pub fn sse(fit: &FitResult) -> f64 {
    residuals(fit).norm_sq()
}

fn normalized(value: f64, denom: f64) -> f64 {
    if denom > 0.0 {
        value / denom
    } else {
        value
    }
}

pub fn orthogonality_report(fit: &FitResult) -> DiagnosticsReport {
    let c = &fit.centered;
    let residual = residuals(fit);
    let w = Vector::ones(c.len()).expect("fitted clouds are non-empty");

    let residual_dot_i = residual.dot(&c.i_vec).expect("same dimension");
    let ones_dot_i = w.dot(&c.i_vec).expect("same dimension");
    let ones_dot_u = w.dot(&c.u_vec).expect("same dimension");

    let (norm_i, norm_u, norm_w) = (c.i_vec.norm(), c.u_vec.norm(), w.norm());
    DiagnosticsReport {
        sse: residual.norm_sq(),
        residual_dot_i_normalized: normalized(residual_dot_i, norm_u * norm_i),
        ones_dot_i_normalized: normalized(ones_dot_i, norm_w * norm_i),
        ones_dot_u_normalized: normalized(ones_dot_u, norm_w * norm_u),
        residual,
        residual_dot_i,
        ones_dot_i,
        ones_dot_u,
    }
}
