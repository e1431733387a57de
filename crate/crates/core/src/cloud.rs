//! Observed point clouds and their translation to the centroid.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sum;
use crate::vecspace::Vector;

/// Observed pairs (xᵢ, yᵢ), i = 1..n, with n ≥ 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    xs: Vector,
    ys: Vector,
}

impl PointCloud {
    pub fn new(xs: Vector, ys: Vector) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::DimensionMismatch {
                left: xs.len(),
                right: ys.len(),
            });
        }
        Ok(Self { xs, ys })
    }

    pub fn from_slices(xs: &[f64], ys: &[f64]) -> Result<Self> {
        Self::new(Vector::try_from(xs)?, Vector::try_from(ys)?)
    }

    pub fn from_pairs(points: &[(f64, f64)]) -> Result<Self> {
        let (xs, ys): (Vec<f64>, Vec<f64>) = points.iter().copied().unzip();
        Self::new(Vector::new(xs)?, Vector::new(ys)?)
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn xs(&self) -> &Vector {
        &self.xs
    }

    pub fn ys(&self) -> &Vector {
        &self.ys
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.xs.iter().copied().zip(self.ys.iter().copied())
    }

    /// Translates every point by (dx, dy).
    pub fn translate(&self, dx: f64, dy: f64) -> PointCloud {
        PointCloud {
            xs: self.xs.shift(dx),
            ys: self.ys.shift(dy),
        }
    }

    /// Centre of mass (x̄, ȳ).
    pub fn centroid(&self) -> (f64, f64) {
        (mean(&self.xs), mean(&self.ys))
    }

    /// Moves the centre of mass to the origin.
    pub fn center(&self) -> CenteredCloud {
        let (cx, cy) = self.centroid();
        CenteredCloud {
            centroid_x: cx,
            centroid_y: cy,
            i_vec: self.xs.shift(-cx),
            u_vec: self.ys.shift(-cy),
        }
    }
}

/// Mean with one residual-correction pass, so that constant columns
/// reproduce their value exactly and centred components sum to ~0.
fn mean(v: &Vector) -> f64 {
    let n = v.len() as f64;
    let m = v.sum() / n;
    let correction = sum::sum(v.iter().map(|x| x - m)) / n;
    m + correction
}

/// A point cloud translated so its centroid sits at the origin.
///
/// `i_vec` holds the centred predictor values x̃ᵢ = xᵢ − x̄ and `u_vec` the
/// centred responses ỹᵢ = yᵢ − ȳ. Both are orthogonal to the all-ones vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CenteredCloud {
    pub centroid_x: f64,
    pub centroid_y: f64,
    pub i_vec: Vector,
    pub u_vec: Vector,
}

impl CenteredCloud {
    pub fn len(&self) -> usize {
        self.i_vec.len()
    }

    pub fn is_empty(&self) -> bool {
        self.i_vec.is_empty()
    }

    /// Reconstructs the original cloud.
    pub fn uncenter(&self) -> PointCloud {
        PointCloud {
            xs: self.i_vec.shift(self.centroid_x),
            ys: self.u_vec.shift(self.centroid_y),
        }
    }

    /// Largest |xᵢ| of the original cloud.
    pub fn max_abs_x(&self) -> f64 {
        self.i_vec.iter().fold(0.0, |m, v| m.max((v + self.centroid_x).abs()))
    }

    /// Largest |yᵢ| of the original cloud.
    pub fn max_abs_y(&self) -> f64 {
        self.u_vec.iter().fold(0.0, |m, v| m.max((v + self.centroid_y).abs()))
    }

    /// Bound on |Σ x̃ᵢ| that centring guarantees.
    pub fn zero_sum_tolerance_x(&self) -> f64 {
        self.len() as f64 * 1e-9 * self.max_abs_x().max(1.0)
    }

    /// Bound on |Σ ỹᵢ| that centring guarantees.
    pub fn zero_sum_tolerance_y(&self) -> f64 {
        self.len() as f64 * 1e-9 * self.max_abs_y().max(1.0)
    }
}
