//! The regression line as an orthogonal projection.
//!
//! After centring, the fitted responses form the vector j = a·i, a multiple of
//! the centred predictor i. The residual u − j is shortest when it is normal
//! to i, which fixes the slope at a = (u·i)/‖i‖². The intercept follows from
//! the line passing through the centroid: b = ȳ − a·x̄.

use serde::Serialize;

use crate::cloud::{CenteredCloud, PointCloud};
use crate::error::{Error, Result};
use crate::vecspace::Vector;

/// A fitted line y = slope·x + intercept together with the geometry it came from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    pub centered: CenteredCloud,
    /// Fitted centred responses, slope·i.
    pub j_vec: Vector,
}

/// True when the centred predictor is too short to define a direction.
///
/// The cutoff is n·ε·max(1, max xᵢ²): anything below it is rounding noise
/// left over from centring identical x values.
pub(crate) fn is_degenerate(norm_sq: f64, n: usize, max_abs: f64) -> bool {
    norm_sq <= n as f64 * f64::EPSILON * (max_abs * max_abs).max(1.0)
}

/// Slope of the least-squares line through a centred cloud.
pub fn fit_slope_centered(c: &CenteredCloud) -> Result<f64> {
    let ii = c.i_vec.norm_sq();
    if is_degenerate(ii, c.len(), c.max_abs_x()) {
        return Err(Error::DegenerateX);
    }
    Ok(c.u_vec.dot(&c.i_vec)? / ii)
}

/// Fits y = a·x + b to the cloud.
pub fn fit(cloud: &PointCloud) -> Result<FitResult> {
    if cloud.len() < 2 {
        return Err(Error::TooFewPoints { n: cloud.len() });
    }
    let centered = cloud.center();
    let slope = fit_slope_centered(&centered)?;
    let intercept = centered.centroid_y - slope * centered.centroid_x;
    let j_vec = centered.i_vec.scale(slope);
    Ok(FitResult {
        slope,
        intercept,
        centered,
        j_vec,
    })
}

impl FitResult {
    pub fn predict(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }

    pub fn centroid(&self) -> (f64, f64) {
        (self.centered.centroid_x, self.centered.centroid_y)
    }

    pub fn len(&self) -> usize {
        self.centered.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centered.is_empty()
    }
}

/// Free-function form of [`FitResult::predict`].
pub fn predict(fit: &FitResult, x: f64) -> f64 {
    fit.predict(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1.0)
    }

    #[test]
    fn exact_line() {
        let cloud = PointCloud::from_slices(&[0.0, 1.0, 2.0], &[1.0, 3.0, 5.0]).unwrap();
        let f = fit(&cloud).unwrap();
        assert_eq!(fit_slope_centered(&cloud.center()).unwrap(), 2.0);
        assert_eq!(f.slope, 2.0);
        assert_eq!(f.intercept, 1.0);
        assert_eq!(f.predict(3.0), 7.0);
    }

    #[test]
    fn two_points() {
        let cloud = PointCloud::from_pairs(&[(0.0, 1.0), (2.0, 5.0)]).unwrap();
        let f = fit(&cloud).unwrap();
        assert_eq!((f.slope, f.intercept), (2.0, 1.0));
        let residual = f.centered.u_vec.sub(&f.j_vec).unwrap();
        assert!(residual.iter().all(|&r| r == 0.0));
    }

    #[test]
    fn too_few_points() {
        let cloud = PointCloud::from_pairs(&[(1.0, 1.0)]).unwrap();
        assert_eq!(fit(&cloud), Err(Error::TooFewPoints { n: 1 }));
    }

    #[test]
    fn vertical_cloud_is_degenerate() {
        let cloud = PointCloud::from_slices(&[3.0; 5], &[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        assert_eq!(fit(&cloud), Err(Error::DegenerateX));
        let cloud = PointCloud::from_slices(&[0.1; 9], &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0]).unwrap();
        assert_eq!(fit(&cloud), Err(Error::DegenerateX));
        // Spread far below the magnitude of x.
        let cloud = PointCloud::from_slices(&[1e9, 1e9 + 1e-7], &[0.0, 1.0]).unwrap();
        assert_eq!(fit(&cloud), Err(Error::DegenerateX));
    }

    #[test]
    fn duplicate_points_weight_the_fit() {
        let once = PointCloud::from_pairs(&[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)]).unwrap();
        let twice = PointCloud::from_pairs(&[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0), (2.0, 0.0)]).unwrap();
        assert!(fit(&once).unwrap().slope.abs() < 1e-15);
        assert!(fit(&twice).unwrap().slope < 0.0);
    }

    #[test]
    fn constant_response_has_zero_slope() {
        let cloud = PointCloud::from_slices(&[1.0, 2.0, 4.0], &[3.5; 3]).unwrap();
        let f = fit(&cloud).unwrap();
        assert_eq!(f.slope, 0.0);
        assert_eq!(f.intercept, 3.5);
    }

    fn cloud_strategy() -> impl Strategy<Value = PointCloud> {
        (2usize..30)
            .prop_flat_map(|n| {
                (
                    prop::collection::vec(-100.0..100.0f64, n),
                    prop::collection::vec(-100.0..100.0f64, n),
                )
            })
            .prop_filter("need x spread", |(x, _)| {
                let lo = x.iter().cloned().fold(f64::INFINITY, f64::min);
                let hi = x.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                hi - lo >= 1.0
            })
            .prop_map(|(x, y)| PointCloud::from_slices(&x, &y).unwrap())
    }

    proptest! {
        #[test]
        fn residual_normal_to_predictor(cloud in cloud_strategy()) {
            let f = fit(&cloud).unwrap();
            let c = &f.centered;
            let r = c.u_vec.sub(&f.j_vec).unwrap();
            prop_assert!(r.dot(&c.i_vec).unwrap().abs() <= 1e-9 * c.u_vec.norm() * c.i_vec.norm());
        }

        #[test]
        fn j_is_multiple_of_i(cloud in cloud_strategy()) {
            let f = fit(&cloud).unwrap();
            for (j, i) in f.j_vec.iter().zip(f.centered.i_vec.iter()) {
                prop_assert!((j - f.slope * i).abs() <= 1e-12 * j.abs());
            }
        }

        #[test]
        fn centroid_on_line(cloud in cloud_strategy()) {
            let f = fit(&cloud).unwrap();
            let (cx, cy) = f.centroid();
            let scale = cy.abs().max(f.slope.abs() * cx.abs()).max(f.intercept.abs()).max(1.0);
            prop_assert!((f.predict(cx) - cy).abs() <= 1e-9 * scale);
        }

        #[test]
        fn slope_translation_invariant(cloud in cloud_strategy(), dx in -1e3..1e3f64, dy in -1e3..1e3f64) {
            let f = fit(&cloud).unwrap();
            let g = fit(&cloud.translate(dx, dy)).unwrap();
            prop_assert!(rel(g.slope, f.slope) <= 1e-9);
            let (cx, cy) = f.centroid();
            let expected_b = (cy + dy) - f.slope * (cx + dx);
            prop_assert!((g.intercept - expected_b).abs() <= 1e-9 * expected_b.abs().max(f.slope.abs() * 1e3).max(1.0));
        }

        #[test]
        fn scale_equivariant(cloud in cloud_strategy(), c in -20.0..20.0f64) {
            let f = fit(&cloud).unwrap();
            let scaled = PointCloud::new(cloud.xs().clone(), cloud.ys().scale(c)).unwrap();
            let g = fit(&scaled).unwrap();
            let sa = (c * f.slope).abs().max(1e-9 * c.abs() * cloud.ys().max_abs());
            prop_assert!((g.slope - c * f.slope).abs() <= 1e-9 * sa.max(1e-300));
            let sb = (c * f.intercept).abs().max(c.abs() * cloud.ys().max_abs());
            prop_assert!((g.intercept - c * f.intercept).abs() <= 1e-9 * sb.max(1e-300));
        }
    }
}
