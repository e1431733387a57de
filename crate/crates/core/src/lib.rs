//! Least-squares line fitting as an orthogonal projection.
//!
//! A cloud of n points (xᵢ, yᵢ) is translated so its centroid sits at the
//! origin. The centred columns then become two vectors of R^n: the predictor
//! `i` and the response `u`. The best-fit slope is the coefficient of the
//! projection of `u` onto `i`,
//!
//! ```text
//! a = (u·i) / ‖i‖²,      b = ȳ − a·x̄,
//! ```
//!
//! and the correlation coefficient is the cosine of the angle between them.
//!
//! ```
//! use georeg_core::{fit, correlate, PointCloud};
//!
//! let cloud = PointCloud::from_pairs(&[(0.0, 1.0), (1.0, 2.9), (2.0, 5.1), (3.0, 7.0)])?;
//! let line = fit(&cloud)?;
//! let corr = correlate(&line.centered)?;
//! assert!((line.slope - 2.0).abs() < 0.05);
//! assert!(corr.r > 0.99);
//! # Ok::<(), georeg_core::Error>(())
//! ```
//!
//! Modules:
//!
//! - [`vecspace`]: n-dimensional vectors with compensated dot products
//! - [`cloud`]: point clouds and centring
//! - [`regress`]: slope and intercept
//! - [`correlate`]: angle θ, Pearson r, qualitative class
//! - [`diagnostics`]: residuals and orthogonality checks
//! - [`oracle`]: brute-force and finite-difference cross-checks
//! - [`dataio`]: delimited-text parsing
//! - [`report`], [`svg`]: text/JSON summaries and plots

pub mod cloud;
pub mod correlate;
pub mod dataio;
pub mod diagnostics;
pub mod error;
pub mod fixtures;
pub mod oracle;
pub mod regress;
pub mod report;
pub mod sum;
pub mod svg;
pub mod vecspace;

pub use cloud::{CenteredCloud, PointCloud};
pub use correlate::{
    classify, correlate, r_cosine, r_textbook, theta, CorrelationClass, CorrelationResult, Thresholds,
};
pub use dataio::{ColumnSelector, DatasetSpec};
pub use diagnostics::{orthogonality_report, residuals, sse, DiagnosticsReport};
pub use error::{Error, Result};
pub use oracle::{gradient_check, grid_search_fit, sse_of, SearchBox};
pub use regress::{fit, fit_slope_centered, predict, FitResult};
pub use report::{render_report, Equation, Format, Report};
pub use svg::render_svg;
pub use vecspace::Vector;
