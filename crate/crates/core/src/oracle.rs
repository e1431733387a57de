//! Independent checks on the projection fit.
//!
//! Nothing here touches centring or the normal equations. The least-squares
//! objective S(a, b) = Σ (yᵢ − a·xᵢ − b)² is evaluated directly on raw data
//! and minimised by brute force, or differentiated numerically.

use rand::Rng;

use crate::cloud::PointCloud;
use crate::error::{Error, Result};
use crate::sum;

/// Rectangle of candidate (slope, intercept) pairs plus grid settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchBox {
    pub a_min: f64,
    pub a_max: f64,
    pub b_min: f64,
    pub b_max: f64,
    /// Grid points per axis in every round, ends included.
    pub grid_steps: usize,
    pub refinement_rounds: usize,
    /// Width of the next round's interval as a fraction of the current one.
    pub shrink: f64,
}

impl SearchBox {
    pub const DEFAULT_STEPS: usize = 101;
    pub const DEFAULT_ROUNDS: usize = 6;
    /// Leaves two grid steps on each side of the previous best point.
    pub const DEFAULT_SHRINK: f64 = 0.04;

    pub fn new(a_min: f64, a_max: f64, b_min: f64, b_max: f64) -> Result<Self> {
        let b = SearchBox {
            a_min,
            a_max,
            b_min,
            b_max,
            grid_steps: Self::DEFAULT_STEPS,
            refinement_rounds: Self::DEFAULT_ROUNDS,
            shrink: Self::DEFAULT_SHRINK,
        };
        b.validate()?;
        Ok(b)
    }

    /// Box spanning ±50% of each coordinate around a seed point, and at least ±1.
    pub fn around(a: f64, b: f64) -> Self {
        let ha = (0.5 * a.abs()).max(1.0);
        let hb = (0.5 * b.abs()).max(1.0);
        SearchBox {
            a_min: a - ha,
            a_max: a + ha,
            b_min: b - hb,
            b_max: b + hb,
            grid_steps: Self::DEFAULT_STEPS,
            refinement_rounds: Self::DEFAULT_ROUNDS,
            shrink: Self::DEFAULT_SHRINK,
        }
    }

    pub fn with_grid(mut self, grid_steps: usize, refinement_rounds: usize, shrink: f64) -> Result<Self> {
        self.grid_steps = grid_steps;
        self.refinement_rounds = refinement_rounds;
        self.shrink = shrink;
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        let bounds = [self.a_min, self.a_max, self.b_min, self.b_max];
        if bounds.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidSearchBox("bounds must be finite"));
        }
        if self.a_min >= self.a_max || self.b_min >= self.b_max {
            return Err(Error::InvalidSearchBox("each lower bound must be below its upper bound"));
        }
        if self.grid_steps < 3 {
            return Err(Error::InvalidSearchBox("need at least 3 grid steps per axis"));
        }
        if self.refinement_rounds == 0 {
            return Err(Error::InvalidSearchBox("need at least one round"));
        }
        // A refined interval must still reach one grid step past the previous
        // best point, or a convex minimum can slip out of it.
        if !(self.shrink < 1.0 && self.shrink * (self.grid_steps - 1) as f64 >= 2.0) {
            return Err(Error::InvalidSearchBox("shrink must keep one grid step either side of the best point"));
        }
        Ok(())
    }
}

/// S(a, b) = Σ (yᵢ − a·xᵢ − b)², straight from the raw data.
pub fn sse_of(cloud: &PointCloud, a: f64, b: f64) -> f64 {
    sum::sum(cloud.points().map(|(x, y)| {
        let d = (-a).mul_add(x, y) - b;
        d * d
    }))
}

/// Grid search with refinement on a convex function of one variable.
///
/// For a convex function the true minimiser lies within one grid step of the
/// best grid point, so every refined interval keeps it as long as `shrink`
/// leaves at least that margin. Ties resolve to the smallest argument.
fn search_1d<T, F>(lo: f64, hi: f64, steps: usize, rounds: usize, shrink: f64, mut f: F) -> (f64, f64, T)
where
    F: FnMut(f64) -> (f64, T),
{
    let (mut l, mut h) = (lo, hi);
    let mut best: Option<(f64, f64, T)> = None;
    for _ in 0..rounds {
        let span = h - l;
        for k in 0..steps {
            let x = if k == steps - 1 {
                h
            } else {
                l + span * (k as f64) / ((steps - 1) as f64)
            };
            let (fx, extra) = f(x);
            let better = match &best {
                None => true,
                Some((bx, bf, _)) => fx < *bf || (fx == *bf && x < *bx),
            };
            if better {
                best = Some((x, fx, extra));
            }
        }
        let centre = best.as_ref().map(|b| b.0).unwrap_or(l);
        let half = 0.5 * shrink * span;
        l = (centre - half).max(lo);
        h = (centre + half).min(hi);
        if h <= l {
            break;
        }
    }
    best.expect("at least one grid point is evaluated")
}

/// Brute-force minimiser of [`sse_of`] over a search box.
///
/// For each candidate slope the intercept is minimised by its own refined
/// grid search; the resulting profile is convex in the slope and is searched
/// the same way. Fails with `BoxTooSmall` when the minimum ends up pinned to
/// the box boundary.
pub fn grid_search_fit(cloud: &PointCloud, sbox: &SearchBox) -> Result<(f64, f64)> {
    sbox.validate()?;
    let (steps, rounds, shrink) = (sbox.grid_steps, sbox.refinement_rounds, sbox.shrink);
    let (a, _, b) = search_1d(sbox.a_min, sbox.a_max, steps, rounds, shrink, |a| {
        let (b, s, ()) = search_1d(sbox.b_min, sbox.b_max, steps, rounds, shrink, |b| (sse_of(cloud, a, b), ()));
        (s, b)
    });
    let on_edge = a == sbox.a_min || a == sbox.a_max || b == sbox.b_min || b == sbox.b_max;
    if on_edge {
        return Err(Error::BoxTooSmall { a, b });
    }
    Ok((a, b))
}

/// Central finite-difference estimate of (∂S/∂a, ∂S/∂b) at (a, b).
pub fn gradient_check(cloud: &PointCloud, a: f64, b: f64, h: f64) -> (f64, f64) {
    debug_assert!(h > 0.0);
    let da = (sse_of(cloud, a + h, b) - sse_of(cloud, a - h, b)) / (2.0 * h);
    let db = (sse_of(cloud, a, b + h) - sse_of(cloud, a, b - h)) / (2.0 * h);
    (da, db)
}

/// Random test cloud of n points.
///
/// x is uniform in [−100, 100] with max − min ≥ 1; y = α·x + β + ε with
/// α, β uniform in [−10, 10] and ε uniform in [−10, 10].
pub fn random_cloud<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PointCloud {
    assert!(n >= 2, "random clouds need at least two points");
    let xs = loop {
        let xs: Vec<f64> = (0..n).map(|_| rng.random_range(-100.0..=100.0)).collect();
        let lo = xs.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if hi - lo >= 1.0 {
            break xs;
        }
    };
    let alpha: f64 = rng.random_range(-10.0..=10.0);
    let beta: f64 = rng.random_range(-10.0..=10.0);
    let ys: Vec<f64> = xs
        .iter()
        .map(|&x| alpha * x + beta + rng.random_range(-10.0..=10.0))
        .collect();
    PointCloud::from_slices(&xs, &ys).expect("finite and equal length")
}
