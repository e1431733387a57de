//! Compensated accumulation.
//!
//! [`NeumaierSum`] carries the rounding error of every addition in a separate
//! term, and [`dot2`] extends the idea to products using an FMA-based exact
//! product split. Both give results close to the correctly rounded value
//! regardless of summation order, which matters when columns of very
//! different magnitude meet in one dot product.

use std::iter::FromIterator;
use std::ops::AddAssign;

/// Kahan summation with Neumaier's improvement.
#[derive(Debug, Default, Clone, Copy)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let (s, err) = two_sum(self.sum, value);
        self.sum = s;
        self.comp += err;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl AddAssign<f64> for NeumaierSum {
    fn add_assign(&mut self, rhs: f64) {
        self.add(rhs);
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = NeumaierSum::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Compensated sum of a sequence.
pub fn sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    values.into_iter().collect::<NeumaierSum>().value()
}

/// Error-free transformation: `a + b = s + err` exactly.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = if a.abs() >= b.abs() {
        (a - s) + b
    } else {
        (b - s) + a
    };
    (s, err)
}

/// Error-free transformation: `a * b = p + err` exactly (barring underflow).
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Dot product in twice the working precision (Ogita, Rump and Oishi's Dot2).
///
/// Slices must have equal length; callers check.
pub fn dot2(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut s = 0.0;
    let mut c = 0.0;
    for (&x, &y) in a.iter().zip(b) {
        let (p, perr) = two_prod(x, y);
        let (t, serr) = two_sum(s, p);
        s = t;
        c += perr + serr;
    }
    s + c
}
