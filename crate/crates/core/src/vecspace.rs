//! Real vectors of arbitrary dimension n.
//!
//! A data column of n observations is treated as a single point of R^n. Dot
//! products and squared norms use compensated accumulation (see
//! [`crate::sum`]), so results do not depend on component order.

use std::ops::Index;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sum;

/// An immutable vector of n ≥ 1 finite components.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Vector {
    components: Vec<f64>,
}

impl Vector {
    /// Builds a vector, rejecting empty input and non-finite components.
    pub fn new(components: Vec<f64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some((index, &value)) = components.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFinite { index, value });
        }
        Ok(Self { components })
    }

    /// The all-ones vector `(1, 1, …, 1)` of dimension n.
    pub fn ones(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVector);
        }
        Ok(Self {
            components: vec![1.0; n],
        })
    }

    /// The zero vector of dimension n.
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVector);
        }
        Ok(Self {
            components: vec![0.0; n],
        })
    }

    // Internal constructor for results of arithmetic on already valid vectors.
    pub(crate) fn from_valid(components: Vec<f64>) -> Self {
        debug_assert!(!components.is_empty());
        Self { components }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    /// Always false; kept for the usual `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.components
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.components.iter()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.components
    }

    fn check_same_len(&self, other: &Vector) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    /// Σ aᵢ·bᵢ.
    pub fn dot(&self, other: &Vector) -> Result<f64> {
        self.check_same_len(other)?;
        Ok(sum::dot2(&self.components, &other.components))
    }

    /// ‖a‖², i.e. `a.dot(a)`.
    pub fn norm_sq(&self) -> f64 {
        sum::dot2(&self.components, &self.components)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Compensated sum of the components, equal to `ones(n).dot(self)`.
    pub fn sum(&self) -> f64 {
        sum::sum(self.components.iter().copied())
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        self.components.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Componentwise difference `self - other`.
    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.check_same_len(other)?;
        Ok(Self::from_valid(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    /// Componentwise multiple `c·self`.
    ///
    /// `c` must be finite; products that overflow are not checked.
    pub fn scale(&self, c: f64) -> Vector {
        debug_assert!(c.is_finite());
        Self::from_valid(self.components.iter().map(|a| c * a).collect())
    }

    /// Adds the same constant to every component.
    pub fn shift(&self, c: f64) -> Vector {
        Self::from_valid(self.components.iter().map(|a| a + c).collect())
    }
}

impl Index<usize> for Vector {
    type Output = f64;

    fn index(&self, index: usize) -> &f64 {
        &self.components[index]
    }
}

impl<'a> IntoIterator for &'a Vector {
    type Item = &'a f64;
    type IntoIter = std::slice::Iter<'a, f64>;

    fn into_iter(self) -> Self::IntoIter {
        self.components.iter()
    }
}

impl TryFrom<Vec<f64>> for Vector {
    type Error = Error;

    fn try_from(value: Vec<f64>) -> Result<Self> {
        Vector::new(value)
    }
}

impl TryFrom<&[f64]> for Vector {
    type Error = Error;

    fn try_from(value: &[f64]) -> Result<Self> {
        Vector::new(value.to_vec())
    }
}
