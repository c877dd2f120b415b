//! Exact integer rays: vectors modulo overall nonzero rational scale.
//!
//! A ray is stored in normal form — components divided by their gcd, sign
//! flipped so the first nonzero component is positive — which makes ray
//! identity plain component equality. Orthogonality is an exact predicate
//! on integer inner products; no floating point anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RayError {
    #[error("ray has no nonzero component")]
    ZeroVector,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

/// A nonzero integer vector in normal form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ray {
    components: Vec<BigInt>,
}

impl Ray {
    pub fn new(mut components: Vec<BigInt>) -> Result<Self, RayError> {
        let mut gcd = BigInt::zero();
        for c in &components {
            gcd = gcd.gcd(c);
        }
        if gcd.is_zero() {
            return Err(RayError::ZeroVector);
        }
        for c in &mut components {
            *c = &*c / &gcd;
        }
        if components
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.is_negative())
        {
            for c in &mut components {
                *c = -std::mem::take(c);
            }
        }
        Ok(Ray { components })
    }

    pub fn from_ints(components: &[i64]) -> Result<Self, RayError> {
        Ray::new(components.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn dimension(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[BigInt] {
        &self.components
    }

    pub fn inner_product(&self, other: &Ray) -> Result<BigInt, RayError> {
        if self.dimension() != other.dimension() {
            return Err(RayError::DimensionMismatch {
                left: self.dimension(),
                right: other.dimension(),
            });
        }
        Ok(self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn is_orthogonal_to(&self, other: &Ray) -> Result<bool, RayError> {
        Ok(self.inner_product(other)?.is_zero())
    }

    /// The same ray in a higher dimension, padded with trailing zeros.
    /// Padding never changes any inner product.
    pub fn extended(&self, dimension: usize) -> Ray {
        debug_assert!(dimension >= self.dimension());
        let mut components = self.components.clone();
        components.resize(dimension, BigInt::zero());
        Ray { components }
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
