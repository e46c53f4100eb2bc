use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::scalar::Scalar;

pub const MAX_DIM: usize = 4;

/// A point (or vector) in dimension 1..=4 with exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<Scalar>);

pub fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        Err(GeometryError::UnsupportedDimension(dim))
    } else {
        Ok(())
    }
}

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![Scalar::zero(); dim])
    }

    /// Standard basis vector `e_i` (0-based).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut c = vec![Scalar::zero(); dim];
        c[i] = Scalar::one();
        Point(c)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&v| Scalar::from_int(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Point) -> Point {
        debug_assert_eq!(self.dim(), o.dim());
        Point(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Point) -> Point {
        debug_assert_eq!(self.dim(), o.dim());
        Point(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Point {
        Point(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, t: &Scalar) -> Point {
        Point(self.0.iter().map(|a| a * t).collect())
    }

    pub fn dot(&self, o: &Point) -> Scalar {
        debug_assert_eq!(self.dim(), o.dim());
        self.0.iter().zip(&o.0).map(|(a, b)| a * b).sum()
    }

    /// Concatenation, for direct products of bodies.
    pub fn concat(&self, o: &Point) -> Point {
        let mut c = self.0.clone();
        c.extend(o.0.iter().cloned());
        Point(c)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}
