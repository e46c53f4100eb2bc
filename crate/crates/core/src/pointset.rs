//! Finite discrete sets with exact equality, and their sumsets.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::point::{check_dim, Point};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PointSet {
    dim: usize,
    points: BTreeSet<Point>,
}

const MAX_SUMSET_PAIRS: usize = 8_000_000;

impl PointSet {
    pub fn new(dim: usize, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        check_dim(dim)?;
        let points: BTreeSet<Point> = points.into_iter().collect();
        if points.is_empty() {
            return Err(GeometryError::EmptyBody);
        }
        for p in &points {
            if p.dim() != dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
        }
        Ok(PointSet { dim, points })
    }

    pub fn from_values(values: impl IntoIterator<Item = Scalar>) -> Result<Self> {
        Self::new(1, values.into_iter().map(|v| Point::new(vec![v])))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }

    /// Exact sumset `{s + t}`; collisions cannot be missed because point
    /// equality is exact.
    pub fn sumset(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        if self.len().saturating_mul(other.len()) > MAX_SUMSET_PAIRS {
            return Err(GeometryError::TooLarge(format!(
                "sumset with {} x {} pairs",
                self.len(),
                other.len()
            )));
        }
        let mut points = BTreeSet::new();
        for a in &self.points {
            for b in &other.points {
                points.insert(a.add(b));
            }
        }
        Ok(PointSet {
            dim: self.dim,
            points,
        })
    }

    pub fn reflect(&self) -> Self {
        PointSet {
            dim: self.dim,
            points: self.points.iter().map(Point::neg).collect(),
        }
    }

    /// Minimum gap between distinct values of a 1-D set ordered exactly;
    /// `None` for singletons.
    pub fn min_gap_1d(&self) -> Option<Scalar> {
        assert_eq!(self.dim, 1);
        let vals: Vec<&Scalar> = self.points.iter().map(|p| &p.coords()[0]).collect();
        // BTreeSet order on 1-D points is the value order.
        let mut best: Option<Scalar> = None;
        for w in vals.windows(2) {
            let gap = w[1] - w[0];
            best = Some(match best {
                None => gap,
                Some(b) => b.min(gap),
            });
        }
        best
    }
}
