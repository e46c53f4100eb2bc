//! Finite unions of axis-aligned boxes: the exact algebra behind the
//! non-convex compact counterexamples. Closed under Minkowski sums and, via
//! box splitting, under set differences. Degenerate (zero-width) boxes are
//! legal and carry measure 0; all measures coincide with those of the exact
//! point sets because box boundaries are null.

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::point::{check_dim, Point};
use crate::scalar::Scalar;

/// One closed axis box: per-coordinate `[lo, hi]` pairs.
pub type AxisBox = Vec<(Scalar, Scalar)>;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoxUnion {
    dim: usize,
    boxes: Vec<AxisBox>,
}

impl BoxUnion {
    pub fn new(dim: usize, boxes: Vec<AxisBox>) -> Result<Self> {
        check_dim(dim)?;
        if boxes.is_empty() {
            return Err(GeometryError::EmptyBody);
        }
        for b in &boxes {
            if b.len() != dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: dim,
                    got: b.len(),
                });
            }
            for (lo, hi) in b {
                if lo > hi {
                    return Err(GeometryError::InvalidParam(
                        "box with lo > hi".into(),
                    ));
                }
            }
        }
        Ok(BoxUnion { dim, boxes })
    }

    /// Single box from integer bounds, a test convenience.
    pub fn cube(dim: usize, lo: i64, hi: i64) -> Result<Self> {
        let b: AxisBox = (0..dim)
            .map(|_| (Scalar::from_int(lo), Scalar::from_int(hi)))
            .collect();
        Self::new(dim, vec![b])
    }

    /// 1-D interval `[lo, hi]`.
    pub fn interval(lo: Scalar, hi: Scalar) -> Result<Self> {
        Self::new(1, vec![vec![(lo, hi)]])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn boxes(&self) -> &[AxisBox] {
        &self.boxes
    }

    pub fn contains_origin(&self) -> bool {
        self.boxes.iter().any(|b| {
            b.iter()
                .all(|(lo, hi)| !lo.is_positive() && !hi.is_negative())
        })
    }

    /// Exact measure of the union (overlaps counted once): recursive
    /// coordinate sweep into disjoint slabs.
    pub fn volume(&self) -> Scalar {
        measure(&self.boxes, 0, self.dim)
    }

    /// Equivalent union as pairwise-disjoint boxes (measure-zero slabs are
    /// dropped; total volume is preserved exactly).
    pub fn normalize(&self) -> BoxUnion {
        let boxes = disjointify(&self.boxes, 0, self.dim);
        BoxUnion {
            dim: self.dim,
            boxes,
        }
    }

    /// Minkowski sum: all pairwise box sums.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut boxes = Vec::with_capacity(self.boxes.len() * other.boxes.len());
        for a in &self.boxes {
            for b in &other.boxes {
                boxes.push(
                    a.iter()
                        .zip(b)
                        .map(|((alo, ahi), (blo, bhi))| (alo + blo, ahi + bhi))
                        .collect(),
                );
            }
        }
        Ok(BoxUnion {
            dim: self.dim,
            boxes,
        })
    }

    /// Closure of the set difference `self ∖ other` in the box algebra;
    /// exact in measure.
    pub fn subtract(&self, other: &Self) -> Result<BoxUnion> {
        if self.dim != other.dim {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut pieces: Vec<AxisBox> = self.boxes.clone();
        for y in &other.boxes {
            let mut next: Vec<AxisBox> = Vec::new();
            for x in pieces {
                split_minus(&x, y, &mut next);
            }
            pieces = next;
            if pieces.is_empty() {
                break;
            }
        }
        if pieces.is_empty() {
            // empty difference: represent as a degenerate zero-measure box
            let zero = self.boxes[0][0].0.clone();
            pieces.push(vec![(zero.clone(), zero); self.dim]);
        }
        Ok(BoxUnion {
            dim: self.dim,
            boxes: pieces,
        })
    }

    pub fn reflect(&self) -> Self {
        BoxUnion {
            dim: self.dim,
            boxes: self
                .boxes
                .iter()
                .map(|b| b.iter().map(|(lo, hi)| (-hi, -lo)).collect())
                .collect(),
        }
    }

    pub fn translate(&self, v: &Point) -> Result<Self> {
        if v.dim() != self.dim {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            });
        }
        Ok(BoxUnion {
            dim: self.dim,
            boxes: self
                .boxes
                .iter()
                .map(|b| {
                    b.iter()
                        .zip(v.coords())
                        .map(|((lo, hi), t)| (lo + t, hi + t))
                        .collect()
                })
                .collect(),
        })
    }

    /// All corner points, for convex comparisons in tests.
    pub fn corner_points(&self) -> Vec<Point> {
        let mut out = Vec::new();
        for b in &self.boxes {
            for mask in 0..1u32 << self.dim {
                out.push(Point::new(
                    (0..self.dim)
                        .map(|i| {
                            if (mask >> i) & 1 == 1 {
                                b[i].1.clone()
                            } else {
                                b[i].0.clone()
                            }
                        })
                        .collect(),
                ));
            }
        }
        out
    }
}

/// Measure of a union of boxes over axes `axis..dim`.
fn measure(boxes: &[AxisBox], axis: usize, dim: usize) -> Scalar {
    if boxes.is_empty() {
        return Scalar::zero();
    }
    if axis == dim {
        return Scalar::one();
    }
    let mut cuts: Vec<&Scalar> = Vec::with_capacity(boxes.len() * 2);
    for b in boxes {
        cuts.push(&b[axis].0);
        cuts.push(&b[axis].1);
    }
    cuts.sort();
    cuts.dedup();
    let mut total = Scalar::zero();
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let width = b - a;
        if !width.is_positive() {
            continue;
        }
        let active: Vec<AxisBox> = boxes
            .iter()
            .filter(|bx| &bx[axis].0 <= a && b <= &bx[axis].1)
            .cloned()
            .collect();
        if active.is_empty() {
            continue;
        }
        total = &total + &(&width * &measure(&active, axis + 1, dim));
    }
    total
}

fn disjointify(boxes: &[AxisBox], axis: usize, dim: usize) -> Vec<AxisBox> {
    if boxes.is_empty() {
        return Vec::new();
    }
    if axis == dim {
        // a single 0-dimensional cell
        return vec![Vec::new()];
    }
    let mut cuts: Vec<Scalar> = Vec::with_capacity(boxes.len() * 2);
    for b in boxes {
        cuts.push(b[axis].0.clone());
        cuts.push(b[axis].1.clone());
    }
    cuts.sort();
    cuts.dedup();
    let mut out = Vec::new();
    for w in cuts.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if !(b - a).is_positive() {
            continue;
        }
        let active: Vec<AxisBox> = boxes
            .iter()
            .filter(|bx| &bx[axis].0 <= a && b <= &bx[axis].1)
            .cloned()
            .collect();
        for tail in disjointify(&active, axis + 1, dim) {
            let mut cell: AxisBox = Vec::with_capacity(dim - axis);
            cell.push((a.clone(), b.clone()));
            cell.extend(tail);
            out.push(cell);
        }
    }
    out
}

/// Cut `x ∖ y` into closed boxes, appended to `out`.
fn split_minus(x: &AxisBox, y: &AxisBox, out: &mut Vec<AxisBox>) {
    let dim = x.len();
    // no overlap with positive extent in every axis? then x survives whole
    let overlaps = (0..dim).all(|k| {
        let lo = if x[k].0 >= y[k].0 { &x[k].0 } else { &y[k].0 };
        let hi = if x[k].1 <= y[k].1 { &x[k].1 } else { &y[k].1 };
        lo <= hi
    });
    if !overlaps {
        out.push(x.clone());
        return;
    }
    // carve axis by axis, keeping the middle for deeper cuts
    let mut middle = x.clone();
    for k in 0..dim {
        if middle[k].0 < y[k].0 {
            let mut left = middle.clone();
            left[k].1 = y[k].0.clone();
            out.push(left);
            middle[k].0 = y[k].0.clone();
        }
        if y[k].1 < middle[k].1 {
            let mut right = middle.clone();
            right[k].0 = y[k].1.clone();
            out.push(right);
            middle[k].1 = y[k].1.clone();
        }
    }
    // middle ⊆ y: dropped
}
