//! The tagged body encoding shared by files, reports and checkers, plus the
//! evaluation algebra that sums and measures mixed convex / non-convex
//! inputs where the theory supports it.

use serde::{Deserialize, Serialize};

use crate::boxunion::BoxUnion;
use crate::error::{GeometryError, Result};
use crate::point::Point;
use crate::pointset::PointSet;
use crate::polytope::VPolytope;
use crate::polyunion;
use crate::scalar::Scalar;
use crate::zonotope::Zonotope;

/// Any body the harness can read or emit. The JSON form is tagged:
/// `{"type":"vpolytope"|"zonotope"|"boxunion"|"pointset", ...}`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Body {
    Vpolytope(VPolytope),
    Zonotope(Zonotope),
    Boxunion(BoxUnion),
    Pointset(PointSet),
}

impl Body {
    pub fn dim(&self) -> usize {
        match self {
            Body::Vpolytope(p) => p.dim(),
            Body::Zonotope(z) => z.dim(),
            Body::Boxunion(u) => u.dim(),
            Body::Pointset(s) => s.dim(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Body::Vpolytope(_) => "vpolytope",
            Body::Zonotope(_) => "zonotope",
            Body::Boxunion(_) => "boxunion",
            Body::Pointset(_) => "pointset",
        }
    }

    /// Re-establish constructor invariants after deserialization
    /// (canonical vertex sets, dimension checks, box bounds).
    pub fn validated(self) -> Result<Body> {
        Ok(match self {
            Body::Vpolytope(p) => {
                Body::Vpolytope(VPolytope::new(p.dim(), p.vertices().to_vec())?)
            }
            Body::Zonotope(z) => Body::Zonotope(Zonotope::new(
                z.dim(),
                z.center().clone(),
                z.generators().to_vec(),
            )?),
            Body::Boxunion(u) => Body::Boxunion(BoxUnion::new(u.dim(), u.boxes().to_vec())?),
            Body::Pointset(s) => {
                let dim = s.dim();
                Body::Pointset(PointSet::new(dim, s.points().cloned())?)
            }
        })
    }

    pub fn is_convex(&self) -> bool {
        matches!(self, Body::Vpolytope(_) | Body::Zonotope(_))
    }

    /// Convex bodies as polytopes; error for the others.
    pub fn as_polytope(&self) -> Result<VPolytope> {
        match self {
            Body::Vpolytope(p) => Ok(p.clone()),
            Body::Zonotope(z) => z.to_polytope(),
            _ => Err(GeometryError::UnsupportedCombination(format!(
                "{} is not convex",
                self.kind()
            ))),
        }
    }
}

/// Cap on the number of translates in a planar polygon union.
const MAX_POLYUNION: usize = 12;

/// Internal evaluation form of a body: what `volume` and Minkowski `sum`
/// actually run on.
#[derive(Clone, Debug)]
pub(crate) enum Region {
    Conv(VPolytope),
    Boxes(BoxUnion),
    Points(PointSet),
    /// Union of convex polygon rings, 2-D only.
    PolyUnion(Vec<Vec<Point>>),
}

impl Region {
    pub fn from_body(b: &Body) -> Result<Region> {
        Ok(match b {
            Body::Vpolytope(p) => Region::Conv(p.clone()),
            Body::Zonotope(z) => Region::Conv(z.to_polytope()?),
            Body::Boxunion(u) => Region::Boxes(u.clone()),
            Body::Pointset(s) => Region::Points(s.clone()),
        })
    }

    pub fn dim(&self) -> usize {
        match self {
            Region::Conv(p) => p.dim(),
            Region::Boxes(u) => u.dim(),
            Region::Points(s) => s.dim(),
            Region::PolyUnion(_) => 2,
        }
    }

    pub fn volume(&self) -> Scalar {
        match self {
            Region::Conv(p) => p.volume(),
            Region::Boxes(u) => u.volume(),
            Region::Points(_) => Scalar::zero(),
            Region::PolyUnion(rings) => polyunion::union_area(rings),
        }
    }

    pub fn reflect(&self) -> Region {
        match self {
            Region::Conv(p) => Region::Conv(p.reflect()),
            Region::Boxes(u) => Region::Boxes(u.reflect()),
            Region::Points(s) => Region::Points(s.reflect()),
            Region::PolyUnion(rings) => Region::PolyUnion(
                rings
                    .iter()
                    .map(|r| {
                        let mut neg: Vec<Point> = r.iter().map(Point::neg).collect();
                        neg.reverse(); // keep CCW orientation
                        neg
                    })
                    .collect(),
            ),
        }
    }

    /// Minkowski sum in the largest algebra both operands fit.
    pub fn sum(&self, other: &Region) -> Result<Region> {
        let dim = self.dim();
        if other.dim() != dim {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                got: other.dim(),
            });
        }
        use Region::*;
        match (self, other) {
            (Conv(a), Conv(b)) => Ok(Conv(a.minkowski_sum(b)?)),
            (Boxes(a), Boxes(b)) => Ok(Boxes(a.minkowski_sum(b)?)),
            (Points(a), Points(b)) => Ok(Points(a.sumset(b)?)),
            // everything mixed: 1-D goes through the box algebra,
            // 2-D through polygon unions
            _ => match dim {
                1 => {
                    let a = self.to_boxes_1d()?;
                    let b = other.to_boxes_1d()?;
                    Ok(Boxes(a.minkowski_sum(&b)?))
                }
                2 => {
                    let a = self.to_polyunion()?;
                    let b = other.to_polyunion()?;
                    if a.len() * b.len() > MAX_POLYUNION {
                        return Err(GeometryError::TooLarge(format!(
                            "polygon union with {} pieces exceeds cap {MAX_POLYUNION}",
                            a.len() * b.len()
                        )));
                    }
                    let mut rings = Vec::with_capacity(a.len() * b.len());
                    for ra in &a {
                        for rb in &b {
                            rings.push(ring_sum(ra, rb)?);
                        }
                    }
                    Ok(PolyUnion(rings))
                }
                _ => Err(GeometryError::UnsupportedCombination(format!(
                    "mixed {}+{} sums only support dimension 1 or 2",
                    self.kind(),
                    other.kind()
                ))),
            },
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Region::Conv(_) => "convex",
            Region::Boxes(_) => "boxunion",
            Region::Points(_) => "pointset",
            Region::PolyUnion(_) => "polyunion",
        }
    }

    fn to_boxes_1d(&self) -> Result<BoxUnion> {
        match self {
            Region::Boxes(u) => Ok(u.clone()),
            Region::Conv(p) => {
                let vals: Vec<&Scalar> = p.vertices().iter().map(|v| &v.coords()[0]).collect();
                let lo = vals.iter().min().unwrap();
                let hi = vals.iter().max().unwrap();
                BoxUnion::interval((*lo).clone(), (*hi).clone())
            }
            Region::Points(s) => BoxUnion::new(
                1,
                s.points()
                    .map(|p| vec![(p.coords()[0].clone(), p.coords()[0].clone())])
                    .collect(),
            ),
            Region::PolyUnion(_) => Err(GeometryError::UnsupportedCombination(
                "polygon union is 2-D".into(),
            )),
        }
    }

    fn to_polyunion(&self) -> Result<Vec<Vec<Point>>> {
        match self {
            Region::PolyUnion(rings) => Ok(rings.clone()),
            Region::Conv(p) => Ok(vec![polyunion::ring_ccw(p)]),
            Region::Points(s) => {
                if s.len() > 8 {
                    return Err(GeometryError::TooLarge(
                        "point sets in planar unions are capped at 8 translates".into(),
                    ));
                }
                Ok(s.points().map(|p| vec![p.clone()]).collect())
            }
            Region::Boxes(u) => {
                if u.boxes().len() > MAX_POLYUNION {
                    return Err(GeometryError::TooLarge(
                        "box union too large for the planar polygon algebra".into(),
                    ));
                }
                Ok(u.boxes()
                    .iter()
                    .map(|b| {
                        vec![
                            Point::new(vec![b[0].0.clone(), b[1].0.clone()]),
                            Point::new(vec![b[0].1.clone(), b[1].0.clone()]),
                            Point::new(vec![b[0].1.clone(), b[1].1.clone()]),
                            Point::new(vec![b[0].0.clone(), b[1].1.clone()]),
                        ]
                    })
                    .collect())
            }
        }
    }
}

/// Minkowski sum of two convex rings (2-D), returned as a CCW ring.
fn ring_sum(a: &[Point], b: &[Point]) -> Result<Vec<Point>> {
    let pa = VPolytope::new(2, a.to_vec())?;
    let pb = VPolytope::new(2, b.to_vec())?;
    Ok(polyunion::ring_ccw(&pa.minkowski_sum(&pb)?))
}
