//! Convex bodies in vertex representation, with the geometric verbs:
//! canonical hulls, exact volume, Minkowski and scaled sums, projections,
//! support values and direct products.

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::hull;
use crate::point::{check_dim, Point};
use crate::scalar::Scalar;

/// Convex polytope as its canonical (extreme) vertex set, sorted
/// lexicographically. A single point and a segment are legal volume-0 bodies.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VPolytope {
    dim: usize,
    vertices: Vec<Point>,
}

/// Centroid fan over the boundary complex: `apex` is the vertex centroid,
/// each simplex is the apex joined to one facet (vertex indices into
/// `VPolytope::vertices`). Simplex volumes are nonnegative and sum to the
/// body volume.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub apex: Point,
    pub simplices: Vec<Vec<usize>>,
}

/// Product-size guard for vertex-set sums.
const MAX_SUM_POINTS: usize = 3_000_000;

impl VPolytope {
    /// Canonicalize: keep exactly the extreme points. Idempotent.
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        check_dim(dim)?;
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
        let data = hull::extreme_and_volume(dim, &points)?;
        let mut vertices: Vec<Point> = data.extreme.iter().map(|&i| points[i].clone()).collect();
        vertices.sort();
        Ok(VPolytope { dim, vertices })
    }

    pub fn singleton(p: Point) -> Result<Self> {
        let dim = p.dim();
        Self::new(dim, vec![p])
    }

    pub fn origin(dim: usize) -> Result<Self> {
        Self::singleton(Point::origin(dim))
    }

    pub fn segment(a: Point, b: Point) -> Result<Self> {
        let dim = a.dim();
        Self::new(dim, vec![a, b])
    }

    /// `[0,1]^dim`.
    pub fn unit_cube(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        let pts = (0..1u32 << dim)
            .map(|m| {
                Point::from_ints(&(0..dim).map(|i| ((m >> i) & 1) as i64).collect::<Vec<_>>())
            })
            .collect();
        Self::new(dim, pts)
    }

    /// Axis-aligned box `[lo, hi]` given per-coordinate bounds.
    pub fn axis_box(lo: &Point, hi: &Point) -> Result<Self> {
        let dim = lo.dim();
        let pts = (0..1u32 << dim)
            .map(|m| {
                Point::new(
                    (0..dim)
                        .map(|i| {
                            if (m >> i) & 1 == 1 {
                                hi.coords()[i].clone()
                            } else {
                                lo.coords()[i].clone()
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        Self::new(dim, pts)
    }

    /// `conv{0, e_1, ..., e_dim}`.
    pub fn standard_simplex(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        let mut pts = vec![Point::origin(dim)];
        for i in 0..dim {
            pts.push(Point::unit(dim, i));
        }
        Self::new(dim, pts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Exact n-dimensional volume; 0 for lower-dimensional bodies.
    pub fn volume(&self) -> Scalar {
        hull::volume_of_points(self.dim, &self.vertices).expect("canonical body is valid")
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.volume().is_positive()
    }

    /// A simplex: dim+1 vertices spanning positive volume.
    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dim + 1 && self.is_full_dimensional()
    }

    pub fn translate(&self, v: &Point) -> Result<Self> {
        if v.dim() != self.dim {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            });
        }
        let mut vertices: Vec<Point> = self.vertices.iter().map(|p| p.add(v)).collect();
        vertices.sort();
        Ok(VPolytope {
            dim: self.dim,
            vertices,
        })
    }

    /// `-P` by vertex negation.
    pub fn reflect(&self) -> Self {
        let mut vertices: Vec<Point> = self.vertices.iter().map(|p| p.neg()).collect();
        vertices.sort();
        VPolytope {
            dim: self.dim,
            vertices,
        }
    }

    /// `t·P` for `t >= 0`.
    pub fn scale(&self, t: &Scalar) -> Result<Self> {
        if t.is_negative() {
            return Err(GeometryError::NegativeCoefficient);
        }
        if t.is_zero() {
            return VPolytope::origin(self.dim);
        }
        let mut vertices: Vec<Point> = self.vertices.iter().map(|p| p.scale(t)).collect();
        vertices.sort();
        Ok(VPolytope {
            dim: self.dim,
            vertices,
        })
    }

    /// Minkowski sum: canonical hull of all pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        scale_sum(
            &[Scalar::one(), Scalar::one()],
            &[self, other],
        )
    }

    /// Direct product `P × Q` in the concatenated coordinates.
    pub fn direct_product(&self, other: &Self) -> Result<Self> {
        let dim = self.dim + other.dim;
        check_dim(dim)?;
        // products of extreme points are exactly the extreme points of P×Q
        let mut vertices = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for p in &self.vertices {
            for q in &other.vertices {
                vertices.push(p.concat(q));
            }
        }
        vertices.sort();
        Ok(VPolytope { dim, vertices })
    }

    /// Orthogonal projection onto the span of pairwise-orthogonal vectors
    /// with rational lengths, expressed in subspace coordinates.
    pub fn project(&self, basis: &[Point]) -> Result<Self> {
        if basis.is_empty() || basis.len() > self.dim {
            return Err(GeometryError::InvalidParam(
                "projection basis size must be 1..=dim".into(),
            ));
        }
        for b in basis {
            if b.dim() != self.dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: self.dim,
                    got: b.dim(),
                });
            }
            if b.is_zero() {
                return Err(GeometryError::ZeroDirection);
            }
        }
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if !basis[i].dot(&basis[j]).is_zero() {
                    return Err(GeometryError::NonOrthogonalBasis);
                }
            }
        }
        let norms: Vec<Scalar> = basis
            .iter()
            .map(|b| {
                b.dot(b)
                    .sqrt_rational_exact()
                    .ok_or(GeometryError::IrrationalBasisNorm)
            })
            .collect::<Result<_>>()?;
        let pts: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| {
                Point::new(
                    basis
                        .iter()
                        .zip(&norms)
                        .map(|(b, n)| &v.dot(b) / n)
                        .collect(),
                )
            })
            .collect();
        VPolytope::new(basis.len(), pts)
    }

    /// Support value `h_P(u) = max_v <v, u>`.
    pub fn support(&self, u: &Point) -> Result<Scalar> {
        if u.dim() != self.dim {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim,
                got: u.dim(),
            });
        }
        if u.is_zero() {
            return Err(GeometryError::ZeroDirection);
        }
        let mut best: Option<Scalar> = None;
        for v in &self.vertices {
            let d = v.dot(u);
            best = Some(match best {
                None => d,
                Some(b) => b.max(d),
            });
        }
        Ok(best.unwrap())
    }

    /// Centroid fan triangulation; every simplex has nonnegative volume and
    /// they sum to `volume()`.
    pub fn triangulate(&self) -> Triangulation {
        let n = self.vertices.len() as i64;
        let mut apex = Point::origin(self.dim);
        for v in &self.vertices {
            apex = apex.add(v);
        }
        let apex = apex.scale(&Scalar::ratio(1, n));
        let facets = hull::facet_complex(self.dim, &self.vertices)
            .expect("canonical body has a boundary complex");
        Triangulation {
            apex,
            simplices: facets,
        }
    }
}

/// Canonical `Σ tᵢ Kᵢ` for nonnegative coefficients.
pub fn scale_sum(coeffs: &[Scalar], bodies: &[&VPolytope]) -> Result<VPolytope> {
    let pts = scale_sum_points(coeffs, bodies)?;
    let dim = bodies[0].dim();
    VPolytope::new(dim, pts)
}

/// Exact `|Σ tᵢ Kᵢ|` without materializing the canonical sum body.
pub fn scale_sum_volume(coeffs: &[Scalar], bodies: &[&VPolytope]) -> Result<Scalar> {
    let pts = scale_sum_points(coeffs, bodies)?;
    let dim = bodies[0].dim();
    hull::volume_of_points(dim, &pts)
}

/// Exact `|K₁ + ... + K_m|`.
pub fn sum_volume(bodies: &[&VPolytope]) -> Result<Scalar> {
    let coeffs = vec![Scalar::one(); bodies.len()];
    scale_sum_volume(&coeffs, bodies)
}

fn scale_sum_points(coeffs: &[Scalar], bodies: &[&VPolytope]) -> Result<Vec<Point>> {
    if bodies.is_empty() || coeffs.len() != bodies.len() {
        return Err(GeometryError::InvalidParam(
            "scale_sum needs matching coefficient and body lists".into(),
        ));
    }
    let dim = bodies[0].dim();
    for b in bodies {
        if b.dim() != dim {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                got: b.dim(),
            });
        }
    }
    if coeffs.iter().any(|t| t.is_negative()) {
        return Err(GeometryError::NegativeCoefficient);
    }
    // Zero-coefficient terms contribute {0}.
    let active: Vec<(&Scalar, &VPolytope)> = coeffs
        .iter()
        .zip(bodies.iter())
        .filter(|(t, _)| !t.is_zero())
        .map(|(t, b)| (t, *b))
        .collect();
    if active.is_empty() {
        return Ok(vec![Point::origin(dim)]);
    }
    let total: usize = active
        .iter()
        .map(|(_, b)| b.vertices.len())
        .try_fold(1usize, |acc, n| acc.checked_mul(n))
        .ok_or_else(|| GeometryError::TooLarge("vertex product overflows".into()))?;
    if total > MAX_SUM_POINTS {
        return Err(GeometryError::TooLarge(format!(
            "vertex product {total} exceeds cap {MAX_SUM_POINTS}"
        )));
    }
    // Pre-scale each body's vertices once.
    let scaled: Vec<Vec<Point>> = active
        .iter()
        .map(|(t, b)| {
            b.vertices
                .iter()
                .map(|v| if (*t) == &Scalar::one() { v.clone() } else { v.scale(t) })
                .collect()
        })
        .collect();
    let mut pts = Vec::with_capacity(total);
    let mut idx = vec![0usize; scaled.len()];
    loop {
        let mut p = scaled[0][idx[0]].clone();
        for (k, s) in scaled.iter().enumerate().skip(1) {
            p = p.add(&s[idx[k]]);
        }
        pts.push(p);
        // odometer
        let mut k = scaled.len();
        loop {
            if k == 0 {
                return Ok(pts);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < scaled[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}
