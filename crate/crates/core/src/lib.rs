//! Exact convex-geometry engine for sumset inequalities.
//!
//! Everything is computed in the field Q(√2,√3) with no rounding: volumes,
//! Minkowski sums and mixed volumes of polytopal bodies in dimensions 1-4,
//! plus a catalog of inequality checkers and the extremal constructions they
//! are tested against. The only tolerance-based checks in the crate are the
//! two curved-body checks, which replace the Euclidean ball by a documented
//! rational approximation and report the exact approximation slack.

pub mod error;
pub mod rat;
pub mod scalar;
pub mod roots;
pub mod point;
mod ring;
mod hull;
pub mod polytope;
pub mod zonotope;
pub mod boxunion;
pub mod pointset;
mod polyunion;
pub mod body;
pub mod mixed;

pub use body::Body;
pub use boxunion::BoxUnion;
pub use error::{GeometryError, Result};
pub use point::Point;
pub use pointset::PointSet;
pub use polytope::{scale_sum, scale_sum_volume, sum_volume, Triangulation, VPolytope};
pub use mixed::{mixed_volume, mixed_volume_interpolated, volume_polynomial, MixedVolumeQuery, VolumePolynomial};
pub use scalar::Scalar;
pub use zonotope::Zonotope;
