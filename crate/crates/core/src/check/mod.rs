//! The inequality catalog: every checker takes exact bodies and produces an
//! `InequalityReport` with exact slack. Checkers are pure and deterministic;
//! random sweeps over them live in `sweep`.

mod ball;
mod compression;
mod delta;
mod fractional;
mod plunnecke;
mod ruzsa;
mod supermod;
mod xiao;

pub use ball::{ball_polytope, check_projection_ball, check_zonoid_ellipsoid};
pub use compression::{check_compression, minimal_multiset, Multiset};
pub use delta::check_delta_increment;
pub use fractional::{check_fractional_superadditivity, FractionalPartition};
pub use plunnecke::{dimension_constant, plunnecke_ratio3, plunnecke_ratio_m};
pub use ruzsa::{
    asymmetry, check_brunn_minkowski, check_planar_difference, check_ruzsa_triangle,
    check_triangle_variant, AsymmetryOutcome,
};
pub use supermod::{check_m_supermodular, check_supermodular3, SetFunction};
pub use xiao::{check_fenchel_local, check_xiao};
