//! Fractional superadditivity of volume over fractional partitions.

use std::collections::BTreeSet;

use crate::body::Body;
use crate::error::{GeometryError, Result};
use crate::polytope::{self, VPolytope};
use crate::report::InequalityReport;
use crate::scalar::Scalar;

/// Weights `β(s) >= 0` on a hypergraph over `[k]` with `Σ_{s∋i} β(s) = 1`
/// for every ground element `i`.
#[derive(Clone, Debug)]
pub struct FractionalPartition {
    ground: usize,
    sets: Vec<BTreeSet<usize>>,
    weights: Vec<Scalar>,
}

impl FractionalPartition {
    pub fn new(ground: usize, sets: Vec<BTreeSet<usize>>, weights: Vec<Scalar>) -> Result<Self> {
        if sets.len() != weights.len() {
            return Err(GeometryError::InvalidPartition(
                "one weight per hyperedge required".into(),
            ));
        }
        if weights.iter().any(Scalar::is_negative) {
            return Err(GeometryError::InvalidPartition(
                "negative weight".into(),
            ));
        }
        for s in &sets {
            if s.is_empty() {
                return Err(GeometryError::InvalidPartition("empty hyperedge".into()));
            }
            if let Some(&bad) = s.iter().find(|&&i| i >= ground) {
                return Err(GeometryError::InvalidPartition(format!(
                    "element {bad} outside ground set of size {ground}"
                )));
            }
        }
        for i in 0..ground {
            let total: Scalar = sets
                .iter()
                .zip(&weights)
                .filter(|(s, _)| s.contains(&i))
                .map(|(_, w)| w.clone())
                .sum();
            if total != Scalar::one() {
                return Err(GeometryError::InvalidPartition(format!(
                    "element {i} has total weight {total}, expected 1"
                )));
            }
        }
        Ok(FractionalPartition {
            ground,
            sets,
            weights,
        })
    }

    /// All singletons with weight 1: plain superadditivity.
    pub fn singletons(k: usize) -> Self {
        FractionalPartition {
            ground: k,
            sets: (0..k).map(|i| BTreeSet::from([i])).collect(),
            weights: vec![Scalar::one(); k],
        }
    }

    /// All (k-1)-subsets with weight 1/(k-1): the leave-one-out partition.
    pub fn leave_one_out(k: usize) -> Self {
        let sets: Vec<BTreeSet<usize>> = (0..k)
            .map(|skip| (0..k).filter(|&i| i != skip).collect())
            .collect();
        FractionalPartition {
            ground: k,
            sets,
            weights: vec![Scalar::ratio(1, k as i64 - 1); k],
        }
    }
}

/// `|Σ A_i| >= Σ_s β(s) |Σ_{j∈s} A_j|`.
pub fn check_fractional_superadditivity(
    bodies: &[VPolytope],
    part: &FractionalPartition,
) -> Result<InequalityReport> {
    if bodies.len() != part.ground {
        return Err(GeometryError::InvalidPartition(format!(
            "{} bodies but partition over {}",
            bodies.len(),
            part.ground
        )));
    }
    let refs: Vec<&VPolytope> = bodies.iter().collect();
    let rhs = polytope::sum_volume(&refs)?;
    let mut lhs = Scalar::zero();
    for (s, w) in part.sets.iter().zip(&part.weights) {
        if w.is_zero() {
            continue;
        }
        let group: Vec<&VPolytope> = s.iter().map(|&i| &bodies[i]).collect();
        lhs = &lhs + &(w * &polytope::sum_volume(&group)?);
    }
    Ok(InequalityReport::check(
        "fractional-superadditivity",
        bodies[0].dim(),
        bodies.iter().cloned().map(Body::Vpolytope).collect(),
        lhs,
        rhs,
        Scalar::one(),
    ))
}
