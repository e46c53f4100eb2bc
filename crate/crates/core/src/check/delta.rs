//! The Δ-increment inequality on box unions:
//! `|Δ_C Δ_B (A)| >= |A+B+C| - |A+C| - |A+B| + |A|` when `0 ∈ B ∩ C`.
//! Set differences stay inside the box algebra, where all the measures are
//! exact.

use crate::body::Body;
use crate::boxunion::BoxUnion;
use crate::error::{GeometryError, Result};
use crate::report::InequalityReport;
use crate::scalar::Scalar;

fn delta(a: &BoxUnion, b: &BoxUnion) -> Result<BoxUnion> {
    // Δ_B(A) = (A+B) ∖ A
    a.minkowski_sum(b)?.subtract(a)
}

pub fn check_delta_increment(
    a: &BoxUnion,
    b: &BoxUnion,
    c: &BoxUnion,
) -> Result<InequalityReport> {
    let dim = a.dim();
    if b.dim() != dim || c.dim() != dim {
        return Err(GeometryError::DimensionMismatch {
            expected: dim,
            got: b.dim().max(c.dim()),
        });
    }
    if !b.contains_origin() || !c.contains_origin() {
        return Err(GeometryError::InvalidParam(
            "delta increments require 0 ∈ B and 0 ∈ C".into(),
        ));
    }
    let d1 = delta(a, b)?;
    let d2 = delta(&d1, c)?;
    let rhs = d2.volume();
    let ab = a.minkowski_sum(b)?.volume();
    let ac = a.minkowski_sum(c)?.volume();
    let abc = a.minkowski_sum(b)?.minkowski_sum(c)?.volume();
    let lhs = &(&abc - &ac) - &(&ab - &a.volume());
    Ok(InequalityReport::check(
        "delta-increment",
        dim,
        vec![
            Body::Boxunion(a.clone()),
            Body::Boxunion(b.clone()),
            Body::Boxunion(c.clone()),
        ],
        lhs,
        rhs,
        Scalar::one(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn origin_box(dim: usize) -> BoxUnion {
        BoxUnion::cube(dim, 0, 0).unwrap()
    }

    #[test]
    fn trivial_zero_increments() {
        let a = BoxUnion::cube(2, 0, 3).unwrap();
        let r = check_delta_increment(&a, &origin_box(2), &origin_box(2)).unwrap();
        assert!(r.pass);
        assert!(r.lhs.is_zero());
        assert!(r.rhs.is_zero());
    }

    #[test]
    fn unit_interval_chain() {
        // A = B = C = [0,1] in 1-D: Δ_B(A) = [1,2], Δ_CΔ_B(A) = [2,3];
        // alternating side: 3 - 2 - 2 + 1 = 0
        let seg = BoxUnion::cube(1, 0, 1).unwrap();
        let r = check_delta_increment(&seg, &seg, &seg).unwrap();
        assert!(r.pass);
        assert_eq!(r.rhs, Scalar::one());
        assert!(r.lhs.is_zero());
    }

    #[test]
    fn origin_requirement() {
        let a = BoxUnion::cube(1, 0, 1).unwrap();
        let off = BoxUnion::cube(1, 5, 6).unwrap();
        assert!(check_delta_increment(&a, &off, &a).is_err());
    }

    #[test]
    fn random_planar_box_unions_pass() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(97);
        for _ in 0..20 {
            let mut gen = |anchor: bool| {
                let mut boxes: Vec<crate::boxunion::AxisBox> = Vec::new();
                if anchor {
                    // first box straddles the origin
                    boxes.push(
                        (0..2)
                            .map(|_| {
                                (
                                    Scalar::ratio(-rng.gen_range(0..=4), 2),
                                    Scalar::ratio(rng.gen_range(0..=4), 2),
                                )
                            })
                            .collect(),
                    );
                }
                for _ in 0..rng.gen_range(1..=2) {
                    boxes.push(
                        (0..2)
                            .map(|_| {
                                let lo = rng.gen_range(-6i64..=4);
                                let hi = lo + rng.gen_range(0..=4);
                                (Scalar::ratio(lo, 2), Scalar::ratio(hi, 2))
                            })
                            .collect(),
                    );
                }
                BoxUnion::new(2, boxes).unwrap()
            };
            let a = gen(false);
            let b = gen(true);
            let c = gen(true);
            let r = check_delta_increment(&a, &b, &c).unwrap();
            assert!(r.pass, "slack {}", r.slack);
        }
    }
}
