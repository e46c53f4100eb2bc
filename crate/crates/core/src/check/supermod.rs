//! Supermodularity checkers: the three-body inequality on convex and mixed
//! bodies, and m-supermodularity of the volume set function.

use std::collections::BTreeSet;

use crate::body::{Body, Region};
use crate::error::{GeometryError, Result};
use crate::mixed::{mixed_volume, MixedVolumeQuery};
use crate::polytope::{self, VPolytope};
use crate::report::InequalityReport;
use crate::scalar::Scalar;

/// `|A+B| + |A+C| <= |A+B+C| + |A|`.
///
/// Holds for convex triples, and with A convex, B a zonotope, C any compact
/// set. Non-convex inputs are supported where the evaluation algebra is
/// exact: dimensions 1-2 for mixed forms, any dimension when all three are
/// box unions.
pub fn check_supermodular3(a: &Body, b: &Body, c: &Body) -> Result<InequalityReport> {
    let dim = a.dim();
    let ra = Region::from_body(a)?;
    let rb = Region::from_body(b)?;
    let rc = Region::from_body(c)?;
    let ab = ra.sum(&rb)?;
    let ac = ra.sum(&rc)?;
    let abc = ab.sum(&rc)?;
    let lhs = &ab.volume() + &ac.volume();
    let rhs = &abc.volume() + &ra.volume();
    Ok(InequalityReport::check(
        "supermodular3",
        dim,
        vec![a.clone(), b.clone(), c.clone()],
        lhs,
        rhs,
        Scalar::one(),
    ))
}

/// A set function over subsets of the body index set `[k]`.
#[derive(Clone, Debug)]
pub enum SetFunction {
    /// `F(s) = |Σ_{i∈s} B_i|`.
    Volume { bodies: Vec<VPolytope> },
    /// `F(s) = V((Σ_{i∈s} B_i)[n-l], C_1, …, C_l)`.
    MixedWithFixed {
        bodies: Vec<VPolytope>,
        fixed: Vec<VPolytope>,
    },
}

impl SetFunction {
    pub fn ground_size(&self) -> usize {
        match self {
            SetFunction::Volume { bodies } => bodies.len(),
            SetFunction::MixedWithFixed { bodies, .. } => bodies.len(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SetFunction::Volume { bodies } => bodies[0].dim(),
            SetFunction::MixedWithFixed { bodies, .. } => bodies[0].dim(),
        }
    }

    pub fn eval(&self, s: &BTreeSet<usize>) -> Result<Scalar> {
        match self {
            SetFunction::Volume { bodies } => {
                if s.is_empty() {
                    return Ok(Scalar::zero());
                }
                let group: Vec<&VPolytope> = s.iter().map(|&i| &bodies[i]).collect();
                polytope::sum_volume(&group)
            }
            SetFunction::MixedWithFixed { bodies, fixed } => {
                let dim = self.dim();
                let l = fixed.len();
                if l > dim {
                    return Err(GeometryError::IndexOutOfRange(
                        "more fixed bodies than the dimension".into(),
                    ));
                }
                let summed = if s.is_empty() {
                    VPolytope::origin(dim)?
                } else {
                    let coeffs = vec![Scalar::one(); s.len()];
                    let group: Vec<&VPolytope> = s.iter().map(|&i| &bodies[i]).collect();
                    polytope::scale_sum(&coeffs, &group)?
                };
                let mut all = vec![summed];
                all.extend(fixed.iter().cloned());
                let mut mults = vec![(dim - l) as u32];
                mults.extend(std::iter::repeat(1u32).take(l));
                mixed_volume(&MixedVolumeQuery::new(all, mults)?)
            }
        }
    }
}

/// m-supermodularity of a set function at `(s0; s1, …, sm)` with the
/// increments pairwise disjoint:
/// `Σ_{I⊆[m]} (-1)^{m-|I|} F(s0 ∪ ⋃_{i∈I} s_i) >= 0`.
pub fn check_m_supermodular(
    f: &SetFunction,
    s0: &BTreeSet<usize>,
    incs: &[BTreeSet<usize>],
) -> Result<InequalityReport> {
    let k = f.ground_size();
    let m = incs.len();
    if m == 0 {
        return Err(GeometryError::InvalidParam("no increment sets".into()));
    }
    for s in std::iter::once(s0).chain(incs.iter()) {
        if let Some(&bad) = s.iter().find(|&&i| i >= k) {
            return Err(GeometryError::IndexOutOfRange(format!(
                "set element {bad} out of ground range {k}"
            )));
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            if incs[i].intersection(&incs[j]).next().is_some() {
                return Err(GeometryError::OverlappingSets);
            }
        }
    }
    // positive terms to the rhs, negative to the lhs: slack = alternating sum
    let mut lhs = Scalar::zero();
    let mut rhs = Scalar::zero();
    for mask in 0..1u32 << m {
        let mut s = s0.clone();
        for (i, inc) in incs.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                s.extend(inc.iter().copied());
            }
        }
        let v = f.eval(&s)?;
        if (m as u32 - mask.count_ones()) % 2 == 0 {
            rhs = &rhs + &v;
        } else {
            lhs = &lhs + &v;
        }
    }
    let bodies = match f {
        SetFunction::Volume { bodies } => bodies.clone(),
        SetFunction::MixedWithFixed { bodies, .. } => bodies.clone(),
    };
    Ok(InequalityReport::check(
        "m-supermodular",
        f.dim(),
        bodies.into_iter().map(Body::Vpolytope).collect(),
        lhs,
        rhs,
        Scalar::one(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxunion::BoxUnion;
    use crate::point::Point;
    use crate::pointset::PointSet;
    use crate::zonotope::Zonotope;

    fn setof(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn discrete_counterexample_fails_by_one() {
        // A = {0,1}, B = C = [0,1] in 1-D: slack exactly -1
        let a = Body::Pointset(
            PointSet::from_values([Scalar::zero(), Scalar::one()]).unwrap(),
        );
        let seg = Body::Vpolytope(
            VPolytope::segment(Point::from_ints(&[0]), Point::from_ints(&[1])).unwrap(),
        );
        let r = check_supermodular3(&a, &seg, &seg).unwrap();
        assert!(!r.pass);
        assert_eq!(r.slack, Scalar::from_int(-1));
        assert_eq!(r.lhs, Scalar::from_int(4));
        assert_eq!(r.rhs, Scalar::from_int(3));
    }

    #[test]
    fn convex_triples_pass() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(51);
        for dim in 2..=3usize {
            for _ in 0..5 {
                let mut gen = |k: usize| {
                    let pts: Vec<Point> = (0..k)
                        .map(|_| {
                            Point::new(
                                (0..dim)
                                    .map(|_| Scalar::ratio(rng.gen_range(0..=32), 32))
                                    .collect(),
                            )
                        })
                        .collect();
                    Body::Vpolytope(VPolytope::new(dim, pts).unwrap())
                };
                let (a, b, c) = (gen(dim + 2), gen(dim + 2), gen(dim + 2));
                assert!(check_supermodular3(&a, &b, &c).unwrap().pass);
            }
        }
    }

    #[test]
    fn zonotope_plus_compact_planar_passes() {
        // A convex polygon, B a zonotope, C a planar point set
        let a = Body::Vpolytope(
            VPolytope::new(
                2,
                vec![
                    Point::from_ints(&[0, 0]),
                    Point::from_ints(&[2, 0]),
                    Point::from_ints(&[1, 2]),
                ],
            )
            .unwrap(),
        );
        let b = Body::Zonotope(
            Zonotope::new(
                2,
                Point::origin(2),
                vec![Point::from_ints(&[1, 0]), Point::from_ints(&[1, 1])],
            )
            .unwrap(),
        );
        let c = Body::Pointset(
            PointSet::new(
                2,
                [
                    Point::from_ints(&[0, 0]),
                    Point::from_ints(&[5, 0]),
                    Point::from_ints(&[0, 3]),
                ],
            )
            .unwrap(),
        );
        let r = check_supermodular3(&a, &b, &c).unwrap();
        assert!(r.pass, "slack {}", r.slack);
    }

    #[test]
    fn box_union_triples_any_dim() {
        let a = Body::Boxunion(BoxUnion::cube(3, 0, 2).unwrap());
        let b = Body::Boxunion(
            BoxUnion::new(
                3,
                vec![
                    BoxUnion::cube(3, 0, 1).unwrap().boxes()[0].clone(),
                    BoxUnion::cube(3, 3, 4).unwrap().boxes()[0].clone(),
                ],
            )
            .unwrap(),
        );
        let r = check_supermodular3(&a, &b, &b).unwrap();
        // convexity of A makes no promise here, but the report is exact
        assert_eq!(r.pass, !r.slack.is_negative());
    }

    #[test]
    fn m_supermodular_levels() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(53);
        let mut gen = || {
            let pts: Vec<Point> = (0..5)
                .map(|_| {
                    Point::new(
                        (0..3)
                            .map(|_| Scalar::ratio(rng.gen_range(0..=16), 16))
                            .collect(),
                    )
                })
                .collect();
            VPolytope::new(3, pts).unwrap()
        };
        let bodies: Vec<VPolytope> = (0..4).map(|_| gen()).collect();
        let f = SetFunction::Volume {
            bodies: bodies.clone(),
        };
        // m = 1: monotone
        let r =
            check_m_supermodular(&f, &setof(&[0]), &[setof(&[1])]).unwrap();
        assert!(r.pass);
        // m = 2: supermodularity
        let r = check_m_supermodular(&f, &setof(&[0]), &[setof(&[1]), setof(&[2])]).unwrap();
        assert!(r.pass);
        // m = 3 with a base set
        let r = check_m_supermodular(
            &f,
            &setof(&[3]),
            &[setof(&[0]), setof(&[1]), setof(&[2])],
        )
        .unwrap();
        assert!(r.pass);
        // overlapping increments rejected
        assert!(matches!(
            check_m_supermodular(&f, &setof(&[]), &[setof(&[0, 1]), setof(&[1])]),
            Err(GeometryError::OverlappingSets)
        ));
    }

    #[test]
    fn mixed_with_fixed_set_function() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(57);
        let mut gen = || {
            let pts: Vec<Point> = (0..5)
                .map(|_| {
                    Point::new(
                        (0..3)
                            .map(|_| Scalar::ratio(rng.gen_range(0..=16), 16))
                            .collect(),
                    )
                })
                .collect();
            VPolytope::new(3, pts).unwrap()
        };
        let f = SetFunction::MixedWithFixed {
            bodies: (0..3).map(|_| gen()).collect(),
            fixed: vec![gen()],
        };
        let r = check_m_supermodular(&f, &setof(&[2]), &[setof(&[0]), setof(&[1])]).unwrap();
        assert!(r.pass, "slack {}", r.slack);
    }
}
