//! Plünnecke-Ruzsa ratio checkers: the sharp three-body constants per
//! dimension, and the m-body inequalities with their dimension-dependent
//! additive factors.

use crate::body::Body;
use crate::error::{GeometryError, Result};
use crate::polytope::{self, VPolytope};
use crate::report::InequalityReport;
use crate::scalar::Scalar;

/// The sharp (or best-known) constant for `|A||A+B+C| <= c_n |A+B||A+C|`
/// over convex bodies: c_1 = c_2 = 1, c_3 = 4/3, c_4 <= 2.
pub fn dimension_constant(dim: usize) -> Result<Scalar> {
    match dim {
        1 | 2 => Ok(Scalar::one()),
        3 => Ok(Scalar::ratio(4, 3)),
        4 => Ok(Scalar::from_int(2)),
        _ => Err(GeometryError::UnsupportedDimension(dim)),
    }
}

/// `|A||A+B+C| <= c_n |A+B||A+C|` with the exact ratio reported.
/// A zero denominator produces a distinguished degenerate report.
pub fn plunnecke_ratio3(a: &VPolytope, b: &VPolytope, c: &VPolytope) -> Result<InequalityReport> {
    let dim = a.dim();
    let constant = dimension_constant(dim)?;
    let bodies = vec![
        Body::Vpolytope(a.clone()),
        Body::Vpolytope(b.clone()),
        Body::Vpolytope(c.clone()),
    ];
    let va = a.volume();
    let vab = polytope::sum_volume(&[a, b])?;
    let vac = polytope::sum_volume(&[a, c])?;
    let den = &vab * &vac;
    if den.is_zero() {
        return Ok(InequalityReport::degenerate(
            "plunnecke3",
            dim,
            bodies,
            "zero denominator |A+B||A+C|; equality analysis lives at |A| = 0",
        ));
    }
    let vabc = polytope::sum_volume(&[a, b, c])?;
    let lhs = &va * &vabc;
    let rhs = &constant * &den;
    Ok(InequalityReport::check(
        "plunnecke3", dim, bodies, lhs, rhs, constant,
    ))
}

/// The two m-body variants:
/// `|A|^{m-1} |A+ΣB_i| <= (1+m)^n Π|A+B_i|` and
/// `|A|^{m-1} |ΣB_i|   <=           Π|A+B_i|` (equality iff |A| = 0).
pub fn plunnecke_ratio_m(
    a: &VPolytope,
    bs: &[&VPolytope],
) -> Result<(InequalityReport, InequalityReport)> {
    let dim = a.dim();
    let m = bs.len();
    if m == 0 {
        return Err(GeometryError::InvalidParam("need at least one B_i".into()));
    }
    let mut bodies = vec![Body::Vpolytope(a.clone())];
    bodies.extend(bs.iter().map(|b| Body::Vpolytope((*b).clone())));

    let va = a.volume();
    let va_pow = va.pow(m as u32 - 1);
    let mut prod = Scalar::one();
    for b in bs {
        prod = &prod * &polytope::sum_volume(&[a, b])?;
    }
    let mut with_a = vec![a];
    with_a.extend(bs.iter().copied());
    let v_a_sum = polytope::sum_volume(&with_a)?;
    let v_sum = polytope::sum_volume(bs)?;

    let c1 = Scalar::from_int(1 + m as i64).pow(dim as u32);
    let additive = InequalityReport::check(
        "plunnecke-m-additive",
        dim,
        bodies.clone(),
        &va_pow * &v_a_sum,
        &c1 * &prod,
        c1,
    );
    let ruzsa = InequalityReport::check(
        "plunnecke-m-ruzsa",
        dim,
        bodies,
        &va_pow * &v_sum,
        prod,
        Scalar::one(),
    );
    Ok((additive, ruzsa))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Point;

    #[test]
    fn probe_b_c_zero_gives_ratio_one() {
        let a = VPolytope::unit_cube(2).unwrap();
        let zero = VPolytope::origin(2).unwrap();
        let r = plunnecke_ratio3(&a, &zero, &zero).unwrap();
        assert!(r.pass);
        assert_eq!(r.ratio().unwrap(), Scalar::one());
    }

    #[test]
    fn equal_squares_nine_sixteenths() {
        let a = VPolytope::unit_cube(2).unwrap();
        let r = plunnecke_ratio3(&a, &a, &a).unwrap();
        assert!(r.pass);
        // |3A| = 9, |2A|² = 16
        assert_eq!(r.lhs, Scalar::from_int(9));
        assert_eq!(r.rhs, Scalar::from_int(16));
        assert_eq!(r.ratio().unwrap(), Scalar::ratio(9, 16));
    }

    #[test]
    fn b_equals_c_never_exceeds_one() {
        // |A||A+2B| <= |A+B|² by Brunn-Minkowski, in any dimension
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(73);
        for dim in [2usize, 3] {
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
                    VPolytope::new(dim, pts).unwrap()
                };
                let a = gen(dim + 2);
                let b = gen(dim + 2);
                let r = plunnecke_ratio3(&a, &b, &b).unwrap();
                if !r.degenerate {
                    let paper_ratio = &r.ratio().unwrap() * &r.constant;
                    assert!(paper_ratio <= Scalar::one());
                }
            }
        }
    }

    #[test]
    fn degenerate_denominator_flagged() {
        let seg = VPolytope::segment(Point::from_ints(&[0, 0]), Point::from_ints(&[1, 0])).unwrap();
        let r = plunnecke_ratio3(&seg, &seg, &seg).unwrap();
        assert!(r.degenerate);
    }

    #[test]
    fn m_body_variants() {
        let a = VPolytope::unit_cube(2).unwrap();
        // m = 2 unit squares, all equal: Ruzsa form reads 1·4 <= 4·4
        let (add, ruz) = plunnecke_ratio_m(&a, &[&a, &a]).unwrap();
        assert_eq!(ruz.lhs, Scalar::from_int(4));
        assert_eq!(ruz.rhs, Scalar::from_int(16));
        assert!(ruz.pass && add.pass);
        // A a single point: the Ruzsa variant degenerates to equality
        // (m = 1: |B| = |A+B| exactly; m >= 2: the left side vanishes)
        let p = VPolytope::origin(2).unwrap();
        let b = VPolytope::unit_cube(2).unwrap();
        let (_, ruz) = plunnecke_ratio_m(&p, &[&b]).unwrap();
        assert!(ruz.pass);
        assert!(ruz.slack.is_zero());
        let (_, ruz) = plunnecke_ratio_m(&p, &[&b, &b]).unwrap();
        assert!(ruz.pass);
        assert!(ruz.lhs.is_zero());
    }
}
