//! Difference-body inequalities: the Ruzsa triangle inequality for compact
//! sets, its convex sharpening through Litvak's observation, the planar
//! refinement `|A-C| <= |A+C| + 2√(|A||C|)` with its equality cases, and the
//! additive-asymmetry bound. Square-root comparisons are done in exact
//! squared form; Brunn-Minkowski is decided by certified root comparison.

use crate::body::{Body, Region};
use crate::error::{GeometryError, Result};
use crate::mixed::binomial_scalar;
use crate::report::InequalityReport;
use crate::roots::{cmp_root_sum, nth_root_bounds};
use crate::scalar::Scalar;
use crate::polytope::{self, VPolytope};

use super::plunnecke::dimension_constant;

/// `|A||B-C| <= |A-C||A-B|` for compact sets (convex or box unions; mixed
/// forms in dimensions 1-2). Differences are sums with the reflected body.
pub fn check_ruzsa_triangle(a: &Body, b: &Body, c: &Body) -> Result<InequalityReport> {
    let dim = a.dim();
    let ra = Region::from_body(a)?;
    let rb = Region::from_body(b)?;
    let rc = Region::from_body(c)?;
    let b_minus_c = rb.sum(&rc.reflect())?;
    let a_minus_c = ra.sum(&rc.reflect())?;
    let a_minus_b = ra.sum(&rb.reflect())?;
    let lhs = &ra.volume() * &b_minus_c.volume();
    let rhs = &a_minus_c.volume() * &a_minus_b.volume();
    Ok(InequalityReport::check(
        "ruzsa-triangle",
        dim,
        vec![a.clone(), b.clone(), c.clone()],
        lhs,
        rhs,
        Scalar::one(),
    ))
}

/// `|A||A+B+C| <= (1/2^n) C(2n,n) c_n · min(|A-B||A+C|, |A-B||A-C|)`.
pub fn check_triangle_variant(
    a: &VPolytope,
    b: &VPolytope,
    c: &VPolytope,
) -> Result<InequalityReport> {
    let dim = a.dim();
    let n = dim as u32;
    let cn = dimension_constant(dim)?;
    let litvak = &binomial_scalar(2 * n as u64, n as u64)
        / &Scalar::from_int(1i64 << n);
    let constant = &litvak * &cn;
    let nb = b.reflect();
    let nc = c.reflect();
    let v_ab_minus = polytope::sum_volume(&[a, &nb])?;
    let v_ac_plus = polytope::sum_volume(&[a, c])?;
    let v_ac_minus = polytope::sum_volume(&[a, &nc])?;
    let lhs = &a.volume() * &polytope::sum_volume(&[a, b, c])?;
    let m1 = &v_ab_minus * &v_ac_plus;
    let m2 = &v_ab_minus * &v_ac_minus;
    let rhs = &constant * &m1.min(m2);
    Ok(InequalityReport::check(
        "triangle-variant",
        dim,
        vec![
            Body::Vpolytope(a.clone()),
            Body::Vpolytope(b.clone()),
            Body::Vpolytope(c.clone()),
        ],
        lhs,
        rhs,
        constant,
    ))
}

/// Planar refinement `|A-C| <= |A+C| + 2√(|A||C|)`, compared exactly:
/// when `|A-C| > |A+C|` the squared form `(|A-C|-|A+C|)² <= 4|A||C|` is
/// reported; otherwise the inequality is trivially true.
pub fn check_planar_difference(a: &VPolytope, c: &VPolytope) -> Result<InequalityReport> {
    if a.dim() != 2 || c.dim() != 2 {
        return Err(GeometryError::UnsupportedDimension(a.dim().max(c.dim())));
    }
    let nc = c.reflect();
    let v_diff = polytope::sum_volume(&[a, &nc])?;
    let v_sum = polytope::sum_volume(&[a, c])?;
    let excess = &v_diff - &v_sum;
    let lhs = if excess.is_positive() {
        &excess * &excess
    } else {
        Scalar::zero()
    };
    let rhs = &Scalar::from_int(4) * &(&a.volume() * &c.volume());
    Ok(InequalityReport::check(
        "planar-difference",
        2,
        vec![Body::Vpolytope(a.clone()), Body::Vpolytope(c.clone())],
        lhs,
        rhs,
        Scalar::from_int(2),
    )
    .with_note("compared in squared form: (|A-C|-|A+C|)^2 vs 4|A||C|"))
}

pub struct AsymmetryOutcome {
    pub report: InequalityReport,
    /// `| |A+C|/|A-C| - 1 |`, None for degenerate `|A-C| = 0`.
    pub asym: Option<Scalar>,
    /// `(2 e^{-d(A,C)})² = 4|A||C| / |A-C|²`.
    pub bound_sq: Option<Scalar>,
}

/// Additive asymmetry `asym(A,C) <= 2 e^{-d(A,C)}`, i.e. at the literal
/// level `asym(A,C)·|A-C| <= 2√(|A||C|)`, squared-comparable exactly.
pub fn asymmetry(a: &VPolytope, c: &VPolytope) -> Result<AsymmetryOutcome> {
    if a.dim() != 2 || c.dim() != 2 {
        return Err(GeometryError::UnsupportedDimension(a.dim().max(c.dim())));
    }
    let bodies = vec![Body::Vpolytope(a.clone()), Body::Vpolytope(c.clone())];
    let nc = c.reflect();
    let v_diff = polytope::sum_volume(&[a, &nc])?;
    let v_sum = polytope::sum_volume(&[a, c])?;
    if v_diff.is_zero() {
        return Ok(AsymmetryOutcome {
            report: InequalityReport::degenerate(
                "asymmetry",
                2,
                bodies,
                "|A-C| = 0: asymmetry undefined",
            ),
            asym: None,
            bound_sq: None,
        });
    }
    let dev = &v_sum - &v_diff;
    let lhs = &dev * &dev;
    let rhs = &Scalar::from_int(4) * &(&a.volume() * &c.volume());
    let asym = (&v_sum / &v_diff - Scalar::one()).abs();
    let bound_sq = &rhs / &(&v_diff * &v_diff);
    Ok(AsymmetryOutcome {
        report: InequalityReport::check("asymmetry", 2, bodies, lhs, rhs, Scalar::from_int(2))
            .with_note("compared in squared form: (|A+C|-|A-C|)^2 vs 4|A||C|"),
        asym: Some(asym),
        bound_sq: Some(bound_sq),
    })
}

/// Brunn-Minkowski `|A+B|^(1/n) >= |A|^(1/n) + |B|^(1/n)`, decided by exact
/// root comparison (rational volumes required). The reported lhs is a
/// certified rational lower bound of `(|A|^(1/n)+|B|^(1/n))^n`.
pub fn check_brunn_minkowski(a: &Body, b: &Body) -> Result<InequalityReport> {
    let dim = a.dim();
    let ra = Region::from_body(a)?;
    let rb = Region::from_body(b)?;
    let v_sum = ra.sum(&rb)?.volume();
    let va = ra.volume();
    let vb = rb.volume();
    let (l, aa, bb) = match (v_sum.as_rational(), va.as_rational(), vb.as_rational()) {
        (Some(l), Some(a), Some(b)) => (l.clone(), a.clone(), b.clone()),
        _ => {
            return Err(GeometryError::InvalidParam(
                "Brunn-Minkowski comparison needs rational volumes".into(),
            ))
        }
    };
    let cmp = cmp_root_sum(&l, &aa, &bb, dim as u32);
    let pass = cmp != std::cmp::Ordering::Less;
    // certified rational lower bound of the right side, for the report only
    let (alo, _) = nth_root_bounds(&aa, dim as u32, 30);
    let (blo, _) = nth_root_bounds(&bb, dim as u32, 30);
    let lhs_bound = (alo + blo).pow(dim as i32);
    let mut report = InequalityReport::check(
        "brunn-minkowski",
        dim,
        vec![a.clone(), b.clone()],
        Scalar::from_rational(lhs_bound),
        v_sum,
        Scalar::one(),
    )
    .with_note("pass decided by exact n-th root comparison; lhs is a certified lower bound");
    report.pass = pass;
    Ok(report)
}
