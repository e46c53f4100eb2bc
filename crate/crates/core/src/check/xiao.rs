//! Mixed-volume inequalities: Xiao's Bezout-type bound and Fenchel's local
//! Alexandrov inequality (constant 2 in general, 1 when A is a simplex).

use crate::body::Body;
use crate::error::{GeometryError, Result};
use crate::mixed::{binomial_scalar, mixed_volume, MixedVolumeQuery};
use crate::polytope::VPolytope;
use crate::report::InequalityReport;
use crate::scalar::Scalar;

/// `|A| V(A[n-j-m], B[j], C[m]) <= min(C(n,j), C(n,m)) V(A[n-j], B[j]) V(A[n-m], C[m])`.
pub fn check_xiao(
    a: &VPolytope,
    b: &VPolytope,
    c: &VPolytope,
    j: u32,
    m: u32,
) -> Result<InequalityReport> {
    let n = a.dim() as u32;
    if j < 1 || m < 1 || j + m > n {
        return Err(GeometryError::IndexOutOfRange(format!(
            "need j, m >= 1 and j+m <= n; got j={j}, m={m}, n={n}"
        )));
    }
    let va = a.volume();
    let v_mix = mixed_volume(&MixedVolumeQuery::new(
        vec![a.clone(), b.clone(), c.clone()],
        vec![n - j - m, j, m],
    )?)?;
    let v_ab = mixed_volume(&MixedVolumeQuery::new(
        vec![a.clone(), b.clone()],
        vec![n - j, j],
    )?)?;
    let v_ac = mixed_volume(&MixedVolumeQuery::new(
        vec![a.clone(), c.clone()],
        vec![n - m, m],
    )?)?;
    let constant = binomial_scalar(n as u64, j as u64)
        .min(binomial_scalar(n as u64, m as u64));
    let lhs = &va * &v_mix;
    let rhs = &constant * &(&v_ab * &v_ac);
    Ok(InequalityReport::check(
        "xiao",
        a.dim(),
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

/// `|A| V(A[n-2], B, C) <= 2 V(A[n-1], B) V(A[n-1], C)`; constant 1 when A
/// is a simplex.
pub fn check_fenchel_local(
    a: &VPolytope,
    b: &VPolytope,
    c: &VPolytope,
) -> Result<InequalityReport> {
    let n = a.dim() as u32;
    if n < 2 {
        return Err(GeometryError::UnsupportedDimension(a.dim()));
    }
    let constant = if a.is_simplex() {
        Scalar::one()
    } else {
        Scalar::from_int(2)
    };
    let va = a.volume();
    let v_mix = mixed_volume(&MixedVolumeQuery::new(
        vec![a.clone(), b.clone(), c.clone()],
        vec![n - 2, 1, 1],
    )?)?;
    let v_ab = mixed_volume(&MixedVolumeQuery::new(
        vec![a.clone(), b.clone()],
        vec![n - 1, 1],
    )?)?;
    let v_ac = mixed_volume(&MixedVolumeQuery::new(
        vec![a.clone(), c.clone()],
        vec![n - 1, 1],
    )?)?;
    let lhs = &va * &v_mix;
    let rhs = &constant * &(&v_ab * &v_ac);
    Ok(InequalityReport::check(
        "fenchel-local",
        a.dim(),
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
