//! Mixed volumes by two independent exact routes.
//!
//! The default route is the alternating sum
//! `n!·V(B₁,…,Bₙ) = Σ_{s⊆[n]} (-1)^{n-|s|} |Σ_{i∈s} Bᵢ|`,
//! with repeated bodies grouped into integer scale factors. The cross-check
//! route interpolates the full volume polynomial `|t₁B₁+⋯+t_kB_k|` on a
//! shifted principal lattice and reads coefficients off exactly. The two
//! paths share only the hull/volume kernel underneath, not the algorithm.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{GeometryError, Result};
use crate::polytope::{self, VPolytope};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct MixedVolumeQuery {
    bodies: Vec<VPolytope>,
    multiplicities: Vec<u32>,
}

impl MixedVolumeQuery {
    pub fn new(bodies: Vec<VPolytope>, multiplicities: Vec<u32>) -> Result<Self> {
        if bodies.is_empty() || bodies.len() != multiplicities.len() {
            return Err(GeometryError::InvalidParam(
                "query needs one multiplicity per body".into(),
            ));
        }
        let dim = bodies[0].dim();
        for b in &bodies {
            if b.dim() != dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: dim,
                    got: b.dim(),
                });
            }
        }
        let total: u32 = multiplicities.iter().sum();
        if total as usize != dim {
            return Err(GeometryError::InvalidParam(format!(
                "multiplicities sum to {total}, ambient dimension is {dim}"
            )));
        }
        Ok(MixedVolumeQuery {
            bodies,
            multiplicities,
        })
    }

    pub fn dim(&self) -> usize {
        self.bodies[0].dim()
    }

    pub fn bodies(&self) -> &[VPolytope] {
        &self.bodies
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }
}

pub fn binomial(n: u64, k: u64) -> BigRational {
    if k > n {
        return BigRational::from_integer(0.into());
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    BigRational::new(num, den)
}

pub fn binomial_scalar(n: u64, k: u64) -> Scalar {
    Scalar::from_rational(binomial(n, k))
}

fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn multinomial(n: u64, parts: &[u32]) -> BigRational {
    let mut den = BigInt::one();
    for &p in parts {
        den *= factorial(p as u64);
    }
    BigRational::new(factorial(n), den)
}

/// Exact mixed volume `V(B₁[m₁], …, B_k[m_k])` by the alternating sum.
pub fn mixed_volume(q: &MixedVolumeQuery) -> Result<Scalar> {
    let n = q.dim() as u32;
    // Subsets of the n slots grouped by how many copies of each distinct
    // body they pick: Σ over count vectors c ≤ m of
    // (-1)^(n-|c|) Π C(mᵢ,cᵢ) |Σ cᵢBᵢ|, all divided by n!.
    let k = q.bodies.len();
    let refs: Vec<&VPolytope> = q.bodies.iter().collect();
    let mut counts = vec![0u32; k];
    let mut acc = Scalar::zero();
    loop {
        let picked: u32 = counts.iter().sum();
        let mut weight = BigRational::one();
        for (c, m) in counts.iter().zip(&q.multiplicities) {
            weight *= binomial(*m as u64, *c as u64);
        }
        let sign_neg = (n - picked) % 2 == 1;
        let coeffs: Vec<Scalar> = counts
            .iter()
            .map(|&c| Scalar::from_int(c as i64))
            .collect();
        let vol = polytope::scale_sum_volume(&coeffs, &refs)?;
        let term = &vol * &Scalar::from_rational(weight);
        acc = if sign_neg { &acc - &term } else { &acc + &term };
        // odometer over 0..=m per coordinate
        let mut i = k;
        loop {
            if i == 0 {
                let nfact = Scalar::from_rational(BigRational::from_integer(factorial(n as u64)));
                return Ok(&acc / &nfact);
            }
            i -= 1;
            counts[i] += 1;
            if counts[i] <= q.multiplicities[i] {
                break;
            }
            counts[i] = 0;
        }
    }
}

/// The same mixed volume read off the interpolated volume polynomial.
pub fn mixed_volume_interpolated(q: &MixedVolumeQuery) -> Result<Scalar> {
    let refs: Vec<&VPolytope> = q.bodies.iter().collect();
    let poly = volume_polynomial(&refs)?;
    let alpha = q.multiplicities.clone();
    let coeff = poly.coefficient(&alpha);
    let w = multinomial(q.dim() as u64, &alpha);
    Ok(&coeff / &Scalar::from_rational(w))
}

/// `|t₁B₁ + … + t_kB_k|` as an exact homogeneous polynomial of degree n.
#[derive(Clone, Debug)]
pub struct VolumePolynomial {
    nvars: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<u32>, Scalar>,
}

impl VolumePolynomial {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> &BTreeMap<Vec<u32>, Scalar> {
        &self.coeffs
    }

    pub fn coefficient(&self, alpha: &[u32]) -> Scalar {
        self.coeffs
            .get(alpha)
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, t: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (alpha, c) in &self.coeffs {
            let mut term = c.clone();
            for (a, ti) in alpha.iter().zip(t) {
                term = &term * &ti.pow(*a);
            }
            acc = &acc + &term;
        }
        acc
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Symbolic mixed partial with respect to the given (distinct) variables.
    pub fn mixed_partial(&self, vars: &[usize]) -> VolumePolynomial {
        let mut coeffs: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
        'outer: for (alpha, c) in &self.coeffs {
            let mut a = alpha.clone();
            let mut factor = Scalar::one();
            for &v in vars {
                if a[v] == 0 {
                    continue 'outer;
                }
                factor = &factor * &Scalar::from_int(a[v] as i64);
                a[v] -= 1;
            }
            let add = &factor * c;
            coeffs
                .entry(a)
                .and_modify(|e| *e = &*e + &add)
                .or_insert(add);
        }
        VolumePolynomial {
            nvars: self.nvars,
            degree: self.degree.saturating_sub(vars.len()),
            coeffs,
        }
    }
}

const MAX_POLY_COEFFS: usize = 256;

/// Interpolate the exact volume polynomial of `k` bodies through scaled-sum
/// evaluations on the hyperplane `t_k = 1` (homogeneity recovers the rest).
/// The nodes form a shifted principal lattice inside `{1,…,n+1}^k`, which is
/// unisolvent for total degree n; a singular system is therefore an internal
/// fault, not an input error.
pub fn volume_polynomial(bodies: &[&VPolytope]) -> Result<VolumePolynomial> {
    if bodies.is_empty() {
        return Err(GeometryError::InvalidParam("no bodies".into()));
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
    let k = bodies.len();
    let n = dim as u32;
    // exponents of the reduced (k-1)-variable polynomial: |e| <= n
    let reduced = exponents_upto(k - 1, n);
    if reduced.len() > MAX_POLY_COEFFS {
        return Err(GeometryError::TooLarge(format!(
            "{} interpolation coefficients exceed cap {MAX_POLY_COEFFS}",
            reduced.len()
        )));
    }
    // nodes: e + 1 on the first k-1 coordinates, last coordinate fixed at 1
    let mut matrix: Vec<Vec<Scalar>> = Vec::with_capacity(reduced.len());
    let mut rhs: Vec<Scalar> = Vec::with_capacity(reduced.len());
    for node_e in &reduced {
        let mut t: Vec<Scalar> = node_e
            .iter()
            .map(|&e| Scalar::from_int(e as i64 + 1))
            .collect();
        t.push(Scalar::one());
        let row: Vec<Scalar> = reduced
            .iter()
            .map(|mono| {
                let mut v = Scalar::one();
                for (e, ti) in mono.iter().zip(&t) {
                    v = &v * &ti.pow(*e);
                }
                v
            })
            .collect();
        matrix.push(row);
        rhs.push(polytope::scale_sum_volume(&t, bodies)?);
    }
    let sol = solve_exact(matrix, rhs)?;
    let mut coeffs = BTreeMap::new();
    for (e, c) in reduced.iter().zip(sol) {
        if c.is_zero() {
            continue;
        }
        let used: u32 = e.iter().sum();
        let mut alpha = e.clone();
        alpha.push(n - used);
        coeffs.insert(alpha, c);
    }
    Ok(VolumePolynomial {
        nvars: k,
        degree: dim,
        coeffs,
    })
}

fn exponents_upto(vars: usize, max_total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; vars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, max_total, &mut cur, &mut out);
    out
}

/// Exact Gaussian elimination over the scalar field.
fn solve_exact(mut m: Vec<Vec<Scalar>>, mut rhs: Vec<Scalar>) -> Result<Vec<Scalar>> {
    let n = m.len();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Err(GeometryError::Internal(
                "singular interpolation system on the fixed grid".into(),
            ));
        };
        m.swap(col, p);
        rhs.swap(col, p);
        let pivot = m[col][col].clone();
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pivot;
            for c in col..n {
                m[r][c] = &m[r][c] - &(&f * &m[col][c]);
            }
            rhs[r] = &rhs[r] - &(&f * &rhs[col]);
        }
    }
    Ok((0..n).map(|i| &rhs[i] / &m[i][i]).collect())
}

/// Steiner coefficients `[V(A[n-k], B[k])]_{k=0..n}`:
/// `|A+tB| = Σ C(n,k) t^k coeff[k]`.
pub fn steiner_coefficients(a: &VPolytope, b: &VPolytope) -> Result<Vec<Scalar>> {
    let n = a.dim() as u32;
    if b.dim() != a.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    (0..=n)
        .map(|k| {
            let q = MixedVolumeQuery::new(vec![a.clone(), b.clone()], vec![n - k, k])?;
            mixed_volume(&q)
        })
        .collect()
}

/// `Σ_{s⊆[m]} (-1)^{m-|s|} |B₀ + Σ_{i∈s} Bᵢ|`: nonnegative for convex
/// bodies, and exactly zero when m exceeds the dimension. The 2^m subset
/// evaluations run in parallel when the `parallel` feature is on; exact
/// summation is order-independent.
pub fn alternating_sum(b0: &VPolytope, bs: &[&VPolytope]) -> Result<Scalar> {
    let m = bs.len();
    if m == 0 {
        return Err(GeometryError::InvalidParam(
            "alternating sum needs at least one increment body".into(),
        ));
    }
    if m > 20 {
        return Err(GeometryError::TooLarge(format!("2^{m} subset sums")));
    }
    let term = |mask: u32| -> Result<Scalar> {
        let mut group: Vec<&VPolytope> = vec![b0];
        for (i, b) in bs.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                group.push(b);
            }
        }
        let vol = polytope::sum_volume(&group)?;
        let odd = (m as u32 - mask.count_ones()) % 2 == 1;
        Ok(if odd { -vol } else { vol })
    };
    let masks: Vec<u32> = (0..1u32 << m).collect();
    #[cfg(feature = "parallel")]
    let total = {
        use rayon::prelude::*;
        masks
            .par_iter()
            .map(|&mask| term(mask))
            .try_reduce(Scalar::zero, |a, b| Ok(&a + &b))?
    };
    #[cfg(not(feature = "parallel"))]
    let total = {
        let mut acc = Scalar::zero();
        for &mask in &masks {
            acc = &acc + &term(mask)?;
        }
        acc
    };
    Ok(total)
}
