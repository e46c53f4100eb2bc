//! Dimension-specialized exact convex hulls (1..=4) with volumes.
//!
//! 2-D uses a sort-based monotone chain; 3-D and 4-D use an incremental
//! beneath-beyond construction with exact orientation predicates. Coplanar
//! degeneracies are handled by flooding the visible region across
//! zero-orientation neighbours, so grid-like Minkowski sums are processed
//! exactly. Rank-deficient inputs are remapped to exact affine coordinates
//! and hulled in their own dimension; their top-dimensional volume is 0.
//!
//! Volume is the centroid fan over the boundary complex: every facet simplex
//! contributes a nonnegative cone determinant, summed exactly.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{GeometryError, Result};
use crate::point::Point;
use crate::ring::{cross, det, quad_to_scalar, rank, Quad, Ring};
use crate::scalar::Scalar;

pub(crate) struct HullData {
    /// Ascending indices of the extreme points within the input slice
    /// (first occurrence for duplicated input points). Empty when not
    /// requested for a full-dimensional 3-D/4-D hull.
    pub extreme: Vec<usize>,
    /// Exact top-dimensional volume; 0 for rank-deficient inputs.
    pub volume: Scalar,
}

/// Extreme points and exact volume of `conv(pts)`.
pub(crate) fn extreme_and_volume(dim: usize, pts: &[Point]) -> Result<HullData> {
    hull_data(dim, pts, true, false).map(|(h, _)| h)
}

/// Exact volume only; skips the extreme-point filter on big 3-D/4-D hulls.
pub(crate) fn volume_of_points(dim: usize, pts: &[Point]) -> Result<Scalar> {
    Ok(hull_data(dim, pts, false, false)?.0.volume)
}

/// Boundary complex as facet simplices (indices into `pts`). Degenerate
/// bodies return the complex of their affine hull; all cone volumes are 0.
pub(crate) fn facet_complex(dim: usize, pts: &[Point]) -> Result<Vec<Vec<usize>>> {
    Ok(hull_data(dim, pts, false, true)?.1.unwrap_or_default())
}

fn hull_data(
    dim: usize,
    pts: &[Point],
    want_extreme: bool,
    want_facets: bool,
) -> Result<(HullData, Option<Vec<Vec<usize>>>)> {
    crate::point::check_dim(dim)?;
    if pts.is_empty() {
        return Err(GeometryError::EmptyBody);
    }
    for p in pts {
        if p.dim() != dim {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                got: p.dim(),
            });
        }
    }
    // Dedupe, keeping the first occurrence.
    let mut first: HashMap<&Point, usize> = HashMap::new();
    let mut uniq: Vec<usize> = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        if !first.contains_key(p) {
            first.insert(p, i);
            uniq.push(i);
        }
    }
    if uniq.len() == 1 {
        let facets = want_facets.then(|| vec![vec![uniq[0]]]);
        return Ok((
            HullData {
                extreme: vec![uniq[0]],
                volume: Scalar::zero(),
            },
            facets,
        ));
    }
    let upts: Vec<&Point> = uniq.iter().map(|&i| &pts[i]).collect();
    let (rep, scale) = to_rep(&upts);
    let out = match &rep {
        Rep::Small(p) => ring_entry(dim, p, want_extreme, want_facets),
        Rep::Big(p) => ring_entry(dim, p, want_extreme, want_facets),
        Rep::Quad(p) => ring_entry(dim, p, want_extreme, want_facets),
    }?;
    let volume = match out.vol {
        None => Scalar::zero(),
        Some((num, denom)) => {
            let mut full = denom;
            for _ in 0..dim {
                full *= &scale;
            }
            quad_to_scalar(&num, &full)
        }
    };
    let mut extreme: Vec<usize> = out
        .extreme
        .map(|v| v.into_iter().map(|u| uniq[u as usize]).collect())
        .unwrap_or_default();
    extreme.sort_unstable();
    let facets = out.facets.map(|fs| {
        fs.into_iter()
            .map(|f| f.into_iter().map(|u| uniq[u as usize]).collect())
            .collect()
    });
    Ok((HullData { extreme, volume }, facets))
}

enum Rep {
    Small(Vec<Vec<i128>>),
    Big(Vec<Vec<BigInt>>),
    Quad(Vec<Vec<Quad>>),
}

/// Scale all coordinates to a common positive integer denominator, yielding
/// integer (or integer-quadruple) coordinates plus the scale factor.
fn to_rep(upts: &[&Point]) -> (Rep, BigInt) {
    let all_rational = upts
        .iter()
        .all(|p| p.coords().iter().all(|c| c.is_rational()));
    if all_rational {
        let mut l = BigInt::one();
        for p in upts {
            for c in p.coords() {
                let r = c.as_rational().unwrap();
                l = l.lcm(r.denom());
            }
        }
        let big: Vec<Vec<BigInt>> = upts
            .iter()
            .map(|p| {
                p.coords()
                    .iter()
                    .map(|c| {
                        let r = c.as_rational().unwrap();
                        r.numer() * (&l / r.denom())
                    })
                    .collect()
            })
            .collect();
        let fits = big
            .iter()
            .all(|row| row.iter().all(|v| v.magnitude().bits() <= 28));
        if fits {
            let small = big
                .iter()
                .map(|row| row.iter().map(|v| v.to_i128().unwrap()).collect())
                .collect();
            (Rep::Small(small), l)
        } else {
            (Rep::Big(big), l)
        }
    } else {
        let mut l = BigInt::one();
        for p in upts {
            for c in p.coords() {
                let (a, b, cc, d) = c.coefficients();
                l = l.lcm(a.denom()).lcm(b.denom()).lcm(cc.denom()).lcm(d.denom());
            }
        }
        let q: Vec<Vec<Quad>> = upts
            .iter()
            .map(|p| {
                p.coords()
                    .iter()
                    .map(|c| {
                        let (a, b, cc, d) = c.coefficients();
                        Quad {
                            a: a.numer() * (&l / a.denom()),
                            b: b.numer() * (&l / b.denom()),
                            c: cc.numer() * (&l / cc.denom()),
                            d: d.numer() * (&l / d.denom()),
                        }
                    })
                    .collect()
            })
            .collect();
        (Rep::Quad(q), l)
    }
}

struct RingOut {
    extreme: Option<Vec<u32>>,
    /// (numerator, extra denominator) of the volume before the `scale^dim`
    /// division; `None` means rank-deficient (volume 0).
    vol: Option<(Quad, BigInt)>,
    facets: Option<Vec<Vec<u32>>>,
}

fn ring_entry<R: Ring>(
    dim: usize,
    pts: &[Vec<R>],
    want_extreme: bool,
    want_facets: bool,
) -> Result<RingOut> {
    let (p0, basis) = affine_basis(dim, pts);
    if basis.len() < dim {
        // Lower-dimensional body: exact affine coordinates, hull in rank dim.
        let r = basis.len();
        debug_assert!(r >= 1, "duplicate-free input with >1 point has rank >= 1");
        let mapped = remap_low_rank(dim, p0, &basis, pts);
        let sub = ring_hull(r, &mapped, true, want_facets)?;
        return Ok(RingOut {
            extreme: sub.extreme,
            vol: None,
            facets: sub.facets,
        });
    }
    let out = ring_hull(dim, pts, want_extreme, want_facets)?;
    Ok(out)
}

/// Greedy affine basis from point 0: returns (base index, indices whose
/// difference vectors are linearly independent). Uses square-minor tests,
/// staying within the ring.
fn affine_basis<R: Ring>(dim: usize, pts: &[Vec<R>]) -> (usize, Vec<usize>) {
    let p0 = 0usize;
    let mut chosen: Vec<usize> = Vec::new();
    let mut diffs: Vec<Vec<R>> = Vec::new();
    for j in 1..pts.len() {
        if chosen.len() == dim {
            break;
        }
        let dj: Vec<R> = (0..dim).map(|k| pts[j][k].r_sub(&pts[p0][k])).collect();
        let k = diffs.len();
        if has_full_minor(&diffs, &dj, k + 1, dim) {
            diffs.push(dj);
            chosen.push(j);
        }
    }
    (p0, chosen)
}

/// Does `[rows..., extra]` contain a nonzero (k x k) minor?
fn has_full_minor<R: Ring>(rows: &[Vec<R>], extra: &[R], k: usize, dim: usize) -> bool {
    let mut all: Vec<&[R]> = rows.iter().map(|r| r.as_slice()).collect();
    all.push(extra);
    debug_assert_eq!(all.len(), k);
    for cols in column_subsets(dim, k) {
        let m: Vec<Vec<R>> = all
            .iter()
            .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
            .collect();
        if !det(&m).r_is_zero() {
            return true;
        }
    }
    false
}

fn column_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Exact coordinates of every point in the affine basis `V` anchored at
/// `p0`, scaled by det(VVᵀ) > 0 (a common positive factor, so hull
/// combinatorics are unchanged). Promotes to `Quad`.
fn remap_low_rank<R: Ring>(dim: usize, p0: usize, basis: &[usize], pts: &[Vec<R>]) -> Vec<Vec<Quad>> {
    let r = basis.len();
    let v: Vec<Vec<Quad>> = basis
        .iter()
        .map(|&bi| {
            (0..dim)
                .map(|k| pts[bi][k].r_sub(&pts[p0][k]).to_quad())
                .collect()
        })
        .collect();
    // Gram matrix G = V Vᵀ (r x r)
    let gram: Vec<Vec<Quad>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let mut acc = Quad::r_zero();
                    for k in 0..dim {
                        acc = acc.r_add(&v[i][k].r_mul(&v[j][k]));
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let adj = adjugate(&gram);
    pts.iter()
        .map(|p| {
            let w: Vec<Quad> = (0..dim).map(|k| p[k].r_sub(&pts[p0][k]).to_quad()).collect();
            // y = V w  (r-vector), x = adj(G) y
            let y: Vec<Quad> = (0..r)
                .map(|i| {
                    let mut acc = Quad::r_zero();
                    for k in 0..dim {
                        acc = acc.r_add(&v[i][k].r_mul(&w[k]));
                    }
                    acc
                })
                .collect();
            (0..r)
                .map(|i| {
                    let mut acc = Quad::r_zero();
                    for j in 0..r {
                        acc = acc.r_add(&adj[i][j].r_mul(&y[j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn adjugate(m: &[Vec<Quad>]) -> Vec<Vec<Quad>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![Quad::from_small(1)]];
    }
    let mut adj = vec![vec![Quad::r_zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            // cofactor C_ji
            let minor: Vec<Vec<Quad>> = (0..n)
                .filter(|&a| a != j)
                .map(|a| {
                    (0..n)
                        .filter(|&b| b != i)
                        .map(|b| m[a][b].clone())
                        .collect()
                })
                .collect();
            let c = det(&minor);
            adj[i][j] = if (i + j) % 2 == 0 { c } else { c.r_neg() };
        }
    }
    adj
}

fn ring_hull<R: Ring>(
    d: usize,
    pts: &[Vec<R>],
    want_extreme: bool,
    want_facets: bool,
) -> Result<RingOut> {
    match d {
        1 => Ok(hull_1d(pts)),
        2 => Ok(chain_2d(pts)),
        3 | 4 => inc_hull(d, pts, want_extreme, want_facets),
        _ => unreachable!(),
    }
}

fn hull_1d<R: Ring>(pts: &[Vec<R>]) -> RingOut {
    let mut imin = 0usize;
    let mut imax = 0usize;
    for i in 1..pts.len() {
        if pts[i][0].r_sub(&pts[imin][0]).sgn() < 0 {
            imin = i;
        }
        if pts[i][0].r_sub(&pts[imax][0]).sgn() > 0 {
            imax = i;
        }
    }
    let num = pts[imax][0].r_sub(&pts[imin][0]).to_quad();
    let mut extreme = vec![imin as u32, imax as u32];
    extreme.dedup();
    let facets = extreme.iter().map(|&v| vec![v]).collect();
    RingOut {
        extreme: Some(extreme),
        vol: Some((num, BigInt::one())),
        facets: Some(facets),
    }
}

fn chain_2d<R: Ring>(pts: &[Vec<R>]) -> RingOut {
    let mut ids: Vec<u32> = (0..pts.len() as u32).collect();
    ids.sort_by(|&i, &j| {
        let a = &pts[i as usize];
        let b = &pts[j as usize];
        match a[0].r_sub(&b[0]).sgn() {
            -1 => std::cmp::Ordering::Less,
            1 => std::cmp::Ordering::Greater,
            _ => match a[1].r_sub(&b[1]).sgn() {
                -1 => std::cmp::Ordering::Less,
                1 => std::cmp::Ordering::Greater,
                _ => std::cmp::Ordering::Equal,
            },
        }
    });
    let turn = |o: u32, a: u32, b: u32| -> i8 {
        let (o, a, b) = (&pts[o as usize], &pts[a as usize], &pts[b as usize]);
        let x1 = a[0].r_sub(&o[0]);
        let y1 = a[1].r_sub(&o[1]);
        let x2 = b[0].r_sub(&o[0]);
        let y2 = b[1].r_sub(&o[1]);
        x1.r_mul(&y2).r_sub(&y1.r_mul(&x2)).sgn()
    };
    let build = |iter: Box<dyn Iterator<Item = u32> + '_>| -> Vec<u32> {
        let mut h: Vec<u32> = Vec::new();
        for id in iter {
            while h.len() >= 2 && turn(h[h.len() - 2], h[h.len() - 1], id) <= 0 {
                h.pop();
            }
            h.push(id);
        }
        h
    };
    let lower = build(Box::new(ids.iter().copied()));
    let upper = build(Box::new(ids.iter().rev().copied()));
    let mut hull = lower;
    hull.pop();
    hull.extend(upper.iter().take(upper.len().saturating_sub(1)));
    debug_assert!(hull.len() >= 3, "rank-2 input must give a real polygon");
    // Shoelace, accumulated exactly; CCW hull makes every wedge nonnegative.
    let mut acc = Quad::r_zero();
    for k in 0..hull.len() {
        let a = &pts[hull[k] as usize];
        let b = &pts[hull[(k + 1) % hull.len()] as usize];
        let w = a[0].r_mul(&b[1]).r_sub(&a[1].r_mul(&b[0]));
        acc = acc.r_add(&w.to_quad());
    }
    if acc.sgn() < 0 {
        acc = acc.r_neg();
    }
    let facets = (0..hull.len())
        .map(|k| vec![hull[k], hull[(k + 1) % hull.len()]])
        .collect();
    RingOut {
        extreme: Some(hull),
        vol: Some((acc, BigInt::from(2))),
        facets: Some(facets),
    }
}

/// Orientation of the query point against the facet's hyperplane:
/// sign of det[v₁-v₀, …, v_{d-1}-v₀, q-v₀]. Zero for coplanar queries and
/// for degenerate (sliver) facets.
fn orient_facet<R: Ring>(pts: &[Vec<R>], f: &[u32], q: &[R], d: usize) -> i8 {
    let v0 = &pts[f[0] as usize];
    let mut rows: Vec<Vec<R>> = Vec::with_capacity(d);
    for &vi in &f[1..] {
        let v = &pts[vi as usize];
        rows.push((0..d).map(|k| v[k].r_sub(&v0[k])).collect());
    }
    rows.push((0..d).map(|k| q[k].r_sub(&v0[k])).collect());
    det(&rows).sgn()
}

/// Orientation against the fixed interior reference point `z = z_num/(d+1)`,
/// evaluated homogeneously so everything stays in the ring.
fn orient_zref<R: Ring>(pts: &[Vec<R>], f: &[u32], z_num: &[R], d: usize) -> i8 {
    let v0 = &pts[f[0] as usize];
    let mut rows: Vec<Vec<R>> = Vec::with_capacity(d);
    for &vi in &f[1..] {
        let v = &pts[vi as usize];
        rows.push((0..d).map(|k| v[k].r_sub(&v0[k])).collect());
    }
    let dp1 = R::from_small(d as i64 + 1);
    rows.push((0..d).map(|k| z_num[k].r_sub(&dp1.r_mul(&v0[k]))).collect());
    det(&rows).sgn()
}

fn ridges_of(f: &[u32]) -> impl Iterator<Item = Vec<u32>> + '_ {
    (0..f.len()).map(move |skip| {
        let mut r: Vec<u32> = f
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, &v)| v)
            .collect();
        r.sort_unstable();
        r
    })
}

fn inc_hull<R: Ring>(
    d: usize,
    pts: &[Vec<R>],
    want_extreme: bool,
    want_facets: bool,
) -> Result<RingOut> {
    let (p0, basis) = affine_basis(d, pts);
    debug_assert_eq!(basis.len(), d);
    let mut simplex: Vec<u32> = vec![p0 as u32];
    simplex.extend(basis.iter().map(|&b| b as u32));
    // Interior reference: centroid of the initial simplex, kept as the
    // numerator over d+1.
    let z_num: Vec<R> = (0..d)
        .map(|k| {
            let mut acc = R::r_zero();
            for &v in &simplex {
                acc = acc.r_add(&pts[v as usize][k]);
            }
            acc
        })
        .collect();

    let orient_new = |verts: &mut Vec<u32>| {
        let s = orient_zref(pts, verts, &z_num, d);
        if s > 0 {
            verts.swap(0, 1);
        }
        s
    };

    let mut facets: Vec<Vec<u32>> = Vec::new();
    for skip in 0..=d {
        let mut verts: Vec<u32> = simplex
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, &v)| v)
            .collect();
        let s = orient_new(&mut verts);
        debug_assert!(s != 0, "initial simplex facet cannot be degenerate");
        facets.push(verts);
    }

    let in_simplex: Vec<bool> = {
        let mut v = vec![false; pts.len()];
        for &s in &simplex {
            v[s as usize] = true;
        }
        v
    };

    for p in 0..pts.len() {
        if in_simplex[p] {
            continue;
        }
        let q = &pts[p];
        let orients: Vec<i8> = facets
            .iter()
            .map(|f| orient_facet(pts, f, q, d))
            .collect();
        if !orients.iter().any(|&s| s > 0) {
            continue; // inside or on the boundary: not a new vertex
        }
        let mut visible: Vec<bool> = orients.iter().map(|&s| s > 0).collect();
        if orients.iter().any(|&s| s == 0) {
            // Flood coplanar / degenerate neighbours of the visible region so
            // the deleted patch has no zero-orientation holes.
            let mut ridge_map: HashMap<Vec<u32>, Vec<u32>> = HashMap::new();
            for (fi, f) in facets.iter().enumerate() {
                for r in ridges_of(f) {
                    ridge_map.entry(r).or_default().push(fi as u32);
                }
            }
            let mut queue: VecDeque<usize> =
                (0..facets.len()).filter(|&i| visible[i]).collect();
            while let Some(fi) = queue.pop_front() {
                for r in ridges_of(&facets[fi]) {
                    if let Some(nbrs) = ridge_map.get(&r) {
                        for &g in nbrs {
                            let g = g as usize;
                            if !visible[g] && orients[g] == 0 {
                                visible[g] = true;
                                queue.push_back(g);
                            }
                        }
                    }
                }
            }
        }
        // Horizon: ridges incident to exactly one visible facet.
        let mut ridge_count: HashMap<Vec<u32>, u32> = HashMap::new();
        for (fi, f) in facets.iter().enumerate() {
            if visible[fi] {
                for r in ridges_of(f) {
                    *ridge_count.entry(r).or_insert(0) += 1;
                }
            }
        }
        let mut new_facets: Vec<Vec<u32>> = Vec::new();
        for (ridge, cnt) in &ridge_count {
            if *cnt == 1 {
                let mut verts = ridge.clone();
                verts.push(p as u32);
                orient_new(&mut verts);
                new_facets.push(verts);
            }
        }
        // Deterministic facet order regardless of hash iteration.
        new_facets.sort_unstable();
        let mut kept: Vec<Vec<u32>> = facets
            .into_iter()
            .zip(visible.iter())
            .filter(|(_, &vis)| !vis)
            .map(|(f, _)| f)
            .collect();
        kept.append(&mut new_facets);
        facets = kept;
    }

    // Volume: cone fan from z over the oriented boundary.
    let mut vol = Quad::r_zero();
    for f in &facets {
        let v0 = &pts[f[0] as usize];
        let mut rows: Vec<Vec<R>> = Vec::with_capacity(d);
        for &vi in &f[1..] {
            let v = &pts[vi as usize];
            rows.push((0..d).map(|k| v[k].r_sub(&v0[k])).collect());
        }
        let dp1 = R::from_small(d as i64 + 1);
        rows.push((0..d).map(|k| z_num[k].r_sub(&dp1.r_mul(&v0[k]))).collect());
        let term = det(&rows).to_quad();
        debug_assert!(term.sgn() <= 0, "facet oriented away from interior");
        vol = vol.r_sub(&term);
    }
    let mut denom = BigInt::from(d as u64 + 1);
    for k in 2..=d as u64 {
        denom *= BigInt::from(k);
    }

    let extreme = if want_extreme {
        Some(extreme_filter(d, pts, &facets))
    } else {
        None
    };
    Ok(RingOut {
        extreme,
        vol: Some((vol, denom)),
        facets: want_facets.then_some(facets),
    })
}

/// Filter complex vertices down to true extreme points: a candidate is a
/// vertex iff the facet hyperplanes through it have normals of full rank.
fn extreme_filter<R: Ring>(d: usize, pts: &[Vec<R>], facets: &[Vec<u32>]) -> Vec<u32> {
    let mut cand: Vec<u32> = facets.iter().flatten().copied().collect();
    cand.sort_unstable();
    cand.dedup();

    // Group facets by hyperplane via their incidence signature over the
    // candidates; slivers (zero normal) are skipped, their planes are
    // represented by non-degenerate complex-mates.
    let mut groups: HashMap<Vec<u32>, Vec<Quad>> = HashMap::new();
    for f in facets {
        let v0 = &pts[f[0] as usize];
        let rows: Vec<Vec<R>> = f[1..]
            .iter()
            .map(|&vi| {
                let v = &pts[vi as usize];
                (0..d).map(|k| v[k].r_sub(&v0[k])).collect()
            })
            .collect();
        let normal = cross(&rows, d);
        if normal.iter().all(|x| x.r_is_zero()) {
            continue;
        }
        let inc: Vec<u32> = cand
            .iter()
            .copied()
            .filter(|&c| orient_facet(pts, f, &pts[c as usize], d) == 0)
            .collect();
        groups
            .entry(inc)
            .or_insert_with(|| normal.iter().map(|x| x.to_quad()).collect());
    }

    let mut out = Vec::new();
    for &c in &cand {
        let normals: Vec<Vec<Quad>> = groups
            .iter()
            .filter(|(inc, _)| inc.binary_search(&c).is_ok())
            .map(|(_, n)| n.clone())
            .collect();
        if rank(normals) == d {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(coords: &[i64]) -> Point {
        Point::from_ints(coords)
    }

    fn cube(dim: usize) -> Vec<Point> {
        (0..1u32 << dim)
            .map(|m| {
                Point::from_ints(
                    &(0..dim)
                        .map(|i| ((m >> i) & 1) as i64)
                        .collect::<Vec<_>>(),
                )
            })
            .collect()
    }

    #[test]
    fn unit_square_volume() {
        let d = extreme_and_volume(2, &cube(2)).unwrap();
        assert_eq!(d.volume, Scalar::one());
        assert_eq!(d.extreme.len(), 4);
    }

    #[test]
    fn standard_simplex_2d() {
        let pts = vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])];
        let d = extreme_and_volume(2, &pts).unwrap();
        assert_eq!(d.volume, Scalar::ratio(1, 2));
    }

    #[test]
    fn interior_and_collinear_points_removed() {
        let pts = vec![
            pt(&[0, 0]),
            pt(&[4, 0]),
            pt(&[0, 4]),
            pt(&[1, 1]),
            pt(&[2, 0]),
            pt(&[0, 0]),
        ];
        let d = extreme_and_volume(2, &pts).unwrap();
        assert_eq!(d.extreme, vec![0, 1, 2]);
        assert_eq!(d.volume, Scalar::from_int(8));
    }

    #[test]
    fn cube_3d_and_4d() {
        for dim in [3usize, 4] {
            let d = extreme_and_volume(dim, &cube(dim)).unwrap();
            assert_eq!(d.volume, Scalar::one(), "dim {dim}");
            assert_eq!(d.extreme.len(), 1 << dim, "dim {dim}");
        }
    }

    #[test]
    fn simplex_3d_4d_volume() {
        for dim in [3usize, 4] {
            let mut pts = vec![Point::origin(dim)];
            for i in 0..dim {
                pts.push(Point::unit(dim, i));
            }
            let d = extreme_and_volume(dim, &pts).unwrap();
            let fact: i64 = (1..=dim as i64).product();
            assert_eq!(d.volume, Scalar::ratio(1, fact));
            assert_eq!(d.extreme.len(), dim + 1);
        }
    }

    #[test]
    fn grid_with_interior_points_3d() {
        // 3x3x3 grid: only the 8 corners are extreme; volume 8.
        let mut pts = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    pts.push(pt(&[x, y, z]));
                }
            }
        }
        let d = extreme_and_volume(3, &pts).unwrap();
        assert_eq!(d.volume, Scalar::from_int(8));
        assert_eq!(d.extreme.len(), 8);
    }

    #[test]
    fn coplanar_facet_points_not_extreme() {
        // Octahedron plus a point in the middle of a face plane region:
        // face-center points must be filtered out.
        let mut pts = vec![
            pt(&[2, 0, 0]),
            pt(&[-2, 0, 0]),
            pt(&[0, 2, 0]),
            pt(&[0, -2, 0]),
            pt(&[0, 0, 2]),
            pt(&[0, 0, -2]),
        ];
        // barycenter-ish point on the facet x+y+z=2 (scaled to stay integral)
        pts.push(Point::new(vec![
            Scalar::ratio(2, 3),
            Scalar::ratio(2, 3),
            Scalar::ratio(2, 3),
        ]));
        let d = extreme_and_volume(3, &pts).unwrap();
        assert_eq!(d.extreme, vec![0, 1, 2, 3, 4, 5]);
        // |conv(±2e_i)| = 4^3/6 ... octahedron with vertices at distance 2:
        // volume = (4/3)·2³ = 32/3
        assert_eq!(d.volume, Scalar::ratio(32, 3));
    }

    #[test]
    fn degenerate_bodies() {
        // single point
        let d = extreme_and_volume(3, &[pt(&[1, 2, 3])]).unwrap();
        assert_eq!(d.volume, Scalar::zero());
        assert_eq!(d.extreme, vec![0]);
        // segment in 3-D with an interior point
        let pts = vec![pt(&[0, 0, 0]), pt(&[2, 2, 2]), pt(&[1, 1, 1])];
        let d = extreme_and_volume(3, &pts).unwrap();
        assert_eq!(d.volume, Scalar::zero());
        assert_eq!(d.extreme, vec![0, 1]);
        // planar square embedded in 3-D, with center point
        let pts = vec![
            pt(&[0, 0, 1]),
            pt(&[1, 0, 1]),
            pt(&[0, 1, 1]),
            pt(&[1, 1, 1]),
            pt(&[0, 0, 1]),
        ];
        let d = extreme_and_volume(3, &pts).unwrap();
        assert_eq!(d.volume, Scalar::zero());
        assert_eq!(d.extreme, vec![0, 1, 2, 3]);
    }

    #[test]
    fn irrational_coordinates_supported() {
        // triangle with a √2 coordinate: conv{0, (√2,0), (0,1)} has area √2/2
        let pts = vec![
            Point::new(vec![Scalar::zero(), Scalar::zero()]),
            Point::new(vec![Scalar::sqrt2(), Scalar::zero()]),
            Point::new(vec![Scalar::zero(), Scalar::one()]),
        ];
        let d = extreme_and_volume(2, &pts).unwrap();
        let expected = &Scalar::sqrt2() * &Scalar::ratio(1, 2);
        assert_eq!(d.volume, expected);
    }

    #[test]
    fn big_coordinates_fall_back_to_bigint() {
        let big = 1i64 << 40;
        let pts = vec![
            pt(&[0, 0]),
            pt(&[big, 0]),
            pt(&[0, big]),
            pt(&[big, big]),
        ];
        let d = extreme_and_volume(2, &pts).unwrap();
        let expect = &Scalar::from_int(big) * &Scalar::from_int(big);
        assert_eq!(d.volume, expect);
    }

    /// Is `q` inside conv of `pts` (2-D)? Brute-force Carathéodory test over
    /// points, segments and nondegenerate triangles; the independent
    /// "in-hull-of-others" oracle.
    fn in_some_triangle(q: &[Scalar; 2], pts: &[[Scalar; 2]]) -> bool {
        let orient = |a: &[Scalar; 2], b: &[Scalar; 2], c: &[Scalar; 2]| -> i8 {
            (&(&(&b[0] - &a[0]) * &(&c[1] - &a[1])) - &(&(&b[1] - &a[1]) * &(&c[0] - &a[0])))
                .signum()
        };
        let n = pts.len();
        for i in 0..n {
            if pts[i] == *q {
                return true;
            }
            for j in i + 1..n {
                // on segment [pi, pj]?
                let (a, b) = (&pts[i], &pts[j]);
                if orient(a, b, q) == 0 {
                    let d1 = [&q[0] - &a[0], &q[1] - &a[1]];
                    let d2 = [&q[0] - &b[0], &q[1] - &b[1]];
                    let dot = &(&d1[0] * &d2[0]) + &(&d1[1] * &d2[1]);
                    if dot.signum() <= 0 {
                        return true;
                    }
                }
                for k in j + 1..n {
                    let c = &pts[k];
                    if orient(a, b, c) == 0 {
                        continue; // degenerate triangle; segments cover it
                    }
                    let s1 = orient(a, b, q);
                    let s2 = orient(b, c, q);
                    let s3 = orient(c, a, q);
                    let has_pos = s1 > 0 || s2 > 0 || s3 > 0;
                    let has_neg = s1 < 0 || s2 < 0 || s3 < 0;
                    if !(has_pos && has_neg) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Independent facet-decomposition volume oracle for 3-D: enumerate
    /// supporting planes by triples, filter each face down to its extreme
    /// points with the triangle oracle, build the face's oriented area
    /// vector, and sign-sum cone determinants from the origin. Shares no
    /// code with the incremental hull.
    fn oracle_volume_3d(pts: &[Point]) -> Scalar {
        let n = pts.len();
        let coords: Vec<[Scalar; 3]> = pts
            .iter()
            .map(|p| {
                [
                    p.coords()[0].clone(),
                    p.coords()[1].clone(),
                    p.coords()[2].clone(),
                ]
            })
            .collect();
        let sub = |a: &[Scalar; 3], b: &[Scalar; 3]| -> [Scalar; 3] {
            [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
        };
        let cross3 = |a: &[Scalar; 3], b: &[Scalar; 3]| -> [Scalar; 3] {
            [
                &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
                &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
                &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
            ]
        };
        let dot3 = |a: &[Scalar; 3], b: &[Scalar; 3]| -> Scalar {
            &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
        };
        let mut seen_planes: Vec<([Scalar; 3], Scalar)> = Vec::new();
        let mut total = Scalar::zero();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let u = sub(&coords[j], &coords[i]);
                    let v = sub(&coords[k], &coords[i]);
                    let mut nrm = cross3(&u, &v);
                    if nrm.iter().all(|x| x.is_zero()) {
                        continue;
                    }
                    let mut off = dot3(&nrm, &coords[i]);
                    // one-sidedness, flip so inside is <=
                    let mut pos = false;
                    let mut neg = false;
                    for c in &coords {
                        match (&dot3(&nrm, c) - &off).signum() {
                            1 => pos = true,
                            -1 => neg = true,
                            _ => {}
                        }
                    }
                    if pos && neg {
                        continue;
                    }
                    if pos {
                        nrm = [-&nrm[0], -&nrm[1], -&nrm[2]];
                        off = -off;
                    }
                    // canonical form for dedupe: divide by first nonzero comp
                    let lead = nrm.iter().find(|x| !x.is_zero()).unwrap().clone();
                    let canon = (
                        [&nrm[0] / &lead, &nrm[1] / &lead, &nrm[2] / &lead],
                        &off / &lead,
                    );
                    if seen_planes.iter().any(|p| *p == canon) {
                        continue;
                    }
                    seen_planes.push(canon);
                    // face points
                    let face: Vec<usize> = (0..n)
                        .filter(|&m| (&dot3(&nrm, &coords[m]) - &off).is_zero())
                        .collect();
                    // drop points interior to the face (2-D projection along
                    // the largest normal axis keeps the face injective)
                    let axis = {
                        let cands = [0usize, 1, 2];
                        *cands
                            .iter()
                            .find(|&&a| !nrm[a].is_zero())
                            .unwrap()
                    };
                    let proj = |idx: usize| -> [Scalar; 2] {
                        let c = &coords[idx];
                        match axis {
                            0 => [c[1].clone(), c[2].clone()],
                            1 => [c[0].clone(), c[2].clone()],
                            _ => [c[0].clone(), c[1].clone()],
                        }
                    };
                    let mut verts: Vec<usize> = Vec::new();
                    for &f in &face {
                        let others: Vec<[Scalar; 2]> = face
                            .iter()
                            .filter(|&&o| o != f)
                            .map(|&o| proj(o))
                            .collect();
                        if !in_some_triangle(&proj(f), &others) {
                            verts.push(f);
                        }
                    }
                    if verts.len() < 3 {
                        continue;
                    }
                    // angular order around the 2-D centroid, exact comparator
                    let m = verts.len() as i64;
                    let cx: Scalar = verts.iter().map(|&v| proj(v)[0].clone()).sum();
                    let cy: Scalar = verts.iter().map(|&v| proj(v)[1].clone()).sum();
                    let cx = &cx / &Scalar::from_int(m);
                    let cy = &cy / &Scalar::from_int(m);
                    let half = |p: &[Scalar; 2]| -> u8 {
                        let dy = (&p[1] - &cy).signum();
                        let dx = (&p[0] - &cx).signum();
                        if dy > 0 || (dy == 0 && dx > 0) {
                            0
                        } else {
                            1
                        }
                    };
                    verts.sort_by(|&a, &b| {
                        let pa = proj(a);
                        let pb = proj(b);
                        half(&pa).cmp(&half(&pb)).then_with(|| {
                            let ax = &pa[0] - &cx;
                            let ay = &pa[1] - &cy;
                            let bx = &pb[0] - &cx;
                            let by = &pb[1] - &cy;
                            let crossv = &(&ax * &by) - &(&ay * &bx);
                            match crossv.signum() {
                                1 => std::cmp::Ordering::Less,
                                -1 => std::cmp::Ordering::Greater,
                                _ => std::cmp::Ordering::Equal,
                            }
                        })
                    });
                    // oriented area vector of the facet ring
                    let base = &coords[verts[0]];
                    let mut area = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
                    for w in 1..verts.len() - 1 {
                        let e1 = sub(&coords[verts[w]], base);
                        let e2 = sub(&coords[verts[w + 1]], base);
                        let c = cross3(&e1, &e2);
                        area = [&area[0] + &c[0], &area[1] + &c[1], &area[2] + &c[2]];
                    }
                    // make the area vector point outward (along nrm)
                    if dot3(&area, &nrm).is_negative() {
                        area = [-&area[0], -&area[1], -&area[2]];
                    }
                    // cone from global origin: (1/6)·(v0 · area)
                    total = &total + &dot3(base, &area);
                }
            }
        }
        &total.abs() / &Scalar::from_int(6)
    }

    #[test]
    fn volume_matches_facet_oracle_3d() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..20 {
            let pts: Vec<Point> = (0..7)
                .map(|_| {
                    Point::new(
                        (0..3)
                            .map(|_| Scalar::ratio(rng.gen_range(0..=16), 16))
                            .collect(),
                    )
                })
                .collect();
            let got = volume_of_points(3, &pts).unwrap();
            let want = oracle_volume_3d(&pts);
            assert_eq!(got, want);
        }
        // Minkowski-style grids have heavy coplanarity; cover that too.
        for _ in 0..5 {
            let mut pts = Vec::new();
            for _ in 0..3 {
                let base: Vec<Scalar> =
                    (0..3).map(|_| Scalar::ratio(rng.gen_range(0..=8), 8)).collect();
                pts.push(Point::new(base));
            }
            let mut grid = Vec::new();
            for a in &pts {
                for b in &pts {
                    grid.push(a.add(b));
                    for c in &pts {
                        grid.push(a.add(b).add(c));
                    }
                }
            }
            let got = volume_of_points(3, &grid).unwrap();
            let want = oracle_volume_3d(&grid);
            assert_eq!(got, want);
        }
    }
}
