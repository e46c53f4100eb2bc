//! Exact 2-D machinery for unions of convex polygons: Sutherland-Hodgman
//! clipping against convex clip polygons and inclusion-exclusion areas.
//! Used for bodies of the form polygon + finite point set, which are unions
//! of translates.

use crate::point::Point;
use crate::polytope::VPolytope;
use crate::scalar::Scalar;

/// Counter-clockwise vertex ring of a canonical 2-D polytope. Degenerate
/// bodies (point, segment) return their 1 or 2 vertices.
pub(crate) fn ring_ccw(p: &VPolytope) -> Vec<Point> {
    debug_assert_eq!(p.dim(), 2);
    let verts = p.vertices();
    if verts.len() <= 2 {
        return verts.to_vec();
    }
    // monotone chain over the (already distinct, sorted) vertices
    let pts: Vec<&Point> = verts.iter().collect();
    let turn = |o: &Point, a: &Point, b: &Point| -> i8 {
        let x1 = &a.coords()[0] - &o.coords()[0];
        let y1 = &a.coords()[1] - &o.coords()[1];
        let x2 = &b.coords()[0] - &o.coords()[0];
        let y2 = &b.coords()[1] - &o.coords()[1];
        (&(&x1 * &y2) - &(&y1 * &x2)).signum()
    };
    fn build<'a>(
        iter: impl Iterator<Item = &'a Point>,
        turn: &impl Fn(&Point, &Point, &Point) -> i8,
    ) -> Vec<&'a Point> {
        let mut h: Vec<&'a Point> = Vec::new();
        for p in iter {
            while h.len() >= 2 && turn(h[h.len() - 2], h[h.len() - 1], p) <= 0 {
                h.pop();
            }
            h.push(p);
        }
        h
    }
    let lower = build(pts.iter().copied(), &turn);
    let upper = build(pts.iter().rev().copied(), &turn);
    let mut ring: Vec<Point> = lower[..lower.len() - 1].iter().map(|&p| p.clone()).collect();
    ring.extend(upper[..upper.len() - 1].iter().map(|&p| p.clone()));
    ring
}

/// Signed-free polygon area (any orientation, convex ring).
pub(crate) fn ring_area(ring: &[Point]) -> Scalar {
    if ring.len() < 3 {
        return Scalar::zero();
    }
    let mut acc = Scalar::zero();
    for k in 0..ring.len() {
        let a = &ring[k];
        let b = &ring[(k + 1) % ring.len()];
        acc = &acc + &(&(&a.coords()[0] * &b.coords()[1]) - &(&a.coords()[1] * &b.coords()[0]));
    }
    &acc.abs() * &Scalar::ratio(1, 2)
}

pub(crate) fn translate_ring(ring: &[Point], by: &Point) -> Vec<Point> {
    ring.iter().map(|p| p.add(by)).collect()
}

/// Clip a convex subject ring against a convex clip ring (both CCW).
/// Returns the (possibly degenerate) intersection ring.
pub(crate) fn clip_convex(subject: &[Point], clip: &[Point]) -> Vec<Point> {
    if subject.is_empty() || clip.len() < 3 {
        // degenerate clip has no interior: intersection is null-area
        return Vec::new();
    }
    let mut output: Vec<Point> = subject.to_vec();
    let n = clip.len();
    for e in 0..n {
        if output.is_empty() {
            return output;
        }
        let a = &clip[e];
        let b = &clip[(e + 1) % n];
        let dx = &b.coords()[0] - &a.coords()[0];
        let dy = &b.coords()[1] - &a.coords()[1];
        let side = |p: &Point| -> i8 {
            let px = &p.coords()[0] - &a.coords()[0];
            let py = &p.coords()[1] - &a.coords()[1];
            (&(&dx * &py) - &(&dy * &px)).signum()
        };
        let input = std::mem::take(&mut output);
        let m = input.len();
        for i in 0..m {
            let cur = &input[i];
            let prev = &input[(i + m - 1) % m];
            let sc = side(cur);
            let sp = side(prev);
            if sc >= 0 {
                if sp < 0 {
                    output.push(line_intersect(prev, cur, a, &dx, &dy));
                }
                output.push(cur.clone());
            } else if sp >= 0 {
                output.push(line_intersect(prev, cur, a, &dx, &dy));
            }
        }
    }
    output
}

/// Intersection of segment (s, e) with the line through `a` of direction
/// (dx, dy). Caller guarantees the segment crosses the line.
fn line_intersect(s: &Point, e: &Point, a: &Point, dx: &Scalar, dy: &Scalar) -> Point {
    let sx = &s.coords()[0];
    let sy = &s.coords()[1];
    let ex = &e.coords()[0];
    let ey = &e.coords()[1];
    // t with cross(d, s + t(e-s) - a) = 0
    let rx = &(ex - sx);
    let ry = &(ey - sy);
    let num = &(dx * &(&a.coords()[1] - sy)) - &(dy * &(&a.coords()[0] - sx));
    let den = &(dx * ry) - &(dy * rx);
    debug_assert!(!den.is_zero());
    let t = &num / &den;
    Point::new(vec![sx + &(rx * &t), sy + &(ry * &t)])
}

/// Exact area of a union of convex rings by inclusion-exclusion with
/// pruned intersection recursion.
pub(crate) fn union_area(rings: &[Vec<Point>]) -> Scalar {
    fn rec(current: &[Point], rest: &[Vec<Point>], sign: i8, acc: &mut Scalar) {
        for (i, r) in rest.iter().enumerate() {
            let inter = clip_convex(current, r);
            if inter.is_empty() {
                continue;
            }
            let a = ring_area(&inter);
            if sign > 0 {
                *acc = &*acc + &a;
            } else {
                *acc = &*acc - &a;
            }
            if !a.is_zero() {
                rec(&inter, &rest[i + 1..], -sign, acc);
            }
        }
    }
    let mut acc = Scalar::zero();
    for (i, r) in rings.iter().enumerate() {
        if r.len() < 3 {
            continue;
        }
        acc = &acc + &ring_area(r);
        rec(r, &rings[i + 1..], -1, &mut acc);
    }
    acc
}
