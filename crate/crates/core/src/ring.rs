//! Exact coordinate rings for the hull kernel.
//!
//! Hull predicates are determinant signs. Input coordinates are scaled to a
//! common denominator once, after which everything runs over one of three
//! integer rings: `i128` when magnitudes are small enough that no 4x4
//! determinant can overflow, `BigInt` for larger rational inputs, and `Quad`
//! (integer quadruples over 1, √2, √3, √6) when coordinates are irrational.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::scalar::{sign_quad, Scalar};

/// Integer element of Z[√2,√3]: `a + b√2 + c√3 + d√6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Quad {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Quad {
    pub fn from_int(a: BigInt) -> Self {
        Quad {
            a,
            b: <BigInt as Zero>::zero(),
            c: <BigInt as Zero>::zero(),
            d: <BigInt as Zero>::zero(),
        }
    }
}

pub(crate) trait Ring: Clone + Send + Sync + std::fmt::Debug + PartialEq {
    fn r_zero() -> Self;
    fn r_is_zero(&self) -> bool;
    fn r_add(&self, o: &Self) -> Self;
    fn r_sub(&self, o: &Self) -> Self;
    fn r_mul(&self, o: &Self) -> Self;
    fn r_neg(&self) -> Self;
    /// Exact sign under the real embedding.
    fn sgn(&self) -> i8;
    /// Lossless embedding into the largest ring, for shared post-processing.
    fn to_quad(&self) -> Quad;
    /// Small integer constant.
    fn from_small(v: i64) -> Self;
}

impl Ring for i128 {
    fn r_zero() -> Self {
        0
    }
    fn r_is_zero(&self) -> bool {
        *self == 0
    }
    fn r_add(&self, o: &Self) -> Self {
        self + o
    }
    fn r_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn r_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn r_neg(&self) -> Self {
        -self
    }
    fn sgn(&self) -> i8 {
        match self.cmp(&0) {
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => 1,
        }
    }
    fn to_quad(&self) -> Quad {
        Quad::from_int(BigInt::from(*self))
    }
    fn from_small(v: i64) -> Self {
        v as i128
    }
}

impl Ring for BigInt {
    fn r_zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn r_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn r_add(&self, o: &Self) -> Self {
        self + o
    }
    fn r_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn r_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn r_neg(&self) -> Self {
        -self
    }
    fn sgn(&self) -> i8 {
        match self.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }
    fn to_quad(&self) -> Quad {
        Quad::from_int(self.clone())
    }
    fn from_small(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Ring for Quad {
    fn r_zero() -> Self {
        Quad::from_int(<BigInt as Zero>::zero())
    }
    fn r_is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b) && Zero::is_zero(&self.c) && Zero::is_zero(&self.d)
    }
    fn r_add(&self, o: &Self) -> Self {
        Quad {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            c: &self.c + &o.c,
            d: &self.d + &o.d,
        }
    }
    fn r_sub(&self, o: &Self) -> Self {
        Quad {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            c: &self.c - &o.c,
            d: &self.d - &o.d,
        }
    }
    fn r_mul(&self, o: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        Quad {
            a: a1 * a2 + 2 * (b1 * b2) + 3 * (c1 * c2) + 6 * (d1 * d2),
            b: a1 * b2 + b1 * a2 + 3 * (c1 * d2) + 3 * (d1 * c2),
            c: a1 * c2 + c1 * a2 + 2 * (b1 * d2) + 2 * (d1 * b2),
            d: a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        }
    }
    fn r_neg(&self) -> Self {
        Quad {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }
    fn sgn(&self) -> i8 {
        sign_quad(&self.a, &self.b, &self.c, &self.d)
    }
    fn to_quad(&self) -> Quad {
        self.clone()
    }
    fn from_small(v: i64) -> Self {
        Quad::from_int(BigInt::from(v))
    }
}

/// Determinant of a small square matrix (1x1..4x4), cofactor expansion.
pub(crate) fn det<R: Ring>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    match n {
        1 => rows[0][0].clone(),
        2 => det2(
            &rows[0][0], &rows[0][1], //
            &rows[1][0], &rows[1][1],
        ),
        3 => det3(rows, [0, 1, 2]),
        4 => {
            // expand along the first row
            let mut acc = R::r_zero();
            for j in 0..4 {
                if rows[0][j].r_is_zero() {
                    continue;
                }
                let cols: Vec<usize> = (0..4).filter(|&k| k != j).collect();
                let minor = det3(&rows[1..], [cols[0], cols[1], cols[2]]);
                let term = rows[0][j].r_mul(&minor);
                acc = if j % 2 == 0 {
                    acc.r_add(&term)
                } else {
                    acc.r_sub(&term)
                };
            }
            acc
        }
        _ => unreachable!("determinant only defined for n <= 4"),
    }
}

fn det2<R: Ring>(a: &R, b: &R, c: &R, d: &R) -> R {
    a.r_mul(d).r_sub(&b.r_mul(c))
}

fn det3<R: Ring>(rows: &[Vec<R>], cols: [usize; 3]) -> R {
    let m = |i: usize, j: usize| &rows[i][cols[j]];
    let t0 = m(0, 0).r_mul(&det2(m(1, 1), m(1, 2), m(2, 1), m(2, 2)));
    let t1 = m(0, 1).r_mul(&det2(m(1, 0), m(1, 2), m(2, 0), m(2, 2)));
    let t2 = m(0, 2).r_mul(&det2(m(1, 0), m(1, 1), m(2, 0), m(2, 1)));
    t0.r_sub(&t1).r_add(&t2)
}

/// Generalized cross product: the vector orthogonal to the `d-1` rows,
/// with components given by signed maximal minors.
pub(crate) fn cross<R: Ring>(rows: &[Vec<R>], d: usize) -> Vec<R> {
    debug_assert_eq!(rows.len(), d - 1);
    (0..d)
        .map(|j| {
            let cols: Vec<usize> = (0..d).filter(|&k| k != j).collect();
            let minor: Vec<Vec<R>> = rows
                .iter()
                .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
                .collect();
            let m = det(&minor);
            if j % 2 == 0 {
                m
            } else {
                m.r_neg()
            }
        })
        .collect()
}

/// Rank of a small matrix by fraction-free elimination (exact zero tests).
pub(crate) fn rank<R: Ring>(mut m: Vec<Vec<R>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let nrows = m.len();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][col].r_is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        for row in m.iter_mut().skip(r + 1) {
            if row[col].r_is_zero() {
                continue;
            }
            let f = row[col].clone();
            for j in 0..ncols {
                row[j] = pivot_row[col].r_mul(&row[j]).r_sub(&f.r_mul(&pivot_row[j]));
            }
        }
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

/// Convert an accumulated `Quad` value back into a `Scalar`, dividing by the
/// given positive integer denominator.
pub(crate) fn quad_to_scalar(q: &Quad, denom: &BigInt) -> Scalar {
    Scalar::new(
        BigRational::new(q.a.clone(), denom.clone()),
        BigRational::new(q.b.clone(), denom.clone()),
        BigRational::new(q.c.clone(), denom.clone()),
        BigRational::new(q.d.clone(), denom.clone()),
    )
}
