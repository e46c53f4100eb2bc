//! Exact arithmetic in the field Q(√2,√3).
//!
//! A `Scalar` is `a + b√2 + c√3 + d√6` with rational coefficients. The field
//! is closed under `+`, `-`, `*`, `/`, and the sign of any element is decided
//! exactly by two squarings: write `x = u + v√3` with `u, v ∈ Q(√2)`, compare
//! `u²` against `3v²` inside `Q(√2)`, where the same trick bottoms out on
//! plain rationals. No rounding happens anywhere.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::rat::{format_rational, parse_rational, rational_to_f64};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

/// Sign of `p + q√2` for integer `p, q`.
pub(crate) fn sign_pair(p: &BigInt, q: &BigInt) -> i8 {
    let sp = bigint_sign(p);
    let sq = bigint_sign(q);
    match (sp, sq) {
        (0, s) | (s, 0) => s,
        (1, 1) => 1,
        (-1, -1) => -1,
        (1, -1) => bigint_sign(&(p * p - 2 * (q * q))),
        (-1, 1) => bigint_sign(&(2 * (q * q) - p * p)),
        _ => unreachable!(),
    }
}

/// Sign of `a + b√2 + c√3 + d√6` for integer coefficients.
///
/// Splits as `(a + b√2) + (c + d√2)√3` and squares once into Q(√2).
pub(crate) fn sign_quad(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> i8 {
    let su = sign_pair(a, b);
    let sv = sign_pair(c, d);
    match (su, sv) {
        (s, 0) => s,
        (0, s) => s,
        (1, 1) => 1,
        (-1, -1) => -1,
        _ => {
            // u² - 3v² in Q(√2); zero is impossible unless v = 0 since
            // √3 ∉ Q(√2).
            let u2p = a * a + 2 * (b * b);
            let u2q = 2 * (a * b);
            let v2p = c * c + 2 * (d * d);
            let v2q = 2 * (c * d);
            let s = sign_pair(&(u2p - 3 * &v2p), &(u2q - 3 * &v2q));
            debug_assert!(s != 0, "u^2 == 3v^2 with v != 0 is impossible");
            if su > 0 {
                s
            } else {
                -s
            }
        }
    }
}

fn bigint_sign(x: &BigInt) -> i8 {
    match x.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

impl Scalar {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Scalar { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(a: BigRational) -> Self {
        Scalar {
            a,
            b: BigRational::zero(),
            c: BigRational::zero(),
            d: BigRational::zero(),
        }
    }

    /// `p/q` as a rational scalar.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0);
        Self::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn sqrt2() -> Self {
        Scalar {
            a: BigRational::zero(),
            b: BigRational::one(),
            c: BigRational::zero(),
            d: BigRational::zero(),
        }
    }

    pub fn sqrt3() -> Self {
        Scalar {
            a: BigRational::zero(),
            b: BigRational::zero(),
            c: BigRational::one(),
            d: BigRational::zero(),
        }
    }

    pub fn sqrt6() -> Self {
        Scalar {
            a: BigRational::zero(),
            b: BigRational::zero(),
            c: BigRational::zero(),
            d: BigRational::one(),
        }
    }

    /// Parse the canonical quadruple of `p/q` strings.
    pub fn from_strings(a: &str, b: &str, c: &str, d: &str) -> Result<Self> {
        Ok(Scalar {
            a: parse_rational(a)?,
            b: parse_rational(b)?,
            c: parse_rational(c)?,
            d: parse_rational(d)?,
        })
    }

    pub fn coefficients(&self) -> (&BigRational, &BigRational, &BigRational, &BigRational) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// The rational part, valid only when `is_rational()`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Exact sign, consistent with the real embedding.
    pub fn signum(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        // Clear denominators; sign is unchanged.
        let l = lcm4(
            self.a.denom(),
            self.b.denom(),
            self.c.denom(),
            self.d.denom(),
        );
        let ia = self.a.numer() * (&l / self.a.denom());
        let ib = self.b.numer() * (&l / self.b.denom());
        let ic = self.c.numer() * (&l / self.c.denom());
        let id = self.d.numer() * (&l / self.d.denom());
        sign_quad(&ia, &ib, &ic, &id)
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // x = u + v√3 with u, v ∈ Q(√2). 1/x = (u - v√3) / (u² - 3v²),
        // then invert the Q(√2) denominator by its conjugate.
        let (ua, ub) = (&self.a, &self.b);
        let (va, vb) = (&self.c, &self.d);
        // u² - 3v² = (p, q) in Q(√2)
        let p = ua * ua + BigRational::from_integer(2.into()) * ub * ub
            - BigRational::from_integer(3.into())
                * (va * va + BigRational::from_integer(2.into()) * vb * vb);
        let q = BigRational::from_integer(2.into()) * (ua * ub)
            - BigRational::from_integer(6.into()) * (va * vb);
        // 1/(p + q√2) = (p - q√2)/(p² - 2q²)
        let n = &p * &p - BigRational::from_integer(2.into()) * &q * &q;
        debug_assert!(!n.is_zero());
        let inv_p = &p / &n;
        let inv_q = -&q / &n;
        // (u - v√3) * (inv_p + inv_q √2)
        let conj = Scalar {
            a: self.a.clone(),
            b: self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        };
        let mult = Scalar {
            a: inv_p,
            b: inv_q,
            c: BigRational::zero(),
            d: BigRational::zero(),
        };
        Some(&conj * &mult)
    }

    /// Exact square root when `self` is a nonnegative rational whose numerator
    /// and denominator are perfect squares; `None` otherwise.
    pub fn sqrt_rational_exact(&self) -> Option<Self> {
        let r = self.as_rational()?;
        if r.is_negative() {
            return None;
        }
        let sn = r.numer().sqrt();
        let sd = r.denom().sqrt();
        if &(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom() {
            Some(Scalar::from_rational(BigRational::new(sn, sd)))
        } else {
            None
        }
    }

    /// Approximate value for display only.
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a)
            + rational_to_f64(&self.b) * std::f64::consts::SQRT_2
            + rational_to_f64(&self.c) * 3f64.sqrt()
            + rational_to_f64(&self.d) * 6f64.sqrt()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

fn lcm4(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.lcm(b).lcm(c).lcm(d)
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            c: &self.c + &o.c,
            d: &self.d + &o.d,
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            c: &self.c - &o.c,
            d: &self.d - &o.d,
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        // √2·√3 = √6, √2·√6 = 2√3, √3·√6 = 3√2, √6² = 6.
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());
        let six = BigRational::from_integer(6.into());
        Scalar {
            a: a1 * a2 + &two * (b1 * b2) + &three * (c1 * c2) + &six * (d1 * d2),
            b: a1 * b2 + b1 * a2 + &three * (c1 * d2 + d1 * c2),
            c: a1 * c2 + c1 * a2 + &two * (b1 * d2 + d1 * b2),
            d: a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        let r = o.recip().expect("division by zero Scalar");
        self * &r
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, o: Scalar) -> Scalar {
                (&self).$method(&o)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, o: &Scalar) -> Scalar {
                (&self).$method(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            1 => Ordering::Greater,
            _ => unreachable!(),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", format_rational(&self.a));
        }
        let mut parts = Vec::new();
        if !self.a.is_zero() {
            parts.push(format_rational(&self.a));
        }
        for (coef, name) in [(&self.b, "√2"), (&self.c, "√3"), (&self.d, "√6")] {
            if !coef.is_zero() {
                parts.push(format!("{}{}", format_rational(coef), name));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = BTreeMap::new();
        m.insert("a", format_rational(&self.a));
        m.insert("b", format_rational(&self.b));
        m.insert("c", format_rational(&self.c));
        m.insert("d", format_rational(&self.d));
        m.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let m: BTreeMap<String, String> = BTreeMap::deserialize(de)?;
        let get = |k: &str| -> std::result::Result<BigRational, D::Error> {
            match m.get(k) {
                None => Ok(BigRational::zero()),
                Some(v) => parse_rational(v).map_err(|e| D::Error::custom(e.to_string())),
            }
        };
        for k in m.keys() {
            if !matches!(k.as_str(), "a" | "b" | "c" | "d") {
                return Err(D::Error::custom(format!("unknown scalar key {k:?}")));
            }
        }
        Ok(Scalar {
            a: get("a")?,
            b: get("b")?,
            c: get("c")?,
            d: get("d")?,
        })
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| &acc + &x)
    }
}
