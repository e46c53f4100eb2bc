//! Certified rational bounds on real roots, used wherever an inequality
//! involves n-th roots (Brunn-Minkowski) or square roots (planar refinement
//! reporting). Pass/fail decisions never touch floating point: comparisons
//! either reduce to an exact rational identity or to interval bounds refined
//! until they separate.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rational `(lo, hi)` with `lo <= sqrt(x) <= hi` and `hi - lo <= 10^-digits`.
pub fn sqrt_bounds(x: &BigRational, digits: u32) -> (BigRational, BigRational) {
    nth_root_bounds(x, 2, digits)
}

/// Rational `(lo, hi)` with `lo <= x^(1/n) <= hi`, `hi - lo <= 10^-digits`.
/// Requires `x >= 0`.
pub fn nth_root_bounds(x: &BigRational, n: u32, digits: u32) -> (BigRational, BigRational) {
    assert!(!x.is_negative());
    if x.is_zero() {
        return (BigRational::zero(), BigRational::zero());
    }
    let scale = BigInt::from(10u32).pow(digits);
    let scale_n = scale.pow(n);
    // floor of the n-th root of x * 10^(n*digits)
    let v = (x.numer() * &scale_n) / x.denom();
    let r = v.nth_root(n);
    let lo = BigRational::new(r.clone(), scale.clone());
    let hi = BigRational::new(r + BigInt::one(), scale);
    (lo, hi)
}

/// Is `x` the n-th power of a rational? Returns the exact root if so.
pub fn exact_nth_root(x: &BigRational, n: u32) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(BigRational::zero());
    }
    let rn = x.numer().nth_root(n);
    let rd = x.denom().nth_root(n);
    if &rn.pow(n) == x.numer() && &rd.pow(n) == x.denom() {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

/// Exact comparison of `l^(1/n)` against `a^(1/n) + b^(1/n)` for nonnegative
/// rationals. This is the Brunn-Minkowski comparison done by n-th powers:
/// algebraic equality cases (a or b zero, or a/b an exact n-th power) are
/// decided directly, everything else separates under interval refinement.
pub fn cmp_root_sum(l: &BigRational, a: &BigRational, b: &BigRational, n: u32) -> Ordering {
    assert!(!l.is_negative() && !a.is_negative() && !b.is_negative());
    if a.is_zero() || b.is_zero() {
        let other = if a.is_zero() { b } else { a };
        return l.cmp(other);
    }
    // Equality of l^(1/n) and a^(1/n) + b^(1/n) with a,b,l rational forces
    // a/b to be an exact rational n-th power (the mixed radicals otherwise
    // stay irrational); handle that case exactly.
    if let Some(t) = exact_nth_root(&(a / b), n) {
        let rhs_n = (BigRational::one() + t).pow(n as i32) * b;
        return l.cmp(&rhs_n);
    }
    let mut digits = 30u32;
    loop {
        let (ll, lh) = nth_root_bounds(l, n, digits);
        let (al, ah) = nth_root_bounds(a, n, digits);
        let (bl, bh) = nth_root_bounds(b, n, digits);
        let rhs_lo = &al + &bl;
        let rhs_hi = &ah + &bh;
        if lh < rhs_lo {
            return Ordering::Less;
        }
        if ll > rhs_hi {
            return Ordering::Greater;
        }
        digits *= 2;
        assert!(
            digits <= 4000,
            "root comparison failed to separate; unexpected exact tie"
        );
    }
}

/// A rational upper bound on `1/sqrt(pi * n)`, used to over-approximate the
/// right side of the asymptotic lower-bound comparison.
pub fn inv_sqrt_pi_n_upper(n: u32) -> BigRational {
    // pi > 314159265358979/10^14, so sqrt(pi n) > sqrt(pi_lb n) >= lo,
    // hence 1/sqrt(pi n) < 1/lo.
    let pi_lb = BigRational::new(BigInt::from(314_159_265_358_979u64), BigInt::from(10u64).pow(14));
    let x = pi_lb * BigRational::from_integer(n.into());
    let (lo, _) = sqrt_bounds(&x, 30);
    assert!(lo.is_positive());
    lo.recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn bounds_bracket() {
        let (lo, hi) = sqrt_bounds(&r(2, 1), 50);
        assert!(&lo * &lo <= r(2, 1) && r(2, 1) <= &hi * &hi);
        assert!(&hi - &lo <= r(1, 10i64.pow(15)));
    }

    #[test]
    fn cmp_root_sum_strict_cases() {
        // 4^(1/2) = 2 > sqrt(1) + sqrt(1/2)
        assert_eq!(cmp_root_sum(&r(4, 1), &r(1, 1), &r(1, 2), 2), Ordering::Greater);
        // sqrt(2) < 1 + 1
        assert_eq!(cmp_root_sum(&r(2, 1), &r(1, 1), &r(1, 1), 2), Ordering::Less);
    }

    #[test]
    fn cmp_root_sum_equality_cases() {
        // (1+1)^2 = 4: homothetic case
        assert_eq!(cmp_root_sum(&r(4, 1), &r(1, 1), &r(1, 1), 2), Ordering::Equal);
        // cube: (1 + 1/2)^3 * 8 = 27: a/b = (8)/(1) = 2^3
        let l = r(27, 1);
        assert_eq!(cmp_root_sum(&l, &r(8, 1), &r(1, 1), 3), Ordering::Equal);
        // zero side
        assert_eq!(cmp_root_sum(&r(3, 1), &r(0, 1), &r(3, 1), 4), Ordering::Equal);
    }

    #[test]
    fn inv_sqrt_bound_is_upper() {
        for n in [30u32, 60, 90] {
            let u = inv_sqrt_pi_n_upper(n);
            let true_val = 1.0 / (std::f64::consts::PI * n as f64).sqrt();
            let uf = crate::rat::rational_to_f64(&u);
            assert!(uf >= true_val && uf < true_val * 1.001);
        }
    }
}
