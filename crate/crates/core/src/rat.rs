//! Helpers around `BigRational`: the canonical `p/q` string form and decimal
//! rendering used by reports.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{GeometryError, Result};

/// Parse a rational from its canonical string form: `p` or `p/q` with `q != 0`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || GeometryError::InvalidRational(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Canonical string form: reduced, positive denominator, `/q` omitted when `q == 1`.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering with 12 significant digits, for plots only; exact values
/// always travel in `p/q` form.
pub fn decimal_string(r: &BigRational) -> String {
    format!("{:.11e}", rational_to_f64(r))
}

/// Best-effort f64 value; large numerators/denominators are scaled first so the
/// conversion cannot overflow to NaN.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let bits = r.numer().bits().max(r.denom().bits());
    let shift = bits.saturating_sub(512) as u64;
    let scale = BigInt::one() << shift;
    let n = (r.numer() / &scale).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() / &scale).to_f64().unwrap_or(f64::NAN);
    n / d
}

pub fn rational_is_nonneg(r: &BigRational) -> bool {
    !r.is_negative()
}
