//! One checked inequality instance, serializable and CSV-projectable.

use serde::{Deserialize, Serialize};

use crate::body::Body;
use crate::rat::decimal_string;
use crate::scalar::Scalar;

/// Result of one inequality check. `slack = rhs - lhs`, `pass ⇔ slack >= 0`.
/// Degenerate instances (zero denominators in ratio checkers) are flagged
/// instead of failing.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InequalityReport {
    pub id: String,
    pub dim: usize,
    pub bodies: Vec<Body>,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub slack: Scalar,
    pub pass: bool,
    pub constant: Scalar,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub degenerate: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl InequalityReport {
    pub fn check(
        id: &str,
        dim: usize,
        bodies: Vec<Body>,
        lhs: Scalar,
        rhs: Scalar,
        constant: Scalar,
    ) -> Self {
        let slack = &rhs - &lhs;
        let pass = !slack.is_negative();
        InequalityReport {
            id: id.to_string(),
            dim,
            bodies,
            lhs,
            rhs,
            slack,
            pass,
            constant,
            degenerate: false,
            note: None,
        }
    }

    pub fn degenerate(id: &str, dim: usize, bodies: Vec<Body>, note: &str) -> Self {
        InequalityReport {
            id: id.to_string(),
            dim,
            bodies,
            lhs: Scalar::zero(),
            rhs: Scalar::zero(),
            slack: Scalar::zero(),
            pass: true,
            constant: Scalar::one(),
            degenerate: true,
            note: Some(note.to_string()),
        }
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }

    /// `lhs/rhs` when defined: at most 1 exactly iff the instance passes.
    pub fn ratio(&self) -> Option<Scalar> {
        if self.rhs.is_zero() {
            None
        } else {
            Some(&self.lhs / &self.rhs)
        }
    }

    pub fn csv_header() -> &'static str {
        "id,dim,seed,sample,lhs,rhs,slack,ratio,ratio_dec,pass"
    }

    pub fn csv_row(&self, seed: u64, sample: u64) -> String {
        let (ratio, ratio_dec) = match self.ratio() {
            Some(r) if r.is_rational() => {
                let q = r.as_rational().unwrap().clone();
                (crate::rat::format_rational(&q), decimal_string(&q))
            }
            Some(r) => (format!("{r}"), format!("{:.11e}", r.to_f64())),
            None => (String::new(), String::new()),
        };
        let fmt = |s: &Scalar| -> String {
            if s.is_rational() {
                crate::rat::format_rational(s.as_rational().unwrap())
            } else {
                format!("{s}")
            }
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.id,
            self.dim,
            seed,
            sample,
            fmt(&self.lhs),
            fmt(&self.rhs),
            fmt(&self.slack),
            ratio,
            ratio_dec,
            self.pass
        )
    }
}
