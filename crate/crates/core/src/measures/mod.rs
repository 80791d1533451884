//! Relatedness and distance measures.

pub mod adjacent;
pub mod asrmp;
pub mod exclusivity;
pub mod fuzzy;
pub mod ic;
pub mod pattern;
pub mod proximity;
pub mod reword;

use serde::{Deserialize, Serialize};

use crate::store::TermId;

/// Logarithm base used by a measure family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LogBase(f64);

impl LogBase {
    pub const E: LogBase = LogBase(std::f64::consts::E);
    pub const TEN: LogBase = LogBase(10.0);

    /// Panics unless `base` is finite and greater than 1.
    pub fn new(base: f64) -> Self {
        assert!(
            base.is_finite() && base > 1.0,
            "log base must be finite and > 1, got {base}"
        );
        LogBase(base)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn log(self, x: f64) -> f64 {
        if self.0 == std::f64::consts::E {
            x.ln()
        } else if self.0 == 10.0 {
            x.log10()
        } else {
            x.ln() / self.0.ln()
        }
    }
}

/// Orders a pair so that path-based scores are computed from the same end
/// regardless of argument order.
pub(crate) fn canonical(a: TermId, b: TermId) -> (TermId, TermId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}
