//! Hamacher product t-norm and its dual s-norm.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormOp {
    TNorm,
    SNorm,
}

/// xy / (x + y − xy), with T(0, 0) = 0.
pub fn hamacher_tnorm(x: f64, y: f64) -> f64 {
    let den = x + y - x * y;
    if den == 0.0 {
        0.0
    } else {
        x * y / den
    }
}

/// (x + y − 2xy) / (1 − xy), with S(1, 1) = 1. Evaluated as 1 − T(1−x, 1−y)
/// so that S(1, y) is exactly 1.
pub fn hamacher_snorm(x: f64, y: f64) -> f64 {
    let den = 1.0 - x * y;
    if den == 0.0 {
        1.0
    } else {
        1.0 - (1.0 - x) * (1.0 - y) / den
    }
}

pub fn hamacher(x: f64, y: f64, op: NormOp) -> f64 {
    match op {
        NormOp::TNorm => hamacher_tnorm(x, y),
        NormOp::SNorm => hamacher_snorm(x, y),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tnorm_example() {
        assert!((hamacher_tnorm(0.25, 1.0 / 3.0) - 1.0 / 6.0).abs() < 1e-15);
        assert_eq!(hamacher_tnorm(0.0, 0.0), 0.0);
        assert_eq!(hamacher_tnorm(0.3, 0.0), 0.0);
    }

    #[test]
    fn identities() {
        for x in [0.0, 0.1, 0.5, 0.9, 1.0] {
            assert!((hamacher(x, 1.0, NormOp::TNorm) - x).abs() < 1e-15);
            assert!((hamacher(x, 0.0, NormOp::SNorm) - x).abs() < 1e-15);
            assert_eq!(hamacher_snorm(1.0, x), 1.0);
        }
    }
}
