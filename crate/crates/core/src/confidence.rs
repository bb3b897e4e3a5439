//! Failure rate / confidence level bookkeeping and shared validation.

use crate::error::{Error, Result};
use crate::num::{to_f64, Real};

/// A failure rate `alpha` in `[0, 1]`; the confidence level is `1 - alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfidenceSpec<T> {
    alpha: T,
}

impl<T: Real> ConfidenceSpec<T> {
    pub fn new(alpha: T) -> Result<Self> {
        if !(alpha >= T::zero() && alpha <= T::one()) {
            return Err(Error::OutOfRange {
                name: "alpha",
                value: to_f64(alpha),
                range: "[0, 1]",
            });
        }
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn level(&self) -> T {
        T::one() - self.alpha
    }
}

/// Requires `0 < alpha < 1`.
pub(crate) fn require_alpha_open<T: Real>(alpha: T) -> Result<()> {
    if alpha > T::zero() && alpha < T::one() {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name: "alpha",
            value: to_f64(alpha),
            range: "(0, 1)",
        })
    }
}

/// Requires `0 < alpha <= limit` (e.g. 0.5 for DKW-based methods).
pub(crate) fn require_alpha_at_most<T: Real>(alpha: T, limit: T, range: &'static str) -> Result<()> {
    if alpha > T::zero() && alpha <= limit {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name: "alpha",
            value: to_f64(alpha),
            range,
        })
    }
}
