//! Resource caps shared by every computation.
//!
//! Bound values grow at Ackermann speed, so each big-integer result is
//! checked against a bit-length cap, and each enumeration against an element
//! cap. Exceeding a cap is an error, never an allocation failure.

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Environment variable consulted for the default bit cap.
pub const BIT_CAP_ENV: &str = "PBOUND_BIT_CAP";

/// Default bit-length cap: 2^24 bits (2 MiB per integer).
pub const DEFAULT_BIT_CAP: u64 = 1 << 24;

/// Default cap on enumerated elements (slices, segments, subsets).
pub const DEFAULT_ENUM_LIMIT: usize = 100_000;

/// Default cap on loop iterations of the greedy recursion.
pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub bit_cap: u64,
    pub enum_limit: usize,
    pub step_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            bit_cap: DEFAULT_BIT_CAP,
            enum_limit: DEFAULT_ENUM_LIMIT,
            step_budget: DEFAULT_STEP_BUDGET,
        }
    }
}

impl Limits {
    /// Defaults, with the bit cap overridden by `PBOUND_BIT_CAP` when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(BIT_CAP_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            limits.bit_cap = cap;
        }
        limits
    }

    pub fn with_bit_cap(mut self, bit_cap: u64) -> Self {
        self.bit_cap = bit_cap;
        self
    }

    pub fn with_enum_limit(mut self, enum_limit: usize) -> Self {
        self.enum_limit = enum_limit;
        self
    }

    pub fn with_step_budget(mut self, step_budget: u64) -> Self {
        self.step_budget = step_budget;
        self
    }

    /// Passes `value` through if its bit length is within the cap.
    pub fn check(&self, value: BigUint, context: impl FnOnce() -> String) -> Result<BigUint> {
        if value.bits() > self.bit_cap {
            Err(Error::exceeds(context(), self.bit_cap))
        } else {
            Ok(value)
        }
    }

    /// Fails unless a number with `bits` bits fits under the cap.
    pub fn check_bits(&self, bits: u64, context: impl FnOnce() -> String) -> Result<()> {
        if bits > self.bit_cap {
            Err(Error::exceeds(context(), self.bit_cap))
        } else {
            Ok(())
        }
    }

    pub fn check_count(&self, needed: &BigUint) -> Result<usize> {
        match usize::try_from(needed) {
            Ok(n) if n <= self.enum_limit => Ok(n),
            _ => Err(Error::EnumerationLimit { needed: needed.to_string(), limit: self.enum_limit }),
        }
    }
}
