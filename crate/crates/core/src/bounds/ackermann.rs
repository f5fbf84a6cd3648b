//! The Ackermann function, its iterate `A_n`, and exact comparison of
//! iterates whose values are too large to write down.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// Memo table for `A(x, y)` with `x >= 4`. Lookups and inserts lock, so a
/// table may be shared between threads.
#[derive(Debug, Default)]
pub struct AckermannTable {
    limits: Limits,
    memo: Mutex<HashMap<(u64, BigUint), BigUint>>,
}

impl AckermannTable {
    pub fn new(limits: Limits) -> Self {
        AckermannTable { limits, memo: Mutex::new(HashMap::new()) }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn eval(&self, x: u64, y: &BigUint) -> Result<BigUint> {
        let context = || format!("A({x}, {y})");
        match x {
            0 => self.limits.check(y + 1u32, context),
            1 => self.limits.check(y + 2u32, context),
            2 => self.limits.check((y << 1u32) + 3u32, context),
            3 => {
                let bits = y.to_u64().and_then(|v| v.checked_add(3)).filter(|&b| b < u64::MAX);
                match bits {
                    Some(e) if e < self.limits.bit_cap => Ok((BigUint::one() << e) - 3u32),
                    _ => Err(Error::exceeds(context(), self.limits.bit_cap)),
                }
            }
            _ => {
                if let Some(v) = self.memo.lock().expect("memo lock").get(&(x, y.clone())) {
                    return Ok(v.clone());
                }
                // A(x, y) = A(x-1, ·) applied y+1 times to 1.
                let mut value = BigUint::one();
                let mut done = BigUint::zero();
                while &done <= y {
                    value = self.eval(x - 1, &value).map_err(|_| Error::exceeds(context(), self.limits.bit_cap))?;
                    done += 1u32;
                }
                self.memo.lock().expect("memo lock").insert((x, y.clone()), value.clone());
                Ok(value)
            }
        }
    }

    /// `A_n(x, y)` for `n >= 1`, `y >= 1`.
    pub fn iterated(&self, n: u64, x: u64, y: &BigUint) -> Result<BigUint> {
        if n == 0 || y.is_zero() {
            return Err(Error::InvalidArgument("A_n needs n >= 1 and y >= 1".into()));
        }
        let mut value = self.eval(x, &(y - 1u32))? - 1u32;
        for _ in 1..n {
            value = self.eval(x, &(value - 1u32))? - 1u32;
        }
        Ok(value)
    }
}

/// `A(x, y)` with a fresh table.
pub fn ackermann(x: u64, y: &BigUint, limits: &Limits) -> Result<BigUint> {
    AckermannTable::new(*limits).eval(x, y)
}

/// `A_n(x, y)` with a fresh table.
pub fn iterated_ackermann(n: u64, x: u64, y: &BigUint, limits: &Limits) -> Result<BigUint> {
    AckermannTable::new(*limits).iterated(n, x, y)
}

/// `G^count(seed)` where `G = A(level, ·)`.
///
/// Since `G` is strictly increasing, `G^a(s)` and `G^b(t)` compare like
/// `G^(a-k)(s)` and `G^(b-k)(t)` with `k = min(a, b)`, which is often
/// computable when the originals are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Iterate {
    pub level: u64,
    pub count: u64,
    pub seed: BigUint,
}

impl Iterate {
    pub fn new(level: u64, count: u64, seed: impl Into<BigUint>) -> Self {
        Iterate { level, count, seed: seed.into() }
    }

    /// `A(m, y) = A(m-1, ·)^(y+1)(1)`.
    pub fn ackermann(m: u64, y: u64) -> Self {
        assert!(m >= 1, "A(0, y) is not an iterate");
        Iterate::new(m - 1, y + 1, 1u32)
    }

    /// `C^1_{r,m} = A(m-1, ·)^r(0)`.
    pub fn c_bound(r: u64, m: u64) -> Self {
        assert!(m >= 1, "m must be positive");
        Iterate::new(m - 1, r, 0u32)
    }

    pub fn value(&self, table: &AckermannTable) -> Result<BigUint> {
        let mut v = self.seed.clone();
        for _ in 0..self.count {
            v = table.eval(self.level, &v)?;
        }
        Ok(v)
    }

    pub fn compare(&self, other: &Iterate, table: &AckermannTable) -> Result<Ordering> {
        if self.level != other.level {
            return Err(Error::InvalidArgument("iterates of different functions".into()));
        }
        let k = self.count.min(other.count);
        let a = Iterate { count: self.count - k, ..self.clone() };
        let b = Iterate { count: other.count - k, ..other.clone() };
        Ok(a.value(table)?.cmp(&b.value(table)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    // Plain double recursion with an explicit stack, for small arguments.
    fn naive(x: u64, y: u64) -> u64 {
        let mut stack = vec![x];
        let mut y = y;
        while let Some(x) = stack.pop() {
            if x == 0 {
                y += 1;
            } else if y == 0 {
                stack.push(x - 1);
                y = 1;
            } else {
                stack.push(x - 1);
                stack.push(x);
                y -= 1;
            }
        }
        y
    }

    #[test]
    fn matches_naive_recursion() {
        let t = AckermannTable::new(Limits::default());
        for x in 0..=3 {
            for y in 0..=6 {
                assert_eq!(t.eval(x, &big(y)).unwrap(), big(naive(x, y)), "A({x},{y})");
            }
        }
        assert_eq!(t.eval(4, &big(0)).unwrap(), big(naive(4, 0)));
    }

    #[test]
    fn known_values() {
        let t = AckermannTable::new(Limits::default());
        assert_eq!(t.eval(2, &big(5)).unwrap(), big(13));
        assert_eq!(t.eval(3, &big(0)).unwrap(), big(5));
        assert_eq!(t.eval(4, &big(0)).unwrap(), big(13));
        assert_eq!(t.eval(4, &big(1)).unwrap(), big(65533));
        assert_eq!(t.eval(4, &big(2)).unwrap(), (BigUint::one() << 65536u32) - 3u32);
        assert_eq!(t.eval(5, &big(0)).unwrap(), big(65533));
        assert!(matches!(t.eval(4, &big(3)), Err(Error::ValueExceedsLimit { .. })));
        assert!(matches!(t.eval(5, &big(1)), Err(Error::ValueExceedsLimit { .. })));
        assert!(matches!(t.eval(9, &big(9)), Err(Error::ValueExceedsLimit { .. })));
    }

    #[test]
    fn iterated_values() {
        let t = AckermannTable::new(Limits::default());
        assert_eq!(t.iterated(1, 2, &big(3)).unwrap(), big(6));
        assert_eq!(t.iterated(1, 3, &big(2)).unwrap(), big(12));
        // A_2(2, 1) = A(2, A_1(2,1) - 1) - 1 = A(2, 1) - 1 = 4
        assert_eq!(t.iterated(2, 2, &big(1)).unwrap(), big(4));
        assert!(t.iterated(0, 2, &big(1)).is_err());
    }

    #[test]
    fn iterate_comparison_beyond_cap() {
        let t = AckermannTable::new(Limits::default());
        assert_eq!(Iterate::ackermann(3, 2).value(&t).unwrap(), big(29));
        assert_eq!(Iterate::c_bound(2, 3).value(&t).unwrap(), big(9));
        // C^1_{5,4} against A(4,3): both far beyond any cap.
        let c = Iterate::c_bound(5, 4);
        assert!(c.value(&t).is_err());
        assert_eq!(Iterate::ackermann(4, 3).compare(&c, &t).unwrap(), Ordering::Less);
        assert_eq!(c.compare(&Iterate::ackermann(4, 4), &t).unwrap(), Ordering::Less);
    }
}
