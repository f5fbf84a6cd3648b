//! Earlier prolongation bounds, kept for comparison with `C_{r,m}^n`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::ackermann::AckermannTable;
use super::growth::GrowthFunction;
use super::mu::l_max_parts;
use super::{BoundReport, FormulaPath};
use crate::error::{Error, Result};
use crate::limits::Limits;

fn need_positive(r: &BigUint) -> Result<()> {
    if r.is_zero() {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    Ok(())
}

// 2^(e+1)·r under the cap.
fn doubling_value(e: &BigUint, r: &BigUint, what: &str, limits: &Limits) -> Result<BigUint> {
    let shift = e.to_u64().and_then(|v| v.checked_add(1)).filter(|s| s.saturating_add(r.bits()) <= limits.bit_cap);
    let shift = shift.ok_or_else(|| Error::exceeds(what.to_string(), limits.bit_cap))?;
    Ok(r << shift)
}

/// `2^{𝔏_{f,m}^n + 1}·r` with `f(i) = 2^i r`.
pub fn legacy_pierce_bound(r: &BigUint, m: usize, n: u32, limits: &Limits) -> Result<BoundReport> {
    need_positive(r)?;
    let f = GrowthFunction::doubling(r.clone());
    let parts = l_max_parts(&f, m, n, limits)?;
    let total = parts.last().cloned().unwrap_or_default();
    let value = doubling_value(&total, r, &format!("2^(L+1)·{r} with L = {total}"), limits)?;
    let mut report = BoundReport::new(value, FormulaPath::PierceDoubling).with("L", total);
    for (j, lj) in parts.into_iter().enumerate() {
        report = report.with(format!("Lambda_{}", j + 1), lj);
    }
    Ok(report)
}

/// `2^{b_n + 1}·r` with `b_0 = 0`, `b_{i+1} = 2^{b_i + 1} r + b_i + 1`.
pub fn leov_recursive_bound_m2(r: &BigUint, n: u32, limits: &Limits) -> Result<BoundReport> {
    need_positive(r)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut report = BoundReport::new(BigUint::zero(), FormulaPath::LeovRecursion);
    let mut b = BigUint::zero();
    for i in 1..=n {
        b = doubling_value(&b, r, &format!("b_{i}"), limits)? + &b + 1u32;
        report = report.with(format!("b_{i}"), b.clone());
    }
    report.value = doubling_value(&b, r, &format!("2^(b_{n}+1)·{r}"), limits)?;
    Ok(report)
}

/// `2A(m+3, 4r-1)` for `n = 1`, `⌈(2/n)A(m+5, 4nr-1)⌉` for `n > 1`.
pub fn leov_ackermann_bound(r: &BigUint, m: usize, n: u32, limits: &Limits) -> Result<BoundReport> {
    need_positive(r)?;
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("m and n must be at least 1".into()));
    }
    let table = AckermannTable::new(*limits);
    if n == 1 {
        let y = (r << 2u32) - 1u32;
        let a = table.eval(m as u64 + 3, &y)?;
        return Ok(BoundReport::new(a << 1u32, FormulaPath::LeovAckermann));
    }
    let y = ((r * n) << 2u32) - 1u32;
    let a = table.eval(m as u64 + 5, &y)?;
    let (q, rem) = (a << 1u32).div_rem(&BigUint::from(n));
    let report = BoundReport::new(q.clone(), FormulaPath::LeovAckermann);
    if rem.is_zero() {
        Ok(report)
    } else {
        let mut report = report.note("2A(m+5, 4nr-1) is not divisible by n; the ceiling is reported");
        report.value = q + 1u32;
        Ok(report)
    }
}

/// `A_n(m, r)`, the iterated Ackermann upper bound on `C_{r,m}^n`.
pub fn an_upper_bound(r: &BigUint, m: usize, n: u32, limits: &Limits) -> Result<BoundReport> {
    need_positive(r)?;
    let value = AckermannTable::new(*limits).iterated(n as u64, m as u64, r)?;
    Ok(BoundReport::new(value, FormulaPath::IteratedAckermann))
}
