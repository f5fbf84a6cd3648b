//! `C_{r,m}^n` by the Ackermann recursion, and by the greedy sequence as a
//! second, independent path.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::ackermann::AckermannTable;
use super::growth::{GrowthFunction, Segment};
use super::mu::{l_max, psi};
use super::{BoundReport, FormulaPath};
use crate::error::{Error, Result};
use crate::limits::Limits;

fn check_dims(m: usize, n: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::ZeroDimension);
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    Ok(())
}

/// `C_{r,m}^1 = A(m-1, ·)^r(0)`, with the iterate in closed form for `m <= 3`.
fn c_one(r: &BigUint, m: usize, table: &AckermannTable) -> Result<BigUint> {
    let limits = table.limits();
    let context = || format!("C^1_{{{r},{m}}}");
    match m {
        1 => Ok(r.clone()),
        2 => limits.check(r << 1u32, context),
        3 => {
            let e = r.to_u64().filter(|&e| e.saturating_add(2) <= limits.bit_cap);
            let e = e.ok_or_else(|| Error::exceeds(context(), limits.bit_cap))?;
            Ok(((BigUint::from(1u32) << e) - 1u32) * 3u32)
        }
        _ => {
            let mut value = BigUint::zero();
            let mut done = BigUint::zero();
            while &done < r {
                value = table.eval(m as u64 - 1, &value).map_err(|_| Error::exceeds(context(), limits.bit_cap))?;
                done += 1u32;
            }
            Ok(value)
        }
    }
}

/// `C_{r,m}^n` through `C_{r,m}^1 = A(m-1, C_{r-1,m}^1)` and
/// `C_{r,m}^n = C^1_{C_{r,m}^{n-1},m}`.
pub fn c_bound(r: &BigUint, m: usize, n: u64, limits: &Limits) -> Result<BoundReport> {
    check_dims(m, n)?;
    if r.is_zero() || m == 1 {
        return Ok(BoundReport::new(r.clone(), FormulaPath::Base));
    }
    if m == 2 {
        limits.check_bits(r.bits().saturating_add(n), || format!("C^{n}_{{{r},2}} = 2^{n}·{r}"))?;
        let value = r << n;
        return Ok(BoundReport::new(value, FormulaPath::AckermannRecursion).note("C_{r,2}^n = 2^n r"));
    }
    let table = AckermannTable::new(*limits);
    let mut report = BoundReport::new(BigUint::zero(), FormulaPath::AckermannRecursion);
    let mut value = r.clone();
    for j in 1..=n {
        value = c_one(&value, m, &table).map_err(|e| match e {
            Error::ValueExceedsLimit { context, cap_bits } => {
                Error::ValueExceedsLimit { context: format!("{context} while computing C^{j}_{{{r},{m}}}"), cap_bits }
            }
            e => e,
        })?;
        if j < n {
            report = report.with(format!("C^{j}"), value.clone());
        }
    }
    report.value = value;
    Ok(report)
}

/// The growth function `g_n` together with `r_1, ..., r_n` and the partial
/// lengths `Λ_1, ..., Λ_n`, where `r_{j+1} = Λ_j + r - j`.
pub fn paper_gn(r: &BigUint, m: usize, n: u64, limits: &Limits) -> Result<(GrowthFunction, Vec<BigUint>, Vec<BigUint>)> {
    check_dims(m, n)?;
    let mut segments = Vec::new();
    let mut rs = Vec::new();
    let mut lambdas = Vec::new();
    let mut lambda = BigUint::zero();
    let mut rj = r.clone();
    for j in 1..=n {
        segments.push(Segment { offset: lambda.clone(), r: rj.clone() });
        rs.push(rj.clone());
        lambda += psi(&GrowthFunction::paper_g(rj.clone()), m, limits)?;
        lambdas.push(lambda.clone());
        rj = &lambda + r - j;
    }
    Ok((GrowthFunction::piecewise(segments)?, rs, lambdas))
}

/// `C_{r,m}^n = 𝔏_{g_n,m}^n + r - n`, with `𝔏` computed by the Ψ recursion
/// over the copy-wise shifts of `g_n`.
pub fn c_bound_via_greedy(r: &BigUint, m: usize, n: u64, limits: &Limits) -> Result<BoundReport> {
    let (gn, rs, lambdas) = paper_gn(r, m, n, limits)?;
    let n32 = u32::try_from(n).map_err(|_| Error::InvalidArgument(format!("n = {n} is too large")))?;
    let total = l_max(&gn, m, n32, limits)?;
    if lambdas.last() != Some(&total) {
        return Err(Error::Precondition(format!("copy-wise lengths disagree: {total} vs {:?}", lambdas.last())));
    }
    let mut report = BoundReport::new(&total + r - n, FormulaPath::GreedyPsi).with("L", total);
    for (j, (rj, lj)) in rs.into_iter().zip(lambdas).enumerate() {
        report = report.with(format!("r_{}", j + 1), rj).with(format!("Lambda_{}", j + 1), lj);
    }
    Ok(report)
}
