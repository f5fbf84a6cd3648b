//! Order, Nullstellensatz and Bézout bounds derived from `C_{r,m}^n`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::c_bound::c_bound;
use super::{BoundReport, FormulaPath};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::macaulay::binomial;

/// `α_ℓ = C(ℓ+m, m)`.
pub fn alpha(l: &BigUint, m: usize) -> BigUint {
    binomial(&(l + m), m as u64)
}

// α_{t-1}, reading α_{-1} as 0.
fn alpha_before(t: &BigUint, m: usize) -> BigUint {
    if t.is_zero() {
        BigUint::zero()
    } else {
        alpha(&(t - 1u32), m)
    }
}

/// Characteristic sets have order at most `C_{r,m}^n`.
pub fn char_set_order_bound(r: &BigUint, m: usize, n: u64, limits: &Limits) -> Result<BoundReport> {
    let mut report = c_bound(r, m, n, limits)?;
    report.formula_path = FormulaPath::CharacteristicSet;
    Ok(report)
}

/// `n·(C_{r,m}^n)^m`.
pub fn component_order_bound(r: &BigUint, m: usize, n: u64, limits: &Limits) -> Result<BoundReport> {
    let c = c_bound(r, m, n, limits)?.value;
    let bits = c.bits().saturating_mul(m as u64).saturating_add(64);
    limits.check_bits(bits, || format!("{n}·C^{m} with C = C^{n}_{{{r},{m}}}"))?;
    let value = c.pow(m as u32) * n;
    Ok(BoundReport::new(value, FormulaPath::ComponentOrder).with("C", c))
}

/// `T = r+1` when `m = 1`, otherwise `C_{r,m}^n` standing in for `T_{r,m}^n`;
/// with `α_{T-1}` and `α_T`.
pub fn nullstellensatz_t(r: &BigUint, m: usize, n: u64, limits: &Limits) -> Result<BoundReport> {
    let mut report = if m == 1 {
        BoundReport::new(r + 1u32, FormulaPath::Nullstellensatz)
    } else {
        BoundReport::new(c_bound(r, m, n, limits)?.value, FormulaPath::Nullstellensatz)
            .note("T is reported as its upper bound C_{r,m}^n")
    };
    let t = report.value.clone();
    report = report.with("alpha_{T-1}", alpha_before(&t, m)).with("alpha_T", alpha(&t, m));
    Ok(report.note("B(m,n,r,d) <= (n·alpha_{T-1}·d)^(2^(O(n^3·alpha_T^3))); the O-constant is not specified"))
}

/// The exponents `(e_V, e_W)` of `deg V` and `deg W` in the Bézout-type
/// bound, with `T' = C^{n·α_{r-1}}_{1,m}` in place of `T^{n·α_{r-1}}_{1,m}`.
/// The report's value is `e_V`; `e_W` is the intermediate `"e_W"`.
pub fn bezout_exponents(n: u64, r: &BigUint, m: usize, dim_v: &BigUint, limits: &Limits) -> Result<BoundReport> {
    if r.is_zero() {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    if m == 0 {
        return Err(Error::ZeroDimension);
    }
    let a_r = alpha(&(r - 1u32), m);
    let copies = (&a_r * n)
        .to_u64()
        .ok_or_else(|| Error::exceeds(format!("n·alpha_(r-1) = {}", &a_r * n), 64))?;
    let t_prime = c_bound(&BigUint::one(), m, copies, limits)?.value;
    let a_t = alpha(&t_prime, m);
    let a_t1 = alpha_before(&t_prime, m);
    let d_prime = &a_r * dim_v;
    let e = &d_prime * &a_t1;
    let base = BigUint::from(m as u64 + 1);
    let e_small = e.to_u64().filter(|&v| {
        let bits = (v as f64 * ((m + 1) as f64).log2()).ceil() as u64;
        bits <= limits.bit_cap
    });
    let e_small = e_small.ok_or_else(|| Error::exceeds(format!("({})^{e}", m + 1), limits.bit_cap))?;
    let power = base.pow(e_small as u32);
    let mut report = BoundReport::new(BigUint::zero(), FormulaPath::Bezout);
    let e_v = if e_small == 0 {
        let (q, rem) = (&a_r * &a_t).div_rem(&base);
        if rem.is_zero() {
            q
        } else {
            report = report.note("alpha_(r-1)·alpha_(T') is not divisible by m+1 at exponent -1; the ceiling is reported");
            q + 1u32
        }
    } else {
        &a_r * &a_t * base.pow(e_small as u32 - 1)
    };
    let (e_w, rem) = (&a_t1 * (power - 1u32)).div_rem(&BigUint::from(m as u64));
    debug_assert!(rem.is_zero(), "m divides (m+1)^E - 1");
    report.value = e_v.clone();
    Ok(report
        .with("alpha_{r-1}", a_r)
        .with("T'", t_prime)
        .with("alpha_{T'}", a_t)
        .with("alpha_{T'-1}", a_t1)
        .with("d'", d_prime)
        .with("E", e)
        .with("e_V", e_v)
        .with("e_W", e_w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn alphas() {
        assert_eq!(alpha(&big(1), 2), big(3));
        assert_eq!(alpha(&big(0), 4), big(1));
        assert_eq!(alpha_before(&big(0), 3), big(0));
    }

    #[test]
    fn component_orders() {
        let limits = Limits::default();
        for r in 0..=6u64 {
            for n in 1..=4 {
                assert_eq!(component_order_bound(&big(r), 1, n, &limits).unwrap().value, big(n * r));
            }
        }
        assert_eq!(component_order_bound(&big(1), 2, 1, &limits).unwrap().value, big(4));
        assert_eq!(component_order_bound(&big(1), 2, 2, &limits).unwrap().value, big(32));
    }

    #[test]
    fn nullstellensatz_values() {
        let limits = Limits::default();
        let t = nullstellensatz_t(&big(4), 1, 3, &limits).unwrap();
        assert_eq!(t.value, big(5));
        assert_eq!(t.get("alpha_T"), Some(&big(6)));
        assert_eq!(t.get("alpha_{T-1}"), Some(&big(5)));
        let t = nullstellensatz_t(&big(3), 2, 2, &limits).unwrap();
        assert_eq!(t.value, big(12));
        let t = nullstellensatz_t(&big(0), 2, 1, &limits).unwrap();
        assert_eq!(t.get("alpha_{T-1}"), Some(&big(0)));
    }

    #[test]
    fn bezout_m1() {
        let limits = Limits::default();
        for r in 1..=5u64 {
            for dim in 0..=5u64 {
                let rep = bezout_exponents(2, &big(r), 1, &big(dim), &limits).unwrap();
                assert_eq!(rep.value, big(r) << (r * dim), "r={r} dim={dim}");
                assert_eq!(rep.get("e_W"), Some(&((BigUint::one() << (r * dim)) - 1u32)));
                assert!(rep.notes.is_empty());
            }
        }
        let rep = bezout_exponents(1, &big(1), 1, &big(0), &limits).unwrap();
        assert_eq!((rep.value.clone(), rep.get("e_W").cloned()), (big(1), Some(big(0))));
    }

    #[test]
    fn bezout_m2() {
        let limits = Limits::default();
        // r=1: alpha_0 = 1, T' = C^n_{1,2} = 2^n.
        let rep = bezout_exponents(1, &big(1), 2, &big(1), &limits).unwrap();
        assert_eq!(rep.get("T'"), Some(&big(2)));
        // alpha_2 = 6, alpha_1 = 3, d' = 1, E = 3: e_V = 6·3^2, e_W = 3·(27-1)/2
        assert_eq!(rep.value, big(54));
        assert_eq!(rep.get("e_W"), Some(&big(39)));
    }
}
