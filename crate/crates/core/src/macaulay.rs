//! Binomial arithmetic and Macaulay's growth operators.
//!
//! `a^⟨d⟩` is evaluated from the greedy d-binomial representation of `a`.
//! `a^(m)`, the size of the upper shadow of a lex segment, is evaluated by
//! the duality `b^⟨d⟩ = C(m+d, d+1) - a^(m)` with `b = C(m-1+d, d) - a`; the
//! enumerated shadow is kept as an independent cross-check.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{degree_slice, slice_size, Monomial};
use crate::limits::Limits;

/// Arbitrary-precision nonnegative integer used for every count and bound.
pub type BigCount = BigUint;

/// Exact `C(n, k)`; zero when `k > n`.
pub fn binomial(n: &BigUint, k: u64) -> BigUint {
    let kb = BigUint::from(k);
    if &kb > n {
        return BigUint::zero();
    }
    // Use the smaller of k and n-k as the number of factors when that fits.
    let rest = n - &kb;
    let k = match rest.to_u64() {
        Some(r) if r < k => r,
        _ => k,
    };
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - BigUint::from(i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

pub fn binomial_u64(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The d-binomial representation `a = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_j, j)`
/// with `k_d > k_{d-1} > ... > k_j >= j >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialRep {
    pub d: u64,
    /// `k_d, k_{d-1}, ..., k_j`, in that order.
    #[serde(with = "crate::report::decimal_vec")]
    pub ks: Vec<BigUint>,
}

impl BinomialRep {
    /// The trailing lower index `j`.
    pub fn tail_index(&self) -> u64 {
        self.d + 1 - self.ks.len() as u64
    }

    pub fn value(&self) -> BigUint {
        self.terms().map(|(k, t)| binomial(k, t)).sum()
    }

    /// Pairs `(k_t, t)` from `t = d` downwards.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, u64)> + '_ {
        self.ks.iter().enumerate().map(move |(pos, k)| (k, self.d - pos as u64))
    }
}

// Largest k with C(k, d) <= a, for a >= 1 and d >= 1: galloping ascent from
// k = d, then bisection.
fn max_k(a: &BigUint, d: u64) -> BigUint {
    let mut lo = BigUint::from(d);
    let mut step = BigUint::one();
    let mut hi = &lo + &step;
    while binomial(&hi, d) <= *a {
        lo = hi;
        step <<= 1;
        hi = &lo + &step;
    }
    // binomial(lo) <= a < binomial(hi)
    while &hi - &lo > BigUint::one() {
        let mid = (&lo + &hi) >> 1;
        if binomial(&mid, d) <= *a {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

pub fn d_binomial_rep(a: &BigUint, d: u64) -> Result<BinomialRep> {
    if a.is_zero() {
        return Err(Error::ZeroRepresentation);
    }
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let mut rest = a.clone();
    let mut ks = Vec::new();
    let mut t = d;
    while !rest.is_zero() {
        debug_assert!(t >= 1, "C(k,1) = k absorbs any remainder");
        let k = max_k(&rest, t);
        rest -= binomial(&k, t);
        ks.push(k);
        t -= 1;
    }
    Ok(BinomialRep { d, ks })
}

/// `a^⟨d⟩`, with `0^⟨d⟩ = 0`.
pub fn upper_shadow(a: &BigUint, d: u64) -> Result<BigUint> {
    if a.is_zero() {
        return Ok(BigUint::zero());
    }
    let rep = d_binomial_rep(a, d)?;
    Ok(rep.terms().map(|(k, t)| binomial(&(k + 1u32), t + 1)).sum())
}

/// `N_{a,d}`: the `a` ⊴-largest monomials of degree `d` in ℕ^m.
pub fn segment(a: &BigUint, d: u64, m: usize, limits: &Limits) -> Result<Vec<Monomial>> {
    let size = slice_size(m, d);
    if a > &size {
        return Err(Error::SegmentTooLarge { a: a.to_string(), slice: size.to_string() });
    }
    let a = limits.check_count(a)?;
    let mut slice = degree_slice(m, d, limits)?;
    slice.truncate(a);
    Ok(slice)
}

/// `a^(m)` through the duality with `b^⟨d⟩`, for `a <= C(m-1+d, d)` and `d >= 1`.
pub fn macaulay_growth(a: &BigUint, m: usize, d: u64) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::ZeroDimension);
    }
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let size = slice_size(m, d);
    if a > &size {
        return Err(Error::SegmentTooLarge { a: a.to_string(), slice: size.to_string() });
    }
    let b = &size - a;
    let next = binomial_u64(m as u64 + d, d + 1);
    Ok(next - upper_shadow(&b, d)?)
}

/// `a^(m)` as the size of `(1,...,m)·N_{a,d}`, by enumeration.
pub fn macaulay_growth_enumerated(a: &BigUint, m: usize, d: u64, limits: &Limits) -> Result<BigUint> {
    let seg = segment(a, d, m, limits)?;
    Ok(BigUint::from(shadow(&seg).len()))
}

/// Smallest `d >= 1` with `a <= C(m-1+d, d)`.
pub fn admissible_degree(a: &BigUint, m: usize) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroDimension);
    }
    if m == 1 {
        return if a <= &BigUint::one() {
            Ok(1)
        } else {
            Err(Error::NoAdmissibleDegree { a: a.to_string(), m })
        };
    }
    let fits = |d: u64| slice_size(m, d) >= *a;
    if fits(1) {
        return Ok(1);
    }
    let mut lo = 1u64;
    let mut hi = 2u64;
    while !fits(hi) {
        lo = hi;
        hi = hi.checked_mul(2).ok_or_else(|| Error::NoAdmissibleDegree { a: a.to_string(), m })?;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// `a^(m)` at the smallest admissible degree.
pub fn macaulay_growth_any(a: &BigUint, m: usize) -> Result<BigUint> {
    let d = admissible_degree(a, m)?;
    macaulay_growth(a, m, d)
}

/// `(1,...,m)·M`: every element of `M` raised by one in each coordinate.
pub fn shadow(set: &[Monomial]) -> BTreeSet<Monomial> {
    set.iter()
        .flat_map(|x| (0..x.dim()).filter_map(move |k| x.plus_unit(k)))
        .collect()
}

fn group_by_degree(set: &[Monomial]) -> Result<BTreeMap<u64, Vec<&Monomial>>> {
    let mut by_degree: BTreeMap<u64, Vec<&Monomial>> = BTreeMap::new();
    let m = set.first().map(Monomial::dim);
    for x in set {
        if Some(x.dim()) != m {
            return Err(Error::DimensionMismatch { expected: m.unwrap_or(0), found: x.dim() });
        }
        by_degree.entry(x.degree()).or_default().push(x);
    }
    Ok(by_degree)
}

/// Whether `M` is compressed: for `ξ ∈ M` and `ξ ◁ η` of equal degree,
/// `η` lies above some member of `M`.
pub fn is_compressed(set: &[Monomial], limits: &Limits) -> Result<bool> {
    limits.check_count(&BigUint::from(set.len()))?;
    let by_degree = group_by_degree(set)?;
    for (&d, members) in &by_degree {
        // The ⊴-smallest member imposes the strongest requirement.
        let lowest = members.iter().min().expect("nonempty group");
        let slice = degree_slice(lowest.dim(), d, limits)?;
        for eta in slice.iter().take_while(|eta| eta > lowest) {
            if !set.iter().any(|z| z.le_unchecked(eta)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `M` is a d-segment: all of degree `d` and closed upwards under `⊴`
/// within the degree-`d` slice.
pub fn is_d_segment(set: &[Monomial], d: u64, limits: &Limits) -> Result<bool> {
    limits.check_count(&BigUint::from(set.len()))?;
    let by_degree = group_by_degree(set)?;
    if by_degree.keys().any(|&deg| deg != d) {
        return Ok(false);
    }
    let Some(members) = by_degree.get(&d) else {
        return Ok(true);
    };
    let lowest = members.iter().min().expect("nonempty group");
    let slice = degree_slice(lowest.dim(), d, limits)?;
    let present: BTreeSet<&Monomial> = members.iter().copied().collect();
    Ok(slice.iter().take_while(|eta| eta >= lowest).all(|eta| present.contains(eta)))
}
