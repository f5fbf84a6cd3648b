//! The monomial universe ℕ^m × {1..n}.
//!
//! Two orders live here: the product order `≤` (same index, componentwise)
//! and the orderly order `⊴`, which compares `(degree, index, u_1, ..., u_m)`
//! lexicographically. `Ord` on [`Monomial`] and [`IndexedMonomial`] is the
//! orderly order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::macaulay::binomial_u64;

/// A point of ℕ^m.
///
/// Entries are machine integers; the degree is accumulated in `u64`, which
/// cannot overflow for any vector that fits in memory.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Monomial(entries))
    }

    pub fn zero(m: usize) -> Result<Self> {
        Monomial::new(vec![0; m])
    }

    /// `degree` times the first unit vector: the ⊴-largest monomial of that degree.
    pub fn first_axis(m: usize, degree: u32) -> Result<Self> {
        let mut v = vec![0; m];
        if let Some(first) = v.first_mut() {
            *first = degree;
        }
        Monomial::new(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&u| u as u64).sum()
    }

    fn same_dim(&self, other: &Monomial) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    /// Product order; callers guarantee equal dimensions.
    pub(crate) fn le_unchecked(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn leq(&self, other: &Monomial) -> Result<bool> {
        self.same_dim(other)?;
        Ok(self.le_unchecked(other))
    }

    /// Strictly below in the product order.
    pub fn lt_product(&self, other: &Monomial) -> Result<bool> {
        Ok(self.leq(other)? && self != other)
    }

    pub fn lub(&self, other: &Monomial) -> Result<Monomial> {
        self.same_dim(other)?;
        Ok(self.lub_unchecked(other))
    }

    pub(crate) fn lub_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Degree of the componentwise max, without materialising it.
    pub(crate) fn lub_degree(&self, other: &Monomial) -> u64 {
        self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b) as u64).sum()
    }

    pub fn cmp_orderly(&self, other: &Monomial) -> Result<Ordering> {
        self.same_dim(other)?;
        Ok(self.cmp(other))
    }

    /// `self - e_k` (0-based `k`), if that stays in ℕ^m.
    pub fn minus_unit(&self, k: usize) -> Option<Monomial> {
        let mut v = self.0.clone();
        let slot = v.get_mut(k)?;
        *slot = slot.checked_sub(1)?;
        Some(Monomial(v))
    }

    /// `self + e_k` (0-based `k`).
    pub fn plus_unit(&self, k: usize) -> Option<Monomial> {
        let mut v = self.0.clone();
        let slot = v.get_mut(k)?;
        *slot = slot.checked_add(1)?;
        Some(Monomial(v))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.len().cmp(&other.0.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Monomial {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Monomial::new(v)
    }
}

impl From<Monomial> for Vec<u32> {
    fn from(m: Monomial) -> Self {
        m.0
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, u) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}")?;
        }
        write!(f, ")")
    }
}

/// A point `(ξ, i)` of ℕ^m × {1..n}. Serialised as `[[u1,...,um], i]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(Monomial, u32)", into = "(Monomial, u32)")]
pub struct IndexedMonomial {
    xi: Monomial,
    index: u32,
}

impl IndexedMonomial {
    pub fn new(xi: Monomial, index: u32) -> Result<Self> {
        if index == 0 {
            return Err(Error::IndexOutOfRange { index, n: 0 });
        }
        Ok(IndexedMonomial { xi, index })
    }

    /// Shorthand for tests and examples: panics on malformed input.
    pub fn of(entries: &[u32], index: u32) -> Self {
        IndexedMonomial::new(Monomial::new(entries.to_vec()).expect("nonempty"), index)
            .expect("index >= 1")
    }

    pub fn xi(&self) -> &Monomial {
        &self.xi
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn dim(&self) -> usize {
        self.xi.dim()
    }

    /// The degree of `ξ`; the index does not contribute.
    pub fn degree(&self) -> u64 {
        self.xi.degree()
    }

    pub fn leq_product(&self, other: &IndexedMonomial) -> Result<bool> {
        let below = self.xi.leq(&other.xi)?;
        Ok(self.index == other.index && below)
    }

    pub(crate) fn le_unchecked(&self, other: &IndexedMonomial) -> bool {
        self.index == other.index && self.xi.le_unchecked(&other.xi)
    }

    pub fn cmp_orderly(&self, other: &IndexedMonomial) -> Result<Ordering> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(self.cmp(other))
    }
}

impl Ord for IndexedMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.index.cmp(&other.index))
            .then_with(|| self.xi.dim().cmp(&other.xi.dim()))
            .then_with(|| self.xi.0.cmp(&other.xi.0))
    }
}

impl PartialOrd for IndexedMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<(Monomial, u32)> for IndexedMonomial {
    type Error = Error;
    fn try_from((xi, index): (Monomial, u32)) -> Result<Self> {
        IndexedMonomial::new(xi, index)
    }
}

impl From<IndexedMonomial> for (Monomial, u32) {
    fn from(a: IndexedMonomial) -> Self {
        (a.xi, a.index)
    }
}

impl fmt::Debug for IndexedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.xi, self.index)
    }
}

impl fmt::Display for IndexedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A finite sequence of pairwise `≤`-incomparable indexed monomials.
///
/// JSON form: `{"m": 2, "n": 1, "elements": [[[2,0],1], [[0,2],1]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawAntichain", into = "RawAntichain")]
pub struct AntichainSequence {
    m: usize,
    n: u32,
    elements: Vec<IndexedMonomial>,
}

#[derive(Serialize, Deserialize)]
struct RawAntichain {
    m: usize,
    n: u32,
    elements: Vec<IndexedMonomial>,
}

impl TryFrom<RawAntichain> for AntichainSequence {
    type Error = Error;
    fn try_from(raw: RawAntichain) -> Result<Self> {
        validate_antichain(raw.m, raw.n, raw.elements)
    }
}

impl From<AntichainSequence> for RawAntichain {
    fn from(seq: AntichainSequence) -> Self {
        RawAntichain { m: seq.m, n: seq.n, elements: seq.elements }
    }
}

impl AntichainSequence {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn elements(&self) -> &[IndexedMonomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_degree(&self) -> u64 {
        self.elements.iter().map(IndexedMonomial::degree).max().unwrap_or(0)
    }

    /// The same elements reordered ascending by `⊴`.
    pub fn sorted_orderly(&self) -> AntichainSequence {
        let mut elements = self.elements.clone();
        elements.sort();
        AntichainSequence { m: self.m, n: self.n, elements }
    }

    pub(crate) fn from_parts_unchecked(m: usize, n: u32, elements: Vec<IndexedMonomial>) -> Self {
        AntichainSequence { m, n, elements }
    }
}

/// Validates uniform dimensions, index range and pairwise incomparability.
pub fn validate_antichain(m: usize, n: u32, elements: Vec<IndexedMonomial>) -> Result<AntichainSequence> {
    if m == 0 {
        return Err(Error::ZeroDimension);
    }
    for a in &elements {
        if a.dim() != m {
            return Err(Error::DimensionMismatch { expected: m, found: a.dim() });
        }
        if a.index() > n {
            return Err(Error::IndexOutOfRange { index: a.index(), n });
        }
    }
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate().skip(i + 1) {
            if a.le_unchecked(b) || b.le_unchecked(a) {
                return Err(Error::ComparablePair(i, j));
            }
        }
    }
    Ok(AntichainSequence { m, n, elements })
}

/// `γ(ᾱ)`: LUBs of distinct same-index pairs, deduplicated and sorted by `⊴`.
pub fn gamma(seq: &AntichainSequence) -> Vec<IndexedMonomial> {
    gamma_of(seq.elements()).into_iter().collect()
}

pub(crate) fn gamma_of(elements: &[IndexedMonomial]) -> BTreeSet<IndexedMonomial> {
    let mut out = BTreeSet::new();
    for (i, a) in elements.iter().enumerate() {
        for b in &elements[i + 1..] {
            if a.index() == b.index() && a.xi() != b.xi() {
                out.insert(IndexedMonomial { xi: a.xi().lub_unchecked(b.xi()), index: a.index() });
            }
        }
    }
    out
}

/// Number of monomials of degree `d` in ℕ^m: `C(m-1+d, d)`.
pub fn slice_size(m: usize, d: u64) -> BigUint {
    if m == 0 {
        return BigUint::from(0u32);
    }
    binomial_u64(m as u64 - 1 + d, d)
}

/// All degree-`d` monomials of ℕ^m, sorted descending by `⊴`.
pub fn degree_slice(m: usize, d: u64, limits: &Limits) -> Result<Vec<Monomial>> {
    if m == 0 {
        return Err(Error::ZeroDimension);
    }
    let count = limits.check_count(&slice_size(m, d))?;
    let d = u32::try_from(d).map_err(|_| Error::InvalidArgument(format!("degree {d} too large")))?;
    let mut out = Vec::with_capacity(count);
    let mut current = vec![0u32; m];
    fill_slice(&mut current, 0, d, &mut out);
    Ok(out)
}

// Lexicographically descending: the first entry runs from `remaining` down to 0.
fn fill_slice(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Monomial(current.clone()));
        return;
    }
    for u in (0..=remaining).rev() {
        current[pos] = u;
        fill_slice(current, pos + 1, remaining - u, out);
    }
    current[pos] = 0;
}

/// `Γ_ᾱ(p)`: the elements of degree at most `p`, order preserved.
pub fn truncate(seq: &AntichainSequence, p: u64) -> AntichainSequence {
    AntichainSequence {
        m: seq.m,
        n: seq.n,
        elements: seq.elements.iter().filter(|a| a.degree() <= p).cloned().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    fn seq(m: usize, items: &[&[u32]]) -> AntichainSequence {
        validate_antichain(m, 1, items.iter().map(|v| IndexedMonomial::of(v, 1)).collect()).unwrap()
    }

    #[test]
    fn degree_ignores_index() {
        assert_eq!(IndexedMonomial::of(&[2, 0], 1).degree(), 2);
        assert_eq!(IndexedMonomial::of(&[0, 0, 0], 3).degree(), 0);
        assert_eq!(IndexedMonomial::of(&[5, 0], 1).degree(), 5);
    }

    #[test]
    fn product_order() {
        let a = IndexedMonomial::of(&[1, 0], 1);
        assert!(a.leq_product(&IndexedMonomial::of(&[2, 0], 1)).unwrap());
        assert!(!a.leq_product(&IndexedMonomial::of(&[2, 0], 2)).unwrap());
        let x = IndexedMonomial::of(&[2, 0], 1);
        let y = IndexedMonomial::of(&[0, 2], 1);
        assert!(!x.leq_product(&y).unwrap() && !y.leq_product(&x).unwrap());
        assert!(matches!(a.leq_product(&IndexedMonomial::of(&[1, 0, 0], 1)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn orderly_order() {
        let cmp = |a: &[u32], i, b: &[u32], j| IndexedMonomial::of(a, i).cmp_orderly(&IndexedMonomial::of(b, j)).unwrap();
        assert_eq!(cmp(&[1, 0], 1, &[0, 1], 2), Ordering::Less);
        assert_eq!(cmp(&[0, 2], 1, &[2, 0], 1), Ordering::Less);
        assert_eq!(cmp(&[3, 0], 1, &[0, 1], 1), Ordering::Greater);
    }

    #[test]
    fn lub_examples() {
        assert_eq!(mono(&[2, 0]).lub(&mono(&[0, 2])).unwrap(), mono(&[2, 2]));
        assert_eq!(mono(&[3, 1]).lub(&mono(&[3, 1])).unwrap(), mono(&[3, 1]));
        assert_eq!(mono(&[2, 0, 0]).lub(&mono(&[0, 2, 0])).unwrap(), mono(&[2, 2, 0]));
        assert!(mono(&[1]).lub(&mono(&[1, 1])).is_err());
    }

    #[test]
    fn gamma_examples() {
        let g = gamma(&seq(2, &[&[3, 0], &[0, 3]]));
        assert_eq!(g, vec![IndexedMonomial::of(&[3, 3], 1)]);
        assert!(gamma(&seq(2, &[&[1, 1]])).is_empty());
        let g = gamma(&seq(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        let expected: BTreeSet<_> = [[2, 1], [2, 2], [1, 2]].iter().map(|v| IndexedMonomial::of(v, 1)).collect();
        assert_eq!(g.into_iter().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn gamma_ignores_cross_index_pairs() {
        let s = validate_antichain(2, 2, vec![IndexedMonomial::of(&[2, 0], 1), IndexedMonomial::of(&[0, 2], 2)]).unwrap();
        assert!(gamma(&s).is_empty());
    }

    #[test]
    fn slices() {
        let limits = Limits::default();
        assert_eq!(degree_slice(2, 4, &limits).unwrap().len(), 5);
        assert_eq!(degree_slice(1, 7, &limits).unwrap(), vec![mono(&[7])]);
        let s = degree_slice(3, 2, &limits).unwrap();
        assert_eq!(s.len(), 6);
        assert_eq!(s[0], mono(&[2, 0, 0]));
        assert_eq!(s[5], mono(&[0, 0, 2]));
        assert!(s.windows(2).all(|w| w[0] > w[1]));
        let tight = Limits::default().with_enum_limit(3);
        assert!(matches!(degree_slice(3, 2, &tight), Err(Error::EnumerationLimit { .. })));
    }

    #[test]
    fn truncation() {
        let s = seq(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert!(truncate(&s, 1).is_empty());
        assert_eq!(truncate(&s, 9), s);
        let t = truncate(&seq(2, &[&[2, 0], &[0, 3]]), 2);
        assert_eq!(t.elements(), &[IndexedMonomial::of(&[2, 0], 1)]);
    }

    #[test]
    fn validation() {
        let ok = validate_antichain(2, 1, vec![IndexedMonomial::of(&[2, 0], 1), IndexedMonomial::of(&[1, 1], 1)]);
        assert!(ok.is_ok());
        let bad = validate_antichain(2, 1, vec![IndexedMonomial::of(&[1, 0], 1), IndexedMonomial::of(&[2, 0], 1)]);
        assert_eq!(bad, Err(Error::ComparablePair(0, 1)));
        let distinct = validate_antichain(2, 2, vec![IndexedMonomial::of(&[1, 0], 1), IndexedMonomial::of(&[1, 0], 2)]);
        assert!(distinct.is_ok());
        let mixed = validate_antichain(2, 1, vec![IndexedMonomial::of(&[1, 0], 1), IndexedMonomial::of(&[1, 0, 0], 1)]);
        assert!(matches!(mixed, Err(Error::DimensionMismatch { .. })));
        let out_of_range = validate_antichain(2, 1, vec![IndexedMonomial::of(&[1, 0], 2)]);
        assert!(matches!(out_of_range, Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn json_shape() {
        let s = seq(2, &[&[2, 0], &[0, 2]]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"m":2,"n":1,"elements":[[[2,0],1],[[0,2],1]]}"#);
        let back: AntichainSequence = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        let comparable = r#"{"m":2,"n":1,"elements":[[[1,0],1],[[2,0],1]]}"#;
        assert!(serde_json::from_str::<AntichainSequence>(comparable).is_err());
    }
}
