//! Hilbert-Samuel functions of monomial staircases, τ-connectivity and
//! the strict growth condition (*).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{degree_slice, slice_size, AntichainSequence, Monomial};
use crate::limits::Limits;
use crate::macaulay::upper_shadow;

/// A finite subset `M` of ℕ^m, stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawStaircase", into = "RawStaircase")]
pub struct StaircaseSet {
    m: usize,
    generators: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
struct RawStaircase {
    m: usize,
    generators: Vec<Monomial>,
}

impl TryFrom<RawStaircase> for StaircaseSet {
    type Error = Error;
    fn try_from(raw: RawStaircase) -> Result<Self> {
        StaircaseSet::new(raw.m, raw.generators)
    }
}

impl From<StaircaseSet> for RawStaircase {
    fn from(s: StaircaseSet) -> Self {
        RawStaircase { m: s.m, generators: s.generators }
    }
}

impl fmt::Display for StaircaseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl StaircaseSet {
    pub fn new(m: usize, generators: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroDimension);
        }
        let set: BTreeSet<Monomial> = generators.into_iter().collect();
        if let Some(bad) = set.iter().find(|x| x.dim() != m) {
            return Err(Error::DimensionMismatch { expected: m, found: bad.dim() });
        }
        Ok(StaircaseSet { m, generators: set.into_iter().collect() })
    }

    pub fn empty(m: usize) -> Result<Self> {
        StaircaseSet::new(m, [])
    }

    /// The whole degree-`d` slice with `removed` taken out.
    pub fn slice_without(m: usize, d: u64, removed: &[Monomial], limits: &Limits) -> Result<Self> {
        let slice = degree_slice(m, d, limits)?;
        StaircaseSet::new(m, slice.into_iter().filter(|x| !removed.contains(x)))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Whether `x` lies above some generator.
    pub fn covers(&self, x: &Monomial) -> bool {
        self.generators.iter().any(|g| g.le_unchecked(x))
    }

    /// `M ∩ Γ(d)`, in descending ⊴ order.
    pub fn within_degree(&self, d: u64) -> Vec<&Monomial> {
        self.generators.iter().rev().filter(|x| x.degree() <= d).collect()
    }
}

/// `H_M(d)`.
pub fn hs(set: &StaircaseSet, d: u64, limits: &Limits) -> Result<BigUint> {
    let slice = degree_slice(set.m, d, limits)?;
    Ok(BigUint::from(slice.iter().filter(|x| !set.covers(x)).count()))
}

/// `S_M(d)`.
pub fn s_fn(set: &StaircaseSet, d: u64, limits: &Limits) -> Result<BigUint> {
    let slice = degree_slice(set.m, d, limits)?;
    Ok(BigUint::from(slice.iter().filter(|x| set.covers(x)).count()))
}

/// `H^i_ᾱ(d)` on ℕ^m×𝔫: degree-`d` points above none of the first `i` elements.
pub fn hs_seq(seq: &AntichainSequence, i: usize, d: u64, limits: &Limits) -> Result<BigUint> {
    let prefix = &seq.elements()[..i.min(seq.len())];
    let mut total = BigUint::from(0u32);
    for copy in 1..=seq.n() {
        let members = prefix.iter().filter(|a| a.index() == copy).map(|a| a.xi().clone());
        total += hs(&StaircaseSet::new(seq.m(), members)?, d, limits)?;
    }
    Ok(total)
}

fn bfs_connected(vertices: &[&Monomial], from: usize, to: usize, d: u64) -> bool {
    let mut seen = vec![false; vertices.len()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(v) = queue.pop_front() {
        if v == to {
            return true;
        }
        for (w, other) in vertices.iter().enumerate() {
            if !seen[w] && vertices[v].lub_degree(other) <= d + 1 {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    false
}

/// Whether `x` and `z` are τ_{d,M}-connected.
pub fn tau_connected(x: &Monomial, z: &Monomial, tau: &Monomial, d: u64, set: &StaircaseSet) -> Result<bool> {
    for v in [x, z, tau] {
        if v.dim() != set.m {
            return Err(Error::DimensionMismatch { expected: set.m, found: v.dim() });
        }
    }
    if x == z {
        return Err(Error::Precondition("the two endpoints must be distinct".into()));
    }
    if tau.degree() <= d + 1 {
        return Err(Error::Precondition(format!("deg {tau} must exceed {}", d + 1)));
    }
    let vertices: Vec<&Monomial> = set.within_degree(d).into_iter().filter(|v| v.le_unchecked(tau)).collect();
    let from = vertices.iter().position(|v| *v == x);
    let to = vertices.iter().position(|v| *v == z);
    match (from, to) {
        (Some(from), Some(to)) => Ok(bfs_connected(&vertices, from, to, d)),
        _ => Err(Error::Precondition(format!("{x} and {z} must lie in M ∩ Γ({d}) below {tau}"))),
    }
}

/// A pair witnessing condition (*) at `d`, scanning pairs in descending ⊴ order.
pub fn condition_star(set: &StaircaseSet, d: u64) -> Option<(Monomial, Monomial)> {
    let members = set.within_degree(d);
    for (a, x) in members.iter().enumerate() {
        for z in &members[a + 1..] {
            let tau = x.lub_unchecked(z);
            if tau.degree() <= d + 1 {
                continue;
            }
            let vertices: Vec<&Monomial> = members.iter().copied().filter(|v| v.le_unchecked(&tau)).collect();
            let from = vertices.iter().position(|v| v == x).expect("x lies below its own LUB");
            let to = vertices.iter().position(|v| v == z).expect("z lies below its own LUB");
            if !bfs_connected(&vertices, from, to, d) {
                return Some(((*x).clone(), (*z).clone()));
            }
        }
    }
    None
}

/// `(H_M(d+1), H_M(d)^⟨d⟩)`.
pub fn growth_gap(set: &StaircaseSet, d: u64, limits: &Limits) -> Result<(BigUint, BigUint)> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let next = hs(set, d + 1, limits)?;
    let bound = upper_shadow(&hs(set, d, limits)?, d)?;
    Ok((next, bound))
}

/// Whether a subset of ℕ² is a block `{(u1,u2), (u1+1,u2-1), ..., (u1+c,u2-c)}`.
/// The empty set counts as a block.
pub fn is_block_m2(set: &StaircaseSet) -> bool {
    if set.m != 2 {
        return false;
    }
    let Some(first) = set.generators.first() else {
        return true;
    };
    let d = first.degree();
    if set.generators.iter().any(|x| x.degree() != d) {
        return false;
    }
    let mut firsts: Vec<u32> = set.generators.iter().map(|x| x.entries()[0]).collect();
    firsts.sort_unstable();
    firsts.windows(2).all(|w| w[1] == w[0] + 1)
}

/// `|(ξ,i): deg = d|` summed over `n` copies, i.e. `n·C(m-1+d, d)`.
pub fn slice_total(m: usize, n: u32, d: u64) -> BigUint {
    slice_size(m, d) * n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::IndexedMonomial;

    fn mono(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn example_4_6() -> StaircaseSet {
        StaircaseSet::slice_without(3, 2, &[mono(&[1, 1, 0])], &Limits::default()).unwrap()
    }

    fn remark_counterexample() -> StaircaseSet {
        StaircaseSet::slice_without(3, 3, &[mono(&[1, 1, 1])], &Limits::default()).unwrap()
    }

    #[test]
    fn hilbert_values() {
        let limits = Limits::default();
        let m = remark_counterexample();
        assert_eq!(hs(&m, 3, &limits).unwrap(), big(1));
        assert_eq!(hs(&m, 4, &limits).unwrap(), big(0));
        let empty = StaircaseSet::empty(3).unwrap();
        assert_eq!(hs(&empty, 4, &limits).unwrap(), big(15));
        let origin = StaircaseSet::new(2, [mono(&[0, 0])]).unwrap();
        for d in 0..6 {
            assert_eq!(hs(&origin, d, &limits).unwrap(), big(0));
        }
        assert_eq!(s_fn(&origin, 5, &limits).unwrap(), big(6));
        assert_eq!(s_fn(&empty, 5, &limits).unwrap(), big(0));
    }

    #[test]
    fn sequence_hilbert() {
        let limits = Limits::default();
        let seq = crate::lattice::validate_antichain(2, 1, vec![IndexedMonomial::of(&[1, 0], 1)]).unwrap();
        assert_eq!(hs_seq(&seq, 1, 1, &limits).unwrap(), big(1));
        assert_eq!(hs_seq(&seq, 0, 3, &limits).unwrap(), big(4));
        let two = crate::lattice::validate_antichain(2, 3, vec![]).unwrap();
        assert_eq!(hs_seq(&two, 0, 2, &limits).unwrap(), slice_total(2, 3, 2));
        let mu = crate::lattice::validate_antichain(
            2,
            1,
            vec![IndexedMonomial::of(&[2, 0], 1), IndexedMonomial::of(&[1, 1], 1), IndexedMonomial::of(&[0, 3], 1)],
        )
        .unwrap();
        assert_eq!(hs_seq(&mu, 3, 3, &limits).unwrap(), big(0));
    }

    #[test]
    fn connectivity_examples() {
        let m = example_4_6();
        let tau = mono(&[2, 2, 0]);
        assert!(!tau_connected(&mono(&[2, 0, 0]), &mono(&[0, 2, 0]), &tau, 2, &m).unwrap());
        let m = remark_counterexample();
        let tau = mono(&[2, 2, 1]);
        assert!(tau_connected(&mono(&[2, 0, 1]), &mono(&[0, 2, 1]), &tau, 3, &m).unwrap());
        assert!(tau_connected(&mono(&[0, 2, 1]), &mono(&[2, 0, 1]), &tau, 3, &m).unwrap());
        assert!(tau_connected(&mono(&[2, 0, 1]), &mono(&[2, 0, 1]), &tau, 3, &m).is_err());
    }

    #[test]
    fn condition_star_examples() {
        assert_eq!(condition_star(&example_4_6(), 2), Some((mono(&[2, 0, 0]), mono(&[0, 2, 0]))));
        assert_eq!(condition_star(&remark_counterexample(), 3), None);
        assert_eq!(condition_star(&StaircaseSet::new(2, [mono(&[3, 0])]).unwrap(), 3), None);
    }

    #[test]
    fn gaps() {
        let limits = Limits::default();
        assert_eq!(growth_gap(&remark_counterexample(), 3, &limits).unwrap(), (big(0), big(1)));
        let (a, b) = growth_gap(&example_4_6(), 2, &limits).unwrap();
        assert!(a < b);
        for m in 1..=4 {
            let (a, b) = growth_gap(&StaircaseSet::empty(m).unwrap(), 3, &limits).unwrap();
            assert_eq!(a, b);
            assert_eq!(a, crate::macaulay::binomial_u64(m as u64 + 3, 4));
        }
    }

    #[test]
    fn blocks() {
        let block = StaircaseSet::new(2, [mono(&[1, 2]), mono(&[2, 1])]).unwrap();
        assert!(is_block_m2(&block));
        let gapped = StaircaseSet::new(2, [mono(&[0, 3]), mono(&[2, 1])]).unwrap();
        assert!(!is_block_m2(&gapped));
        assert!(is_block_m2(&StaircaseSet::empty(2).unwrap()));
    }

    #[test]
    fn json_shape() {
        let s = StaircaseSet::new(2, [mono(&[0, 1])]).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"m":2,"generators":[[0,1]]}"#);
        let back: StaircaseSet = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<StaircaseSet>(r#"{"m":2,"generators":[[0]]}"#).is_err());
    }
}
