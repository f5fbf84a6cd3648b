//! Condition (♯'), the invariant `D_{r,ᾱ}` and the principal-realization
//! criterion (♯).
//!
//! For an obligation `(τ,l)` the chain search is reachability in the graph
//! whose vertices are the index-`l` elements `η` of `Γ_ᾱ(p)` lying below
//! `τ - e_k` for some `k`, with an edge whenever `deg LUB ≤ p`. A pair `i<j`
//! is satisfied when some component meets both the elements below `τ - e_i`
//! and those below `τ - e_j`.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{AntichainSequence, IndexedMonomial, Monomial};

/// One obligation of (♯') together with a chain discharging it.
/// Coordinates `i`, `j` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obligation {
    pub tau: IndexedMonomial,
    pub i: usize,
    pub j: usize,
    pub chain: Vec<IndexedMonomial>,
}

/// An obligation that has no chain at degree `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub p: u64,
    pub tau: IndexedMonomial,
    pub i: usize,
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrResult {
    #[serde(rename = "D")]
    pub value: u64,
    pub r: u64,
    /// Every obligation at `p = D`, each with one chain.
    pub obligations: Vec<Obligation>,
    /// Why `D - 1` fails, when `D > r`.
    pub failure_below: Option<Failure>,
}

// Elements of Γ_ᾱ(p) split by index; position l-1 holds index l.
fn by_index<'a>(elements: &'a [IndexedMonomial], n: u32, p: u64) -> Vec<Vec<&'a Monomial>> {
    let mut groups = vec![Vec::new(); n as usize];
    for a in elements.iter().filter(|a| a.degree() <= p) {
        groups[a.index() as usize - 1].push(a.xi());
    }
    groups
}

fn obligations_of(group: &[&Monomial], p: u64) -> BTreeSet<Monomial> {
    let mut taus = BTreeSet::new();
    for (a, x) in group.iter().enumerate() {
        for z in &group[a + 1..] {
            if x.lub_degree(z) > p {
                taus.insert(x.lub_unchecked(z));
            }
        }
    }
    taus
}

struct Graph<'a> {
    vertices: Vec<&'a Monomial>,
    component: Vec<usize>,
}

impl<'a> Graph<'a> {
    fn new(group: &[&'a Monomial], tau: &Monomial, p: u64) -> Self {
        let vertices: Vec<&Monomial> = group.iter().copied().filter(|v| v.le_unchecked(tau)).collect();
        let mut component = vec![usize::MAX; vertices.len()];
        for start in 0..vertices.len() {
            if component[start] != usize::MAX {
                continue;
            }
            component[start] = start;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in 0..vertices.len() {
                    if component[w] == usize::MAX && vertices[v].lub_degree(vertices[w]) <= p {
                        component[w] = start;
                        queue.push_back(w);
                    }
                }
            }
        }
        Graph { vertices, component }
    }

    // Vertices strictly below τ in coordinate k (0-based), i.e. below τ - e_k.
    fn below(&self, tau: &Monomial, k: usize) -> impl Iterator<Item = usize> + '_ {
        let t = tau.entries()[k];
        (0..self.vertices.len()).filter(move |&v| self.vertices[v].entries()[k] < t)
    }

    fn components_below(&self, tau: &Monomial, k: usize) -> BTreeSet<usize> {
        self.below(tau, k).map(|v| self.component[v]).collect()
    }

    // Shortest chain from a vertex below τ - e_i to one below τ - e_j.
    fn chain(&self, tau: &Monomial, i: usize, j: usize, p: u64) -> Option<Vec<&'a Monomial>> {
        let targets: BTreeSet<usize> = self.below(tau, j).collect();
        let mut parent = vec![usize::MAX; self.vertices.len()];
        let mut queue = VecDeque::new();
        for s in self.below(tau, i) {
            if targets.contains(&s) {
                return Some(vec![self.vertices[s], self.vertices[s]]);
            }
            parent[s] = s;
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            for w in 0..self.vertices.len() {
                if parent[w] == usize::MAX && self.vertices[v].lub_degree(self.vertices[w]) <= p {
                    parent[w] = v;
                    if targets.contains(&w) {
                        let mut path = vec![w];
                        let mut at = w;
                        while parent[at] != at {
                            at = parent[at];
                            path.push(at);
                        }
                        path.reverse();
                        return Some(path.into_iter().map(|x| self.vertices[x]).collect());
                    }
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

pub(crate) fn first_failure(elements: &[IndexedMonomial], m: usize, n: u32, p: u64) -> Option<Failure> {
    if m < 2 {
        return None;
    }
    for (l, group) in by_index(elements, n, p).iter().enumerate() {
        for tau in obligations_of(group, p) {
            let graph = Graph::new(group, &tau, p);
            let comps: Vec<BTreeSet<usize>> = (0..m).map(|k| graph.components_below(&tau, k)).collect();
            for i in 0..m {
                for j in i + 1..m {
                    if comps[i].is_empty() || comps[j].is_empty() {
                        continue;
                    }
                    if comps[i].is_disjoint(&comps[j]) {
                        return Some(Failure {
                            p,
                            tau: IndexedMonomial::new(tau, l as u32 + 1).expect("index is positive"),
                            i: i + 1,
                            j: j + 1,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Whether condition (♯') holds for `ᾱ` at `p`.
pub fn condition_sharp_prime(seq: &AntichainSequence, p: u64) -> bool {
    first_failure(seq.elements(), seq.m(), seq.n(), p).is_none()
}

/// The first obligation violating (♯') at `p`, scanning indices upwards and
/// obligations in ascending ⊴ order.
pub fn sharp_prime_failure(seq: &AntichainSequence, p: u64) -> Option<Failure> {
    first_failure(seq.elements(), seq.m(), seq.n(), p)
}

/// All obligations at `p` with one chain each, or the first failure.
pub fn sharp_prime_certificate(seq: &AntichainSequence, p: u64) -> std::result::Result<Vec<Obligation>, Failure> {
    let m = seq.m();
    let mut out = Vec::new();
    if m < 2 {
        return Ok(out);
    }
    for (l, group) in by_index(seq.elements(), seq.n(), p).iter().enumerate() {
        let index = l as u32 + 1;
        for tau in obligations_of(group, p) {
            let graph = Graph::new(group, &tau, p);
            let tau_indexed = IndexedMonomial::new(tau.clone(), index).expect("index is positive");
            for i in 0..m {
                for j in i + 1..m {
                    if graph.below(&tau, i).next().is_none() || graph.below(&tau, j).next().is_none() {
                        continue;
                    }
                    match graph.chain(&tau, i, j, p) {
                        Some(chain) => out.push(Obligation {
                            tau: tau_indexed.clone(),
                            i: i + 1,
                            j: j + 1,
                            chain: chain
                                .into_iter()
                                .map(|x| IndexedMonomial::new(x.clone(), index).expect("index is positive"))
                                .collect(),
                        }),
                        None => return Err(Failure { p, tau: tau_indexed, i: i + 1, j: j + 1 }),
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `D_{r,ᾱ}` as a bare number, from raw elements.
pub(crate) fn d_value(elements: &[IndexedMonomial], m: usize, n: u32, r: u64) -> u64 {
    let h = elements.iter().map(IndexedMonomial::degree).max().unwrap_or(0).max(r);
    (r..=2 * h)
        .find(|&p| first_failure(elements, m, n, p).is_none())
        .expect("(♯') holds at p = 2h")
}

/// `D_{r,ᾱ}` with its certificate.
pub fn d_r(seq: &AntichainSequence, r: u64) -> DrResult {
    let value = d_value(seq.elements(), seq.m(), seq.n(), r);
    let obligations = sharp_prime_certificate(seq, value).expect("(♯') holds at D");
    let failure_below = (value > r).then(|| sharp_prime_failure(seq, value - 1).expect("(♯') fails below D"));
    DrResult { value, r, obligations, failure_below }
}

/// Condition (♯) for the minimal leaders of a kernel of length `r`.
pub fn check_principal_criterion(minimal_leaders: &AntichainSequence, r: u64) -> Result<bool> {
    if let Some((index, a)) = minimal_leaders.elements().iter().enumerate().find(|(_, a)| a.degree() > r) {
        return Err(Error::DegreeExceedsLength { index, degree: a.degree(), r });
    }
    Ok(condition_sharp_prime(minimal_leaders, r))
}
