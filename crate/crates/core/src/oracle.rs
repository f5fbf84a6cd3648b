//! Brute-force verifiers giving desk-scale ground truth for the bounds.
//!
//! Every sweep returns a [`VerificationReport`]; an empty failure list means
//! the claim held on every instance inside the stated ranges.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{c_bound, mu_sequence, paper_gn};
use crate::consistency::{d_value, first_failure};
use crate::error::{Error, Result};
use crate::hilbert::{condition_star, growth_gap, hs_seq, is_block_m2, StaircaseSet};
use crate::lattice::{degree_slice, slice_size, AntichainSequence, IndexedMonomial, Monomial};
use crate::limits::Limits;
use crate::macaulay::{macaulay_growth_any, upper_shadow};

/// Default cap on enumerated candidate sets.
pub const DEFAULT_SET_BUDGET: u64 = 10_000_000;

/// Largest degree slice swept subset by subset.
pub const MAX_SWEPT_SLICE: usize = 18;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub ranges: String,
    pub instances_checked: u64,
    pub skipped: u64,
    /// Counterexamples, sorted.
    pub failures: Vec<String>,
    /// Named observations such as the maximum found.
    pub findings: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(claim: impl Into<String>, ranges: impl Into<String>) -> Self {
        VerificationReport { claim: claim.into(), ranges: ranges.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn finding(&mut self, key: &str, value: impl ToString) {
        self.findings.insert(key.to_string(), value.to_string());
    }

    fn finish(mut self) -> Self {
        self.failures.sort();
        self.failures.dedup();
        self
    }

    /// Concatenates several reports under one claim.
    pub fn merge(claim: impl Into<String>, parts: Vec<VerificationReport>) -> Self {
        let mut out = VerificationReport::new(claim, "");
        let mut ranges = Vec::new();
        for part in parts {
            ranges.push(format!("{} [{}]", part.claim, part.ranges));
            out.instances_checked += part.instances_checked;
            out.skipped += part.skipped;
            out.failures.extend(part.failures.into_iter().map(|f| format!("{}: {f}", part.claim)));
            for (k, v) in part.findings {
                out.findings.insert(format!("{} [{}].{k}", part.claim, part.ranges), v);
            }
            out.notes.extend(part.notes.into_iter().map(|n| format!("{}: {n}", part.claim)));
        }
        out.ranges = ranges.join("; ");
        out.finish()
    }
}

fn show(set: &[IndexedMonomial]) -> String {
    let parts: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Outcome of the antichain enumeration behind [`brute_max_d`].
#[derive(Debug, Clone, Default)]
pub struct BruteForce {
    pub max_d: u64,
    /// Number of enumerated classes, each a set closed at the degree where
    /// (♯') first holds.
    pub classes: u64,
    pub histogram: BTreeMap<u64, u64>,
    /// Sets attaining `max_d`, at most `keep` of them.
    pub maximizers: Vec<Vec<IndexedMonomial>>,
    /// Sets with `D` above the window, which the window cannot settle.
    pub beyond_window: Vec<Vec<IndexedMonomial>>,
}

impl BruteForce {
    fn absorb(&mut self, other: BruteForce, keep: usize) {
        self.classes += other.classes;
        for (d, c) in other.histogram {
            *self.histogram.entry(d).or_default() += c;
        }
        if other.max_d > self.max_d {
            self.max_d = other.max_d;
            self.maximizers.clear();
        }
        if other.max_d == self.max_d {
            let room = keep.saturating_sub(self.maximizers.len());
            self.maximizers.extend(other.maximizers.into_iter().take(room));
        }
        self.beyond_window.extend(other.beyond_window);
    }

    fn record(&mut self, d: u64, set: &[IndexedMonomial], keep: usize) {
        self.classes += 1;
        *self.histogram.entry(d).or_default() += 1;
        if d > self.max_d {
            self.max_d = d;
            self.maximizers.clear();
        }
        if d == self.max_d && self.maximizers.len() < keep {
            self.maximizers.push(set.to_vec());
        }
    }
}

struct Enumerator<'a> {
    m: usize,
    n: u32,
    r: u64,
    window: u64,
    len_cap: usize,
    keep: usize,
    budget: u64,
    levels: &'a [Vec<IndexedMonomial>],
}

impl Enumerator<'_> {
    fn free_at(&self, chosen: &[IndexedMonomial], level: u64) -> Vec<IndexedMonomial> {
        self.levels[level as usize]
            .iter()
            .filter(|x| !chosen.iter().any(|c| c.le_unchecked(x)))
            .cloned()
            .collect()
    }

    // Every subset of the free points at `level` added to `chosen`.
    fn subsets(&self, chosen: &mut Vec<IndexedMonomial>, level: u64, out: &mut BruteForce) -> Result<()> {
        let free = self.free_at(chosen, level);
        self.pick(chosen, &free, 0, level, out)
    }

    fn pick(
        &self,
        chosen: &mut Vec<IndexedMonomial>,
        free: &[IndexedMonomial],
        at: usize,
        level: u64,
        out: &mut BruteForce,
    ) -> Result<()> {
        if at == free.len() {
            return self.close(chosen, level, out);
        }
        self.pick(chosen, free, at + 1, level, out)?;
        if chosen.len() < self.len_cap {
            chosen.push(free[at].clone());
            self.pick(chosen, free, at + 1, level, out)?;
            chosen.pop();
        }
        Ok(())
    }

    fn close(&self, chosen: &mut Vec<IndexedMonomial>, level: u64, out: &mut BruteForce) -> Result<()> {
        if out.classes >= self.budget {
            return Err(Error::BudgetExceeded { context: "the antichain enumeration".into(), budget: self.budget });
        }
        if level >= self.r && first_failure(chosen, self.m, self.n, level).is_none() {
            out.record(level, chosen, self.keep);
            return Ok(());
        }
        if level == self.window {
            let d = d_value(chosen, self.m, self.n, self.r);
            out.record(d, chosen, self.keep);
            if d > self.window {
                out.beyond_window.push(chosen.clone());
            }
            return Ok(());
        }
        self.subsets(chosen, level + 1, out)
    }
}

/// Enumerates every antichain set of ℕ^m×𝔫 inside `Γ(window)` with at most
/// `len_cap` elements, up to the degree where (♯') first holds, and returns
/// the distribution of `D_{r,ᾱ}`.
pub fn enumerate_d(
    r: u64,
    m: usize,
    n: u32,
    window: u64,
    len_cap: usize,
    budget: u64,
    keep: usize,
    limits: &Limits,
) -> Result<BruteForce> {
    if m == 0 {
        return Err(Error::ZeroDimension);
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut levels = Vec::new();
    for d in 0..=window {
        let slice = degree_slice(m, d, limits)?;
        let mut level = Vec::new();
        for index in (1..=n).rev() {
            level.extend(slice.iter().map(|x| IndexedMonomial::new(x.clone(), index).expect("index is positive")));
        }
        levels.push(level);
    }
    let e = Enumerator { m, n, r, window, len_cap, keep, budget, levels: &levels };

    // Split the search at the first degree where (♯') is checked.
    let split = r.min(window);
    let mut prefixes = Vec::new();
    collect_prefixes(&e, &mut Vec::new(), 0, split, &mut prefixes);
    let parts: Vec<Result<BruteForce>> = prefixes
        .into_par_iter()
        .map(|mut chosen| {
            let mut out = BruteForce::default();
            e.close(&mut chosen, split, &mut out)?;
            Ok(out)
        })
        .collect();
    let mut total = BruteForce::default();
    for part in parts {
        total.absorb(part?, keep);
        if total.classes > budget {
            return Err(Error::BudgetExceeded { context: "the antichain enumeration".into(), budget });
        }
    }
    total.beyond_window.sort();
    Ok(total)
}

// Every antichain inside Γ(split), without closing the last level.
fn collect_prefixes(
    e: &Enumerator<'_>,
    chosen: &mut Vec<IndexedMonomial>,
    level: u64,
    split: u64,
    out: &mut Vec<Vec<IndexedMonomial>>,
) {
    let free = e.free_at(chosen, level);
    // Subsets of `free` in include/exclude order, recursing to the next level.
    fn walk(
        e: &Enumerator<'_>,
        chosen: &mut Vec<IndexedMonomial>,
        free: &[IndexedMonomial],
        at: usize,
        level: u64,
        split: u64,
        out: &mut Vec<Vec<IndexedMonomial>>,
    ) {
        if at == free.len() {
            if level == split {
                out.push(chosen.clone());
            } else {
                collect_prefixes(e, chosen, level + 1, split, out);
            }
            return;
        }
        walk(e, chosen, free, at + 1, level, split, out);
        if chosen.len() < e.len_cap {
            chosen.push(free[at].clone());
            walk(e, chosen, free, at + 1, level, split, out);
            chosen.pop();
        }
    }
    walk(e, chosen, &free, 0, level, split, out);
}

/// `max D_{r,ᾱ}` over antichain sets in `Γ(window)` against `C_{r,m}^n`,
/// together with `D_{r,μ̄} = g_n(𝔏) + 1 = C_{r,m}^n`.
pub fn brute_max_d(r: u64, m: usize, n: u32, window: u64, len_cap: usize, limits: &Limits) -> Result<VerificationReport> {
    brute_max_d_with(r, m, n, window, len_cap, DEFAULT_SET_BUDGET, limits)
}

pub fn brute_max_d_with(
    r: u64,
    m: usize,
    n: u32,
    window: u64,
    len_cap: usize,
    budget: u64,
    limits: &Limits,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(
        "max D over antichain sets equals C",
        match len_cap {
            usize::MAX => format!("r={r} m={m} n={n} window={window}"),
            cap => format!("r={r} m={m} n={n} window={window} len_cap={cap}"),
        },
    );
    let c = c_bound(&BigUint::from(r), m, u64::from(n), limits)?.value;
    let c = c.to_u64().ok_or_else(|| Error::exceeds(format!("C = {c}"), 64))?;
    let brute = enumerate_d(r, m, n, window, len_cap, budget, 1, limits)?;
    report.instances_checked = brute.classes;
    report.finding("C", c);
    report.finding("max_D", brute.max_d);
    if let Some(set) = brute.maximizers.first() {
        report.finding("maximizer", show(set));
    }
    for set in &brute.beyond_window {
        report.failures.push(format!("D above the window for {}", show(set)));
    }
    if window > c {
        if brute.max_d != c {
            report.failures.push(format!("max D = {} but C = {c}", brute.max_d));
        }
    } else {
        report.notes.push(format!("window {window} is below C+1 = {}; agreement is not asserted", c + 1));
    }
    if len_cap < usize::MAX {
        report.notes.push(format!("sets are limited to {len_cap} elements"));
    }
    report.notes.push("sets with higher-degree elements are covered only through their truncation to the window".into());

    let (gn, _, lambdas) = paper_gn(&BigUint::from(r), m, u64::from(n), limits)?;
    let mu = mu_sequence(&gn, m, n, limits)?;
    let big_l = lambdas.last().cloned().unwrap_or_default();
    let g_at_l = if big_l.is_zero() { BigUint::zero() } else { gn.eval(&big_l, limits)? };
    let d_mu = d_value(mu.elements(), m, n, r);
    report.finding("D_mu", d_mu);
    report.finding("g_n(L)+1", &g_at_l + 1u32);
    if BigUint::from(d_mu) != BigUint::from(c) {
        report.failures.push(format!("D of the greedy sequence is {d_mu}, C = {c}"));
    }
    if r > 0 && g_at_l + 1u32 != BigUint::from(c) {
        report.failures.push(format!("g_n(L)+1 differs from C = {c}"));
    }
    if mu.max_degree() <= window && brute.max_d < d_mu {
        report.failures.push(format!("the greedy sequence reaches D = {d_mu} above the enumerated maximum"));
    }
    Ok(report.finish())
}

fn slice_subsets(m: usize, d: u64, limits: &Limits) -> Result<Vec<Monomial>> {
    let slice = degree_slice(m, d, limits)?;
    if slice.len() > MAX_SWEPT_SLICE {
        return Err(Error::EnumerationLimit { needed: format!("2^{}", slice.len()), limit: 1 << MAX_SWEPT_SLICE });
    }
    Ok(slice)
}

fn subset(slice: &[Monomial], mask: u64) -> Vec<Monomial> {
    slice.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, x)| x.clone()).collect()
}

/// Condition (*) forces `H_M(d+1) < H_M(d)^⟨d⟩`, for every subset `M` of the
/// degree-`d` slice. Also counts subsets where (*) fails yet the growth is strict.
pub fn exhaustive_strict_macaulay(m: usize, d: u64, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("condition (*) implies strict Macaulay growth", format!("m={m} d={d}"));
    let slice = slice_subsets(m, d, limits)?;
    let rows: Vec<Result<(bool, bool, Option<String>)>> = (0..1u64 << slice.len())
        .into_par_iter()
        .map(|mask| {
            let set = StaircaseSet::new(m, subset(&slice, mask))?;
            let star = condition_star(&set, d).is_some();
            let (next, bound) = growth_gap(&set, d, limits)?;
            let strict = next < bound;
            let failure = (star && !strict).then(|| format!("{set}: H(d+1) = {next}, H(d)^<d> = {bound}"));
            Ok((star, strict, failure))
        })
        .collect();
    let (mut star_true, mut converse) = (0u64, 0u64);
    for row in rows {
        let (star, strict, failure) = row?;
        report.instances_checked += 1;
        star_true += u64::from(star);
        converse += u64::from(!star && strict);
        report.failures.extend(failure);
    }
    report.finding("star_holds", star_true);
    report.finding("strict_without_star", converse);
    Ok(report.finish())
}

/// For subsets `M` of the degree-`d` slice of ℕ²: `H_M(d+1) = H_M(d)^⟨d⟩`
/// exactly when `M` is a block.
pub fn exhaustive_block_converse_m2(d: u64, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("equality in Macaulay growth iff block (m=2)", format!("d={d}"));
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let slice = slice_subsets(2, d, limits)?;
    let mut blocks = 0u64;
    for mask in 0..1u64 << slice.len() {
        let set = StaircaseSet::new(2, subset(&slice, mask))?;
        let (next, bound) = growth_gap(&set, d, limits)?;
        let block = is_block_m2(&set);
        blocks += u64::from(block);
        report.instances_checked += 1;
        if (next == bound) != block {
            report.failures.push(format!("{set}: block = {block}, H(d+1) = {next}, H(d)^<d> = {bound}"));
        }
    }
    report.finding("blocks", blocks);
    Ok(report.finish())
}

/// Sperner's lemma: `A > 0`, `A = B + C`, `C^(m-1) < A^(m) - A` imply
/// `B^(m) + C^(m-1) >= A^(m)`, for all `A <= range`.
pub fn check_sperner_lemma(m: usize, range: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("Sperner's inequality for Macaulay's function", format!("m={m} A<={range}"));
    if m < 2 {
        return Err(Error::InvalidArgument("m must be at least 2".into()));
    }
    let grow = |a: u64, k: usize| -> Result<Option<BigUint>> {
        match macaulay_growth_any(&BigUint::from(a), k) {
            Ok(v) => Ok(Some(v)),
            Err(Error::NoAdmissibleDegree { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    };
    let mut undefined = 0u64;
    for a in 1..=range {
        let a_m = grow(a, m)?.expect("a^(m) is defined for m >= 2");
        for c in 0..=a {
            let b = a - c;
            let Some(c_m1) = grow(c, m - 1)? else {
                undefined += 1;
                report.skipped += 1;
                continue;
            };
            if c_m1 >= &a_m - a {
                report.skipped += 1;
                continue;
            }
            report.instances_checked += 1;
            let b_m = grow(b, m)?.expect("b^(m) is defined for m >= 2");
            if &b_m + &c_m1 < a_m {
                report.failures.push(format!("A={a} B={b} C={c}: {b_m} + {c_m1} < {a_m}"));
            }
        }
    }
    if undefined > 0 {
        report.notes.push(format!("{undefined} triples skipped because C^(m-1) is undefined"));
    }
    Ok(report.finish())
}

fn shadow_sum(values: &[u64], d: u64) -> Result<BigUint> {
    values.iter().try_fold(BigUint::zero(), |acc, &v| Ok(acc + upper_shadow(&BigUint::from(v), d)?))
}

// One instance of the technical lemma; `None` when the hypotheses fail.
fn techlem1_instance(a: &[u64], b: &[u64], d: u64, full: u64) -> Result<Option<bool>> {
    let valid = !b.is_empty()
        && b[0] <= full
        && b[1..].iter().all(|&x| x == full)
        && a.iter().all(|&x| x <= full)
        && a.iter().sum::<u64>() <= b.iter().sum::<u64>();
    if !valid {
        return Ok(None);
    }
    Ok(Some(shadow_sum(a, d)? <= shadow_sum(b, d)?))
}

/// The technical lemma on sums of `·^⟨d⟩`: exhaustively for `t, s <= range`,
/// then on `samples` random valid instances with `m <= 3`, `d <= 4`.
pub fn check_techlem1(m: usize, d: u64, range: usize, samples: u64, seed: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(
        "sums of upper shadows are monotone",
        format!("m={m} d={d} t,s<={range}; {samples} random instances with m<=3, d<=4, seed {seed}"),
    );
    if m == 0 || d == 0 {
        return Err(Error::InvalidArgument("m and d must be positive".into()));
    }
    let full = slice_size(m, d).to_u64().ok_or_else(|| Error::exceeds("slice size", 64))?;
    let mut a_seqs = vec![vec![]];
    for t in 1..=range {
        a_seqs.extend(nondecreasing(t, full));
    }
    for a in &a_seqs {
        for s in 1..=range {
            for b1 in 0..=full {
                let mut b = vec![full; s];
                b[0] = b1;
                match techlem1_instance(a, &b, d, full)? {
                    None => report.skipped += 1,
                    Some(ok) => {
                        report.instances_checked += 1;
                        if !ok {
                            report.failures.push(format!("m={m} d={d} a={a:?} b={b:?}"));
                        }
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drawn = 0u64;
    while drawn < samples {
        let m = rng.gen_range(1..=3usize);
        let d = rng.gen_range(1..=4u64);
        let full = slice_size(m, d).to_u64().expect("small slice");
        let s = rng.gen_range(1..=5usize);
        let mut b = vec![full; s];
        b[0] = rng.gen_range(0..=full);
        let t = rng.gen_range(1..=6usize);
        let mut a: Vec<u64> = (0..t).map(|_| rng.gen_range(0..=full)).collect();
        let cap: u64 = b.iter().sum();
        // Shrink the a's until their sum fits under the b's.
        let mut k = 0;
        while a.iter().sum::<u64>() > cap {
            let excess = a.iter().sum::<u64>() - cap;
            a[k] -= a[k].min(excess);
            k += 1;
        }
        if let Some(ok) = techlem1_instance(&a, &b, d, full)? {
            drawn += 1;
            report.instances_checked += 1;
            if !ok {
                report.failures.push(format!("m={m} d={d} a={a:?} b={b:?}"));
            }
        }
    }
    Ok(report.finish())
}

fn nondecreasing(len: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(cur: &mut Vec<u64>, len: usize, from: u64, max: u64, out: &mut Vec<Vec<u64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in from..=max {
            cur.push(v);
            go(cur, len, v, max, out);
            cur.pop();
        }
    }
    go(&mut cur, len, 0, max, &mut out);
    out
}

/// `H^i_ᾱ(d) <= H^i_μ̄(d)` for all `i` and all `d <= deg μ_L`.
/// Returns the first violation as `(i, d)`.
pub fn hs_dominated(alpha: &AntichainSequence, mu: &AntichainSequence, limits: &Limits) -> Result<Option<(usize, u64)>> {
    let top = mu.elements().last().map(IndexedMonomial::degree).unwrap_or(0);
    let longest = alpha.len().max(mu.len());
    for i in 0..=longest {
        for d in 0..=top {
            if hs_seq(alpha, i, d, limits)? > hs_seq(mu, i, d, limits)? {
                return Ok(Some((i, d)));
            }
        }
    }
    Ok(None)
}

/// Pointwise domination of Hilbert-Samuel functions by μ̄, over antichain
/// sets with `D_{r,ᾱ} >= g_n(𝔏) + 1` taken from the enumeration inside
/// `Γ(C)`, each ordered ascending by `⊴`. At most `samples` sets are checked.
pub fn verify_hs_domination(r: u64, m: usize, n: u32, samples: usize, limits: &Limits) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(
        "Hilbert-Samuel functions are dominated by the greedy sequence",
        format!("r={r} m={m} n={n} samples<={samples}"),
    );
    let (gn, _, lambdas) = paper_gn(&BigUint::from(r), m, u64::from(n), limits)?;
    let mu = mu_sequence(&gn, m, n, limits)?;
    let big_l = lambdas.last().cloned().unwrap_or_default();
    let threshold = if big_l.is_zero() { 1 } else { gn.eval(&big_l, limits)?.to_u64().unwrap_or(u64::MAX) + 1 };
    let window = threshold.saturating_sub(1).max(r);
    let brute = enumerate_d(r, m, n, window, usize::MAX, DEFAULT_SET_BUDGET, samples, limits)?;
    report.skipped = brute.histogram.range(..threshold).map(|(_, c)| c).sum();
    report.finding("threshold", threshold);
    for set in brute.maximizers.iter().filter(|_| brute.max_d >= threshold) {
        let alpha = crate::lattice::validate_antichain(m, n, set.clone())?.sorted_orderly();
        report.instances_checked += 1;
        if let Some((i, d)) = hs_dominated(&alpha, &mu, limits)? {
            report.failures.push(format!("{} at i={i} d={d}", show(alpha.elements())));
        }
    }
    if brute.max_d < threshold {
        report.notes.push("no enumerated set meets the hypothesis".into());
    }
    Ok(report.finish())
}

/// (♯') at `p` straight from the definition: for each obligation, every
/// ordering of every subset of `Γ_ᾱ(p)` of the right index is tried as a chain.
/// Exponential; meant for sets of at most eight elements per index.
pub fn naive_sharp_prime(elements: &[IndexedMonomial], m: usize, p: u64) -> bool {
    let low: Vec<&IndexedMonomial> = elements.iter().filter(|a| a.degree() <= p).collect();
    for a in &low {
        for b in &low {
            if a.index() != b.index() || a == b {
                continue;
            }
            let tau = a.xi().lub(b.xi()).expect("same dimension");
            if tau.degree() <= p {
                continue;
            }
            let below = |x: &Monomial, k: usize| x.leq(&tau).unwrap_or(false) && x.entries()[k] < tau.entries()[k];
            let group: Vec<&Monomial> =
                low.iter().filter(|c| c.index() == a.index() && c.xi().leq(&tau).unwrap_or(false)).map(|c| c.xi()).collect();
            for i in 0..m {
                for j in i + 1..m {
                    let has = |k: usize| low.iter().any(|c| c.index() == a.index() && below(c.xi(), k));
                    if !has(i) || !has(j) {
                        continue;
                    }
                    if !some_chain(&group, &mut Vec::new(), &mut vec![false; group.len()], i, j, &below, p) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn some_chain(
    group: &[&Monomial],
    path: &mut Vec<usize>,
    used: &mut Vec<bool>,
    i: usize,
    j: usize,
    below: &dyn Fn(&Monomial, usize) -> bool,
    p: u64,
) -> bool {
    if let Some(&last) = path.last() {
        if below(group[last], j) {
            return true;
        }
    }
    for v in 0..group.len() {
        if used[v] {
            continue;
        }
        let fits = match path.last() {
            None => below(group[v], i),
            Some(&u) => group[u].lub(group[v]).expect("same dimension").degree() <= p,
        };
        if !fits {
            continue;
        }
        used[v] = true;
        path.push(v);
        if some_chain(group, path, used, i, j, below, p) {
            return true;
        }
        path.pop();
        used[v] = false;
    }
    false
}

/// `D_{r,ᾱ}` through [`naive_sharp_prime`].
pub fn naive_d(elements: &[IndexedMonomial], m: usize, r: u64) -> u64 {
    let h = elements.iter().map(IndexedMonomial::degree).max().unwrap_or(0).max(r);
    (r..=2 * h).find(|&p| naive_sharp_prime(elements, m, p)).unwrap_or(2 * h + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::GrowthFunction;

    fn im(v: &[u32], i: u32) -> IndexedMonomial {
        IndexedMonomial::of(v, i)
    }

    #[test]
    fn brute_small_cases() {
        let limits = Limits::default();
        for (r, m, n, window, c) in [(1, 2, 1, 3, 2), (2, 2, 1, 5, 4), (1, 2, 2, 5, 4), (1, 3, 1, 4, 3)] {
            let report = brute_max_d(r, m, n, window, usize::MAX, &limits).unwrap();
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.findings["max_D"], c.to_string());
        }
        let report = brute_max_d(0, 2, 2, 2, usize::MAX, &limits).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.findings["max_D"], "0");
    }

    #[test]
    fn naive_matches_graph_search() {
        let sets = [
            vec![im(&[2, 0], 1), im(&[1, 1], 1), im(&[0, 2], 1)],
            vec![im(&[3, 0], 1), im(&[0, 3], 1)],
            vec![im(&[2, 0, 0], 1), im(&[0, 2, 0], 1), im(&[0, 0, 2], 1), im(&[1, 1, 1], 2)],
            vec![im(&[3, 0, 0], 1), im(&[1, 1, 0], 1), im(&[0, 0, 4], 1)],
        ];
        for set in sets {
            let m = set[0].dim();
            for r in 0..=4 {
                assert_eq!(naive_d(&set, m, r), d_value(&set, m, 2, r), "{set:?} r={r}");
            }
        }
    }

    #[test]
    fn macaulay_sweeps() {
        let limits = Limits::default();
        let report = exhaustive_strict_macaulay(3, 3, &limits).unwrap();
        assert!(report.passed());
        assert_eq!(report.instances_checked, 1024);
        for d in 1..=5 {
            assert!(exhaustive_block_converse_m2(d, &limits).unwrap().passed());
        }
    }

    #[test]
    fn lemma_sweeps() {
        assert!(check_sperner_lemma(2, 60).unwrap().passed());
        assert!(check_sperner_lemma(3, 40).unwrap().passed());
        let report = check_techlem1(2, 2, 3, 500, 7).unwrap();
        assert!(report.passed());
        assert!(report.instances_checked >= 500);
    }

    #[test]
    fn domination_example() {
        let limits = Limits::default();
        let alpha = crate::lattice::validate_antichain(2, 1, vec![im(&[2, 0], 1), im(&[0, 2], 1)]).unwrap();
        assert_eq!(d_value(alpha.elements(), 2, 1, 2), 4);
        let mu = mu_sequence(&GrowthFunction::paper_g(2u32), 2, 1, &limits).unwrap();
        assert_eq!(hs_dominated(&alpha, &mu, &limits).unwrap(), None);
        assert!(verify_hs_domination(2, 2, 1, 50, &limits).unwrap().passed());
    }
}
