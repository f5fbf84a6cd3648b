//! The greedy antichain sequence μ̄, the Ψ recursion and `𝔏_{f,m}^n`.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::growth::GrowthFunction;
use crate::error::{Error, Result};
use crate::lattice::{degree_slice, validate_antichain, AntichainSequence, IndexedMonomial, Monomial};
use crate::limits::Limits;

fn entry(v: &BigUint, what: &str, limits: &Limits) -> Result<u32> {
    v.to_u32().ok_or_else(|| Error::exceeds(format!("{what} = {v} as a lattice entry"), limits.bit_cap.min(32)))
}

fn gap(f: &GrowthFunction, i: &BigUint, limits: &Limits) -> Result<BigUint> {
    let a = f.eval(i, limits)?;
    let b = f.eval(&(i + 1u32), limits)?;
    if b < a {
        return Err(Error::NotMonotone(i.to_usize().unwrap_or(usize::MAX)));
    }
    Ok(b - a)
}

/// The successor of `prev` under rule (i) or (ii), or `None` when `prev`
/// has the terminal shape `(0,...,0,u_m)`.
pub fn mu_next(prev: &Monomial, gap: u64) -> Result<Option<Monomial>> {
    let m = prev.dim();
    let u = prev.entries();
    let Some(s) = u[..m - 1].iter().rposition(|&x| x > 0) else {
        return Ok(None);
    };
    let overflow = || Error::exceeds(format!("successor of {prev}"), 32);
    let fresh = u64::from(u[m - 1])
        .checked_add(gap)
        .and_then(|v| v.checked_add(1))
        .and_then(|v| u32::try_from(v).ok())
        .ok_or_else(overflow)?;
    let mut next = u.to_vec();
    next[s] -= 1;
    if s == m - 2 {
        next[m - 1] = fresh;
    } else {
        next[s + 1] = fresh;
        next[m - 1] = 0;
    }
    Monomial::new(next).map(Some)
}

/// μ̄ built copy by copy: copy `j` lives at index `n-j+1` and follows
/// `f_j(i) = f(i + L_1 + ... + L_{j-1})`.
pub fn mu_sequence(f: &GrowthFunction, m: usize, n: u32, limits: &Limits) -> Result<AntichainSequence> {
    if m == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut elements = Vec::new();
    let mut offset = BigUint::zero();
    for j in 1..=n {
        let fj = f.clone().shifted(offset.clone());
        let index = n - j + 1;
        let first = entry(&fj.eval(&BigUint::from(1u32), limits)?, "f(1)", limits)?;
        let mut x = Monomial::first_axis(m, first)?;
        let mut i = BigUint::from(1u32);
        let mut len = 1u64;
        loop {
            elements.push(IndexedMonomial::new(x.clone(), index)?);
            limits.check_count(&BigUint::from(elements.len()))?;
            let g = gap(&fj, &i, limits)?;
            let g = g.to_u64().ok_or_else(|| Error::exceeds(format!("gap {g}"), 64))?;
            match mu_next(&x, g)? {
                Some(next) => x = next,
                None => break,
            }
            i += 1u32;
            len += 1;
        }
        offset += len;
    }
    Ok(AntichainSequence::from_parts_unchecked(m, n, elements))
}

/// μ̄ by the defining greedy rule over ℕ^m×𝔫: at step `i` take the
/// ⊴-largest element of degree `f(i)` above no earlier element.
pub fn mu_sequence_greedy(f: &GrowthFunction, m: usize, n: u32, limits: &Limits) -> Result<AntichainSequence> {
    if m == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut elements: Vec<IndexedMonomial> = Vec::new();
    let mut i = BigUint::from(1u32);
    loop {
        let d = f.eval(&i, limits)?;
        let d = d.to_u64().ok_or_else(|| Error::exceeds(format!("f({i})"), 64))?;
        let slice = degree_slice(m, d, limits)?;
        let pick = (1..=n).rev().find_map(|index| {
            slice
                .iter()
                .find(|xi| !elements.iter().any(|e| e.index() == index && e.xi().le_unchecked(xi)))
                .map(|xi| IndexedMonomial::new(xi.clone(), index).expect("index is positive"))
        });
        match pick {
            Some(a) => elements.push(a),
            None => break,
        }
        limits.check_count(&BigUint::from(elements.len()))?;
        i += 1u32;
    }
    validate_antichain(m, n, elements)
}

/// `Ψ_{f,m}(1, (f(1),0,...,0))`, the length of μ̄ in one copy.
///
/// Runs of rule (ii) are applied in one step: `k = u_{m-1}` applications
/// add `f(i+k) - f(i) + k` to `u_m`. For `m = 3` and unit slope, a rule (i)
/// step followed by its run of rule (ii) maps `u_3 ↦ 2u_3 + 4`,
/// `i ↦ i + u_3 + 3`, which is summed in closed form.
pub fn psi(f: &GrowthFunction, m: usize, limits: &Limits) -> Result<BigUint> {
    psi_with(f, m, limits, true)
}

/// `psi` without the closed-form summation; every rule (i) step is taken.
pub fn psi_stepwise(f: &GrowthFunction, m: usize, limits: &Limits) -> Result<BigUint> {
    psi_with(f, m, limits, false)
}

fn psi_with(f: &GrowthFunction, m: usize, limits: &Limits, accelerate: bool) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut i = BigUint::from(1u32);
    let mut u = vec![BigUint::zero(); m];
    u[0] = f.eval(&i, limits)?;
    let unit_from = if accelerate && m == 3 { f.unit_slope_from() } else { None };
    let mut steps = 0u64;
    loop {
        steps += 1;
        if steps > limits.step_budget {
            return Err(Error::BudgetExceeded { context: "the Ψ recursion".into(), budget: limits.step_budget });
        }
        let Some(s) = u[..m - 1].iter().rposition(|x| !x.is_zero()) else {
            return Ok(i);
        };
        if s == m - 2 {
            let k = std::mem::take(&mut u[m - 2]);
            let next = &i + &k;
            let rise = f.eval(&next, limits)? - f.eval(&i, limits)?;
            u[m - 1] = limits.check(&u[m - 1] + rise + &k, || "u_m in the Ψ recursion".into())?;
            i = next;
            continue;
        }
        if let Some(i0) = &unit_from {
            if s == 0 && &i >= i0 {
                let t = u[0].to_u64().ok_or_else(|| Error::exceeds("2^u_1 in the Ψ recursion", limits.bit_cap))?;
                let c = &u[2] + 4u32;
                limits.check_bits(c.bits().saturating_add(t), || "u_3 in the Ψ recursion".into())?;
                let grown = (&c << t) - &c;
                return Ok(i + grown - t);
            }
        }
        let g = gap(f, &i, limits)?;
        let fresh = g + &u[m - 1] + 1u32;
        u[s] -= 1u32;
        u[s + 1] = fresh;
        u[m - 1] = BigUint::zero();
        i += 1u32;
    }
}

/// `𝔏_{f,m}^n` as `L_1 + ... + L_n` with `L_j = Ψ` for `f` shifted by
/// `L_1 + ... + L_{j-1}`. Returns the partial sums `Λ_1, ..., Λ_n`.
pub fn l_max_parts(f: &GrowthFunction, m: usize, n: u32, limits: &Limits) -> Result<Vec<BigUint>> {
    let mut sums = Vec::with_capacity(n as usize);
    let mut total = BigUint::zero();
    for _ in 0..n {
        total += psi(&f.clone().shifted(total.clone()), m, limits)?;
        sums.push(total.clone());
    }
    Ok(sums)
}

pub fn l_max(f: &GrowthFunction, m: usize, n: u32, limits: &Limits) -> Result<BigUint> {
    Ok(l_max_parts(f, m, n, limits)?.pop().unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::ackermann::ackermann;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn mono(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    fn entries(seq: &AntichainSequence) -> Vec<(Vec<u32>, u32)> {
        seq.elements().iter().map(|a| (a.xi().entries().to_vec(), a.index())).collect()
    }

    #[test]
    fn successor_rules() {
        assert_eq!(mu_next(&mono(&[2, 0]), 0).unwrap(), Some(mono(&[1, 1])));
        assert_eq!(mu_next(&mono(&[1, 1]), 1).unwrap(), Some(mono(&[0, 3])));
        assert_eq!(mu_next(&mono(&[0, 0, 4]), 3).unwrap(), None);
        assert_eq!(mu_next(&mono(&[2, 0, 5]), 1).unwrap(), Some(mono(&[1, 7, 0])));
        assert_eq!(mu_next(&mono(&[7]), 1).unwrap(), None);
    }

    #[test]
    fn worked_sequence_m2() {
        let limits = Limits::default();
        let seq = mu_sequence(&GrowthFunction::paper_g(2u32), 2, 1, &limits).unwrap();
        assert_eq!(entries(&seq), vec![(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 3], 1)]);
        let r = 6u32;
        let seq = mu_sequence(&GrowthFunction::paper_g(r), 2, 1, &limits).unwrap();
        assert_eq!(seq.len(), r as usize + 1);
        assert_eq!(seq.elements().last().unwrap().xi(), &mono(&[0, 2 * r - 1]));
    }

    #[test]
    fn degenerate_sequences() {
        let limits = Limits::default();
        let seq = mu_sequence(&GrowthFunction::paper_g(5u32), 1, 3, &limits).unwrap();
        assert_eq!(entries(&seq), vec![(vec![5], 3), (vec![5], 2), (vec![6], 1)]);
        let seq = mu_sequence(&GrowthFunction::paper_g(0u32), 2, 2, &limits).unwrap();
        assert_eq!(entries(&seq), vec![(vec![0, 0], 2), (vec![0, 0], 1)]);
    }

    #[test]
    fn greedy_matches_rules() {
        let limits = Limits::default();
        for m in 1..=3 {
            for r in 0..=3u32 {
                for n in 1..=2 {
                    let f = GrowthFunction::paper_g(r);
                    let a = mu_sequence(&f, m, n, &limits);
                    let b = mu_sequence_greedy(&f, m, n, &limits);
                    if let (Ok(a), Ok(b)) = (a, b) {
                        assert_eq!(a, b, "m={m} r={r} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn psi_values() {
        let limits = Limits::default();
        assert_eq!(psi(&GrowthFunction::paper_g(2u32), 2, &limits).unwrap(), big(3));
        assert_eq!(psi(&GrowthFunction::paper_g(9u32), 1, &limits).unwrap(), big(1));
        assert_eq!(psi(&GrowthFunction::arithmetic(3u32), 2, &limits).unwrap(), big(4));
        for m in 1..=3u64 {
            for s in 1..=5u64 {
                let expected = ackermann(m, &big(s - 1), &limits).unwrap() - s;
                let f = GrowthFunction::arithmetic(s);
                assert_eq!(psi(&f, m as usize, &limits).unwrap(), expected, "m={m} s={s}");
                assert_eq!(psi_stepwise(&f, m as usize, &limits).unwrap(), expected, "m={m} s={s}");
            }
        }
    }

    #[test]
    fn psi_matches_sequence_length() {
        let limits = Limits::default();
        for m in 1..=4 {
            for r in 0..=3u32 {
                let f = GrowthFunction::paper_g(r);
                let Ok(seq) = mu_sequence(&f, m, 1, &limits) else { continue };
                assert_eq!(psi(&f, m, &limits).unwrap(), big(seq.len() as u64), "m={m} r={r}");
            }
        }
    }

    #[test]
    fn l_max_values() {
        let limits = Limits::default();
        assert_eq!(l_max(&GrowthFunction::paper_g(2u32), 2, 1, &limits).unwrap(), big(3));
        for n in 1..=5 {
            assert_eq!(l_max(&GrowthFunction::doubling(3u32), 1, n, &limits).unwrap(), big(n as u64));
        }
    }
}
