//! d-binomial representations and the two Macaulay operators, with the
//! enumerated shadow of a segment as a cross-check.
//!
//! `cargo run --example macaulay_growth`

use num_bigint::BigUint;
use prolongation_bounds::macaulay::{d_binomial_rep, macaulay_growth, macaulay_growth_enumerated, segment, upper_shadow};
use prolongation_bounds::Limits;

fn main() {
    let limits = Limits::default();
    for (a, d) in [(7u32, 3u64), (10, 2), (100, 4), (1, 5)] {
        let a = BigUint::from(a);
        let rep = d_binomial_rep(&a, d).expect("positive a");
        let terms: Vec<String> = rep.terms().map(|(k, i)| format!("C({k},{i})")).collect();
        println!("{a} = {} ; {a}^<{d}> = {}", terms.join(" + "), upper_shadow(&a, d).expect("defined"));
    }
    println!();
    for m in 2..=4 {
        for d in 1..=3u64 {
            let a = BigUint::from(2u32);
            let dual = macaulay_growth(&a, m, d).expect("a fits the slice");
            let direct = macaulay_growth_enumerated(&a, m, d, &limits).expect("small slice");
            let seg: Vec<String> = segment(&a, d, m, &limits).expect("small slice").iter().map(ToString::to_string).collect();
            println!("m={m} d={d}: N = {{{}}}, a = 2, a^({m}) = {dual} (enumerated {direct})", seg.join(", "));
        }
    }
}
