//! The greedy antichain sequence μ̄ built by its successor rules, checked
//! against the defining greedy search, and its length from the Ψ recursion.
//!
//! `cargo run --example mu_sequence -- [r m n]`

use num_bigint::BigUint;
use prolongation_bounds::bounds::{l_max, mu_sequence, mu_sequence_greedy, paper_gn, psi, GrowthFunction};
use prolongation_bounds::Limits;

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (r, m, n) = match args.as_slice() {
        [r, m, n] => (*r, *m as usize, *n as u32),
        [] => (2, 3, 1),
        _ => panic!("expected no arguments or: r m n"),
    };
    let limits = Limits::from_env();
    let (gn, rs, lambdas) = paper_gn(&BigUint::from(r), m, u64::from(n), &limits).expect("small parameters");
    let seq = mu_sequence(&gn, m, n, &limits).expect("sequence fits the limits");
    for (i, a) in seq.elements().iter().enumerate() {
        println!("mu_{} = {a}  (degree {})", i + 1, a.degree());
    }
    println!("length {}; copy lengths end at {:?}; r_j = {:?}", seq.len(), lambdas, rs);
    match mu_sequence_greedy(&gn, m, n, &limits) {
        Ok(greedy) => println!("greedy search agrees: {}", greedy.elements() == seq.elements()),
        Err(e) => println!("greedy search skipped: {e}"),
    }
    println!("L by the recursion: {}", l_max(&gn, m, n, &limits).expect("within limits"));

    println!("\nOne copy with f(i) = s + i - 1 has length A(m, s-1) - s:");
    for s in 1..=4u32 {
        let len = psi(&GrowthFunction::arithmetic(s), 2, &limits).expect("small");
        println!("  m = 2, s = {s}: {len}");
    }
}
