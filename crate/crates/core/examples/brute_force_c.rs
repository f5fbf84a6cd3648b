//! Exhaustive search for the largest `D_{r,ᾱ}` over antichain sets, compared
//! with `C_{r,m}^n`.
//!
//! `cargo run --release --example brute_force_c -- [r m n window]`

use std::time::Instant;

use prolongation_bounds::oracle::brute_max_d;
use prolongation_bounds::Limits;

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let cases: Vec<(u64, usize, u32, u64)> = match args.as_slice() {
        [r, m, n, w] => vec![(*r, *m as usize, *n as u32, *w)],
        [] => vec![(1, 2, 1, 3), (2, 2, 1, 5), (1, 2, 2, 5), (1, 3, 1, 4), (2, 3, 1, 10)],
        _ => panic!("expected no arguments or: r m n window"),
    };
    let limits = Limits::from_env();
    for (r, m, n, window) in cases {
        let start = Instant::now();
        let report = brute_max_d(r, m, n, window, usize::MAX, &limits).expect("enumeration within budget");
        println!(
            "r={r} m={m} n={n} window={window}: max D = {}, C = {}, D(mu) = {}, classes = {}, {} ({:.2?})",
            report.findings["max_D"],
            report.findings["C"],
            report.findings["D_mu"],
            report.instances_checked,
            if report.passed() { "agree" } else { "DISAGREE" },
            start.elapsed()
        );
        for failure in &report.failures {
            println!("  {failure}");
        }
    }
}
