//! `C_{r,m}^n` next to the earlier bounds it improves on.
//!
//! `cargo run --example legacy_comparison`

use num_bigint::BigUint;
use prolongation_bounds::bounds::{an_upper_bound, c_bound, legacy_pierce_bound, leov_ackermann_bound, leov_recursive_bound_m2, BoundReport};
use prolongation_bounds::{Limits, Result};

fn cell(result: Result<BoundReport>) -> String {
    match result {
        Ok(rep) => {
            let digits = rep.value.to_string();
            if digits.len() > 20 {
                format!("~10^{}", digits.len() - 1)
            } else {
                digits
            }
        }
        Err(_) => ">LIMIT".into(),
    }
}

fn main() {
    let limits = Limits::from_env();
    println!("| r | m | n | C | A_n(m,r) | Pierce | b_n recursion | Ackermann (earlier) |");
    println!("|---|---|---|---|---|---|---|---|");
    for (r, m, n) in [(1u32, 1usize, 1u32), (1, 2, 1), (2, 2, 1), (3, 2, 1), (1, 2, 2), (2, 2, 2), (1, 3, 1), (2, 3, 1)] {
        let big = BigUint::from(r);
        let leov = if m == 2 { cell(leov_recursive_bound_m2(&big, n, &limits)) } else { "-".into() };
        println!(
            "| {r} | {m} | {n} | {} | {} | {} | {leov} | {} |",
            cell(c_bound(&big, m, u64::from(n), &limits)),
            cell(an_upper_bound(&big, m, n, &limits)),
            cell(legacy_pierce_bound(&big, m, n, &limits)),
            cell(leov_ackermann_bound(&big, m, n, &limits)),
        );
    }
}
