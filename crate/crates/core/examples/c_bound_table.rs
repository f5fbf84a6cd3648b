//! A table of `C_{r,m}^n`, with both computation paths side by side where
//! the greedy path is affordable.
//!
//! `cargo run --example c_bound_table`

use num_bigint::BigUint;
use prolongation_bounds::bounds::table::{c_table, render, TableFormat};
use prolongation_bounds::bounds::{c_bound, c_bound_via_greedy};
use prolongation_bounds::Limits;

fn main() {
    let limits = Limits::from_env();
    let rows = c_table(&[0, 1, 2, 3, 4], &[1, 2, 3, 4, 5, 6], &[1, 2], &limits).expect("valid grid");
    print!("{}", render(&rows, TableFormat::Markdown));

    println!("\nAckermann recursion against the greedy sequence:");
    for m in 2..=3 {
        for r in 1..=3u64 {
            for n in 1..=3 {
                let r = BigUint::from(r);
                let a = c_bound(&r, m, n, &limits).expect("small case").value;
                match c_bound_via_greedy(&r, m, n, &limits) {
                    Ok(g) => {
                        let digits = a.to_string();
                        let shown = if digits.len() > 30 { format!("{}... ({} digits)", &digits[..12], digits.len()) } else { digits };
                        println!("  C({r},{m},{n}) = {shown}  greedy {}", if g.value == a { "agrees" } else { "DIFFERS" });
                    }
                    Err(e) => println!("  C({r},{m},{n}): greedy path unavailable: {e}"),
                }
            }
        }
    }
}
