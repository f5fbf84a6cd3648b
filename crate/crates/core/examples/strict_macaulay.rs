//! Condition (*) and strict Macaulay growth: the two worked subsets, then
//! the exhaustive sweeps over whole degree slices.
//!
//! `cargo run --release --example strict_macaulay`

use prolongation_bounds::hilbert::{condition_star, growth_gap, StaircaseSet};
use prolongation_bounds::lattice::Monomial;
use prolongation_bounds::oracle::{exhaustive_block_converse_m2, exhaustive_strict_macaulay};
use prolongation_bounds::Limits;

fn mono(v: &[u32]) -> Monomial {
    Monomial::new(v.to_vec()).expect("nonempty")
}

fn main() {
    let limits = Limits::default();
    for (label, d, missing) in [("slice minus (1,1,0)", 2, [1, 1, 0]), ("slice minus (1,1,1)", 3, [1, 1, 1])] {
        let set = StaircaseSet::slice_without(3, d, &[mono(&missing)], &limits).expect("small slice");
        let (next, bound) = growth_gap(&set, d, &limits).expect("d >= 1");
        println!("{label}: (*) witness {:?}, H(d+1) = {next}, H(d)^<d> = {bound}", condition_star(&set, d));
    }
    println!();
    for (m, d) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
        let report = exhaustive_strict_macaulay(m, d, &limits).expect("slice within the sweep cap");
        println!(
            "m={m} d={d}: {} subsets, (*) holds on {}, strict without (*) on {}, failures {}",
            report.instances_checked,
            report.findings["star_holds"],
            report.findings["strict_without_star"],
            report.failures.len()
        );
    }
    for d in 1..=8 {
        let report = exhaustive_block_converse_m2(d, &limits).expect("d >= 1");
        println!("m=2 d={d}: equality exactly on the {} blocks: {}", report.findings["blocks"], report.passed());
    }
}
