//! `D_{r,ᾱ}` for a few antichain sequences, with the chains that discharge
//! every obligation and the obligation that fails one degree lower.
//!
//! `cargo run --example dr_certificate`

use prolongation_bounds::consistency::{check_principal_criterion, d_r};
use prolongation_bounds::lattice::{validate_antichain, IndexedMonomial};

fn main() {
    let cases: Vec<(&str, usize, u32, Vec<IndexedMonomial>, u64)> = vec![
        (
            "three points of degree 2",
            2,
            1,
            vec![IndexedMonomial::of(&[2, 0], 1), IndexedMonomial::of(&[1, 1], 1), IndexedMonomial::of(&[0, 2], 1)],
            2,
        ),
        ("two axis points", 2, 1, vec![IndexedMonomial::of(&[3, 0], 1), IndexedMonomial::of(&[0, 3], 1)], 3),
        (
            "two copies",
            3,
            2,
            vec![
                IndexedMonomial::of(&[2, 0, 0], 1),
                IndexedMonomial::of(&[0, 2, 0], 1),
                IndexedMonomial::of(&[1, 0, 1], 2),
                IndexedMonomial::of(&[0, 1, 1], 2),
            ],
            2,
        ),
    ];
    for (name, m, n, elements, r) in cases {
        let seq = validate_antichain(m, n, elements).expect("antichain");
        let result = d_r(&seq, r);
        println!("{name}, r = {r}: D = {}", result.value);
        println!("  principal criterion at r: {}", check_principal_criterion(&seq, r).expect("degrees within r"));
        for ob in &result.obligations {
            let chain: Vec<String> = ob.chain.iter().map(|x| x.xi().to_string()).collect();
            println!("  tau = {} (i={}, j={}): {}", ob.tau, ob.i, ob.j, chain.join(" - "));
        }
        if let Some(f) = &result.failure_below {
            println!("  at p = {} the pair (i={}, j={}) under {} has no chain", f.p, f.i, f.j, f.tau);
        }
    }
}
