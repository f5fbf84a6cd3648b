//! Bounds derived from `C_{r,m}^n`: characteristic set orders, component
//! orders, the Nullstellensatz parameter `T` and the Bézout exponents.
//!
//! `cargo run --example application_bounds`

use num_bigint::BigUint;
use prolongation_bounds::bounds::{bezout_exponents, char_set_order_bound, component_order_bound, nullstellensatz_t};
use prolongation_bounds::Limits;

fn main() {
    let limits = Limits::from_env();
    for (r, m, n) in [(1u32, 1, 3), (2, 1, 2), (2, 2, 3), (2, 3, 1), (1, 4, 1)] {
        let r = BigUint::from(r);
        let order = char_set_order_bound(&r, m, n, &limits).expect("small").value;
        let comp = component_order_bound(&r, m, n, &limits).expect("small").value;
        let t = nullstellensatz_t(&r, m, n, &limits).expect("small");
        println!(
            "r={r} m={m} n={n}: order <= {order}, ord W <= {comp}, T = {}, alpha_(T-1) = {}, alpha_T = {}",
            t.value,
            t.get("alpha_{T-1}").expect("present"),
            t.get("alpha_T").expect("present")
        );
    }
    println!();
    for (n, r, m, dim) in [(1u64, 1u32, 1usize, 3u32), (2, 2, 1, 2), (1, 1, 2, 1), (2, 1, 2, 1)] {
        match bezout_exponents(n, &BigUint::from(r), m, &BigUint::from(dim), &limits) {
            Ok(rep) => println!("n={n} r={r} m={m} dim V={dim}: deg V exponent {}, deg W exponent {}", rep.value, rep.get("e_W").expect("present")),
            Err(e) => println!("n={n} r={r} m={m} dim V={dim}: {e}"),
        }
    }
}
