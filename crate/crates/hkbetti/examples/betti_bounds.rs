//! The conditional bounds on the second Betti number of a hyper-Kähler
//! manifold of dimension 2n.
//!
//! Run with `cargo run --example betti_bounds`.

use hkbetti::ratio::ratio_string;
use hkbetti::{b2_bound, bound_table, odd_weight_floor};

fn main() -> hkbetti::Result<()> {
    println!("{:>4}  {:>10}  {:>9}  {:>4}", "n", "even-bound", "odd-worst", "max");
    for row in bound_table(10)? {
        println!(
            "{:>4}  {:>10}  {:>9}  {:>4}",
            row.n, row.even_bound, row.odd_worst, row.unconditional
        );
    }

    println!();
    println!("K3 surfaces (n = 1) saturate the even branch: b2 <= {}", b2_bound(1, None)?);
    println!(
        "generalized Kummer geometry has H^3 != 0, so b2 <= {} independent of n",
        b2_bound(5, Some(3))?
    );

    // a nonzero odd Betti number b_k forces a large weight into the
    // decomposition: coordinate sum at least n - k/2 + r/2
    let (n, k, r) = (4u64, 3u64, 11u64);
    println!(
        "with n = {n}, H^{k} != 0 and rank floor r = {r}: some term has coordinate sum >= {}",
        ratio_string(&odd_weight_floor(n, k, r)?)
    );
    Ok(())
}
