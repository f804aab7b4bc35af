//! The principal specialization f(q) of the Weyl character as an exact
//! Laurent polynomial, and the log-derivative route to s(V_mu).
//!
//! Run with `cargo run --example q_character`.

use hkbetti::ratio::ratio_string;
use hkbetti::{logf_dd_closed, logf_dd_from_poly, principal_character, RootSystem, Weight};

fn main() -> hkbetti::Result<()> {
    let rs = RootSystem::new(3)?;

    for mu in [
        Weight::from_integers(&[1, 0]),
        Weight::from_integers(&[1, 1]),
        Weight::from_doubled(vec![1, 1])?,
    ] {
        let f = principal_character(&rs, &mu)?;
        println!("mu = {mu}");
        println!("  f(q) = {}", f.to_json());
        println!("  f(1) = {} = dim V_mu = {}", f.eval_at_one(), rs.weyl_dimension(&mu)?);
        println!("  f'(1) = {} (vanishes by Weyl symmetry)", f.derivative_at_one());
        println!(
            "  (log f)''(1) = {} , closed form {}",
            ratio_string(&logf_dd_from_poly(&f)?),
            ratio_string(&logf_dd_closed(&mu, 3)?)
        );
        println!();
    }

    // the harmonic square at K3^[2] scale still fits the q-character caps
    let rs = RootSystem::new(23)?;
    let mu = Weight::row(rs.rank(), 2);
    let f = principal_character(&rs, &mu)?;
    println!("b2 = 23, mu = (2): f has {} terms and f(1) = {}", f.num_terms(), f.eval_at_one());
    Ok(())
}
