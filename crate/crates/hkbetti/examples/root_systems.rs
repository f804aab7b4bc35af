//! Root data of so(b2 + 2): positive roots, the Weyl vector, dominance, and
//! Weyl orbits of weights.
//!
//! Run with `cargo run --example root_systems`.

use hkbetti::{pairing, RootSystem, Weight};

fn main() -> hkbetti::Result<()> {
    for b2 in [3u32, 4, 22] {
        let rs = RootSystem::new(b2)?;
        println!(
            "b2 = {b2}: type {:?}_{}, {} positive roots, rho = {}",
            rs.series(),
            rs.rank(),
            rs.positive_roots().len(),
            rs.rho()
        );
    }

    let rs = RootSystem::new(3)?;
    let mu = Weight::from_integers(&[1, 0]);
    println!();
    println!("standard module of so(5), highest weight {mu}");
    println!("  dominant: {}", rs.is_dominant(&mu)?);
    println!("  dim V_mu = {}", rs.weyl_dimension(&mu)?);
    println!("  (rho, mu) = {}", pairing(rs.rho(), &mu)?);
    println!("  Weyl orbit:");
    for theta in rs.weyl_orbit(&mu)? {
        println!("    {theta}  ->  dominant conjugate {}", rs.dominant_conjugate(&theta)?);
    }

    // spin weight: all coordinates are half-integers
    let spin = Weight::from_doubled(vec![1, 1])?;
    println!();
    println!("spin module {spin}: parity {:?}, dim {}", spin.parity(), rs.weyl_dimension(&spin)?);
    Ok(())
}
