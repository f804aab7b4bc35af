//! Weight multiplicities by the Freudenthal recursion and the graded
//! dimension profile they induce.
//!
//! Run with `cargo run --example weight_multiplicities`.

use hkbetti::{freudenthal, graded_profile, RootSystem, Weight};

fn main() -> hkbetti::Result<()> {
    let rs = RootSystem::new(3)?;

    // the adjoint module of so(5): 8 roots plus a two-dimensional Cartan
    let mu = Weight::from_integers(&[1, 1]);
    let ws = freudenthal(&rs, &mu)?;
    println!("weight system of V_{mu} over so(5):");
    for (lambda, mult) in ws.entries() {
        println!("  {lambda}  x{mult}  (orbit size {})", rs.orbit_size(lambda)?);
    }
    println!("total dimension {}", ws.dimension(&rs)?);

    let profile = graded_profile(&rs, &ws)?;
    println!("graded profile (k -> dim):");
    for (k, dim) in profile.dims() {
        println!("  {k:>3}  {dim}");
    }

    // profiles multiply under tensor product by convolution
    let std = graded_profile(&rs, &freudenthal(&rs, &Weight::from_integers(&[1, 0]))?)?;
    let square = std.tensor(&std);
    println!();
    println!("profile of V_(1) ⊗ V_(1): {}", square.to_json());
    println!("Sym^2 of the standard profile: {}", std.sym_power(2)?.to_json());
    Ok(())
}
