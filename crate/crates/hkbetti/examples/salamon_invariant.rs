//! The invariant s(W) computed three independent ways: from the graded
//! profile, from the closed form, and from the q-character specialization.
//!
//! Run with `cargo run --example salamon_invariant`.

use hkbetti::ratio::ratio_string;
use hkbetti::{
    freudenthal, graded_profile, s_closed, s_of_profile, s_series, s_via_qchar, RootSystem,
    Weight,
};

fn main() -> hkbetti::Result<()> {
    let b2 = 5;
    let rs = RootSystem::new(b2)?;

    println!("s(V_mu) over so({}) three ways:", b2 + 2);
    println!("{:>14}  {:>12} {:>12} {:>12}", "mu", "profile", "closed", "q-char");
    for mu in rs.dominant_weights_up_to_sum(2 * 3) {
        let profile = graded_profile(&rs, &freudenthal(&rs, &mu)?)?;
        let by_profile = s_of_profile(&profile)?;
        let by_closed = s_closed(&mu, b2)?;
        let by_qchar = s_via_qchar(&mu, b2)?;
        assert_eq!(by_profile, by_closed);
        assert_eq!(by_profile, by_qchar);
        println!(
            "{:>14}  {:>12} {:>12} {:>12}",
            mu.to_string(),
            ratio_string(&by_profile),
            ratio_string(&by_closed),
            ratio_string(&by_qchar)
        );
    }

    // the generating series behind s: S(W) = s0 + s2 t^2 + s4 t^4 + ...,
    // with s = 2 s2 / s0
    let standard = graded_profile(&rs, &freudenthal(&rs, &Weight::from_integers(&[1, 0, 0]))?)?;
    let series = s_series(&standard, 6)?;
    println!();
    println!("series of the standard profile: {}", series.to_json());
    println!("2 s2 / s0 = {}", ratio_string(&series.s_value()?));
    Ok(())
}
