//! Full check of a decomposition file: Salamon's relation, the dominance
//! condition, and the Betti numbers it induces.
//!
//! Run with `cargo run --example k3_decomposition`.

use hkbetti::cli::decomposition_from_json;
use hkbetti::ratio::ratio_string;
use hkbetti::{betti_numbers, conjecture_check, salamon_check};

fn main() -> hkbetti::Result<()> {
    for name in ["k3.json", "k3_hilb2.json"] {
        let path = format!("{}/examples/data/{name}", env!("CARGO_MANIFEST_DIR"));
        let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        let d = decomposition_from_json(&value)?;

        println!("{name}: n = {}, b2 = {}", d.n(), d.b2());
        if let Some(warning) = d.verbitsky_lint() {
            println!("  warning: {warning}");
        }

        let verdict = salamon_check(&d)?;
        println!(
            "  Salamon relation: s = {} vs n/3 = {}  ->  {}",
            ratio_string(&verdict.lhs),
            ratio_string(&verdict.rhs),
            if verdict.pass { "PASS" } else { "FAIL" }
        );

        let report = conjecture_check(&d);
        for term in &report.terms {
            println!(
                "  dominance: {} has coordinate sum {} <= n: {}",
                term.mu,
                ratio_string(&term.sum),
                term.pass
            );
        }

        let betti = betti_numbers(&d)?;
        let rendered: Vec<String> = betti.iter().map(|b| b.to_string()).collect();
        println!("  Betti numbers: ({})", rendered.join(", "));
        println!();
    }
    Ok(())
}
