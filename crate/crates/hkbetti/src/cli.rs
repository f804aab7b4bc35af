//! Command-line surface: parse decomposition files, run the checks, print
//! text or JSON reports.
//!
//! Exit codes: 0 for a passing check, 1 for a failing check, 2 for usage or
//! input errors.

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use std::io::Read;

use crate::error::{Error, Result};
use crate::llv::{
    b2_bound, bound_table, conjecture_check, salamon_check,
    s_closed, s_series, Decomposition, SalamonForm, SalamonVerdict,
};
use crate::qchar::{principal_character, s_via_qchar};
use crate::ratio::{half_string, parse_half, ratio_string};
use crate::reps::{
    freudenthal, graded_profile_with_ceiling, module_profile, parse_biguint,
    DEFAULT_ORBIT_CEILING,
};
use crate::roots::{RootSystem, Weight};

/// Environment variable overriding the default orbit enumeration ceiling.
pub const ORBIT_CEILING_ENV: &str = "HKBETTI_ORBIT_CEILING";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "hkbetti",
    version,
    about = "Exact weight-system computations for so(b2+2): dimensions, graded profiles, the Salamon invariant, and second Betti number bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of the irreducible module V_mu
    Dims {
        #[arg(long)]
        b2: u32,
        /// Comma-separated coordinates; fractions allowed ("1/2,1/2")
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Graded dimension profile k -> dim (V_mu)_k
    Profile {
        #[arg(long)]
        b2: u32,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        orbit_ceiling: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The invariant s(V_mu), optionally with its generating series and the
    /// q-character behind it
    S {
        #[arg(long)]
        b2: u32,
        #[arg(long)]
        mu: String,
        /// Also print the series coefficients s_0, s_2, ... through this order
        #[arg(long)]
        order: Option<usize>,
        /// Dump the principal specialization f(q) as an exponent map
        #[arg(long)]
        dump_f: bool,
        #[arg(long)]
        orbit_ceiling: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cross-check the three routes to s(V_mu) over a grid of weights
    Verify {
        #[arg(long, default_value_t = 3)]
        b2_min: u32,
        #[arg(long, default_value_t = 9)]
        b2_max: u32,
        /// Largest coordinate sum mu_0 + ... + |mu_r| in the grid
        #[arg(long, default_value_t = 4)]
        sum_max: u32,
        #[arg(long)]
        orbit_ceiling: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check Salamon's relation s(H*(X)) = n/3 for a decomposition file
    Salamon {
        /// Path to a decomposition JSON file, or "-" for stdin
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the dominance condition mu_0 + ... + |mu_r| <= n per term
    Conjecture {
        /// Path to a decomposition JSON file, or "-" for stdin
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Upper bound for b2 at a given n
    Bound {
        #[arg(long)]
        n: u64,
        /// Odd degree k with H^k(X) != 0, if any
        #[arg(long)]
        odd_k: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Bound table for n = 1 ..= n_max
    Table {
        #[arg(long)]
        n_max: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Entry point for the binary: parse `std::env::args` and run.
pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    run_from(args)
}

/// Parses and runs, returning the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version through the error path with
            // exit code 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(pass) => {
            if pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn orbit_ceiling(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var(ORBIT_CEILING_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_ORBIT_CEILING)
}

fn execute(command: Command) -> Result<bool> {
    match command {
        Command::Dims { b2, mu, format } => {
            let rs = RootSystem::new(b2)?;
            let mu = parse_mu(&mu, rs.rank())?;
            let dim = rs.weyl_dimension(&mu)?;
            match format {
                Format::Text => println!("{dim}"),
                Format::Json => print_json(&serde_json::json!({
                    "b2": b2,
                    "mu": weight_to_json(&mu),
                    "dim": crate::reps::biguint_json(&dim),
                })),
            }
            Ok(true)
        }
        Command::Profile { b2, mu, orbit_ceiling: flag, format } => {
            let rs = RootSystem::new(b2)?;
            let mu = parse_mu(&mu, rs.rank())?;
            let profile = module_profile(&rs, &mu, orbit_ceiling(flag))?;
            match format {
                Format::Text => {
                    for (k, d) in profile.dims() {
                        println!("{k:>6}  {d}");
                    }
                }
                Format::Json => print_json(&serde_json::json!({
                    "b2": b2,
                    "mu": weight_to_json(&mu),
                    "profile": profile.to_json(),
                })),
            }
            Ok(true)
        }
        Command::S { b2, mu, order, dump_f, orbit_ceiling: flag, format } => {
            let rs = RootSystem::new(b2)?;
            let mu = parse_mu(&mu, rs.rank())?;
            let s = s_closed(&mu, b2)?;
            let series = match order {
                Some(order) => {
                    let profile = module_profile(&rs, &mu, orbit_ceiling(flag))?;
                    Some(s_series(&profile, order)?)
                }
                None => None,
            };
            let f = if dump_f { Some(principal_character(&rs, &mu)?) } else { None };
            match format {
                Format::Text => {
                    println!("s = {}", ratio_string(&s));
                    if let Some(series) = &series {
                        for i in (0..=series.order()).step_by(2) {
                            println!("s{i} = {}", ratio_string(&series.coeff(i).unwrap()));
                        }
                    }
                    if let Some(f) = &f {
                        println!("f = {}", f.to_json());
                    }
                }
                Format::Json => {
                    let mut obj = serde_json::json!({
                        "b2": b2,
                        "mu": weight_to_json(&mu),
                        "s": ratio_string(&s),
                    });
                    if let Some(series) = &series {
                        obj["series"] = series.to_json();
                    }
                    if let Some(f) = &f {
                        obj["f"] = f.to_json();
                    }
                    print_json(&obj);
                }
            }
            Ok(true)
        }
        Command::Verify { b2_min, b2_max, sum_max, orbit_ceiling: flag, format } => {
            run_verify(b2_min, b2_max, sum_max, orbit_ceiling(flag), format)
        }
        Command::Salamon { input, format } => {
            let d = read_decomposition(&input)?;
            let verdict = salamon_check(&d)?;
            if let Some(warning) = d.verbitsky_lint() {
                eprintln!("warning: {warning}");
            }
            if verdict.mixed_parity {
                eprintln!("warning: decomposition mixes even and odd terms; s is taken over the full signed sum");
            }
            match format {
                Format::Text => print_salamon_text(&verdict),
                Format::Json => print_json(&salamon_json(&d, &verdict)),
            }
            Ok(verdict.pass)
        }
        Command::Conjecture { input, format } => {
            let d = read_decomposition(&input)?;
            let report = conjecture_check(&d);
            match format {
                Format::Text => {
                    for term in &report.terms {
                        println!(
                            "{}  sum = {}  n = {}  {}",
                            term.mu,
                            ratio_string(&term.sum),
                            report.n,
                            if term.pass { "PASS" } else { "FAIL" }
                        );
                    }
                    println!("overall: {}", if report.pass { "PASS" } else { "FAIL" });
                }
                Format::Json => {
                    let terms: Vec<serde_json::Value> = report
                        .terms
                        .iter()
                        .map(|t| {
                            serde_json::json!({
                                "mu": weight_to_json(&t.mu),
                                "sum": ratio_string(&t.sum),
                                "pass": t.pass,
                            })
                        })
                        .collect();
                    print_json(&serde_json::json!({
                        "command": "conjecture",
                        "n": report.n,
                        "b2": d.b2(),
                        "terms": terms,
                        "pass": report.pass,
                        "decomposition": decomposition_to_json(&d),
                    }));
                }
            }
            Ok(report.pass)
        }
        Command::Bound { n, odd_k, format } => {
            let bound = b2_bound(n, odd_k)?;
            match format {
                Format::Text => println!("b2 <= {bound}"),
                Format::Json => print_json(&serde_json::json!({
                    "n": n,
                    "odd_k": odd_k,
                    "bound": bound,
                })),
            }
            Ok(true)
        }
        Command::Table { n_max, format } => {
            let rows = bound_table(n_max)?;
            match format {
                Format::Text => {
                    println!("{:>4}  {:>10}  {:>9}  {:>4}", "n", "even-bound", "odd-worst", "max");
                    for row in &rows {
                        println!(
                            "{:>4}  {:>10}  {:>9}  {:>4}",
                            row.n, row.even_bound, row.odd_worst, row.unconditional
                        );
                    }
                }
                Format::Json => {
                    let rows: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "n": r.n,
                                "even_bound": r.even_bound,
                                "odd_worst": r.odd_worst,
                                "max": r.unconditional,
                            })
                        })
                        .collect();
                    print_json(&serde_json::Value::Array(rows));
                }
            }
            Ok(true)
        }
    }
}

fn run_verify(
    b2_min: u32,
    b2_max: u32,
    sum_max: u32,
    ceiling: u64,
    format: Format,
) -> Result<bool> {
    let mut checked = 0usize;
    let mut skipped = 0usize;
    let mut mismatches = 0usize;
    let mut rows = Vec::new();
    for b2 in b2_min..=b2_max {
        if b2 == 2 {
            continue;
        }
        let rs = RootSystem::new(b2)?;
        for mu in rs.dominant_weights_up_to_sum(2 * sum_max as i64) {
            let closed = s_closed(&mu, b2)?;
            let qchar = s_via_qchar(&mu, b2)?;
            let via_profile = match freudenthal(&rs, &mu)
                .and_then(|ws| graded_profile_with_ceiling(&rs, &ws, ceiling))
            {
                Ok(profile) => crate::llv::s_of_profile(&profile)?,
                Err(Error::OrbitCeiling { .. }) => {
                    skipped += 1;
                    if format == Format::Text {
                        println!("b2={b2} mu={mu} skipped (orbit ceiling)");
                    }
                    continue;
                }
                Err(e) => return Err(e),
            };
            checked += 1;
            let agree = closed == qchar && closed == via_profile;
            if !agree {
                mismatches += 1;
            }
            match format {
                Format::Text => {
                    if agree {
                        println!("b2={b2} mu={mu} s={} OK", ratio_string(&closed));
                    } else {
                        println!(
                            "b2={b2} mu={mu} MISMATCH closed={} qchar={} profile={}",
                            ratio_string(&closed),
                            ratio_string(&qchar),
                            ratio_string(&via_profile)
                        );
                    }
                }
                Format::Json => rows.push(serde_json::json!({
                    "b2": b2,
                    "mu": weight_to_json(&mu),
                    "s": ratio_string(&closed),
                    "agree": agree,
                })),
            }
        }
    }
    if checked == 0 {
        eprintln!("warning: empty verification grid");
    }
    match format {
        Format::Text => {
            println!("checked {checked} weights, {mismatches} mismatches, {skipped} skipped");
        }
        Format::Json => print_json(&serde_json::json!({
            "checked": checked,
            "mismatches": mismatches,
            "skipped": skipped,
            "weights": rows,
        })),
    }
    Ok(mismatches == 0)
}

fn print_salamon_text(verdict: &SalamonVerdict) {
    let status = if verdict.pass { "PASS" } else { "FAIL" };
    match verdict.form {
        SalamonForm::SInvariant => {
            if verdict.pass {
                println!("{status} s = {} = n/3", ratio_string(&verdict.lhs));
            } else {
                println!(
                    "{status} s = {} != n/3 = {}",
                    ratio_string(&verdict.lhs),
                    ratio_string(&verdict.rhs)
                );
            }
        }
        SalamonForm::RawSigned => {
            println!(
                "Salamon relation in s-form inapplicable (e(X)=0); raw signed check: sum (-1)^k k^2 b_(2n+k) = {} vs (n/3) e(X) = {} -> {status}",
                ratio_string(&verdict.lhs),
                ratio_string(&verdict.rhs)
            );
        }
    }
}

fn salamon_json(d: &Decomposition, verdict: &SalamonVerdict) -> serde_json::Value {
    serde_json::json!({
        "command": "salamon",
        "n": d.n(),
        "b2": d.b2(),
        "form": match verdict.form {
            SalamonForm::SInvariant => "s",
            SalamonForm::RawSigned => "raw",
        },
        "lhs": ratio_string(&verdict.lhs),
        "rhs": ratio_string(&verdict.rhs),
        "pass": verdict.pass,
        "mixed_parity": verdict.mixed_parity,
        "decomposition": decomposition_to_json(d),
    })
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("valid json"));
}

/// Parses `--mu` values like `1,0,0` or `1/2,1/2`, padding even weights with
/// trailing zeros up to `rank`.
pub fn parse_mu(input: &str, rank: usize) -> Result<Weight> {
    let coords2 = input
        .split(',')
        .filter(|part| !part.trim().is_empty())
        .map(parse_half)
        .collect::<Result<Vec<i64>>>()?;
    Weight::from_doubled(coords2)?.padded(rank)
}

/// A weight as a JSON array: integral entries as numbers, halves as "p/2".
pub fn weight_to_json(w: &Weight) -> serde_json::Value {
    serde_json::Value::Array(
        w.coords2()
            .iter()
            .map(|&c| {
                if c % 2 == 0 {
                    serde_json::Value::from(c / 2)
                } else {
                    serde_json::Value::String(half_string(c))
                }
            })
            .collect(),
    )
}

/// Accepts numbers (integers or exact halves) and fraction strings.
pub fn weight_from_json(value: &serde_json::Value) -> Result<Weight> {
    let arr = value
        .as_array()
        .ok_or_else(|| Error::InvalidInput("weight must be a JSON array".into()))?;
    let mut coords2 = Vec::with_capacity(arr.len());
    for entry in arr {
        let c = match entry {
            serde_json::Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    2 * i
                } else if let Some(f) = n.as_f64() {
                    let doubled = 2.0 * f;
                    if doubled.fract() != 0.0 {
                        return Err(Error::InvalidInput(format!(
                            "coordinate {f} is not an integer or half-integer"
                        )));
                    }
                    doubled as i64
                } else {
                    return Err(Error::InvalidInput(format!("bad coordinate {n}")));
                }
            }
            serde_json::Value::String(s) => parse_half(s)?,
            other => {
                return Err(Error::InvalidInput(format!(
                    "weight coordinates must be numbers or fraction strings, got {other}"
                )))
            }
        };
        coords2.push(c);
    }
    Weight::from_doubled(coords2)
}

/// Decomposition file format:
/// `{"n": 1, "b2": 22, "terms": [{"mu": [1], "mult": 1}]}`.
pub fn decomposition_from_json(value: &serde_json::Value) -> Result<Decomposition> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::InvalidInput("decomposition must be a JSON object".into()))?;
    let n = obj
        .get("n")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| Error::InvalidInput("missing positive integer field 'n'".into()))?;
    let b2 = obj
        .get("b2")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| Error::InvalidInput("missing positive integer field 'b2'".into()))?;
    let terms_json = obj
        .get("terms")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::InvalidInput("missing array field 'terms'".into()))?;
    let mut terms = Vec::with_capacity(terms_json.len());
    for term in terms_json {
        let term_obj = term
            .as_object()
            .ok_or_else(|| Error::InvalidInput("each term must be an object".into()))?;
        let mu = weight_from_json(
            term_obj
                .get("mu")
                .ok_or_else(|| Error::InvalidInput("term is missing 'mu'".into()))?,
        )?;
        let mult = match term_obj.get("mult") {
            Some(v) => parse_biguint(v)?,
            None => return Err(Error::InvalidInput("term is missing 'mult'".into())),
        };
        if mult.is_zero() {
            return Err(Error::InvalidInput(format!("term {mu} has zero multiplicity")));
        }
        terms.push((mu, mult));
    }
    Decomposition::new(
        u32::try_from(n).map_err(|_| Error::InvalidInput("n is too large".into()))?,
        u32::try_from(b2).map_err(|_| Error::InvalidInput("b2 is too large".into()))?,
        terms,
    )
}

pub fn decomposition_to_json(d: &Decomposition) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = d
        .terms()
        .iter()
        .map(|t| {
            serde_json::json!({
                "mu": weight_to_json(&t.mu),
                "mult": crate::reps::biguint_json(&t.mult),
            })
        })
        .collect();
    serde_json::json!({
        "n": d.n(),
        "b2": d.b2(),
        "terms": terms,
    })
}

/// Reads a decomposition from a file path or from stdin when the path is "-".
pub fn read_decomposition(path: &str) -> Result<Decomposition> {
    let text = if path == "-" {
        let mut buffer = String::new();
        std::io::stdin().read_to_string(&mut buffer)?;
        buffer
    } else {
        std::fs::read_to_string(path)?
    };
    // serde_json reports line and column on malformed input
    let value: serde_json::Value = serde_json::from_str(&text)?;
    decomposition_from_json(&value)
}
