//! Exact representation-theoretic computations for the orthogonal Lie
//! algebras so(b2 + 2, C) acting on the cohomology of hyper-Kähler manifolds:
//! weight systems, graded dimension profiles, the Salamon invariant s(W), and
//! the resulting conditional bounds on the second Betti number.
//!
//! Everything is computed in exact arithmetic (arbitrary-precision integers
//! and rationals); there are no floats anywhere in the pipeline. The three
//! independent routes to s(V_mu) — the Freudenthal weight multiplicities, the
//! principal q-character specialization, and the closed form — cross-check
//! one another and can be replayed with the `verify` subcommand of the
//! bundled binary.
//!
//! See the `examples/` directory for one runnable walk-through per
//! capability, starting with `cargo run --example salamon_invariant`.

pub mod cli;
pub mod error;
pub mod llv;
pub mod qchar;
pub mod ratio;
pub mod reps;
pub mod roots;

pub use error::{Error, Result};
pub use llv::{
    b2_bound, betti_numbers, bound_table, conjecture_check, odd_weight_floor, s_closed,
    s_of_profile, s_series, salamon_check, signed_euler, BoundRow, ConjectureReport,
    Decomposition, SSeries, SalamonForm, SalamonVerdict,
};
pub use qchar::{logf_dd_closed, logf_dd_from_poly, principal_character, s_via_qchar, LaurentPoly};
pub use reps::{
    dominant_weights_below, freudenthal, graded_profile, graded_profile_with_ceiling,
    module_profile, standard_profile, verbitsky_profile, GradedProfile, WeightSystem,
    DEFAULT_ORBIT_CEILING,
};
pub use roots::{pairing, Parity, RootSystem, Series, Weight};
