//! Which `m` give the largest Dedekind sums `S(m, n)` for large `n`.

mod bounds;
mod candidates;
mod farey;
mod ordinary;
mod scan;
mod verify;

pub use bounds::{
    bounds_separate, deviation_cap, nonordinary_deviation_bound, ordinary_bound, skn_bounds,
    theorem1_sufficient_threshold, theorem2_thresholds,
};
pub use candidates::{candidate_count_bound, candidate_set, totient, Candidate, CandidateGroup};
pub use farey::{check_witness, farey_approx, FareyWitness};
pub use ordinary::{is_ordinary, level, OrdinaryReport, OrdinaryWitness};
pub use scan::scan_top;
pub use verify::{verify_theorem1, verify_theorem2, Theorem, VerifyReport, Violation};
