//! Exact Dedekind sums and the arguments `m` at which `S(m, n)` is largest.
//!
//! * [`rational`]: canonical exact fractions.
//! * [`dedekind`]: evaluators for `S(m, n) = 12 s(m, n)` and the identities
//!   they satisfy.
//! * [`extremal`]: Farey approximation, the ordinary/non-ordinary split,
//!   candidate sets for large values, explicit bounds and exhaustive verifiers.

pub mod dedekind;
pub mod error;
pub mod extremal;
pub mod rational;

pub use dedekind::{
    closed_form_s1, closed_form_s2, dedekind_fast, dedekind_naive, mod_inverse, sawtooth,
    scaled_sum, three_term_check, SumQuery, ThreeTermDecomposition,
};
pub use error::{DedekindError, ExtremalError, RationalError};
pub use rational::Rational;
