use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;

use super::candidates::candidate_set;
use super::scan::with_threads;
use crate::dedekind::scaled_sum_if_coprime;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    /// `S(m, n) >= S(k, n)` only for candidate `m`.
    Inclusion { k: u64 },
    /// `S(2, n) > S(m, n)` for odd `n` and `m` outside `{1, 2, (n+1)/2}`.
    SecondLargest,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theorem::Inclusion { k } => write!(f, "t1(k={k})"),
            Theorem::SecondLargest => write!(f, "t2"),
        }
    }
}

/// An `(m, n)` where the checked statement fails. `reference` is the value
/// `S(m, n)` was compared against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub m: u64,
    pub n: u64,
    pub value: Rational,
    pub reference: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub theorem: Theorem,
    pub n_from: u64,
    pub n_to: u64,
    /// Number of `n` in the range the statement applies to.
    pub checked_count: u64,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn parameter_range(&self) -> String {
        format!("{} n in [{}, {}]", self.theorem, self.n_from, self.n_to)
    }
}

fn scaled(m: u64, n: u64) -> Option<i128> {
    scaled_sum_if_coprime(m, n)
}

fn inclusion_at(k: u64, n: u64) -> Vec<Violation> {
    let reference = scaled(k, n).expect("k coprime to n");
    let allowed: Vec<u64> = candidate_set(k, n).into_iter().map(|g| g.m).collect();
    (1..n)
        .filter_map(|m| scaled(m, n).map(|s| (m, s)))
        .filter(|&(m, s)| s >= reference && allowed.binary_search(&m).is_err())
        .map(|(m, s)| Violation {
            m,
            n,
            value: Rational::ratio(s, n),
            reference: Rational::ratio(reference, n),
        })
        .collect()
}

/// For every `n` in `[n_from, n_to]` with `n > k` and `gcd(k, n) = 1`,
/// checks `{m : S(m, n) >= S(k, n)}` against [`candidate_set`]. Violations
/// are reported, not treated as errors: below the (unquantified) point where
/// the statement starts to hold they are expected.
pub fn verify_theorem1(k: u64, n_from: u64, n_to: u64, threads: Option<usize>) -> VerifyReport {
    let lo = n_from.max(k + 1);
    let per_n: Vec<Vec<Violation>> = with_threads(threads, || {
        (lo..=n_to)
            .into_par_iter()
            .filter(|n| k >= 1 && k.gcd(n) == 1)
            .map(|n| inclusion_at(k, n))
            .collect()
    });
    VerifyReport {
        theorem: Theorem::Inclusion { k },
        n_from,
        n_to,
        checked_count: per_n.len() as u64,
        violations: per_n.into_iter().flatten().collect(),
    }
}

fn second_largest_at(n: u64) -> Vec<Violation> {
    let reference = scaled(2, n).expect("n odd");
    let twin = n.div_ceil(2);
    let mut out = Vec::new();
    let twin_value = scaled(twin, n).expect("(n+1)/2 is a unit");
    if twin_value != reference {
        out.push(Violation {
            m: twin,
            n,
            value: Rational::ratio(twin_value, n),
            reference: Rational::ratio(reference, n),
        });
    }
    for m in 3..n {
        if m == twin {
            continue;
        }
        if let Some(s) = scaled(m, n) {
            if s >= reference {
                out.push(Violation {
                    m,
                    n,
                    value: Rational::ratio(s, n),
                    reference: Rational::ratio(reference, n),
                });
            }
        }
    }
    out
}

/// For every odd `n >= 3` in `[n_from, n_to]`: `S(2, n) > S(m, n)` strictly
/// for coprime `m` in `3..n` other than `(n+1)/2`, and
/// `S((n+1)/2, n) = S(2, n)`. Even `n` are skipped and not counted.
pub fn verify_theorem2(n_from: u64, n_to: u64, threads: Option<usize>) -> VerifyReport {
    let lo = n_from.max(3);
    let per_n: Vec<Vec<Violation>> = with_threads(threads, || {
        (lo..=n_to)
            .into_par_iter()
            .filter(|n| n % 2 == 1)
            .map(second_largest_at)
            .collect()
    });
    VerifyReport {
        theorem: Theorem::SecondLargest,
        n_from,
        n_to,
        checked_count: per_n.len() as u64,
        violations: per_n.into_iter().flatten().collect(),
    }
}
