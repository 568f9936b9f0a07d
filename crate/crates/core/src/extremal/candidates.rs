use std::collections::BTreeMap;

use num_integer::Integer;

/// One way of writing `m = (n c + q)/d` with `1 <= d <= k`, `0 <= c < d`,
/// `gcd(c, d) = 1` and `1 <= q <= floor(k/d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Candidate {
    pub d: u64,
    pub c: u64,
    pub q: u64,
    pub m: u64,
}

/// All candidate origins that produce the same `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateGroup {
    pub m: u64,
    pub origins: Vec<Candidate>,
}

/// Arguments `m` that may reach `S(m, n) >= S(k, n)` once `n` is large,
/// sorted by `m`. Origins within a group are in `(d, c, q)` order.
pub fn candidate_set(k: u64, n: u64) -> Vec<CandidateGroup> {
    let mut by_m: BTreeMap<u64, Vec<Candidate>> = BTreeMap::new();
    for d in 1..=k {
        for c in (0..d).filter(|c| c.gcd(&d) == 1) {
            for q in 1..=k / d {
                let num = n as u128 * c as u128 + q as u128;
                if !num.is_multiple_of(d as u128) {
                    continue;
                }
                let m = num / d as u128;
                if m == 0 || m >= n as u128 {
                    continue;
                }
                let m = m as u64;
                if m.gcd(&n) != 1 {
                    continue;
                }
                by_m.entry(m).or_default().push(Candidate { d, c, q, m });
            }
        }
    }
    by_m.into_iter()
        .map(|(m, origins)| CandidateGroup { m, origins })
        .collect()
}

/// Euler's totient by trial division.
pub fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `sum_{d=1}^{k} phi(d) floor(k/d)`, an upper bound on the number of
/// `(d, c, q)` origins and hence on `|candidate_set(k, n)|`.
pub fn candidate_count_bound(k: u64) -> u64 {
    (1..=k).map(|d| totient(d) * (k / d)).sum()
}
