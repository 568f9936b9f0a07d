//! Explicit forms of the `O(1)` terms in the large-value estimates.

use num_integer::Integer;

use super::ordinary::level;
use crate::error::ExtremalError;
use crate::rational::Rational;

/// `2n/l + l + 1/n + 1/l + 3`, bounding `|S(m, n)|` for every ordinary `m`.
pub fn ordinary_bound(k: u64, n: u64) -> Result<Rational, ExtremalError> {
    let l = level(k);
    if k == 0 || n <= l {
        return Err(ExtremalError::Precondition(format!(
            "ordinary_bound needs k >= 1 and n > 2k + 2, got k = {k}, n = {n}"
        )));
    }
    Ok(Rational::ratio(2 * n as u128, l)
        + Rational::from_integer(l)
        + Rational::ratio(1, n)
        + Rational::ratio(1, l)
        + Rational::from_integer(3))
}

/// Lower and upper bounds for `S(k, n)` obtained from reciprocity and
/// `|S(n, k)| <= S(1, k)`:
/// `(n^2 - (k^2+2)n + k^2+1)/(kn)` and `(n^2 + (k^2-6k+2)n + k^2+1)/(kn)`.
pub fn skn_bounds(k: u64, n: u64) -> Result<(Rational, Rational), ExtremalError> {
    if k == 0 || n <= k || k.gcd(&n) != 1 {
        return Err(ExtremalError::Precondition(format!(
            "skn_bounds needs coprime n > k >= 1, got k = {k}, n = {n}"
        )));
    }
    let (k, n) = (k as i128, n as i128);
    let kn = k * n;
    let lower = Rational::ratio(n * n - (k * k + 2) * n + k * k + 1, kn);
    let upper = Rational::ratio(n * n + (k * k - 6 * k + 2) * n + k * k + 1, kn);
    Ok((lower, upper))
}

/// `d + |q| + d/(n|q|) + |q|/(nd) + 3`, bounding `|S(m, n) - n/(dq)|` for a
/// non-ordinary `m` with witness `(d, c, q)`.
pub fn nonordinary_deviation_bound(
    d: u64,
    q: i128,
    n: u64,
    k: u64,
) -> Result<Rational, ExtremalError> {
    let l = level(k);
    let q_abs = q.unsigned_abs();
    if k == 0 || d == 0 || q == 0 || q_abs >= l as u128 || d > l || n < l {
        return Err(ExtremalError::Precondition(format!(
            "nonordinary_deviation_bound needs 0 < |q| < l, 1 <= d <= l, n >= l (l = {l}), got d = {d}, q = {q}, n = {n}"
        )));
    }
    let (d, n) = (d as u128, n as u128);
    Ok(Rational::from_integer(d + q_abs)
        + Rational::ratio(d, n * q_abs)
        + Rational::ratio(q_abs, n * d)
        + Rational::from_integer(3))
}

/// `2l + 5`, the uniform cap on [`nonordinary_deviation_bound`].
pub fn deviation_cap(k: u64) -> u64 {
    2 * level(k) + 5
}

/// First `n >= start` with `pred(n)`, assuming `pred` is monotone from
/// `start` on.
fn first_true(start: u64, pred: impl Fn(u64) -> bool) -> u64 {
    if pred(start) {
        return start;
    }
    let mut lo = start;
    let mut step = 1;
    let mut hi = start + 1;
    while !pred(hi) {
        lo = hi;
        step *= 2;
        hi = start + step;
    }
    // pred(lo) false, pred(hi) true
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// The two cut-offs in the `k = 2` argument: the least `n` with
/// `n/3 + 19/2 < (n^2 - 6n + 5)/(2n)` and the least with
/// `n/3 + 19 < (n^2 - 6n + 5)/(2n)`. Both differences are increasing for
/// `n >= 3`.
pub fn theorem2_thresholds() -> (u64, u64) {
    let s2 = |n: u64| {
        let n = n as i128;
        Rational::ratio(n * n - 6 * n + 5, 2 * n)
    };
    let ordinary = first_true(3, |n| Rational::ratio(n, 3) + Rational::ratio(19, 2) < s2(n));
    let other = first_true(3, |n| Rational::ratio(n, 3) + Rational::from_integer(19) < s2(n));
    (ordinary, other)
}

/// Does the bound argument already force `S(m, n) < S(k, n)` for every `m`
/// outside the candidate set at this `n`?
///
/// Needs both `ordinary_bound(k, n) < lower` and
/// `n/(k+1) + 2l + 5 < lower`, where `lower` is the lower end of
/// [`skn_bounds`] (ignoring coprimality of `k` and `n`).
pub fn bounds_separate(k: u64, n: u64) -> bool {
    let l = level(k);
    if n <= l {
        return false;
    }
    let (ki, ni) = (k as i128, n as i128);
    let lower = Rational::ratio(ni * ni - (ki * ki + 2) * ni + ki * ki + 1, ki * ni);
    let ordinary = Rational::ratio(2 * ni, l)
        + Rational::from_integer(l)
        + Rational::ratio(1, n)
        + Rational::ratio(1, l)
        + Rational::from_integer(3);
    let non_ordinary = Rational::ratio(n, k + 1) + Rational::from_integer(deviation_cap(k));
    ordinary < lower && non_ordinary < lower
}

/// Least `N > 2k + 2` such that [`bounds_separate`] holds for every `n >= N`.
///
/// Both margins are `n/(k(k+1)) + A/n - B` with `A > 0`, hence convex in `n`
/// and increasing once `n^2 >= (k+1)(k^2+1)`. Past that point the first `n`
/// that separates is found by bisection; below it every `n` is checked.
pub fn theorem1_sufficient_threshold(k: u64) -> Result<u64, ExtremalError> {
    if k == 0 {
        return Err(ExtremalError::Precondition("k must be positive".into()));
    }
    let l = level(k);
    let vertex = ((k + 1) * (k * k + 1)).isqrt() + 1;
    let start = vertex.max(l + 1);
    let mut threshold = first_true(start, |n| bounds_separate(k, n));
    if threshold == start {
        while threshold > l + 1 && bounds_separate(k, threshold - 1) {
            threshold -= 1;
        }
    }
    Ok(threshold)
}
