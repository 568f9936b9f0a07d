use num_integer::Integer;

use crate::error::ExtremalError;
use crate::rational::Rational;

/// An approximation `c/d` of `m/n` with `d <= l` and `|m/n - c/d| <= 1/(l d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FareyWitness {
    pub c: u64,
    pub d: u64,
    /// `m d - n c`.
    pub q: i128,
    pub l: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Frac {
    p: u64,
    q: u64,
}

/// Finds `c/d` with `d <= l` and `|m/n - c/d| <= 1/(l d)`.
///
/// Locates the neighbours of `m/n` in the Farey sequence of order `l` by a
/// Stern-Brocot descent that takes whole runs of same-direction steps at
/// once (so it visits the intermediate fractions of the continued fraction
/// of `m/n`). One of the two neighbours always satisfies the bound; when both
/// do, the smaller denominator wins.
pub fn farey_approx(m: u64, n: u64, l: u64) -> Result<FareyWitness, ExtremalError> {
    if !(0 < m && m < n) || m.gcd(&n) != 1 {
        return Err(ExtremalError::Precondition(format!(
            "farey_approx needs coprime 0 < m < n, got m = {m}, n = {n}"
        )));
    }
    if l == 0 || l >= n {
        return Err(ExtremalError::Precondition(format!(
            "farey_approx needs 0 < l < n, got l = {l}, n = {n}"
        )));
    }
    let (lo, hi) = farey_neighbours(m as u128, n as u128, l as u128);
    let witness = [lo, hi]
        .into_iter()
        .filter(|f| within_bound(m, n, l, f))
        .min_by_key(|f| f.q)
        .expect("one Farey neighbour is always close enough");
    let out = FareyWitness {
        c: witness.p,
        d: witness.q,
        q: m as i128 * witness.q as i128 - n as i128 * witness.p as i128,
        l,
    };
    debug_assert!(check_witness(m, n, &out));
    Ok(out)
}

/// Exact check of every invariant of a witness for `m/n`.
pub fn check_witness(m: u64, n: u64, w: &FareyWitness) -> bool {
    w.d >= 1
        && w.d <= w.l
        && w.c <= w.d
        && w.c.gcd(&w.d) == 1
        && w.q == m as i128 * w.d as i128 - n as i128 * w.c as i128
        && within_bound(m, n, w.l, &Frac { p: w.c, q: w.d })
}

fn within_bound(m: u64, n: u64, l: u64, f: &Frac) -> bool {
    let distance = (Rational::ratio(m, n) - Rational::ratio(f.p, f.q)).abs();
    distance <= Rational::ratio(1, l as u128 * f.q as u128)
}

/// Consecutive fractions `lo < m/n < hi` of the Farey sequence of order `l`.
fn farey_neighbours(m: u128, n: u128, l: u128) -> (Frac, Frac) {
    let (mut lo_p, mut lo_q) = (0u128, 1u128);
    let (mut hi_p, mut hi_q) = (1u128, 1u128);
    loop {
        if lo_q + hi_q > l {
            break;
        }
        // compare m/n with the mediant
        let mediant_above = (lo_p + hi_p) * n > m * (lo_q + hi_q);
        if mediant_above {
            // hi_k = (hi + k lo) stays above m/n while k < gap_hi / gap_lo
            let gap_hi = n * hi_p - m * hi_q;
            let gap_lo = m * lo_q - n * lo_p;
            let by_value = (gap_hi - 1) / gap_lo;
            let by_order = (l - hi_q) / lo_q;
            let k = by_value.min(by_order);
            hi_p += k * lo_p;
            hi_q += k * lo_q;
        } else {
            let gap_lo = m * lo_q - n * lo_p;
            let gap_hi = n * hi_p - m * hi_q;
            let by_value = (gap_lo - 1) / gap_hi;
            let by_order = (l - lo_q) / hi_q;
            let k = by_value.min(by_order);
            lo_p += k * hi_p;
            lo_q += k * hi_q;
        }
    }
    (
        Frac { p: lo_p as u64, q: lo_q as u64 },
        Frac { p: hi_p as u64, q: hi_q as u64 },
    )
}
