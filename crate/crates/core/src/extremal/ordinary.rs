use num_integer::Integer;

use crate::error::ExtremalError;

/// `l = 2k + 2`, the approximation order attached to `k`.
pub fn level(k: u64) -> u64 {
    2 * k + 2
}

/// A pair `(d, c)` with `q = m d - n c` and `|q| < l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrdinaryWitness {
    pub d: u64,
    pub c: u64,
    pub q: i128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrdinaryReport {
    pub ordinary: bool,
    /// The violator with minimal `|q|` (then smallest `d`, then smallest `c`)
    /// when `m` is not ordinary.
    pub witness: Option<OrdinaryWitness>,
}

/// Decides whether `m` is ordinary for `(n, k)`: every `q = m d - n c` with
/// `1 <= d <= l`, `0 <= c <= d`, `gcd(c, d) = 1` has `|q| >= l`.
///
/// For a fixed `d` only `c = floor(md/n)` and `c = ceil(md/n)` can give
/// `|q| < n`; every other `c` is at least `n > l` away.
pub fn is_ordinary(m: u64, n: u64, k: u64) -> Result<OrdinaryReport, ExtremalError> {
    let l = level(k);
    if k == 0 || !(1 <= m && m < n) || m.gcd(&n) != 1 || n <= l {
        return Err(ExtremalError::Precondition(format!(
            "is_ordinary needs k >= 1, coprime 1 <= m < n and n > 2k + 2, got m = {m}, n = {n}, k = {k}"
        )));
    }
    let (m, n) = (m as i128, n as i128);
    let mut best: Option<OrdinaryWitness> = None;
    for d in 1..=l {
        let (floor, rem) = (m * d as i128).div_rem(&n);
        let ceil = if rem == 0 { floor } else { floor + 1 };
        for c in [floor, ceil] {
            if c < 0 || c > d as i128 {
                continue;
            }
            let c = c as u64;
            if c.gcd(&d) != 1 {
                continue;
            }
            let q = m * d as i128 - n * c as i128;
            if q.unsigned_abs() >= l as u128 {
                continue;
            }
            let cand = OrdinaryWitness { d, c, q };
            let better = match best {
                None => true,
                Some(b) => (q.unsigned_abs(), d, c) < (b.q.unsigned_abs(), b.d, b.c),
            };
            if better {
                best = Some(cand);
            }
        }
    }
    Ok(OrdinaryReport {
        ordinary: best.is_none(),
        witness: best,
    })
}
