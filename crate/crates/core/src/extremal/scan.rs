use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use rayon::prelude::*;

use crate::dedekind::scaled_sum_if_coprime;
use crate::error::ExtremalError;
use crate::rational::Rational;

/// Runs `f` on a pool with `threads` workers, or on the global pool.
pub(crate) fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match threads {
        None => f(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .expect("failed to build thread pool")
            .install(f),
    }
}

/// Scan entry ordered so that larger means "ranks higher": bigger `n S`,
/// then smaller `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Ranked {
    scaled: i128,
    m: u64,
}

impl Ord for Ranked {
    fn cmp(&self, other: &Self) -> Ordering {
        self.scaled
            .cmp(&other.scaled)
            .then_with(|| other.m.cmp(&self.m))
    }
}

impl PartialOrd for Ranked {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Keeps the `cap` highest-ranked entries seen.
struct TopK {
    cap: usize,
    heap: BinaryHeap<Reverse<Ranked>>,
}

impl TopK {
    fn new(cap: usize) -> Self {
        Self {
            cap,
            heap: BinaryHeap::with_capacity(cap + 1),
        }
    }

    fn push(&mut self, item: Ranked) {
        if self.heap.len() < self.cap {
            self.heap.push(Reverse(item));
        } else if let Some(Reverse(worst)) = self.heap.peek() {
            if item > *worst {
                self.heap.pop();
                self.heap.push(Reverse(item));
            }
        }
    }

    fn merge(mut self, other: TopK) -> TopK {
        for Reverse(item) in other.heap {
            self.push(item);
        }
        self
    }

    fn into_sorted(self) -> Vec<Ranked> {
        let mut items: Vec<Ranked> = self.heap.into_iter().map(|Reverse(x)| x).collect();
        items.sort_unstable_by(|a, b| b.cmp(a));
        items
    }
}

/// The `top` largest values `S(m, n)` over `m` coprime to `n`, sorted by
/// value descending and then by `m` ascending.
///
/// The range of `m` is split across workers; each keeps a bounded heap and
/// the heaps are merged. The ranking is a total order on distinct `m`, so the
/// result does not depend on the partition or the worker count.
pub fn scan_top(
    n: u64,
    top: usize,
    threads: Option<usize>,
) -> Result<Vec<(u64, Rational)>, ExtremalError> {
    if n < 2 || n > i64::MAX as u64 || top == 0 {
        return Err(ExtremalError::Precondition(format!(
            "scan_top needs 2 <= n <= 2^63 - 1 and top >= 1, got n = {n}, top = {top}"
        )));
    }
    let best = with_threads(threads, || {
        (1..n)
            .into_par_iter()
            .fold(
                || TopK::new(top),
                |mut acc, m| {
                    if let Some(scaled) = scaled_sum_if_coprime(m, n) {
                        acc.push(Ranked { scaled, m });
                    }
                    acc
                },
            )
            .reduce(|| TopK::new(top), TopK::merge)
    });
    Ok(best
        .into_sorted()
        .into_iter()
        .map(|r| (r.m, Rational::ratio(r.scaled, n)))
        .collect())
}
