//! Dedekind sums `S(m, n) = 12 s(m, n)`.
//!
//! Two independent evaluators are provided: [`dedekind_naive`] walks the
//! defining sawtooth sum in `O(n)`, and [`dedekind_fast`] follows the Euclid
//! remainder chain of `(n, m)` in `O(log n)`. Both return exact [`Rational`]s.

use num_integer::Integer;

use crate::error::DedekindError;
use crate::rational::Rational;

/// The sawtooth `((t))`: `t - floor(t) - 1/2` off the integers, `0` on them.
pub fn sawtooth(t: &Rational) -> Rational {
    if t.is_integer() {
        return Rational::zero();
    }
    t - &Rational::from_integer(t.floor()) - Rational::ratio(1, 2)
}

/// A normalized argument pair `(m, n)` with `0 <= m < n` and `gcd(m, n) = 1`.
///
/// `m = 0` only occurs together with `n = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SumQuery {
    m: u64,
    n: u64,
}

impl SumQuery {
    /// Reduces an arbitrary coprime pair with `S(m, -n) = S(m, n)` and
    /// `S(m + n, n) = S(m, n)`.
    pub fn normalize(m: i128, n: i128) -> Result<Self, DedekindError> {
        if n == 0 {
            return Err(DedekindError::ZeroModulus);
        }
        let modulus = n.unsigned_abs();
        if modulus > i64::MAX as u128 {
            return Err(DedekindError::ModulusTooLarge(modulus));
        }
        if m.gcd(&n) != 1 {
            return Err(DedekindError::NotCoprime { m, n });
        }
        let modulus = modulus as i128;
        Ok(Self {
            m: m.rem_euclid(modulus) as u64,
            n: modulus as u64,
        })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }
}

/// Evaluates `S(m, n)` from the definition.
///
/// Since `gcd(m, n) = 1`, only `k = n` lands on an integer, so the sum is
/// carried in integers as `4 n^2 s(m, n) = sum_{k=1}^{n-1} (2k - n)(2(mk mod n) - n)`
/// and divided once at the end.
pub fn dedekind_naive(query: &SumQuery) -> Rational {
    let n = query.n as i128;
    let m = query.m as i128;
    let mut acc: i128 = 0;
    let mut residue: i128 = 0;
    for k in 1..n {
        residue += m;
        if residue >= n {
            residue -= n;
        }
        acc += (2 * k - n) * (2 * residue - n);
    }
    // S = 12 s = 3 acc / n^2
    Rational::ratio(3 * acc, n * n)
}

/// Returns the integer `n * S(m, n)`.
///
/// Iterating reciprocity along the remainder chain `r_0 = n, r_1 = m, ...`
/// with partial quotients `a_i`, the `r_{i+1}/r_i` parts telescope and the
/// `1/(r_{i-1} r_i)` parts collapse to `t/n`, where `t` is the Bezout
/// cofactor of `m` (`t m = 1 mod n`). What remains is
/// `S(m, n) = sum (-1)^{i+1} (a_i - 3) + (m + t)/n`.
pub fn scaled_sum(query: &SumQuery) -> i128 {
    scaled_sum_if_coprime(query.m, query.n).expect("SumQuery is coprime")
}

/// [`scaled_sum`] for a raw pair with `m < n <= i64::MAX`; `None` when
/// `gcd(m, n) != 1`. The coprimality test falls out of the same Euclid pass,
/// which makes this the cheap path for full scans over `m`.
pub fn scaled_sum_if_coprime(m: u64, n: u64) -> Option<i128> {
    debug_assert!(m < n.max(1) && n <= i64::MAX as u64);
    if n == 1 {
        return Some(0);
    }
    let n = n as i128;
    let (mut r0, mut r1) = (n, m as i128);
    let (mut t0, mut t1): (i128, i128) = (0, 1);
    let mut alternating: i128 = 0;
    let mut sign: i128 = 1;
    while r1 != 0 {
        let (a, rem) = r0.div_rem(&r1);
        alternating += sign * (a - 3);
        (r0, r1) = (r1, rem);
        (t0, t1) = (t1, t0 - a * t1);
        sign = -sign;
    }
    (r0 == 1).then(|| n * alternating + m as i128 + t0)
}

/// Evaluates `S(m, n)` in `O(log n)` steps via the reciprocity law.
pub fn dedekind_fast(query: &SumQuery) -> Rational {
    Rational::ratio(scaled_sum(query), query.n)
}

/// `S(1, n) = (n^2 - 3n + 2)/n`.
pub fn closed_form_s1(n: u64) -> Rational {
    let n = n as i128;
    assert!(n > 0, "n must be positive");
    Rational::ratio(n * n - 3 * n + 2, n)
}

/// `S(2, n) = (n^2 - 6n + 5)/(2n)` for odd `n >= 3`.
pub fn closed_form_s2(n: u64) -> Result<Rational, DedekindError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(DedekindError::ClosedFormDomain(n));
    }
    let n = n as i128;
    Ok(Rational::ratio(n * n - 6 * n + 5, 2 * n))
}

/// Inverse of `m` modulo `n`, in `1..n` (or `0` when `n = 1`).
pub fn mod_inverse(m: i128, n: u64) -> Result<u64, DedekindError> {
    if n == 0 {
        return Err(DedekindError::ZeroModulus);
    }
    let modulus = n as i128;
    let ext = m.rem_euclid(modulus).extended_gcd(&modulus);
    if ext.gcd != 1 {
        return Err(DedekindError::NotCoprime { m, n: modulus });
    }
    Ok(ext.x.rem_euclid(modulus) as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(q: i128) -> Self {
        if q < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    fn apply(self, x: Rational) -> Rational {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

/// The three-term relation
/// `S(m,n) = S(c,d) + e S(r,q) + n/(dq) + d/(nq) + q/(nd) - 3e`
/// for `q = md - nc` and `e = sign(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeTermDecomposition {
    pub m: i128,
    pub n: u64,
    pub c: u64,
    pub d: u64,
    pub q: i128,
    pub epsilon: Sign,
    /// `S(m,n) - S(c,d) - n/(dq) - d/(nq) - q/(nd) + 3e`, which must equal `e S(r, |q|)`.
    pub residual: Rational,
    pub r_witness: Option<u64>,
}

impl ThreeTermDecomposition {
    /// Computes `q`, `e` and the residual, without searching for `r`.
    pub fn new(m: i128, n: u64, c: u64, d: u64) -> Result<Self, DedekindError> {
        if d == 0 {
            return Err(DedekindError::InvalidDecomposition("d must be positive".into()));
        }
        let outer = SumQuery::normalize(m, n as i128)?;
        let inner = SumQuery::normalize(c as i128, d as i128)?;
        let q = m * d as i128 - n as i128 * c as i128;
        if q == 0 {
            return Err(DedekindError::ZeroQ { m, n, c, d });
        }
        if n <= d {
            return Err(DedekindError::InvalidDecomposition(format!(
                "need n > d, got n = {n}, d = {d}"
            )));
        }
        let epsilon = Sign::of(q);
        let (n_, d_) = (n as i128, d as i128);
        let correction = Rational::ratio(n_, d_ * q)
            + Rational::ratio(d_, n_ * q)
            + Rational::ratio(q, n_ * d_);
        let residual = dedekind_fast(&outer)
            - dedekind_fast(&inner)
            - correction
            + epsilon.apply(Rational::from_integer(3));
        Ok(Self {
            m,
            n,
            c,
            d,
            q,
            epsilon,
            residual,
            r_witness: None,
        })
    }

    /// Right-hand side of the relation for a given `r`.
    pub fn rhs(&self, r: u64) -> Result<Rational, DedekindError> {
        let q_abs = self.q.unsigned_abs() as i128;
        let (n, d, q) = (self.n as i128, self.d as i128, self.q);
        let s_cd = dedekind_fast(&SumQuery::normalize(self.c as i128, d)?);
        let s_rq = dedekind_fast(&SumQuery::normalize(r as i128, q_abs)?);
        Ok(s_cd + self.epsilon.apply(s_rq)
            + Rational::ratio(n, d * q)
            + Rational::ratio(d, n * q)
            + Rational::ratio(q, n * d)
            - self.epsilon.apply(Rational::from_integer(3)))
    }
}

/// Checks the three-term relation for `(m, n)` against the approximation
/// `c/d`, searching `r` over the residues mod `|q|` coprime to `|q|`.
pub fn three_term_check(
    m: i128,
    n: u64,
    c: u64,
    d: u64,
) -> Result<ThreeTermDecomposition, DedekindError> {
    let mut decomposition = ThreeTermDecomposition::new(m, n, c, d)?;
    let q_abs = decomposition.q.unsigned_abs();
    if q_abs > i64::MAX as u128 {
        return Err(DedekindError::ModulusTooLarge(q_abs));
    }
    let q_abs = q_abs as u64;
    let target = decomposition.epsilon.apply(decomposition.residual.clone());
    let witness = (0..q_abs)
        .filter(|r| r.gcd(&q_abs) == 1)
        .find(|&r| {
            let query = SumQuery { m: r, n: q_abs };
            dedekind_fast(&query) == target
        });
    match witness {
        Some(r) => {
            decomposition.r_witness = Some(r);
            Ok(decomposition)
        }
        None => Err(DedekindError::NoWitness {
            m,
            n,
            c,
            d,
            q_abs,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn q(m: i128, n: i128) -> SumQuery {
        SumQuery::normalize(m, n).unwrap()
    }

    /// The sawtooth sum exactly as written, over rationals.
    fn literal(query: &SumQuery) -> Rational {
        let n = query.n() as i64;
        let m = query.m() as i64;
        let s: Rational = (1..=n)
            .map(|k| sawtooth(&r(k, n)) * sawtooth(&r(m * k, n)))
            .sum();
        s * Rational::from_integer(12)
    }

    #[test]
    fn sawtooth_values() {
        assert_eq!(sawtooth(&r(5, 1)), Rational::zero());
        assert_eq!(sawtooth(&r(1, 4)), r(-1, 4));
        assert_eq!(sawtooth(&r(3, 4)), r(1, 4));
        assert_eq!(sawtooth(&r(-1, 4)), r(1, 4));
        assert_eq!(sawtooth(&r(1, 2)), Rational::zero());
    }

    #[test]
    fn sawtooth_range() {
        let half = r(1, 2);
        for num in -40..40 {
            let t = r(num, 7);
            let v = sawtooth(&t);
            assert!(v > -half.clone() && v < half);
            assert_eq!(v.is_zero(), t.is_integer() || t.denom() == &2.into());
        }
    }

    #[test]
    fn normalize_rules() {
        assert_eq!(q(7, -5), q(2, 5));
        assert_eq!((q(7, -5).m(), q(7, -5).n()), (2, 5));
        assert_eq!((q(-1, 7).m(), q(-1, 7).n()), (6, 7));
        assert_eq!(q(5, 1).m(), 0);
        assert_eq!(
            SumQuery::normalize(3, 3),
            Err(DedekindError::NotCoprime { m: 3, n: 3 })
        );
        assert_eq!(SumQuery::normalize(1, 0), Err(DedekindError::ZeroModulus));
        assert!(SumQuery::normalize(0, 5).is_err());
        assert!(matches!(
            SumQuery::normalize(1, i64::MAX as i128 + 1),
            Err(DedekindError::ModulusTooLarge(_))
        ));
    }

    #[test]
    fn naive_examples() {
        assert_eq!(dedekind_naive(&q(1, 3)), r(2, 3));
        assert_eq!(dedekind_naive(&q(2, 5)), Rational::zero());
        assert_eq!(dedekind_naive(&q(2, 7)), r(6, 7));
        assert_eq!(dedekind_naive(&q(0, 1)), Rational::zero());
    }

    #[test]
    fn naive_matches_literal_sum() {
        for n in 1..=40i128 {
            for m in 0..n {
                if let Ok(query) = SumQuery::normalize(m, n) {
                    assert_eq!(dedekind_naive(&query), literal(&query), "({m}, {n})");
                }
            }
        }
    }

    #[test]
    fn fast_examples() {
        for n in 2..60 {
            assert_eq!(dedekind_fast(&q(1, n)), closed_form_s1(n as u64));
        }
        assert_eq!(dedekind_fast(&q(3, 7)), r(-6, 7));
        assert_eq!(dedekind_fast(&q(6, 7)), r(-30, 7));
        assert_eq!(dedekind_fast(&q(0, 1)), Rational::zero());
    }

    #[test]
    fn one_reciprocity_step_for_three_seven() {
        // S(3,7) = -S(1,3) + 7/3 + 3/7 + 1/21 - 3
        let expected = -closed_form_s1(3) + r(7, 3) + r(3, 7) + r(1, 21) - r(3, 1);
        assert_eq!(expected, r(-6, 7));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_s1(3), r(2, 3));
        assert_eq!(closed_form_s1(2), Rational::zero());
        assert_eq!(closed_form_s2(7).unwrap(), r(6, 7));
        assert_eq!(closed_form_s2(8), Err(DedekindError::ClosedFormDomain(8)));
        assert_eq!(closed_form_s2(1), Err(DedekindError::ClosedFormDomain(1)));
        for n in (3..301).step_by(2) {
            assert_eq!(closed_form_s2(n).unwrap(), dedekind_fast(&q(2, n as i128)));
        }
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(2, 7), Ok(4));
        assert_eq!(mod_inverse(1, 9), Ok(1));
        assert_eq!(mod_inverse(-1, 7), Ok(6));
        assert_eq!(mod_inverse(3, 1), Ok(0));
        assert_eq!(mod_inverse(2, 4), Err(DedekindError::NotCoprime { m: 2, n: 4 }));
        for n in (3..201u64).step_by(2) {
            assert_eq!(mod_inverse(2, n), Ok((n + 1) / 2));
        }
        for n in 2..80u64 {
            for m in 1..n {
                if let Ok(inv) = mod_inverse(m as i128, n) {
                    assert_eq!((m * inv) % n, 1);
                    assert_eq!(
                        dedekind_fast(&q(inv as i128, n as i128)),
                        dedekind_fast(&q(m as i128, n as i128))
                    );
                }
            }
        }
    }

    #[test]
    fn three_term_with_trivial_approximation() {
        // c/d = 0/1 turns the relation into reciprocity; r = -n mod m works.
        for (m, n) in [(3u64, 7u64), (5, 12), (7, 30), (11, 101)] {
            let dec = three_term_check(m as i128, n, 0, 1).unwrap();
            assert_eq!(dec.q, m as i128);
            assert_eq!(dec.epsilon, Sign::Plus);
            let r = dec.r_witness.unwrap();
            let expected = dedekind_fast(&q(-(n as i128), m as i128));
            assert_eq!(dedekind_fast(&q(r as i128, m as i128)), expected);
            assert_eq!(dec.rhs(r).unwrap(), dedekind_fast(&q(m as i128, n as i128)));
        }
    }

    #[test]
    fn three_term_example() {
        let dec = three_term_check(45, 101, 1, 2).unwrap();
        assert_eq!(dec.q, -11);
        assert_eq!(dec.epsilon, Sign::Minus);
        let r = dec.r_witness.unwrap();
        assert!((1..11).contains(&r));
        assert_eq!(dec.rhs(r).unwrap(), dedekind_naive(&q(45, 101)));
    }

    #[test]
    fn three_term_errors() {
        assert_eq!(
            three_term_check(2, 5, 2, 5),
            Err(DedekindError::ZeroQ { m: 2, n: 5, c: 2, d: 5 })
        );
        assert!(matches!(three_term_check(1, 2, 1, 3), Err(DedekindError::InvalidDecomposition(_))));
        assert!(matches!(three_term_check(2, 6, 1, 3), Err(DedekindError::NotCoprime { .. })));
        assert!(matches!(three_term_check(3, 7, 2, 4), Err(DedekindError::NotCoprime { .. })));
        assert!(matches!(
            ThreeTermDecomposition::new(1, 3, 1, 0),
            Err(DedekindError::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn three_term_holds_for_many_pairs() {
        for n in 5..60u64 {
            for m in 1..n {
                if m.gcd(&n) != 1 {
                    continue;
                }
                for d in 1..n.min(6) {
                    for c in 0..=d {
                        if c.gcd(&d) != 1 || (m * d) as i128 == (n * c) as i128 {
                            continue;
                        }
                        let dec = three_term_check(m as i128, n, c, d).unwrap();
                        let r = dec.r_witness.unwrap();
                        assert_eq!(dec.rhs(r).unwrap(), dedekind_fast(&q(m as i128, n as i128)));
                    }
                }
            }
        }
    }
}
