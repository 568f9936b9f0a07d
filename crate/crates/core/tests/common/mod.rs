//! Reference evaluators that share no code path with the library's
//! evaluators.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `S(m, n)` by literal recursion on reciprocity over `BigRational`:
/// `S(m, n) = -S(n mod m, m) + (m^2 + n^2 + 1)/(mn) - 3`, `S(0, 1) = 0`.
pub fn reciprocity_oracle(m: u64, n: u64) -> BigRational {
    let (m, n) = (BigInt::from(m), BigInt::from(n));
    let mut acc = BigRational::zero();
    let mut sign = BigRational::one();
    let (mut a, mut b) = (m.mod_floor(&n), n);
    while !a.is_zero() {
        let term = BigRational::new(&a * &a + &b * &b + 1, &a * &b) - BigRational::from_integer(3.into());
        acc += &sign * term;
        sign = -sign;
        let next = b.mod_floor(&a);
        b = a;
        a = next;
    }
    acc
}

/// `S(m, n) = 12 sum_{k=1}^{n} ((k/n))((mk/n))` with every term a rational.
pub fn sawtooth_oracle(m: u64, n: u64) -> BigRational {
    let n_big = BigInt::from(n);
    let saw = |num: BigInt| -> BigRational {
        let t = BigRational::new(num, n_big.clone());
        if t.is_integer() {
            BigRational::zero()
        } else {
            &t - t.floor() - BigRational::new(1.into(), 2.into())
        }
    };
    let mut acc = BigRational::zero();
    for k in 1..=n {
        acc += saw(BigInt::from(k)) * saw(BigInt::from(m) * BigInt::from(k));
    }
    acc * BigRational::from_integer(12.into())
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}
