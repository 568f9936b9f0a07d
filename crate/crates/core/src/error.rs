use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse `{0}` as a fraction")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DedekindError {
    #[error("modulus n must be nonzero")]
    ZeroModulus,
    #[error("m = {m} and n = {n} are not coprime")]
    NotCoprime { m: i128, n: i128 },
    #[error("|n| = {0} exceeds the supported maximum {max}", max = i64::MAX)]
    ModulusTooLarge(u128),
    #[error("S(2, n) closed form needs odd n >= 3, got n = {0}")]
    ClosedFormDomain(u64),
    #[error("c/d = {c}/{d} equals m/n = {m}/{n}, so q = 0")]
    ZeroQ { m: i128, n: u64, c: u64, d: u64 },
    #[error("invalid decomposition input: {0}")]
    InvalidDecomposition(String),
    #[error("no r in 0..{q_abs} satisfies the three-term relation for m = {m}, n = {n}, c = {c}, d = {d}")]
    NoWitness {
        m: i128,
        n: u64,
        c: u64,
        d: u64,
        q_abs: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Dedekind(#[from] DedekindError),
}
