//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime")]
    NotAnOddPrime(u64),

    #[error("modulus {0} exceeds the 2^31 bound")]
    ModulusTooLarge(u64),

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("entry {entry} at phi[{k}][{i}][{j}] is out of range for p = {p}")]
    EntryOutOfRange {
        k: usize,
        i: usize,
        j: usize,
        entry: u64,
        p: u64,
    },

    #[error("enumeration of {needed} projective points exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("presentation violates the Steiner condition at u = {}", fmt_vec(.witness))]
    NotSteiner { witness: Vec<u64> },

    #[error("multiplication tensor is not injective at sigma = {}", fmt_vec(.witness))]
    TensorNotInjective { witness: Vec<u64> },

    #[error("operation requires s >= 2, got s = {0}")]
    RankOneSource(usize),

    #[error("dimension bookkeeping requires t >= s + n, got (s, t, n) = ({s}, {t}, {n})")]
    TooFewSections { s: usize, t: usize, n: usize },

    #[error("pair (v, h) does not lie in the bundle's matrix space")]
    PairNotInSpan,

    #[error("vector must be nonzero")]
    ZeroVector,

    #[error("sampler gave up after {0} rejections")]
    SamplerExhausted(usize),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

fn fmt_vec(v: &[u64]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}
