use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus in 2..=65521")]
    NotPrime(u64),

    #[error("value {value} is not an element of GF({q})")]
    NotInField { value: u64, q: u32 },

    #[error("0 has no inverse in GF({0})")]
    ZeroInverse(u32),

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("generator matrix has rank {rank}, expected {k}")]
    RankDeficient { rank: usize, k: usize },

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("codewords {first} and {second} are identical")]
    DuplicateWord { first: usize, second: usize },

    #[error("{what} requires {required} evaluations but the cap is {cap}")]
    CapExceeded {
        what: &'static str,
        required: u128,
        cap: u64,
    },

    #[error("{name} = {value} is outside {range}")]
    Domain {
        name: &'static str,
        value: f64,
        range: String,
    },

    #[error("code has a single word, so no minimum distance exists")]
    NoMinimumDistance,

    #[error("no sign change of h' between p = {lo} and p = {hi}")]
    Bracket { lo: f64, hi: f64 },

    #[error("series supports at most {max} terms, {got} requested")]
    UnsupportedTerms { max: usize, got: usize },
}
