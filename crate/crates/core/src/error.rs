use thiserror::Error;

use crate::Natural;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("subtractive loop requires positive inputs")]
    NonPositiveInput,

    #[error("trace for ({m}, {n}) would exceed the cap of {cap} steps")]
    TraceTooLong { m: Natural, n: Natural, cap: u64 },

    #[error("no linear combination needed; gcd is 0")]
    BezoutOfZeros,

    #[error("level too large: depth {depth} exceeds the cap of {max}")]
    DepthTooLarge { depth: u32, max: u32 },

    #[error("triple ({a}, {b}, {c}) is not of the form a b (2t+1)*b-a")]
    MalformedTriple { a: Natural, b: Natural, c: Natural },

    #[error("row has {len} entries; at least 3 are needed to form a triple")]
    RowTooShort { len: usize },

    #[error("{what} must be at least 1")]
    ZeroArgument { what: &'static str },

    #[error("{num}/{den} is not a positive rational in lowest form")]
    NotLowestForm { num: Natural, den: Natural },

    #[error("count {count} exceeds the cap of {max}")]
    CountTooLarge { count: Natural, max: u64 },
}
