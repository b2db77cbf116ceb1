use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An exhaustive computation was asked for beyond its configured cap.
    #[error("{what}: requested {requested} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("iterated coproduct needs at least one slot")]
    ZeroArity,

    #[error("multirank has {got} entries, element has arity {arity}")]
    MultirankLength { got: usize, arity: usize },

    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),

    #[error("sn(h, k) is undefined for h = k = {0}")]
    DiagonalPair(usize),

    #[error("permutation has a fixed point at {0}")]
    FixedPoint(usize),

    #[error("permutation is not forth-back")]
    NotForthBack,

    #[error("permutation is not zigzag")]
    NotZigzag,

    #[error("permutation is not zagzig")]
    NotZagzig,

    #[error("permutation is not a single cycle")]
    NotCyclic,

    #[error("permutation has an odd cycle")]
    OddCycle,

    #[error("permutation has no transit")]
    NoTransit,

    #[error("arc {0} -> {1} is not admissible")]
    InvalidArc(usize, usize),

    #[error("digraph is not alternating: vertex {0} is neither a double source nor a double sink")]
    NotAlternating(usize),

    #[error("interval length must be positive")]
    NonPositiveInterval,

    #[error("invalid simulation config: {0}")]
    InvalidConfig(&'static str),

    #[error("need at least two samples for a standard error, got {0}")]
    TooFewSamples(usize),

    #[error("cannot parse {0:?}")]
    Parse(String),

    /// Two routes that must agree did not.
    #[error("mismatch at n = {n}: {detail}")]
    Mismatch { n: usize, detail: String },
}
