use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {input:?} as a rational number")]
    ParseRational { input: String },

    /// An index outside the range on which a family is defined.
    #[error("{family} is not defined for n = {n}")]
    UndefinedIndex { family: &'static str, n: u64 },

    /// A structural identity that must hold did not. Never truncated or
    /// papered over: the computation is aborted.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
