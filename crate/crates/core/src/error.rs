use thiserror::Error;

/// Errors produced by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("negation not on atom at position {pos}")]
    NegationNotOnAtom { pos: usize },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("dependence atom in a classical context")]
    DependenceAtom,

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("{what} is {actual}, limit is {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("order contains a cycle through state `{0}`")]
    Cycle(String),

    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("duplicate name `{0}`")]
    DuplicateName(String),

    #[error("undefined wire `{0}`")]
    UndefinedWire(String),

    #[error("gate `{0}` refers to itself")]
    CircuitCycle(String),

    #[error("expected {expected} inputs, got {actual}")]
    Arity { expected: usize, actual: usize },

    #[error("O is not a strict partial order: {0}")]
    NotStrictOrder(String),

    #[error("model is not declared as an rlex model")]
    OrderNotRlex,

    #[error("mode mismatch: {0}")]
    ModeMismatch(String),

    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}

impl Error {
    pub(crate) fn format(line: usize, msg: impl Into<String>) -> Self {
        Error::Format {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn guard(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::GuardExceeded {
            what,
            limit,
            actual,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
