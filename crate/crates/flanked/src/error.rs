use thiserror::Error;

/// Errors reported by construction, parsing and the decision procedures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid symbol name {0:?}: names must be non-empty and contain no whitespace")]
    BadSymbolName(String),

    #[error("invalid state name {0:?}: names must be non-empty and contain no whitespace")]
    BadStateName(String),

    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(String),

    #[error("duplicate state name {0:?}")]
    DuplicateStateName(String),

    #[error("alphabet must not be empty")]
    EmptyAlphabet,

    #[error("state index {index} out of range: automaton has {count} states")]
    StateOutOfRange { index: usize, count: usize },

    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(String),

    #[error("automata have different alphabets")]
    AlphabetMismatch,

    #[error("flanking function does not fit the automaton it is paired with")]
    FlankMismatch,

    #[error("automaton has unreachable states; call trim first")]
    NotTrimmed,

    #[error("automaton has no initial state")]
    EmptyInitial,

    #[error("automaton is not deterministic")]
    NotDeterministic,

    #[error("class limit of {0} exceeded during subset construction")]
    ClassLimit(usize),

    #[error("word is not accepted by the automaton")]
    NotAccepted,

    #[error("bounded languages disagree on depth or alphabet")]
    BoundsMismatch,

    #[error("{0}")]
    Input(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
