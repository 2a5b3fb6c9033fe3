use thiserror::Error;

/// Validation and usage errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("automaton must have at least one state")]
    NoStates,
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("transition table has {found} rows, expected {expected}")]
    RowCount { expected: usize, found: usize },
    #[error("row for state {state} has {found} entries, expected {expected}")]
    PartialRow {
        state: usize,
        expected: usize,
        found: usize,
    },
    #[error("state index {0} out of range")]
    StateOutOfRange(usize),
    #[error("letter index {0} out of range")]
    LetterOutOfRange(usize),
    #[error("duplicate letter name {0:?}")]
    DuplicateLetter(String),
    #[error("automaton is not partially ordered: cycle through states {states:?}")]
    NotPartiallyOrdered {
        /// Consecutive states of the cycle; the last one steps back to the first.
        states: Vec<usize>,
        /// `letters[i]` moves `states[i]` to the next state on the cycle.
        letters: Vec<usize>,
    },
    #[error("{what} requires {requirement}, got {value}")]
    Guard {
        what: &'static str,
        requirement: &'static str,
        value: usize,
    },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown letter {name:?} at position {position}")]
    UnknownLetter { name: String, position: usize },
    #[error("malformed automaton file: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
