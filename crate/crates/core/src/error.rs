use thiserror::Error;

/// Errors raised by the library. Every bijection validates its input and
/// reports membership failures through one of these variants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{0} is not an ascent sequence")]
    NotAscentSequence(String),

    #[error("{0} is not a restricted ascent sequence")]
    NotRestricted(String),

    #[error("{0} is not a restricted growth function")]
    NotRgf(String),

    #[error("invalid pattern {0}")]
    InvalidPattern(String),

    #[error("pattern {0} has repeated letters")]
    RepeatedLetters(String),

    #[error("{0} is not a permutation")]
    NotPermutation(String),

    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    #[error("{word} contains the pattern {pattern}")]
    ContainsPattern { word: String, pattern: String },

    #[error("{0} is not a ternary word with an even number of 2's")]
    InvalidTernary(String),

    #[error("{0} is not the modified form of any ascent sequence")]
    NotModified(String),

    #[error("{0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }

    pub(crate) fn contains(word: impl ToString, pattern: impl ToString) -> Self {
        Error::ContainsPattern {
            word: word.to_string(),
            pattern: pattern.to_string(),
        }
    }
}
