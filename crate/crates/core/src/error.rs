use thiserror::Error;

/// Errors raised anywhere in the pipeline.
///
/// The CLI maps these onto exit codes: input problems exit with 2,
/// budget exhaustion with 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error("inconsistent presentation: {0}")]
    Inconsistent(String),

    #[error("invalid permutation input: {0}")]
    Permutation(String),

    #[error("{what} budget exceeded: limit {limit}, reached {reached}{detail}")]
    Budget {
        what: &'static str,
        limit: usize,
        reached: usize,
        detail: String,
    },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("exponent {k} is not coprime to conductor {n}")]
    NotCoprime { k: i64, n: u32 },

    #[error("no Ford pair found for character {0}")]
    NoFordPair(usize),

    #[error("not found: {0}")]
    NotFound(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by bad user input rather than by the engine.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::Presentation(_)
                | Error::Inconsistent(_)
                | Error::Permutation(_)
                | Error::NotFound(_)
                | Error::Io(_)
                | Error::Json(_)
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::Presentation(_) => "presentation",
            Error::Inconsistent(_) => "inconsistent",
            Error::Permutation(_) => "permutation",
            Error::Budget { .. } => "budget",
            Error::Contract(_) => "contract",
            Error::NotCoprime { .. } => "not-coprime",
            Error::NoFordPair(_) => "no-ford-pair",
            Error::NotFound(_) => "not-found",
            Error::Internal(_) => "internal",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
