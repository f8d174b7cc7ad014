use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("word mixes band generators (a1..a3) with classical generators (s1, s2)")]
    MixedAlphabet,

    #[error("symbols with different powers ({0} and {1}) are not comparable")]
    PowerMismatch(i64, i64),

    #[error("flype parameters {0} are degenerate")]
    DegenerateTriple(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("exploration bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("torus link parameters must satisfy r, s >= 2 (got {0}, {1})")]
    TorusDomain(i64, i64),

    #[error("closed formula evaluation failed: {0}")]
    Formula(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
