use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("regex syntax error at offset {position}: {message}")]
    RegexSyntax { position: usize, message: String },

    #[error("automaton format error on line {line}: {message}")]
    AutomatonFormat { line: usize, message: String },

    #[error("relation {0} has infinitely many related strings; a length bound is required")]
    MissingLengthBound(&'static str),

    #[error("relation {0} is not supported here")]
    UnsupportedRelation(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
