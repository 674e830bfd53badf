use std::io;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("pattern syntax error at byte {offset}: {msg}")]
    PatternSyntax { offset: usize, msg: String },

    #[error("pattern validation error at byte {offset}: {msg}")]
    PatternValidation { offset: usize, msg: String },

    #[error("hierarchy line {line}: {msg}")]
    HierarchyFormat { line: usize, msg: String },

    #[error("cycle in the parent relation involving item '{gid}'")]
    HierarchyCycle { gid: String },

    #[error("data line {line}: unknown item '{token}'")]
    UnknownItem { line: usize, token: String },

    #[error("pattern references unknown item '{gid}'")]
    UnknownPatternItem { gid: String },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}
