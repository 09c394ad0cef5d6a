//! Command implementations for the `plof` binary, kept in a library so the
//! map-file format, the word grammar and the exit-code mapping are testable
//! without spawning processes.

pub mod commands;
pub mod mapfile;
pub mod svg;
pub mod trace;
pub mod wordsyntax;

/// Failures before a command can do its real work, split by exit code:
/// file and format problems exit 2, semantically invalid maps exit 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CmdError {
    Parse(String),
    Invalid(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Parse(_) => 2,
            CmdError::Invalid(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CmdError::Parse(m) | CmdError::Invalid(m) => m,
        }
    }
}
