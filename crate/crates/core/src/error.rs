use thiserror::Error;

/// Errors produced by the construction engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("unrealizable: {0}")]
    Unrealizable(String),

    #[error("x_1 < y_1; swap the sequences before reducing")]
    SwapRequired,

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Outcome of a certificate check. An empty problem list means the check passed.
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct Verdict {
    pub problems: Vec<String>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }

    pub(crate) fn fail(&mut self, msg: impl Into<String>) {
        self.problems.push(msg.into());
    }

    pub(crate) fn check(&mut self, cond: bool, msg: impl FnOnce() -> String) {
        if !cond {
            self.problems.push(msg());
        }
    }
}
