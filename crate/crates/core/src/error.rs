use crate::report::Report;

/// Everything that can go wrong while building or checking an object.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed or inconsistent input data.
    #[error("input error: {0}")]
    Input(String),
    /// A materialization would exceed the configured entry budget.
    #[error("materializing {needed} entries exceeds the budget of {budget}")]
    Budget { needed: usize, budget: usize },
    /// A structural requirement of a construction does not hold.
    #[error("{0}")]
    Precondition(String),
    /// A checked axiom failed; the report names the counterexample.
    #[error("axiom failure: {}", .0.summary())]
    Axiom(Box<Report>),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Error {
        Error::Precondition(msg.into())
    }
}
