use alloc::string::String;

/// Errors raised by the doodle operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("disconnected")]
    Disconnected,
    #[error("no crossings")]
    NoCrossings,
    #[error("degenerate")]
    Degenerate,
    #[error("too few crossings")]
    TooFewCrossings,
    #[error("not minimal")]
    NotMinimal,
    #[error("not 2-connected")]
    NotTwoConnected,
    #[error("not prime or not minimal")]
    NotPrimeOrNotMinimal,
    #[error("not a quadrangulation")]
    NotQuadrangulation,
    #[error("unrealizable code")]
    UnrealizableCode,
    #[error("not realizable as drawn")]
    NotRealizableAsDrawn,
    #[error("invalid slot pairing: {0}")]
    InvalidPairing(String),
    #[error("malformed {what}: {detail}")]
    Malformed { what: &'static str, detail: String },
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn malformed(what: &'static str, detail: impl Into<String>) -> Error {
    Error::Malformed {
        what,
        detail: detail.into(),
    }
}
