use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The leading constant of a twisted expansion vanished, so the
    /// sign analysis that produces the linear bounds cannot proceed.
    #[error("degenerate leading constant C_lambda = 0 for lambda = ({lambda}), n = {n}")]
    DegenerateConstant { lambda: String, n: u32 },

    #[error("internal integrity error: {0}")]
    Integrity(String),

    #[error("empty box: w = {w} is below -(n+1)v = {min}")]
    EmptyBox { w: String, min: String },

    #[error("variety `{0}` does not carry an ample polarization")]
    NotAmple(String),

    #[error("class is not known to be nef on `{0}`")]
    NotNef(String),

    #[error("class is not expressible in the ring presentation of `{0}`")]
    NotInRing(String),

    #[error("unknown variety id `{0}`")]
    UnknownVariety(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed catalog: {0}")]
    Catalog(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
