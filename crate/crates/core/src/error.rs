use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed braid token `{token}`: {reason}")]
    MalformedToken { token: String, reason: &'static str },

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("strand count must be at least {min}, got {strands}")]
    TooFewStrands { strands: usize, min: usize },

    #[error("cover degree must be at least 2, got {0}")]
    InvalidDegree(usize),

    #[error("cover degree {p} exceeds the configured maximum {max}")]
    DegreeTooLarge { p: usize, max: usize },

    #[error("curve label (sheet {sheet}, strand {strand}) invalid for p={p}, n={n}")]
    InvalidCurve { sheet: usize, strand: usize, p: usize, n: usize },

    #[error("braid closure has {0} components, expected a knot")]
    NotAKnot(usize),

    #[error("certificate is on {cert} strands but the braid has {braid}")]
    CertificateStrands { cert: usize, braid: usize },

    #[error("inconsistent classification: {0}")]
    InconsistentClassification(String),

    #[error("components share time slot {0}")]
    EqualTimes(usize),

    #[error("unknown export format `{0}`")]
    UnknownFormat(String),

    #[error("unknown catalog family `{0}`")]
    UnknownFamily(String),

    #[error("bad family parameters: {0}")]
    BadParams(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("json: {0}")]
    Json(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
