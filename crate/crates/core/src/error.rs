use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable table: {0}")]
    BadVariables(String),
    #[error("negative exponent on non-laurent variable `{0}`")]
    NegativeExponent(String),
    #[error("ring elements belong to different contexts")]
    ContextMismatch,
    #[error("relation set is not supported over the integers: {0}")]
    NonConfluent(String),
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("carrier is not localized")]
    NotLocalized,
    #[error("magma has no bullet operation")]
    NoBullet,
    #[error("sequence index must be at least 1, got {0}")]
    BadIndex(i64),
    #[error("unknown magma `{0}`")]
    UnknownMagma(String),
    #[error("unknown normalizer `{0}`")]
    UnknownNormalizer(String),
    #[error("normalizer `{0}` is not declared by this magma")]
    UndeclaredNormalizer(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("diagram has no orientation")]
    MissingOrientation,
    #[error("unknown site {0}")]
    UnknownSite(usize),
    #[error("unknown arc {0}")]
    UnknownArc(u32),
    #[error("diagram still has sites")]
    SitesRemain,
    #[error("diagram has marked vertices")]
    HasMarkers,
    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
