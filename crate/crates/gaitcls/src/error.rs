use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("silhouette has no foreground pixels")]
    EmptySilhouette,

    #[error("bounding box is degenerate or lies outside the frame")]
    DegenerateBox,

    #[error("shape mismatch: expected {expected}, got {actual}")]
    ShapeMismatch { expected: String, actual: String },

    #[error("empty frame window")]
    EmptyWindow,

    #[error("moving-average window must be odd and >= 1, got {0}")]
    EvenWindow(usize),

    #[error("no training data for view {0}")]
    MissingView(u16),

    #[error("view {0} is not present in the model")]
    UnknownView(u16),

    #[error("training set does not contain both classes")]
    SingleClass,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("need at least two subjects per gender, got {females} female / {males} male")]
    InsufficientSubjects { females: usize, males: usize },

    /// Wraps a per-view failure so callers can tell which view broke.
    #[error("view {view}: {source}")]
    View {
        view: u16,
        #[source]
        source: Box<Error>,
    },

    #[error("manifest not found at {0}")]
    MissingManifest(PathBuf),

    #[error("manifest line {line}: {reason}")]
    BadManifest { line: usize, reason: String },

    #[error("subject {0} is missing from the manifest")]
    UnknownGender(String),

    #[error("cannot decode image {path}: {reason}")]
    CorruptImage { path: PathBuf, reason: String },

    #[error("frame index out of order at {0}")]
    OutOfOrderFrame(PathBuf),

    #[error("unsupported model file version {found} (expected {expected})")]
    VersionMismatch { found: u32, expected: u32 },

    #[error("model file checksum mismatch")]
    ChecksumMismatch,

    #[error("model file shape inconsistency: {0}")]
    ShapeInconsistency(String),

    #[error("invalid model file: {0}")]
    MalformedModel(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
