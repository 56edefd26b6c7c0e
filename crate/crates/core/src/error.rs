use std::path::PathBuf;

/// Errors surfaced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A box violated the `x2 > x1 && y2 > y1` invariant.
    #[error("degenerate box [{x1}, {y1}, {x2}, {y2}]: width and height must be strictly positive")]
    DegenerateBox { x1: f64, y1: f64, x2: f64, y2: f64 },

    /// A configuration value is out of its documented range.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Tensor shapes disagree with the anchor layout or head contract.
    #[error("shape contract violated: {0}")]
    ShapeMismatch(String),

    /// Input data contained NaN or infinity.
    #[error("non-finite input: {0}")]
    NonFiniteInput(String),

    /// A metric is undefined for the given inputs (e.g. single-class AUC).
    #[error("metric undefined: {0}")]
    UndefinedMetric(String),

    /// A dataset file could not be parsed.
    #[error("format error in {path}:{line}: {message}")]
    Format {
        path: PathBuf,
        line: usize,
        message: String,
    },

    /// Synthetic generation could not place instances within the retry budget.
    #[error("generation failed: {0}")]
    Generation(String),

    /// A checkpoint's stored configuration disagrees with the model.
    #[error("checkpoint config mismatch: {0}")]
    ConfigMismatch(String),

    /// A checkpoint file is malformed.
    #[error("corrupt checkpoint: {0}")]
    CorruptCheckpoint(String),

    /// Training diverged.
    #[error("non-finite loss at epoch {epoch}, sample {sample}")]
    NonFiniteLoss { epoch: usize, sample: usize },

    #[error("image error: {0}")]
    Image(#[from] image::ImageError),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
