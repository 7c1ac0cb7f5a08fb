//! Error type shared by every module in the crate.

/// Crate-wide result alias.
pub type Result<V> = std::result::Result<V, Error>;

/// Everything that can go wrong inside the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Two tensors (or a tensor and a layout) disagree on shape.
    #[error("shape mismatch in {op}: left {left:?}, right {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: Vec<usize>,
        right: Vec<usize>,
    },

    /// A vector norm fell below the degeneracy threshold where cosine
    /// similarity is undefined.
    #[error("degenerate norm {norm:.3e} <= {eps:.0e} in {op}")]
    DegenerateNorm { op: &'static str, norm: f64, eps: f64 },

    /// An integer code handed to `dequantize` lies outside `[0, 2^N - 1]`.
    #[error("quantized code {code} out of range [0, {max}]")]
    CodeOutOfRange { code: i64, max: u32 },

    /// `forward_quant` was asked to run a layer with no quantization state.
    #[error("missing quantization state for layer `{layer}`")]
    MissingLayerState { layer: String },

    /// Stored parameters do not fit the model the caller provided.
    #[error("dimension mismatch for layer `{layer}`: {detail}")]
    DimMismatch { layer: String, detail: String },

    /// The calibration loss became non-finite.
    #[error("calibration diverged at iteration {iteration}: {detail}")]
    Divergence { iteration: usize, detail: String },

    /// A configuration value failed validation; `field` names the culprit.
    #[error("config error in field `{field}`: {message}")]
    Config { field: String, message: String },

    /// Parameter archive is malformed, truncated, or from a newer format.
    #[error("archive error: {0}")]
    Archive(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            message: message.into(),
        }
    }
}
