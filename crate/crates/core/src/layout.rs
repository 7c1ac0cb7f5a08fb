//! Token layout of a video latent: `n = s·t` token rows, grouped into `t`
//! contiguous frames of `s` spatial tokens each.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::Tensor;

/// Frame structure of an `n × d` latent. Frame `i` (0-based) owns token
/// rows `[i·s, (i+1)·s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FrameLayout {
    /// Spatial tokens per frame.
    pub spatial: usize,
    /// Number of frames (temporal tokens).
    pub frames: usize,
}

impl FrameLayout {
    pub fn new(spatial: usize, frames: usize) -> Result<Self> {
        if spatial < 1 {
            return Err(Error::config("spatial", "must be >= 1"));
        }
        if frames < 1 {
            return Err(Error::config("frames", "must be >= 1"));
        }
        Ok(Self { spatial, frames })
    }

    /// Total token count `n = s·t`.
    pub fn tokens(&self) -> usize {
        self.spatial * self.frames
    }

    /// Row range of frame `i` (0-based).
    pub fn frame_rows(&self, i: usize) -> std::ops::Range<usize> {
        debug_assert!(i < self.frames);
        i * self.spatial..(i + 1) * self.spatial
    }

    /// Frame index that owns token row `row`.
    pub fn frame_of(&self, row: usize) -> usize {
        debug_assert!(row < self.tokens());
        row / self.spatial
    }

    /// Check that a matrix has one row per token.
    pub fn check_tokens<T: Scalar>(&self, x: &Tensor<T>, op: &'static str) -> Result<()> {
        if !x.is_matrix() || x.rows() != self.tokens() {
            return Err(Error::ShapeMismatch {
                op,
                left: x.shape().to_vec(),
                right: vec![self.tokens()],
            });
        }
        Ok(())
    }

    /// Copy frame `i` of `x` into a flat vector (row-major over the block).
    pub fn flatten_frame<T: Scalar>(&self, x: &Tensor<T>, i: usize) -> Vec<T> {
        let d = x.cols();
        let rows = self.frame_rows(i);
        x.data()[rows.start * d..rows.end * d].to_vec()
    }
}
