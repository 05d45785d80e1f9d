//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("secret key must not be empty")]
    EmptyKey,

    #[error("key byte index {index} out of range for key of length {len}")]
    KeyIndex { index: usize, len: usize },

    #[error("block size {0} is invalid (must be at least 1)")]
    InvalidBlockSize(usize),

    #[error("image dimensions must be nonzero")]
    EmptyImage,

    #[error("pixel buffer holds {actual} bytes, expected {width}x{height} = {expected}")]
    PixelCount {
        width: usize,
        height: usize,
        actual: usize,
        expected: usize,
    },

    #[error(
        "{width}x{height} image does not split into six faces with block size {block_size} \
         (height must be a multiple of 3*block_size, width a multiple of 2*block_size)"
    )]
    NotConformant {
        width: usize,
        height: usize,
        block_size: usize,
    },

    #[error("invalid face set: {0}")]
    FaceGeometry(String),

    #[error("ring index {index} out of bounds ({limit} rings in this orientation)")]
    RingIndex { index: usize, limit: usize },

    #[error("rotation table was built for a different block grid")]
    TableMismatch,

    #[error("decryption failed: bad padding (wrong key or corrupted payload)")]
    BadPadding,

    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),

    #[error("{0}")]
    Format(String),

    #[error("{0}")]
    Analysis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
