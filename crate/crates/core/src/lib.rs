//! Magic-cube block-rotation image cipher with an AES diffusion stage and
//! a statistical evaluation suite.
//!
//! A grayscale image is padded so it tiles into six equal faces (the cube),
//! each face is cut into square pixel blocks, and key-derived ring
//! rotations shuffle blocks around the cube — the confusion stage. The
//! shuffled pixel stream is then encrypted with AES-256-CBC — the
//! diffusion stage. The [`analysis`] module measures histograms,
//! adjacent-pixel correlation, entropy, and NPCR/UACI differential
//! metrics, and [`pipeline::run_experiment`] produces the rotation-only,
//! AES-only, and combined variants side by side for comparison.
//!
//! ```
//! use cubecipher::{decrypt, encrypt, Image, SecretKey};
//!
//! let img = Image::new(8, 6, (0..48).collect()).unwrap();
//! let key = SecretKey::new(b"a passphrase".to_vec()).unwrap();
//! let ciphertext = encrypt(&img, &key, 2).unwrap();
//! assert_eq!(decrypt(&ciphertext, &key).unwrap(), img);
//! ```

pub mod aes;
pub mod aes_stage;
pub mod analysis;
pub mod error;
pub mod geometry;
pub mod keyschedule;
pub mod pgm;
pub mod pipeline;
pub mod rotation;

pub use aes_stage::{aes_decrypt_pixels, aes_encrypt_pixels, CipherImage};
pub use analysis::{
    analyze_image, correlation_exhaustive, correlation_sampled, differential, entropy,
    exhaustive_pairs, histogram, pairs_to_csv, report, sample_pairs, CorrelationResult,
    DifferentialResult, EntropyResult, Histogram, ImageMetrics, MetricsReport, Orientation,
    ReportRow,
};
pub use error::{Error, Result};
pub use geometry::{
    conform_image, merge_faces, split_faces, BlockGrid, FaceLabel, FaceSet, Image,
};
pub use keyschedule::{
    build_rotation_table, derive_aes_key, key_column_index, AesMaterial, RotationTable,
    SecretKey, TABLE_COLS,
};
pub use pgm::{parse_pgm, write_pgm};
pub use pipeline::{
    decrypt, encrypt, run_differential, run_experiment, CaseConfig, ExperimentBundle,
};
pub use rotation::{
    rotate_ring, scramble, unscramble, Ring, RingOrientation, COLUMN_RING_FACES, ROW_RING_FACES,
};
