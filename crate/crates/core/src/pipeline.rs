//! End-to-end cipher pipeline and the three-branch experiment driver.
//!
//! Encryption composes the stages: conform the image so it tiles into six
//! block-aligned faces, scramble the faces with key-driven ring rotations,
//! reassemble, then AES-encrypt the pixel stream. Decryption inverts them
//! in reverse order using only the ciphertext header and the key.
//!
//! The experiment driver additionally keeps the intermediate products —
//! the AES-only ciphertext of the unrotated image and the rotation-only
//! image — so the statistical suite can compare all three against the
//! original.

use crate::aes_stage::{aes_encrypt_pixels, decrypt_conformed, CipherImage};
use crate::analysis::{differential, DifferentialResult};
use crate::error::{Error, Result};
use crate::geometry::{conform_image, merge_faces, split_faces, Image};
use crate::keyschedule::{build_rotation_table, derive_aes_key, SecretKey};
use crate::rotation::{scramble, unscramble};
use serde::Serialize;

/// Geometry of one experiment case: how the original image divides into
/// blocks, and the conformed size the cipher actually ran on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CaseConfig {
    pub block_size: usize,
    /// Whole blocks across the original width.
    pub blocks_wide: usize,
    /// Whole blocks down the original height.
    pub blocks_high: usize,
    pub original_width: usize,
    pub original_height: usize,
    pub conformed_width: usize,
    pub conformed_height: usize,
}

impl CaseConfig {
    fn new(original: &Image, conformed: &Image, block_size: usize) -> Self {
        CaseConfig {
            block_size,
            blocks_wide: original.width() / block_size,
            blocks_high: original.height() / block_size,
            original_width: original.width(),
            original_height: original.height(),
            conformed_width: conformed.width(),
            conformed_height: conformed.height(),
        }
    }
}

/// The four comparison images of one experiment run, all derived from the
/// same conformed original under the same key.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentBundle {
    /// Conformed plain image (the rotation stage's actual input).
    pub original: Image,
    /// AES over the conformed image with no rotation stage.
    pub aes_only: CipherImage,
    /// Rotation stage only, no AES.
    pub rotated: Image,
    /// Full pipeline: rotation then AES.
    pub integrated: CipherImage,
    pub case_config: CaseConfig,
}

fn check_block_size(block_size: usize) -> Result<u16> {
    u16::try_from(block_size)
        .ok()
        .filter(|&b| b > 0)
        .ok_or(Error::InvalidBlockSize(block_size))
}

/// Runs the confusion stage on an already-conformed image: split into
/// faces, scramble every ring per the key-derived table, reassemble.
fn rotate_conformed(conformed: &Image, key: &SecretKey, block_size: usize) -> Result<Image> {
    let faces = split_faces(conformed, block_size)?;
    let table = build_rotation_table(key, faces.grid());
    let scrambled = scramble(&faces, &table, key)?;
    Ok(merge_faces(&scrambled))
}

/// Full encryption: conform, scramble, AES. The header records the
/// original dimensions and block size so decryption is self-contained.
pub fn encrypt(img: &Image, key: &SecretKey, block_size: usize) -> Result<CipherImage> {
    let block_size_u16 = check_block_size(block_size)?;
    let conformed = conform_image(img, block_size)?;
    let rotated = rotate_conformed(&conformed, key, block_size)?;
    let material = derive_aes_key(key);
    let mut ci = aes_encrypt_pixels(&rotated, &material)?;
    ci.width = img.width() as u32;
    ci.height = img.height() as u32;
    ci.block_size = block_size_u16;
    Ok(ci)
}

/// Full decryption: AES, unscramble, crop back to the original size. All
/// geometry comes from the ciphertext header.
pub fn decrypt(ci: &CipherImage, key: &SecretKey) -> Result<Image> {
    let material = derive_aes_key(key);
    let conformed = decrypt_conformed(ci, &material)?;
    let block_size = ci.block_size as usize;
    let faces = split_faces(&conformed, block_size)?;
    let table = build_rotation_table(key, faces.grid());
    let restored = unscramble(&faces, &table, key)?;
    let merged = merge_faces(&restored);
    Ok(merged.crop(ci.width as usize, ci.height as usize))
}

/// Produces the three encrypted variants of one image plus the conformed
/// original, for side-by-side statistical comparison.
pub fn run_experiment(img: &Image, key: &SecretKey, block_size: usize) -> Result<ExperimentBundle> {
    let block_size_u16 = check_block_size(block_size)?;
    let conformed = conform_image(img, block_size)?;
    let material = derive_aes_key(key);

    let aes_only = aes_encrypt_pixels(&conformed, &material)?;
    let rotated = rotate_conformed(&conformed, key, block_size)?;
    let mut integrated = aes_encrypt_pixels(&rotated, &material)?;
    integrated.width = img.width() as u32;
    integrated.height = img.height() as u32;
    integrated.block_size = block_size_u16;

    let case_config = CaseConfig::new(img, &conformed, block_size);
    Ok(ExperimentBundle {
        original: conformed,
        aes_only,
        rotated,
        integrated,
        case_config,
    })
}

/// One differential trial: flips a single plaintext pixel and measures
/// NPCR/UACI between the two resulting ciphertext streams.
///
/// CBC diffuses a change only from its block onward, so the flipped pixel
/// is chosen as the one the scramble stage maps to stream position 0: a
/// marker image with a single bright pixel at position 0 is unscrambled,
/// and wherever the marker lands is the preimage of position 0. Flipping
/// that pixel perturbs the first AES block, and the chaining carries the
/// change through the entire ciphertext.
pub fn run_differential(
    img: &Image,
    key: &SecretKey,
    block_size: usize,
) -> Result<DifferentialResult> {
    check_block_size(block_size)?;
    let conformed = conform_image(img, block_size)?;

    let mut marker = Image::filled(conformed.width(), conformed.height(), 0)?;
    marker.set(0, 0, 255);
    let faces = split_faces(&marker, block_size)?;
    let table = build_rotation_table(key, faces.grid());
    let unscrambled = unscramble(&faces, &table, key)?;
    let merged = merge_faces(&unscrambled);
    let p = merged
        .pixels()
        .iter()
        .position(|&v| v == 255)
        .expect("permutation preserves the marker pixel");

    let mut tweaked = conformed.clone();
    let (x, y) = (p % conformed.width(), p / conformed.width());
    tweaked.set(x, y, conformed.get(x, y).wrapping_add(1));

    let c1 = encrypt(&conformed, key, block_size)?;
    let c2 = encrypt(&tweaked, key, block_size)?;
    differential(&c1.ciphertext_view()?, &c2.ciphertext_view()?)
}
