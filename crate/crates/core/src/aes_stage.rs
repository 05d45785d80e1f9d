//! Diffusion stage and the `MCAE` container format.
//!
//! The scrambled pixel stream is encrypted with AES-256 in CBC mode under
//! PKCS#7 padding and wrapped in a small binary header that records the
//! original and conformed image dimensions plus the block size, so a
//! ciphertext file is self-describing for decryption.
//!
//! Wire layout (all integers big-endian):
//!
//! ```text
//! offset  size  field
//!      0     4  magic "MCAE"
//!      4     1  version (currently 1)
//!      5     4  width            original image width
//!      9     4  height           original image height
//!     13     4  conformed_width  padded width the cipher ran on
//!     17     4  conformed_height padded height the cipher ran on
//!     21     2  block_size
//!     23     4  payload_len
//!     27     -  payload          CBC ciphertext, block-aligned
//! ```

use crate::aes::{cbc_decrypt, cbc_encrypt, pkcs7_pad, pkcs7_unpad, Aes, BLOCK_SIZE};
use crate::error::{Error, Result};
use crate::geometry::Image;
use crate::keyschedule::AesMaterial;

pub const MAGIC: [u8; 4] = *b"MCAE";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 27;

/// An encrypted image: header metadata plus the CBC ciphertext of the
/// conformed pixel stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CipherImage {
    pub version: u8,
    pub width: u32,
    pub height: u32,
    pub conformed_width: u32,
    pub conformed_height: u32,
    pub block_size: u16,
    pub payload: Vec<u8>,
}

/// PKCS#7 always adds at least one byte, so a conformed pixel count of `p`
/// pads to the next block boundary past `p`.
fn expected_payload_len(pixel_count: usize) -> usize {
    (pixel_count / BLOCK_SIZE + 1) * BLOCK_SIZE
}

impl CipherImage {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + self.payload.len());
        out.extend_from_slice(&MAGIC);
        out.push(self.version);
        out.extend_from_slice(&self.width.to_be_bytes());
        out.extend_from_slice(&self.height.to_be_bytes());
        out.extend_from_slice(&self.conformed_width.to_be_bytes());
        out.extend_from_slice(&self.conformed_height.to_be_bytes());
        out.extend_from_slice(&self.block_size.to_be_bytes());
        out.extend_from_slice(&(self.payload.len() as u32).to_be_bytes());
        out.extend_from_slice(&self.payload);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < HEADER_LEN {
            return Err(Error::Format(format!(
                "ciphertext too short: {} bytes, header needs {HEADER_LEN}",
                bytes.len()
            )));
        }
        if bytes[0..4] != MAGIC {
            return Err(Error::Format("bad magic, not an MCAE file".into()));
        }
        let version = bytes[4];
        if version != VERSION {
            return Err(Error::Format(format!(
                "unsupported version {version}, expected {VERSION}"
            )));
        }
        let be32 = |off: usize| u32::from_be_bytes(bytes[off..off + 4].try_into().expect("4 bytes"));
        let width = be32(5);
        let height = be32(9);
        let conformed_width = be32(13);
        let conformed_height = be32(17);
        let block_size = u16::from_be_bytes(bytes[21..23].try_into().expect("2 bytes"));
        let payload_len = be32(23) as usize;

        if width == 0 || height == 0 || conformed_width == 0 || conformed_height == 0 {
            return Err(Error::Format("zero dimension in header".into()));
        }
        if width > conformed_width || height > conformed_height {
            return Err(Error::Format(format!(
                "original size {width}x{height} exceeds conformed size \
                 {conformed_width}x{conformed_height}"
            )));
        }
        if block_size == 0 {
            return Err(Error::Format("block size must be nonzero".into()));
        }
        if bytes.len() - HEADER_LEN != payload_len {
            return Err(Error::Format(format!(
                "payload length field says {payload_len} but {} bytes follow the header",
                bytes.len() - HEADER_LEN
            )));
        }
        let pixel_count = conformed_width as usize * conformed_height as usize;
        if payload_len != expected_payload_len(pixel_count) {
            return Err(Error::Format(format!(
                "payload length {payload_len} does not match {} conformed pixels \
                 (expected {})",
                pixel_count,
                expected_payload_len(pixel_count)
            )));
        }
        Ok(CipherImage {
            version,
            width,
            height,
            conformed_width,
            conformed_height,
            block_size,
            payload: bytes[HEADER_LEN..].to_vec(),
        })
    }

    /// The first `conformed_width x conformed_height` payload bytes viewed
    /// as an image, for statistical analysis of the ciphertext. The padding
    /// block at the tail is excluded.
    pub fn ciphertext_view(&self) -> Result<Image> {
        let w = self.conformed_width as usize;
        let h = self.conformed_height as usize;
        if self.payload.len() < w * h {
            return Err(Error::Format(format!(
                "payload has {} bytes, ciphertext view needs {}",
                self.payload.len(),
                w * h
            )));
        }
        Image::new(w, h, self.payload[..w * h].to_vec())
    }
}

/// Encrypts an image's pixel stream (row-major) with AES-256-CBC. The
/// header records the image as both original and conformed size with block
/// size 1; callers wrapping a scrambled conformed image overwrite those
/// fields with the pipeline's own geometry.
pub fn aes_encrypt_pixels(image: &Image, material: &AesMaterial) -> Result<CipherImage> {
    let width =
        u32::try_from(image.width()).map_err(|_| Error::Format("width exceeds u32".into()))?;
    let height =
        u32::try_from(image.height()).map_err(|_| Error::Format("height exceeds u32".into()))?;
    let cipher = Aes::new(&material.key)?;
    let mut payload = pkcs7_pad(image.pixels().to_vec());
    cbc_encrypt(&cipher, &material.iv, &mut payload);
    Ok(CipherImage {
        version: VERSION,
        width,
        height,
        conformed_width: width,
        conformed_height: height,
        block_size: 1,
        payload,
    })
}

/// Decrypts the payload back to the conformed image the cipher ran on,
/// without cropping.
pub(crate) fn decrypt_conformed(ci: &CipherImage, material: &AesMaterial) -> Result<Image> {
    let cipher = Aes::new(&material.key)?;
    let mut data = ci.payload.clone();
    cbc_decrypt(&cipher, &material.iv, &mut data)?;
    let pixels = pkcs7_unpad(&data)?.to_vec();
    let w = ci.conformed_width as usize;
    let h = ci.conformed_height as usize;
    if pixels.len() != w * h {
        return Err(Error::PixelCount {
            width: w,
            height: h,
            actual: pixels.len(),
            expected: w * h,
        });
    }
    Image::new(w, h, pixels)
}

/// Decrypts and crops back to the original dimensions in the header.
pub fn aes_decrypt_pixels(ci: &CipherImage, material: &AesMaterial) -> Result<Image> {
    let conformed = decrypt_conformed(ci, material)?;
    Ok(conformed.crop(ci.width as usize, ci.height as usize))
}
