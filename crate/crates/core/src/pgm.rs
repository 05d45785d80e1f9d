//! Binary PGM (P5) reader and writer for 8-bit grayscale images.
//!
//! Only the binary variant with maxval 255 is supported; the reader gives
//! pointed messages for the ASCII (P2) and color (P6) formats rather than
//! a generic parse failure. The writer emits a canonical header so a file
//! survives a read/write cycle byte for byte.

use crate::error::{Error, Result};
use crate::geometry::Image;

fn skip_whitespace_and_comments(bytes: &[u8], mut pos: usize) -> usize {
    loop {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if pos < bytes.len() && bytes[pos] == b'#' {
            while pos < bytes.len() && bytes[pos] != b'\n' {
                pos += 1;
            }
        } else {
            return pos;
        }
    }
}

fn parse_header_number(bytes: &[u8], pos: &mut usize, what: &str) -> Result<usize> {
    *pos = skip_whitespace_and_comments(bytes, *pos);
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if start == *pos {
        return Err(Error::Format(format!("expected {what} in PGM header")));
    }
    std::str::from_utf8(&bytes[start..*pos])
        .expect("ascii digits")
        .parse()
        .map_err(|_| Error::Format(format!("{what} out of range in PGM header")))
}

/// Parses a binary P5 PGM.
pub fn parse_pgm(bytes: &[u8]) -> Result<Image> {
    match bytes.get(0..2) {
        Some(b"P5") => {}
        Some(b"P2") => {
            return Err(Error::Format(
                "ASCII PGM (P2) is not supported; convert to binary P5".into(),
            ))
        }
        Some(b"P6") => {
            return Err(Error::Format(
                "P6 is a color PPM; only 8-bit grayscale P5 is supported".into(),
            ))
        }
        _ => return Err(Error::Format("not a PGM file (missing P5 magic)".into())),
    }
    let mut pos = 2;
    let width = parse_header_number(bytes, &mut pos, "width")?;
    let height = parse_header_number(bytes, &mut pos, "height")?;
    let maxval = parse_header_number(bytes, &mut pos, "maxval")?;
    if width == 0 || height == 0 {
        return Err(Error::Format(format!(
            "PGM dimensions must be positive, got {width}x{height}"
        )));
    }
    if maxval != 255 {
        return Err(Error::Format(format!(
            "only maxval 255 is supported, got {maxval}"
        )));
    }
    // A single whitespace byte separates the header from the raster.
    match bytes.get(pos) {
        Some(b) if b.is_ascii_whitespace() => pos += 1,
        _ => return Err(Error::Format("missing whitespace after maxval".into())),
    }
    let raster = &bytes[pos..];
    let expected = width * height;
    if raster.len() != expected {
        return Err(Error::Format(format!(
            "PGM raster has {} bytes, {width}x{height} needs exactly {expected}",
            raster.len()
        )));
    }
    Image::new(width, height, raster.to_vec())
}

/// Serializes to the canonical `P5\n{w} {h}\n255\n` form.
pub fn write_pgm(image: &Image) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", image.width(), image.height()).into_bytes();
    out.extend_from_slice(image.pixels());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_write_then_parse_round_trips() {
        let img = Image::new(3, 2, vec![0, 128, 255, 7, 9, 11]).unwrap();
        let bytes = write_pgm(&img);
        assert_eq!(&bytes[..13], b"P5\n3 2\n255\n\x00\x80");
        let back = parse_pgm(&bytes).unwrap();
        assert_eq!(back, img);
        // Canonical form is a fixed point of read-then-write.
        assert_eq!(write_pgm(&back), bytes);
    }

    #[test]
    fn comments_and_flexible_whitespace_are_accepted() {
        let mut bytes = Vec::new();
        bytes.extend_from_slice(b"P5 # a comment\n# another line\n  2\t1 # dims done\n255\n");
        bytes.extend_from_slice(&[10, 20]);
        let img = parse_pgm(&bytes).unwrap();
        assert_eq!((img.width(), img.height()), (2, 1));
        assert_eq!(img.pixels(), &[10, 20]);
    }

    #[test]
    fn ascii_and_color_variants_are_named_in_the_error() {
        let err = parse_pgm(b"P2\n1 1\n255\n0").unwrap_err();
        assert!(matches!(err, Error::Format(ref m) if m.contains("P2")));
        let err = parse_pgm(b"P6\n1 1\n255\nRGB").unwrap_err();
        assert!(matches!(err, Error::Format(ref m) if m.contains("P6")));
        assert!(parse_pgm(b"BM...").is_err());
        assert!(parse_pgm(b"").is_err());
    }

    #[test]
    fn nonstandard_maxval_is_rejected() {
        assert!(parse_pgm(b"P5\n1 1\n65535\n\x00\x00").is_err());
        assert!(parse_pgm(b"P5\n1 1\n254\n\x00").is_err());
    }

    #[test]
    fn raster_length_must_be_exact() {
        assert!(parse_pgm(b"P5\n2 2\n255\n\x01\x02\x03").is_err()); // one short
        assert!(parse_pgm(b"P5\n2 2\n255\n\x01\x02\x03\x04\x05").is_err()); // one long
    }

    #[test]
    fn zero_dimensions_are_rejected() {
        assert!(parse_pgm(b"P5\n0 4\n255\n").is_err());
        assert!(parse_pgm(b"P5\n4 0\n255\n").is_err());
    }

    #[test]
    fn truncated_headers_are_rejected() {
        assert!(parse_pgm(b"P5").is_err());
        assert!(parse_pgm(b"P5\n3").is_err());
        assert!(parse_pgm(b"P5\n3 2").is_err());
        assert!(parse_pgm(b"P5\n3 2\n255").is_err()); // no separator byte
    }

    proptest! {
        #[test]
        fn any_image_survives_a_round_trip(
            width in 1usize..40,
            height in 1usize..40,
            seed in any::<u64>(),
        ) {
            use rand_chacha::rand_core::{RngCore, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut pixels = vec![0u8; width * height];
            rng.fill_bytes(&mut pixels);
            let img = Image::new(width, height, pixels).unwrap();
            prop_assert_eq!(parse_pgm(&write_pgm(&img)).unwrap(), img);
        }
    }
}
