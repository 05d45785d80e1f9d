//! Image data model, conforming (pad-to-fit) resizing, and the six-face
//! partition used by the rotation cipher.
//!
//! An image is split into a 3-row by 2-column tiling of equal sub-images,
//! assigned row-major to the cube faces U, F, R, L, D, B. Each face is
//! further tiled into square pixel blocks, the atomic unit moved by ring
//! rotations.

use crate::error::{Error, Result};

/// 8-bit grayscale image, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl Image {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyImage);
        }
        let expected = width * height;
        if pixels.len() != expected {
            return Err(Error::PixelCount {
                width,
                height,
                actual: pixels.len(),
                expected,
            });
        }
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    /// Image of constant grey level.
    pub fn filled(width: usize, height: usize, value: u8) -> Result<Self> {
        Self::new(width, height, vec![value; width * height])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixel_count(&self) -> usize {
        self.pixels.len()
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn into_pixels(self) -> Vec<u8> {
        self.pixels
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, value: u8) {
        self.pixels[y * self.width + x] = value;
    }

    /// Top-left crop. Panics if the requested size exceeds the image.
    pub fn crop(&self, width: usize, height: usize) -> Image {
        assert!(width <= self.width && height <= self.height && width > 0 && height > 0);
        if width == self.width && height == self.height {
            return self.clone();
        }
        let mut pixels = Vec::with_capacity(width * height);
        for y in 0..height {
            let row = y * self.width;
            pixels.extend_from_slice(&self.pixels[row..row + width]);
        }
        Image {
            width,
            height,
            pixels,
        }
    }
}

/// Block tiling shared by all six faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockGrid {
    /// Pixels per block edge.
    pub block_size: usize,
    /// Blocks per face row.
    pub cols: usize,
    /// Blocks per face column.
    pub rows: usize,
}

/// The six cube faces in the order they are assigned from the image tiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaceLabel {
    U,
    F,
    R,
    L,
    D,
    B,
}

impl FaceLabel {
    pub const ALL: [FaceLabel; 6] = [
        FaceLabel::U,
        FaceLabel::F,
        FaceLabel::R,
        FaceLabel::L,
        FaceLabel::D,
        FaceLabel::B,
    ];

    fn index(self) -> usize {
        match self {
            FaceLabel::U => 0,
            FaceLabel::F => 1,
            FaceLabel::R => 2,
            FaceLabel::L => 3,
            FaceLabel::D => 4,
            FaceLabel::B => 5,
        }
    }
}

impl std::fmt::Display for FaceLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = match self {
            FaceLabel::U => 'U',
            FaceLabel::F => 'F',
            FaceLabel::R => 'R',
            FaceLabel::L => 'L',
            FaceLabel::D => 'D',
            FaceLabel::B => 'B',
        };
        write!(f, "{c}")
    }
}

/// The six equally-sized faces plus their shared block grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: [Image; 6],
    grid: BlockGrid,
}

impl FaceSet {
    /// Builds a face set from six pre-cut faces. All faces must share the
    /// same dimensions, divisible by `block_size` on both axes.
    pub fn from_faces(faces: [Image; 6], block_size: usize) -> Result<Self> {
        if block_size == 0 {
            return Err(Error::InvalidBlockSize(0));
        }
        let (fw, fh) = (faces[0].width(), faces[0].height());
        if faces.iter().any(|f| f.width() != fw || f.height() != fh) {
            return Err(Error::FaceGeometry(
                "all six faces must have identical dimensions".into(),
            ));
        }
        if fw % block_size != 0 || fh % block_size != 0 {
            return Err(Error::FaceGeometry(format!(
                "face dimensions {fw}x{fh} are not divisible by block size {block_size}"
            )));
        }
        Ok(Self {
            grid: BlockGrid {
                block_size,
                cols: fw / block_size,
                rows: fh / block_size,
            },
            faces,
        })
    }

    pub fn face(&self, label: FaceLabel) -> &Image {
        &self.faces[label.index()]
    }

    pub fn face_mut(&mut self, label: FaceLabel) -> &mut Image {
        &mut self.faces[label.index()]
    }

    pub fn grid(&self) -> BlockGrid {
        self.grid
    }

    pub fn face_width(&self) -> usize {
        self.faces[0].width()
    }

    pub fn face_height(&self) -> usize {
        self.faces[0].height()
    }
}

/// Pads an image with edge replication until its height is a multiple of
/// `3 * block_size` and its width a multiple of `2 * block_size`, so it can
/// be split into six block-aligned faces. Conformant input is returned
/// unchanged; the operation never shrinks.
pub fn conform_image(img: &Image, block_size: usize) -> Result<Image> {
    if block_size == 0 {
        return Err(Error::InvalidBlockSize(0));
    }
    let target_w = img.width().div_ceil(2 * block_size) * 2 * block_size;
    let target_h = img.height().div_ceil(3 * block_size) * 3 * block_size;
    if target_w == img.width() && target_h == img.height() {
        return Ok(img.clone());
    }
    let mut pixels = Vec::with_capacity(target_w * target_h);
    for y in 0..target_h {
        let sy = y.min(img.height() - 1);
        for x in 0..target_w {
            let sx = x.min(img.width() - 1);
            pixels.push(img.get(sx, sy));
        }
    }
    Image::new(target_w, target_h, pixels)
}

/// Splits a conformant image into the six faces: a 3x2 tiling assigned
/// row-major as (U, F), (R, L), (D, B).
pub fn split_faces(img: &Image, block_size: usize) -> Result<FaceSet> {
    if block_size == 0 {
        return Err(Error::InvalidBlockSize(0));
    }
    if img.width() % (2 * block_size) != 0 || img.height() % (3 * block_size) != 0 {
        return Err(Error::NotConformant {
            width: img.width(),
            height: img.height(),
            block_size,
        });
    }
    let fw = img.width() / 2;
    let fh = img.height() / 3;
    let mut faces = Vec::with_capacity(6);
    for tile in 0..6 {
        let (tile_row, tile_col) = (tile / 2, tile % 2);
        let (x0, y0) = (tile_col * fw, tile_row * fh);
        let mut pixels = Vec::with_capacity(fw * fh);
        for y in 0..fh {
            for x in 0..fw {
                pixels.push(img.get(x0 + x, y0 + y));
            }
        }
        faces.push(Image::new(fw, fh, pixels)?);
    }
    let faces: [Image; 6] = faces.try_into().expect("exactly six faces");
    FaceSet::from_faces(faces, block_size)
}

/// Exact inverse of [`split_faces`]: reassembles the 3x2 face tiling.
pub fn merge_faces(fs: &FaceSet) -> Image {
    let fw = fs.face_width();
    let fh = fs.face_height();
    let (w, h) = (fw * 2, fh * 3);
    let mut pixels = vec![0u8; w * h];
    for (tile, label) in FaceLabel::ALL.iter().enumerate() {
        let (tile_row, tile_col) = (tile / 2, tile % 2);
        let (x0, y0) = (tile_col * fw, tile_row * fh);
        let face = fs.face(*label);
        for y in 0..fh {
            for x in 0..fw {
                pixels[(y0 + y) * w + (x0 + x)] = face.get(x, y);
            }
        }
    }
    Image::new(w, h, pixels).expect("merged dimensions are valid")
}
