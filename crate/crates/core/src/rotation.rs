//! Block-ring rotation: the confusion stage of the cipher.
//!
//! The six faces of the cube are threaded by two families of rings. A *row
//! ring* collects one block-row from each of the faces F, U, B, D (in that
//! traversal order); a *column ring* collects one block-column from each of
//! F, R, B, L. Rotating a ring moves whole blocks along it cyclically, the
//! way a face turn of a physical puzzle cube carries stickers around the
//! adjacent faces. Rings of the same orientation are disjoint, but row and
//! column rings overlap on every face, so the two phases of a scramble pass
//! do not commute and must be undone in reverse order.

use crate::error::{Error, Result};
use crate::geometry::{BlockGrid, FaceLabel, FaceSet, Image};
use crate::keyschedule::{key_column_index, RotationTable, SecretKey};

/// Face traversal order for row rings.
pub const ROW_RING_FACES: [FaceLabel; 4] =
    [FaceLabel::F, FaceLabel::U, FaceLabel::B, FaceLabel::D];

/// Face traversal order for column rings.
pub const COLUMN_RING_FACES: [FaceLabel; 4] =
    [FaceLabel::F, FaceLabel::R, FaceLabel::B, FaceLabel::L];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOrientation {
    Row,
    Column,
}

/// One ring: a row ring at block-row `index`, or a column ring at
/// block-column `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ring {
    pub orientation: RingOrientation,
    pub index: usize,
}

impl Ring {
    pub fn row(index: usize) -> Self {
        Ring { orientation: RingOrientation::Row, index }
    }

    pub fn column(index: usize) -> Self {
        Ring { orientation: RingOrientation::Column, index }
    }
}

fn read_block(face: &Image, grid: BlockGrid, block_col: usize, block_row: usize) -> Vec<u8> {
    let b = grid.block_size;
    let mut out = Vec::with_capacity(b * b);
    for y in 0..b {
        for x in 0..b {
            out.push(face.get(block_col * b + x, block_row * b + y));
        }
    }
    out
}

fn write_block(
    face: &mut Image,
    grid: BlockGrid,
    block_col: usize,
    block_row: usize,
    data: &[u8],
) {
    let b = grid.block_size;
    for y in 0..b {
        for x in 0..b {
            face.set(block_col * b + x, block_row * b + y, data[y * b + x]);
        }
    }
}

/// The (face, block-column, block-row) slots a ring passes through, in
/// traversal order.
fn ring_slots(grid: BlockGrid, ring: Ring) -> Result<Vec<(FaceLabel, usize, usize)>> {
    match ring.orientation {
        RingOrientation::Row => {
            if ring.index >= grid.rows {
                return Err(Error::RingIndex { index: ring.index, limit: grid.rows });
            }
            let mut slots = Vec::with_capacity(4 * grid.cols);
            for face in ROW_RING_FACES {
                for k in 0..grid.cols {
                    slots.push((face, k, ring.index));
                }
            }
            Ok(slots)
        }
        RingOrientation::Column => {
            if ring.index >= grid.cols {
                return Err(Error::RingIndex { index: ring.index, limit: grid.cols });
            }
            let mut slots = Vec::with_capacity(4 * grid.rows);
            for face in COLUMN_RING_FACES {
                for k in 0..grid.rows {
                    slots.push((face, ring.index, k));
                }
            }
            Ok(slots)
        }
    }
}

/// Rotates one ring in place by `count` slots in the traversal direction:
/// the block in slot `i` moves to slot `(i + count) % len`. Blocks travel
/// intact; no pixel inside a block changes.
pub fn rotate_ring(faces: &mut FaceSet, ring: Ring, count: usize) -> Result<()> {
    let grid = faces.grid();
    let slots = ring_slots(grid, ring)?;
    let len = slots.len();
    let shift = count % len;
    if shift == 0 {
        return Ok(());
    }
    let blocks: Vec<Vec<u8>> = slots
        .iter()
        .map(|&(face, bc, br)| read_block(faces.face(face), grid, bc, br))
        .collect();
    for (i, block) in blocks.iter().enumerate() {
        let (face, bc, br) = slots[(i + shift) % len];
        write_block(faces.face_mut(face), grid, bc, br, block);
    }
    Ok(())
}

/// Scrambles the faces: for each key byte in order, the byte selects a
/// table column, then every row ring rotates by its table entry for that
/// column, then every column ring does the same.
pub fn scramble(faces: &FaceSet, table: &RotationTable, key: &SecretKey) -> Result<FaceSet> {
    if table.grid() != faces.grid() {
        return Err(Error::TableMismatch);
    }
    let grid = faces.grid();
    let mut out = faces.clone();
    for j in 0..key.len() {
        let col = key_column_index(key, j)?;
        for i in 0..grid.rows {
            rotate_ring(&mut out, Ring::row(i), table.row_rotation(i, col))?;
        }
        for i in 0..grid.cols {
            rotate_ring(&mut out, Ring::column(i), table.col_rotation(i, col))?;
        }
    }
    Ok(out)
}

/// Exact inverse of [`scramble`]: key bytes in reverse order, column rings
/// undone before row rings, every rotation count replaced by its cyclic
/// inverse.
pub fn unscramble(faces: &FaceSet, table: &RotationTable, key: &SecretKey) -> Result<FaceSet> {
    if table.grid() != faces.grid() {
        return Err(Error::TableMismatch);
    }
    let grid = faces.grid();
    let row_len = 4 * grid.cols;
    let col_len = 4 * grid.rows;
    let mut out = faces.clone();
    for j in (0..key.len()).rev() {
        let col = key_column_index(key, j)?;
        for i in 0..grid.cols {
            let count = table.col_rotation(i, col);
            rotate_ring(&mut out, Ring::column(i), (col_len - count % col_len) % col_len)?;
        }
        for i in 0..grid.rows {
            let count = table.row_rotation(i, col);
            rotate_ring(&mut out, Ring::row(i), (row_len - count % row_len) % row_len)?;
        }
    }
    Ok(out)
}
