//! Key-derived material: the rotation table driving the permutation stage
//! and the AES key/IV driving the diffusion stage.
//!
//! Every table cell is a keyed hash of its own coordinates, so the whole
//! table changes whenever any passphrase byte changes. The hash is SHA-256
//! over `row_index_be32 || col_index_be32 || passphrase`, with the first
//! four digest bytes read as a big-endian word.

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::geometry::BlockGrid;

/// Number of columns in every rotation table.
pub const TABLE_COLS: usize = 128;

/// User passphrase, as raw bytes. Non-empty by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecretKey(Vec<u8>);

impl SecretKey {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(Error::EmptyKey);
        }
        Ok(Self(bytes))
    }

    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false // enforced at construction
    }
}

/// Key- and grid-derived matrix of rotation counts.
///
/// Rows are indexed by ring index (the table has `max(cols, rows)` rows so
/// one table serves both orientations), columns by key-selected index in
/// `0..128`. Counts are exposed reduced modulo the length of the ring they
/// rotate: `4 * cols` blocks for a row ring, `4 * rows` for a column ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationTable {
    rows: usize,
    entries: Vec<u32>,
    grid: BlockGrid,
}

impl RotationTable {
    /// Builds a table from raw per-cell words, `rows x 128` in row-major
    /// order with `rows = max(grid.cols, grid.rows)`.
    pub fn from_raw_entries(entries: Vec<u32>, grid: BlockGrid) -> Result<Self> {
        let rows = grid.cols.max(grid.rows);
        if rows == 0 {
            return Err(Error::FaceGeometry("block grid must be nonempty".into()));
        }
        if entries.len() != rows * TABLE_COLS {
            return Err(Error::FaceGeometry(format!(
                "rotation table needs {} entries, got {}",
                rows * TABLE_COLS,
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            entries,
            grid,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        TABLE_COLS
    }

    pub fn grid(&self) -> BlockGrid {
        self.grid
    }

    /// Rotation count for row ring `ring` (a block row across faces
    /// F, U, B, D), taken from table column `col`.
    pub fn row_rotation(&self, ring: usize, col: usize) -> usize {
        self.entries[ring * TABLE_COLS + col] as usize % (4 * self.grid.cols)
    }

    /// Rotation count for column ring `ring` (a block column across faces
    /// F, R, B, L), taken from table column `col`.
    pub fn col_rotation(&self, ring: usize, col: usize) -> usize {
        self.entries[ring * TABLE_COLS + col] as usize % (4 * self.grid.rows)
    }
}

fn cell_hash(row: u32, col: u32, passphrase: &[u8]) -> u32 {
    let mut h = Sha256::new();
    h.update(row.to_be_bytes());
    h.update(col.to_be_bytes());
    h.update(passphrase);
    let digest = h.finalize();
    u32::from_be_bytes([digest[0], digest[1], digest[2], digest[3]])
}

/// Derives the rotation table for a face grid. Deterministic in
/// (key, grid); every cell depends on every passphrase byte.
pub fn build_rotation_table(key: &SecretKey, grid: BlockGrid) -> RotationTable {
    let rows = grid.cols.max(grid.rows);
    let mut entries = Vec::with_capacity(rows * TABLE_COLS);
    for i in 0..rows {
        for j in 0..TABLE_COLS {
            entries.push(cell_hash(i as u32, j as u32, key.bytes()));
        }
    }
    RotationTable {
        rows,
        entries,
        grid,
    }
}

/// Table column selected by key position `j`: the key byte at `j`, reduced
/// modulo the table's 128 columns.
pub fn key_column_index(key: &SecretKey, j: usize) -> Result<usize> {
    match key.bytes().get(j) {
        Some(&b) => Ok(b as usize % TABLE_COLS),
        None => Err(Error::KeyIndex {
            index: j,
            len: key.len(),
        }),
    }
}

/// AES-256 key and CBC IV derived from the passphrase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AesMaterial {
    pub key: [u8; 32],
    pub iv: [u8; 16],
}

///// Domain-separated digests of the passphrase: the full SHA-256 of
/// `"aes-key" || passphrase` as key material, the first half of the SHA-256
/// of `"aes-iv" || passphrase` as IV.
pub fn derive_aes_key(key: &SecretKey) -> AesMaterial {
    let mut h = Sha256::new();
    h.update(b"aes-key");
    h.update(key.bytes());
    let key_digest = h.finalize();

    let mut h = Sha256::new();
    h.update(b"aes-iv");
    h.update(key.bytes());
    let iv_digest = h.finalize();

    let mut material = AesMaterial {
        key: [0u8; 32],
        iv: [0u8; 16],
    };
    material.key.copy_from_slice(&key_digest);
    material.iv.copy_from_slice(&iv_digest[..16]);
    material
}
