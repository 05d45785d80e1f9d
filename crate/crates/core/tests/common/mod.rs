//! Shared test fixtures: deterministic synthetic images.

use cubecipher::Image;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Uniform random noise image.
pub fn random_image(width: usize, height: usize, seed: u64) -> Image {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pixels = vec![0u8; width * height];
    rng.fill_bytes(&mut pixels);
    Image::new(width, height, pixels).unwrap()
}

/// Synthetic "photograph": smooth multi-scale value noise around mid-grey.
///
/// Three octaves of bilinear value noise (cell sizes 64/16/4, amplitudes
/// 80/30/8) plus a +/-2 dither give an image with the two statistical
/// properties of natural photos this suite relies on: strong correlation
/// between adjacent pixels and a broad, non-uniform histogram.
pub fn natural_image(width: usize, height: usize, seed: u64) -> Image {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut field = vec![0.0f64; width * height];
    for &(cell, amplitude) in &[(64usize, 80.0f64), (16, 30.0), (4, 8.0)] {
        let grid_w = width / cell + 2;
        let grid_h = height / cell + 2;
        let lattice: Vec<f64> = (0..grid_w * grid_h)
            .map(|_| rng.next_u32() as f64 / u32::MAX as f64 * 2.0 - 1.0)
            .collect();
        for y in 0..height {
            let gy = y / cell;
            let fy = (y % cell) as f64 / cell as f64;
            let sy = fy * fy * (3.0 - 2.0 * fy);
            for x in 0..width {
                let gx = x / cell;
                let fx = (x % cell) as f64 / cell as f64;
                let sx = fx * fx * (3.0 - 2.0 * fx);
                let v00 = lattice[gy * grid_w + gx];
                let v10 = lattice[gy * grid_w + gx + 1];
                let v01 = lattice[(gy + 1) * grid_w + gx];
                let v11 = lattice[(gy + 1) * grid_w + gx + 1];
                let top = v00 + (v10 - v00) * sx;
                let bottom = v01 + (v11 - v01) * sx;
                field[y * width + x] += amplitude * (top + (bottom - top) * sy);
            }
        }
    }
    let pixels: Vec<u8> = field
        .iter()
        .map(|&v| {
            let dither = (rng.next_u32() % 5) as f64 - 2.0;
            (128.0 + v + dither).round().clamp(0.0, 255.0) as u8
        })
        .collect();
    Image::new(width, height, pixels).unwrap()
}
