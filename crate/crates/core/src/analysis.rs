//! Statistical evaluation of plain and cipher images: histogram,
//! adjacent-pixel correlation in four orientations, Shannon entropy, and
//! NPCR/UACI differential metrics, plus the four-row comparison report the
//! CLI serializes to JSON or CSV.
//!
//! The correlation coefficient is
//!
//! ```text
//!            N·Σ(x_j·y_j) − Σx_j·Σy_j
//! C_r = ─────────────────────────────────────────────
//!       √(N·Σx_j² − (Σx_j)²) · √(N·Σy_j² − (Σy_j)²)
//! ```
//!
//! accumulated in exact integer arithmetic (pixel sums fit comfortably in
//! i128) with a single rounding to f64 at the end, so results are
//! reproducible bit for bit. When either margin of the sample is constant
//! the denominator is zero and the coefficient is reported as undefined
//! (`None`), never as NaN.

use crate::error::{Error, Result};
use crate::geometry::Image;
use crate::pipeline::{CaseConfig, ExperimentBundle};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Direction to the neighbour of a sampled pixel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Horizontal,
    Vertical,
    Diagonal,
    AntiDiagonal,
}

impl Orientation {
    pub const ALL: [Orientation; 4] = [
        Orientation::Horizontal,
        Orientation::Vertical,
        Orientation::Diagonal,
        Orientation::AntiDiagonal,
    ];

    /// (dx, dy) from a pixel to its neighbour. Anti-diagonal pairs a pixel
    /// with its upper-right neighbour.
    pub fn offset(self) -> (i64, i64) {
        match self {
            Orientation::Horizontal => (1, 0),
            Orientation::Vertical => (0, 1),
            Orientation::Diagonal => (1, 1),
            Orientation::AntiDiagonal => (1, -1),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Orientation::Horizontal => "horizontal",
            Orientation::Vertical => "vertical",
            Orientation::Diagonal => "diagonal",
            Orientation::AntiDiagonal => "anti_diagonal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Histogram {
    /// counts[v] = number of pixels with value v.
    pub counts: Vec<u64>,
}

impl Histogram {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

pub fn histogram(img: &Image) -> Histogram {
    let mut counts = vec![0u64; 256];
    for &p in img.pixels() {
        counts[p as usize] += 1;
    }
    Histogram { counts }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorrelationResult {
    pub orientation: Orientation,
    /// `None` when the coefficient is undefined (constant margin).
    pub coefficient: Option<f64>,
    pub sample_count: usize,
    /// Seed used for pair selection; `None` for exhaustive evaluation.
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyResult {
    pub bits: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DifferentialResult {
    /// Percentage of pixel positions whose values differ.
    pub npcr: f64,
    /// Mean absolute pixel difference as a percentage of 255.
    pub uaci: f64,
}

/// Start-position domain for adjacent pairs: (x_count, y_count, y_base).
/// x always starts at 0; anti-diagonal pairs need y ≥ 1 so the neighbour
/// at y−1 stays in bounds.
fn pair_domain(img: &Image, orientation: Orientation) -> Result<(usize, usize, usize)> {
    let (dx, dy) = orientation.offset();
    let w = img.width() as i64;
    let h = img.height() as i64;
    let x_count = w - dx;
    let (y_base, y_count) = if dy >= 0 { (0, h - dy) } else { (-dy, h + dy) };
    if x_count <= 0 || y_count <= 0 {
        return Err(Error::Analysis(format!(
            "image {}x{} contains no {} adjacent pairs",
            img.width(),
            img.height(),
            orientation.label()
        )));
    }
    Ok((x_count as usize, y_count as usize, y_base as usize))
}

fn pair_at(img: &Image, orientation: Orientation, x: usize, y: usize) -> (u8, u8) {
    let (dx, dy) = orientation.offset();
    let nx = (x as i64 + dx) as usize;
    let ny = (y as i64 + dy) as usize;
    (img.get(x, y), img.get(nx, ny))
}

/// Draws `n_pairs` adjacent pairs uniformly at random (with replacement)
/// from the orientation's valid start positions. The index map
/// `(word · n) >> 32` keeps the selection identical across platforms.
pub fn sample_pairs(
    img: &Image,
    orientation: Orientation,
    n_pairs: usize,
    seed: u64,
) -> Result<Vec<(u8, u8)>> {
    let (x_count, y_count, y_base) = pair_domain(img, orientation)?;
    let positions = (x_count * y_count) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(n_pairs);
    for _ in 0..n_pairs {
        let idx = ((rng.next_u32() as u64 * positions) >> 32) as usize;
        let x = idx % x_count;
        let y = y_base + idx / x_count;
        pairs.push(pair_at(img, orientation, x, y));
    }
    Ok(pairs)
}

/// Every adjacent pair in the orientation, row-major.
pub fn exhaustive_pairs(img: &Image, orientation: Orientation) -> Result<Vec<(u8, u8)>> {
    let (x_count, y_count, y_base) = pair_domain(img, orientation)?;
    let mut pairs = Vec::with_capacity(x_count * y_count);
    for y in 0..y_count {
        for x in 0..x_count {
            pairs.push(pair_at(img, orientation, x, y_base + y));
        }
    }
    Ok(pairs)
}

/// The correlation coefficient over a pair sample, or `None` when a margin
/// is constant. All sums are exact; only the final quotient rounds.
fn coefficient_of_pairs(pairs: &[(u8, u8)]) -> Option<f64> {
    let n = pairs.len() as i128;
    let (mut sx, mut sy, mut sxy, mut sxx, mut syy) = (0i128, 0i128, 0i128, 0i128, 0i128);
    for &(x, y) in pairs {
        let (x, y) = (x as i128, y as i128);
        sx += x;
        sy += y;
        sxy += x * y;
        sxx += x * x;
        syy += y * y;
    }
    let numerator = n * sxy - sx * sy;
    let var_x = n * sxx - sx * sx;
    let var_y = n * syy - sy * sy;
    if var_x == 0 || var_y == 0 {
        return None;
    }
    Some(numerator as f64 / ((var_x as f64).sqrt() * (var_y as f64).sqrt()))
}

/// Correlation over a random sample of `n_pairs` adjacent pairs.
pub fn correlation_sampled(
    img: &Image,
    orientation: Orientation,
    n_pairs: usize,
    seed: u64,
) -> Result<CorrelationResult> {
    if n_pairs < 2 {
        return Err(Error::Analysis(format!(
            "correlation needs at least 2 pairs, got {n_pairs}"
        )));
    }
    let pairs = sample_pairs(img, orientation, n_pairs, seed)?;
    Ok(CorrelationResult {
        orientation,
        coefficient: coefficient_of_pairs(&pairs),
        sample_count: n_pairs,
        seed: Some(seed),
    })
}

/// Correlation over every adjacent pair; deterministic, no sampling.
pub fn correlation_exhaustive(img: &Image, orientation: Orientation) -> Result<CorrelationResult> {
    let pairs = exhaustive_pairs(img, orientation)?;
    Ok(CorrelationResult {
        orientation,
        coefficient: coefficient_of_pairs(&pairs),
        sample_count: pairs.len(),
        seed: None,
    })
}

/// Shannon entropy in bits: Σ p·log2(1/p) over the grey levels present.
pub fn entropy(img: &Image) -> EntropyResult {
    let hist = histogram(img);
    let total = hist.total() as f64;
    let mut bits = 0.0;
    for &count in &hist.counts {
        if count > 0 {
            let p = count as f64 / total;
            bits += p * (1.0 / p).log2();
        }
    }
    EntropyResult { bits }
}

/// NPCR/UACI between two equal-sized images.
pub fn differential(a: &Image, b: &Image) -> Result<DifferentialResult> {
    if a.width() != b.width() || a.height() != b.height() {
        return Err(Error::ShapeMismatch(
            a.width(),
            a.height(),
            b.width(),
            b.height(),
        ));
    }
    let total = a.pixels().len() as f64;
    let mut differing = 0u64;
    let mut abs_sum = 0u64;
    for (&pa, &pb) in a.pixels().iter().zip(b.pixels()) {
        if pa != pb {
            differing += 1;
        }
        abs_sum += pa.abs_diff(pb) as u64;
    }
    Ok(DifferentialResult {
        npcr: 100.0 * differing as f64 / total,
        uaci: 100.0 * abs_sum as f64 / (255.0 * total),
    })
}

/// One row of the comparison report. Field order is the serialization
/// order: label, the four orientations, entropy, histogram.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub image: String,
    pub horizontal: Option<f64>,
    pub vertical: Option<f64>,
    pub diagonal: Option<f64>,
    pub anti_diagonal: Option<f64>,
    pub entropy: f64,
    pub histogram: Histogram,
}

/// Comparison report over the four experiment images: the conformed
/// original, the AES-only ciphertext, the rotation-only image, and the
/// integrated ciphertext.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricsReport {
    pub case: Option<CaseConfig>,
    pub seed: u64,
    pub n_pairs: usize,
    pub rows: Vec<ReportRow>,
    pub differential: Option<DifferentialResult>,
}

fn format_coefficient(c: Option<f64>) -> String {
    match c {
        Some(v) => format!("{v:.6}"),
        None => "undefined".to_string(),
    }
}

impl MetricsReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// CSV with one row per image: label, the four orientation
    /// coefficients, entropy. Undefined coefficients print as "undefined".
    pub fn to_csv(&self) -> String {
        let mut out = String::from("image,horizontal,vertical,diagonal,anti_diagonal,entropy\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{:.6}\n",
                row.image,
                format_coefficient(row.horizontal),
                format_coefficient(row.vertical),
                format_coefficient(row.diagonal),
                format_coefficient(row.anti_diagonal),
                row.entropy,
            ));
        }
        out
    }
}

/// Full per-image metrics for the `analyze` command: all four correlations
/// with their sampling parameters, entropy, histogram.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ImageMetrics {
    pub width: usize,
    pub height: usize,
    pub correlations: Vec<CorrelationResult>,
    pub entropy: EntropyResult,
    pub histogram: Histogram,
}

pub fn analyze_image(img: &Image, n_pairs: usize, seed: u64) -> Result<ImageMetrics> {
    let mut correlations = Vec::with_capacity(4);
    for orientation in Orientation::ALL {
        correlations.push(correlation_sampled(img, orientation, n_pairs, seed)?);
    }
    Ok(ImageMetrics {
        width: img.width(),
        height: img.height(),
        correlations,
        entropy: entropy(img),
        histogram: histogram(img),
    })
}

fn report_row(label: &str, img: &Image, n_pairs: usize, seed: u64) -> Result<ReportRow> {
    let corr = |orientation| -> Result<Option<f64>> {
        Ok(correlation_sampled(img, orientation, n_pairs, seed)?.coefficient)
    };
    Ok(ReportRow {
        image: label.to_string(),
        horizontal: corr(Orientation::Horizontal)?,
        vertical: corr(Orientation::Vertical)?,
        diagonal: corr(Orientation::Diagonal)?,
        anti_diagonal: corr(Orientation::AntiDiagonal)?,
        entropy: entropy(img).bits,
        histogram: histogram(img),
    })
}

/// Builds the four-row report for an experiment bundle. The differential
/// field is left empty; callers that run a differential trial fill it in.
pub fn report(bundle: &ExperimentBundle, n_pairs: usize, seed: u64) -> Result<MetricsReport> {
    let aes_view = bundle.aes_only.ciphertext_view()?;
    let integrated_view = bundle.integrated.ciphertext_view()?;
    let rows = vec![
        report_row("original", &bundle.original, n_pairs, seed)?,
        report_row("aes_only", &aes_view, n_pairs, seed)?,
        report_row("rotated", &bundle.rotated, n_pairs, seed)?,
        report_row("integrated", &integrated_view, n_pairs, seed)?,
    ];
    Ok(MetricsReport {
        case: Some(bundle.case_config),
        seed,
        n_pairs,
        rows,
        differential: None,
    })
}

/// Two-column CSV of a pair sample, for external scatter plotting.
pub fn pairs_to_csv(pairs: &[(u8, u8)]) -> String {
    let mut out = String::from("x,y\n");
    for &(x, y) in pairs {
        out.push_str(&format!("{x},{y}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn random_image(width: usize, height: usize, seed: u64) -> Image {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pixels = vec![0u8; width * height];
        rng.fill_bytes(&mut pixels);
        Image::new(width, height, pixels).unwrap()
    }

    /// Independent route to the same coefficient: centered moments in f64.
    fn centered_moments_coefficient(pairs: &[(u8, u8)]) -> Option<f64> {
        let n = pairs.len() as f64;
        let ex = pairs.iter().map(|p| p.0 as f64).sum::<f64>() / n;
        let ey = pairs.iter().map(|p| p.1 as f64).sum::<f64>() / n;
        let dx = pairs.iter().map(|p| (p.0 as f64 - ex).powi(2)).sum::<f64>() / n;
        let dy = pairs.iter().map(|p| (p.1 as f64 - ey).powi(2)).sum::<f64>() / n;
        let cov = pairs
            .iter()
            .map(|p| (p.0 as f64 - ex) * (p.1 as f64 - ey))
            .sum::<f64>()
            / n;
        if dx == 0.0 || dy == 0.0 {
            None
        } else {
            Some(cov / (dx.sqrt() * dy.sqrt()))
        }
    }

    #[test]
    fn histogram_counts_a_constant_image() {
        let h = histogram(&Image::filled(4, 4, 9).unwrap());
        assert_eq!(h.counts[9], 16);
        assert_eq!(h.total(), 16);
        assert_eq!(h.counts.iter().filter(|&&c| c > 0).count(), 1);
    }

    #[test]
    fn histogram_sees_every_level_once() {
        let img = Image::new(16, 16, (0..=255).collect()).unwrap();
        let h = histogram(&img);
        assert!(h.counts.iter().all(|&c| c == 1));
    }

    #[test]
    fn equal_neighbours_give_perfect_correlation() {
        // Rows of two equal pixels, different values per row: every
        // horizontal pair is (v, v).
        let img = Image::new(2, 3, vec![10, 10, 80, 80, 200, 200]).unwrap();
        let r = correlation_exhaustive(&img, Orientation::Horizontal).unwrap();
        assert_eq!(r.coefficient, Some(1.0));
        assert_eq!(r.sample_count, 3);
        assert_eq!(r.seed, None);
    }

    #[test]
    fn complemented_neighbours_give_perfect_anticorrelation() {
        let img = Image::new(2, 3, vec![10, 245, 80, 175, 200, 55]).unwrap();
        let r = correlation_exhaustive(&img, Orientation::Horizontal).unwrap();
        assert_eq!(r.coefficient, Some(-1.0));
    }

    #[test]
    fn exhaustive_horizontal_matches_hand_computation() {
        // Pairs (0,2), (2,1), (1,3): N=3, Σx=3, Σy=6, Σxy=5, Σx²=5, Σy²=14,
        // numerator 3·5−18 = −3, both variances 3·5−9 = 6 and 3·14−36 = 6,
        // so C_r = −3/6 = −0.5.
        let img = Image::new(4, 1, vec![0, 2, 1, 3]).unwrap();
        let r = correlation_exhaustive(&img, Orientation::Horizontal).unwrap();
        assert!((r.coefficient.unwrap() + 0.5).abs() < 1e-12);
    }

    #[test]
    fn exhaustive_vertical_matches_hand_computation() {
        // Column pairs (0,2), (2,1), (2,1), (1,3): N=4, Σx=5, Σy=7, Σxy=7,
        // Σx²=9, Σy²=15 → numerator 28−35 = −7, variances 36−25 = 11 and
        // 60−49 = 11 → C_r = −7/11.
        let img = Image::new(2, 3, vec![0, 2, 2, 1, 1, 3]).unwrap();
        let r = correlation_exhaustive(&img, Orientation::Vertical).unwrap();
        assert!((r.coefficient.unwrap() - (-7.0 / 11.0)).abs() < 1e-12);
    }

    #[test]
    fn single_pair_sample_is_undefined() {
        // A 2x2 image has exactly one diagonal pair and one anti-diagonal
        // pair; a single pair has constant margins.
        let img = Image::new(2, 2, vec![1, 2, 3, 4]).unwrap();
        let d = correlation_exhaustive(&img, Orientation::Diagonal).unwrap();
        assert_eq!(d.coefficient, None);
        assert_eq!(d.sample_count, 1);
        let a = correlation_exhaustive(&img, Orientation::AntiDiagonal).unwrap();
        assert_eq!(a.coefficient, None);
    }

    #[test]
    fn constant_image_correlation_is_undefined_not_nan() {
        let img = Image::filled(16, 16, 77).unwrap();
        let r = correlation_sampled(&img, Orientation::Horizontal, 100, 1).unwrap();
        assert_eq!(r.coefficient, None);
    }

    #[test]
    fn too_small_images_and_tiny_samples_are_rejected() {
        let img = Image::new(1, 3, vec![1, 2, 3]).unwrap();
        assert!(correlation_exhaustive(&img, Orientation::Horizontal).is_err());
        assert!(correlation_exhaustive(&img, Orientation::Vertical).is_ok());
        let ok = Image::new(4, 4, (0..16).collect()).unwrap();
        assert!(correlation_sampled(&ok, Orientation::Horizontal, 1, 0).is_err());
    }

    #[test]
    fn integer_and_centered_moment_routes_agree() {
        for seed in 0..8 {
            let img = random_image(23, 17, seed);
            for orientation in Orientation::ALL {
                let pairs = exhaustive_pairs(&img, orientation).unwrap();
                let fast = coefficient_of_pairs(&pairs).unwrap();
                let oracle = centered_moments_coefficient(&pairs).unwrap();
                assert!(
                    (fast - oracle).abs() < 1e-12,
                    "{} seed {seed}: {fast} vs {oracle}",
                    orientation.label()
                );
            }
        }
    }

    #[test]
    fn correlation_is_symmetric_in_x_and_y() {
        let img = random_image(19, 21, 5);
        let pairs = exhaustive_pairs(&img, Orientation::Diagonal).unwrap();
        let swapped: Vec<(u8, u8)> = pairs.iter().map(|&(x, y)| (y, x)).collect();
        let a = coefficient_of_pairs(&pairs).unwrap();
        let b = coefficient_of_pairs(&swapped).unwrap();
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn sampling_is_reproducible_and_seed_sensitive() {
        let img = random_image(64, 64, 3);
        let a = sample_pairs(&img, Orientation::Vertical, 500, 42).unwrap();
        let b = sample_pairs(&img, Orientation::Vertical, 500, 42).unwrap();
        assert_eq!(a, b);
        let c = sample_pairs(&img, Orientation::Vertical, 500, 43).unwrap();
        assert_ne!(a, c);
        let ra = correlation_sampled(&img, Orientation::Vertical, 500, 42).unwrap();
        let rb = correlation_sampled(&img, Orientation::Vertical, 500, 42).unwrap();
        assert_eq!(ra.coefficient, rb.coefficient);
        assert_eq!(ra.seed, Some(42));
    }

    #[test]
    fn random_image_coefficients_concentrate_near_zero() {
        // Std of a single N=2000 coefficient is about 1/√2000 ≈ 0.022, so
        // a mean over 30 seeds beyond 0.02 would be a ~5-sigma event.
        let img = random_image(128, 128, 9);
        let mean: f64 = (0..30)
            .map(|seed| {
                correlation_sampled(&img, Orientation::Horizontal, 2000, seed)
                    .unwrap()
                    .coefficient
                    .unwrap()
            })
            .sum::<f64>()
            / 30.0;
        assert!(mean.abs() < 0.02, "mean over seeds was {mean}");
    }

    #[test]
    fn coefficients_stay_within_unit_interval() {
        for seed in 0..6 {
            let img = random_image(31, 29, seed);
            for orientation in Orientation::ALL {
                let r = correlation_exhaustive(&img, orientation).unwrap();
                assert!(r.coefficient.unwrap().abs() <= 1.0 + 1e-9);
            }
        }
    }

    #[test]
    fn entropy_anchors_are_exact() {
        assert_eq!(entropy(&Image::filled(5, 5, 200).unwrap()).bits, 0.0);
        let uniform = Image::new(16, 16, (0..=255).collect()).unwrap();
        assert_eq!(entropy(&uniform).bits, 8.0);
        let two = Image::new(2, 2, vec![0, 0, 255, 255]).unwrap();
        assert_eq!(entropy(&two).bits, 1.0);
    }

    #[test]
    fn entropy_is_permutation_invariant() {
        let img = random_image(40, 30, 11);
        let mut reversed = img.pixels().to_vec();
        reversed.reverse();
        let rev = Image::new(40, 30, reversed).unwrap();
        assert_eq!(entropy(&img).bits, entropy(&rev).bits);
        assert_eq!(histogram(&img), histogram(&rev));
    }

    #[test]
    fn differential_anchors() {
        let img = random_image(20, 20, 13);
        let same = differential(&img, &img).unwrap();
        assert_eq!(same.npcr, 0.0);
        assert_eq!(same.uaci, 0.0);

        // NOT flips every pixel (p == !p is impossible for u8), so NPCR is
        // always 100; UACI reaches 100 only when |p - !p| = 255, i.e. on a
        // binary 0/255 image.
        let inverted =
            Image::new(20, 20, img.pixels().iter().map(|&p| !p).collect()).unwrap();
        assert_eq!(differential(&img, &inverted).unwrap().npcr, 100.0);

        let binary =
            Image::new(20, 20, img.pixels().iter().map(|&p| if p < 128 { 0 } else { 255 }).collect())
                .unwrap();
        let binary_not =
            Image::new(20, 20, binary.pixels().iter().map(|&p| !p).collect()).unwrap();
        let flip = differential(&binary, &binary_not).unwrap();
        assert_eq!(flip.npcr, 100.0);
        assert_eq!(flip.uaci, 100.0);

        let other = random_image(21, 20, 13);
        assert!(differential(&img, &other).is_err());
    }

    #[test]
    fn csv_layout_is_pinned() {
        let row = ReportRow {
            image: "original".into(),
            horizontal: Some(0.5),
            vertical: Some(-0.25),
            diagonal: None,
            anti_diagonal: Some(1.0),
            entropy: 7.5,
            histogram: Histogram { counts: vec![0; 256] },
        };
        let report = MetricsReport {
            case: None,
            seed: 1,
            n_pairs: 2000,
            rows: vec![row],
            differential: None,
        };
        assert_eq!(
            report.to_csv(),
            "image,horizontal,vertical,diagonal,anti_diagonal,entropy\n\
             original,0.500000,-0.250000,undefined,1.000000,7.500000\n"
        );
    }

    #[test]
    fn json_keys_follow_declaration_order() {
        let report = MetricsReport {
            case: None,
            seed: 7,
            n_pairs: 100,
            rows: vec![],
            differential: None,
        };
        let json = report.to_json();
        let pos = |k: &str| json.find(&format!("\"{k}\"")).unwrap();
        assert!(pos("case") < pos("seed"));
        assert!(pos("seed") < pos("n_pairs"));
        assert!(pos("n_pairs") < pos("rows"));
        assert!(pos("rows") < pos("differential"));
        serde_json::from_str::<serde_json::Value>(&json).unwrap();
    }

    #[test]
    fn pair_dump_is_two_column_csv() {
        let csv = pairs_to_csv(&[(1, 2), (255, 0)]);
        assert_eq!(csv, "x,y\n1,2\n255,0\n");
    }

    #[test]
    fn analyze_image_covers_all_orientations() {
        let img = random_image(32, 32, 17);
        let metrics = analyze_image(&img, 200, 4).unwrap();
        assert_eq!(metrics.correlations.len(), 4);
        let labels: Vec<&str> = metrics
            .correlations
            .iter()
            .map(|c| c.orientation.label())
            .collect();
        assert_eq!(labels, ["horizontal", "vertical", "diagonal", "anti_diagonal"]);
        assert_eq!(metrics.histogram.total(), 1024);
        assert!(metrics.entropy.bits > 7.0);
    }
}
