//! Average gait images: per-pixel means over a window of normalized
//! silhouettes, the lower-band crop used for viewpoint matching, and an
//! incremental accumulator for sliding windows.

use crate::config::ViewpointLabel;
use crate::error::{Error, Result};
use crate::silhouette::NormalizedSilhouette;

/// Fraction of the height where the lower band (calf region) begins.
pub const LOWER_BAND_FRACTION: f64 = 0.715;

/// First row of the lower band for a silhouette of the given height.
pub fn lower_band_start(height: usize) -> usize {
    (LOWER_BAND_FRACTION * height as f64).floor() as usize
}

/// Per-pixel mean of a window of binary silhouettes. Values lie in [0, 1].
#[derive(Clone, Debug, PartialEq)]
pub struct AverageGaitImage {
    width: usize,
    height: usize,
    pixels: Vec<f64>,
    frame_count: usize,
    view_hint: Option<ViewpointLabel>,
}

impl AverageGaitImage {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[f64] {
        &self.pixels
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.pixels[y * self.width + x]
    }

    pub fn frame_count(&self) -> usize {
        self.frame_count
    }

    pub fn view_hint(&self) -> Option<ViewpointLabel> {
        self.view_hint
    }

    pub fn with_view_hint(mut self, view: ViewpointLabel) -> Self {
        self.view_hint = Some(view);
        self
    }

    /// Row-major copy of the pixel grid, the SVM feature vector.
    pub fn flatten(&self) -> Vec<f64> {
        self.pixels.clone()
    }
}

/// Mean the masks of `frames` pixelwise. All frames must share one shape.
pub fn compute_agi(frames: &[NormalizedSilhouette]) -> Result<AverageGaitImage> {
    let first = frames.first().ok_or(Error::EmptyWindow)?;
    let (w, h) = (first.width(), first.height());
    let mut sum = vec![0.0f64; w * h];
    for frame in frames {
        if frame.width() != w || frame.height() != h {
            return Err(Error::ShapeMismatch {
                expected: format!("{w}x{h}"),
                actual: format!("{}x{}", frame.width(), frame.height()),
            });
        }
        for (acc, &fg) in sum.iter_mut().zip(frame.mask()) {
            if fg {
                *acc += 1.0;
            }
        }
    }
    let n = frames.len() as f64;
    for v in &mut sum {
        *v /= n;
    }
    Ok(AverageGaitImage {
        width: w,
        height: h,
        pixels: sum,
        frame_count: frames.len(),
        view_hint: None,
    })
}

/// The lower band (rows `lower_band_start(h) .. h`) of an averaged image.
#[derive(Clone, Debug, PartialEq)]
pub struct LowerAgi {
    rows: usize,
    cols: usize,
    pixels: Vec<f64>,
}

impl LowerAgi {
    pub fn from_pixels(rows: usize, cols: usize, pixels: Vec<f64>) -> Result<Self> {
        if pixels.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                expected: format!("{} values", rows * cols),
                actual: format!("{} values", pixels.len()),
            });
        }
        Ok(LowerAgi { rows, cols, pixels })
    }

    /// Lower crop of a single binary silhouette (values 0 or 1).
    pub fn from_silhouette(s: &NormalizedSilhouette) -> LowerAgi {
        let start = lower_band_start(s.height());
        let rows = s.height() - start;
        let cols = s.width();
        let mut pixels = Vec::with_capacity(rows * cols);
        for y in start..s.height() {
            for x in 0..cols {
                pixels.push(if s.get(x, y) { 1.0 } else { 0.0 });
            }
        }
        LowerAgi { rows, cols, pixels }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pixels(&self) -> &[f64] {
        &self.pixels
    }

    pub fn same_shape(&self, other: &LowerAgi) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }

    /// Euclidean distance between two lower bands of identical shape.
    pub fn euclidean_distance(&self, other: &LowerAgi) -> Result<f64> {
        if !self.same_shape(other) {
            return Err(Error::ShapeMismatch {
                expected: format!("{}x{}", self.rows, self.cols),
                actual: format!("{}x{}", other.rows, other.cols),
            });
        }
        let sq: f64 = self
            .pixels
            .iter()
            .zip(&other.pixels)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        Ok(sq.sqrt())
    }
}

/// Copy out the lower band of an averaged image, rows unchanged.
pub fn extract_lower(agi: &AverageGaitImage) -> LowerAgi {
    let start = lower_band_start(agi.height());
    let rows = agi.height() - start;
    let cols = agi.width();
    let mut pixels = Vec::with_capacity(rows * cols);
    for y in start..agi.height() {
        for x in 0..cols {
            pixels.push(agi.get(x, y));
        }
    }
    LowerAgi { rows, cols, pixels }
}

/// Running sum over a sliding window. Adding and removing binary frames keeps
/// the sum integer-valued in f64, so the incremental mean is exactly the
/// batch mean.
#[derive(Clone, Debug)]
pub struct AgiAccumulator {
    width: usize,
    height: usize,
    sum: Vec<f64>,
    count: usize,
}

impl AgiAccumulator {
    pub fn new(width: usize, height: usize) -> Self {
        AgiAccumulator {
            width,
            height,
            sum: vec![0.0; width * height],
            count: 0,
        }
    }

    fn check_shape(&self, frame: &NormalizedSilhouette) -> Result<()> {
        if frame.width() != self.width || frame.height() != self.height {
            return Err(Error::ShapeMismatch {
                expected: format!("{}x{}", self.width, self.height),
                actual: format!("{}x{}", frame.width(), frame.height()),
            });
        }
        Ok(())
    }

    pub fn push(&mut self, frame: &NormalizedSilhouette) -> Result<()> {
        self.check_shape(frame)?;
        for (acc, &fg) in self.sum.iter_mut().zip(frame.mask()) {
            if fg {
                *acc += 1.0;
            }
        }
        self.count += 1;
        Ok(())
    }

    pub fn remove(&mut self, frame: &NormalizedSilhouette) -> Result<()> {
        self.check_shape(frame)?;
        debug_assert!(self.count > 0);
        for (acc, &fg) in self.sum.iter_mut().zip(frame.mask()) {
            if fg {
                *acc -= 1.0;
            }
        }
        self.count -= 1;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn clear(&mut self) {
        self.sum.iter_mut().for_each(|v| *v = 0.0);
        self.count = 0;
    }

    pub fn agi(&self) -> Result<AverageGaitImage> {
        if self.count == 0 {
            return Err(Error::EmptyWindow);
        }
        let n = self.count as f64;
        Ok(AverageGaitImage {
            width: self.width,
            height: self.height,
            pixels: self.sum.iter().map(|v| v / n).collect(),
            frame_count: self.count,
            view_hint: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn norm(w: usize, h: usize, f: impl Fn(usize, usize) -> bool) -> NormalizedSilhouette {
        let mut mask = vec![false; w * h];
        for y in 0..h {
            for x in 0..w {
                mask[y * w + x] = f(x, y);
            }
        }
        NormalizedSilhouette::from_parts(w, h, mask, "t").unwrap()
    }

    #[test]
    fn lower_band_of_144_starts_at_row_102() {
        assert_eq!(lower_band_start(144), 102);
        assert_eq!(144 - lower_band_start(144), 42);
    }

    #[test]
    fn agi_of_identical_frames_is_the_mask() {
        let s = norm(8, 8, |x, y| (x + y) % 3 == 0);
        let frames = vec![s.clone(); 15];
        let agi = compute_agi(&frames).unwrap();
        for y in 0..8 {
            for x in 0..8 {
                let expected = if s.get(x, y) { 1.0 } else { 0.0 };
                assert_eq!(agi.get(x, y), expected);
            }
        }
        assert_eq!(agi.frame_count(), 15);
    }

    #[test]
    fn agi_of_full_and_empty_frame_is_half() {
        let a = norm(4, 4, |_, _| true);
        let b = norm(4, 4, |_, _| false);
        let agi = compute_agi(&[a, b]).unwrap();
        assert!(agi.pixels().iter().all(|&v| v == 0.5));
    }

    #[test]
    fn agi_rejects_empty_window_and_mixed_shapes() {
        assert!(matches!(compute_agi(&[]), Err(Error::EmptyWindow)));
        let a = norm(4, 4, |_, _| true);
        let b = norm(5, 4, |_, _| true);
        assert!(matches!(
            compute_agi(&[a, b]),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn extract_lower_copies_the_sub_grid_bit_exact() {
        let frames: Vec<_> = (0..5)
            .map(|i| norm(144, 144, move |x, y| (x * 31 + y * 17 + i * 7) % 5 < 2))
            .collect();
        let agi = compute_agi(&frames).unwrap();
        let lower = extract_lower(&agi);
        assert_eq!(lower.rows(), 42);
        assert_eq!(lower.cols(), 144);
        for r in 0..42 {
            for c in 0..144 {
                assert_eq!(lower.pixels()[r * 144 + c], agi.get(c, 102 + r));
            }
        }
    }

    #[test]
    fn uniform_agi_stays_uniform_in_lower() {
        let a = norm(144, 144, |_, _| true);
        let b = norm(144, 144, |_, _| false);
        let agi = compute_agi(&[a.clone(), a, b]).unwrap();
        let lower = extract_lower(&agi);
        assert!(lower.pixels().iter().all(|&v| (v - 2.0 / 3.0).abs() < 1e-15));
    }

    #[test]
    fn accumulator_matches_batch_mean_exactly() {
        let frames: Vec<_> = (0..15)
            .map(|i| norm(16, 16, move |x, y| (x * 3 + y * 5 + i) % 4 == 0))
            .collect();
        let mut acc = AgiAccumulator::new(16, 16);
        for f in &frames[..10] {
            acc.push(f).unwrap();
        }
        // Slide: remove 5 oldest, add 5 newest; window is frames[5..15].
        for f in &frames[..5] {
            acc.remove(f).unwrap();
        }
        for f in &frames[10..] {
            acc.push(f).unwrap();
        }
        let batch = compute_agi(&frames[5..]).unwrap();
        let inc = acc.agi().unwrap();
        assert_eq!(inc.pixels(), batch.pixels());
    }
}
