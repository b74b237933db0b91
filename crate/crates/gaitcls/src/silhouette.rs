//! Binary silhouette rasters: validation, moments, centroids, size
//! normalization, and boundary tracing.
//!
//! Coordinates are image coordinates (x = column growing right, y = row
//! growing down). Polar angles around a centroid are measured counterclockwise
//! as displayed, i.e. from the +x ray with "up" being decreasing y.

use crate::error::{Error, Result};

/// Sub-pixel center of mass of a silhouette.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Centroid {
    pub x: f64,
    pub y: f64,
}

/// Axis-aligned pixel rectangle, `x..x+width` by `y..y+height`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundingBox {
    pub x: usize,
    pub y: usize,
    pub width: usize,
    pub height: usize,
}

impl BoundingBox {
    pub fn full(width: usize, height: usize) -> Self {
        BoundingBox {
            x: 0,
            y: 0,
            width,
            height,
        }
    }

    /// Intersect with a `width` x `height` frame. `None` if the intersection
    /// is empty.
    fn clip(&self, width: usize, height: usize) -> Option<BoundingBox> {
        if self.width == 0 || self.height == 0 || self.x >= width || self.y >= height {
            return None;
        }
        let x1 = (self.x + self.width).min(width);
        let y1 = (self.y + self.height).min(height);
        Some(BoundingBox {
            x: self.x,
            y: self.y,
            width: x1 - self.x,
            height: y1 - self.y,
        })
    }
}

/// A binary silhouette as it comes out of segmentation, any size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawSilhouette {
    width: usize,
    height: usize,
    mask: Vec<bool>,
}

impl RawSilhouette {
    pub fn new(width: usize, height: usize, mask: Vec<bool>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidParam("silhouette size must be positive".into()));
        }
        if mask.len() != width * height {
            return Err(Error::ShapeMismatch {
                expected: format!("{} pixels", width * height),
                actual: format!("{} pixels", mask.len()),
            });
        }
        Ok(RawSilhouette {
            width,
            height,
            mask,
        })
    }

    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut mask = vec![false; width * height];
        for y in 0..height {
            for x in 0..width {
                mask[y * width + x] = f(x, y);
            }
        }
        RawSilhouette {
            width,
            height,
            mask,
        }
    }

    /// Decode a silhouette from 8-bit grayscale pixel values: anything above
    /// 127 counts as foreground.
    pub fn from_gray(width: usize, height: usize, pixels: &[u8]) -> Result<Self> {
        if pixels.len() != width * height {
            return Err(Error::ShapeMismatch {
                expected: format!("{} pixels", width * height),
                actual: format!("{} pixels", pixels.len()),
            });
        }
        Ok(RawSilhouette {
            width,
            height,
            mask: pixels.iter().map(|&p| p > 127).collect(),
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.mask[y * self.width + x]
    }

    pub fn foreground_count(&self) -> usize {
        self.mask.iter().filter(|&&p| p).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&p| p)
    }

    /// Raw moment M_ij = sum over foreground pixels of x^i * y^j.
    /// An all-background mask yields 0; centroid callers must check M00.
    pub fn raw_moment(&self, i: u32, j: u32) -> f64 {
        raw_moment_of(self.width, &self.mask, i, j)
    }

    pub fn centroid(&self) -> Result<Centroid> {
        centroid_of(self.width, &self.mask)
    }
}

/// A silhouette registered to the fixed model size: the foreground spans the
/// full height and its centroid column sits at `width / 2` (within a pixel).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedSilhouette {
    width: usize,
    height: usize,
    mask: Vec<bool>,
    source_id: String,
}

impl NormalizedSilhouette {
    /// Assemble from parts. Only the size invariant is checked here; the
    /// extent and centering invariants are maintained by `normalize`.
    pub fn from_parts(
        width: usize,
        height: usize,
        mask: Vec<bool>,
        source_id: impl Into<String>,
    ) -> Result<Self> {
        if mask.len() != width * height {
            return Err(Error::ShapeMismatch {
                expected: format!("{} pixels", width * height),
                actual: format!("{} pixels", mask.len()),
            });
        }
        Ok(NormalizedSilhouette {
            width,
            height,
            mask,
            source_id: source_id.into(),
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn source_id(&self) -> &str {
        &self.source_id
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.mask[y * self.width + x]
    }

    pub fn foreground_count(&self) -> usize {
        self.mask.iter().filter(|&&p| p).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&p| p)
    }

    pub fn centroid(&self) -> Result<Centroid> {
        centroid_of(self.width, &self.mask)
    }

    pub(crate) fn with_mask(&self, mask: Vec<bool>) -> NormalizedSilhouette {
        NormalizedSilhouette {
            width: self.width,
            height: self.height,
            mask,
            source_id: self.source_id.clone(),
        }
    }
}

fn raw_moment_of(width: usize, mask: &[bool], i: u32, j: u32) -> f64 {
    let mut sum = 0.0;
    for (idx, &fg) in mask.iter().enumerate() {
        if fg {
            let x = (idx % width) as f64;
            let y = (idx / width) as f64;
            sum += x.powi(i as i32) * y.powi(j as i32);
        }
    }
    sum
}

fn centroid_of(width: usize, mask: &[bool]) -> Result<Centroid> {
    let m00 = raw_moment_of(width, mask, 0, 0);
    if m00 == 0.0 {
        return Err(Error::EmptySilhouette);
    }
    Ok(Centroid {
        x: raw_moment_of(width, mask, 1, 0) / m00,
        y: raw_moment_of(width, mask, 0, 1) / m00,
    })
}

/// Keep only the largest 8-connected foreground component of `mask`.
/// Returns an all-false mask when there is no foreground.
pub fn largest_component(width: usize, height: usize, mask: &[bool]) -> Vec<bool> {
    let mut labels = vec![0u32; mask.len()];
    let mut best_label = 0u32;
    let mut best_count = 0usize;
    let mut next = 1u32;
    let mut stack = Vec::new();
    for start in 0..mask.len() {
        if !mask[start] || labels[start] != 0 {
            continue;
        }
        let label = next;
        next += 1;
        let mut count = 0usize;
        labels[start] = label;
        stack.push(start);
        while let Some(idx) = stack.pop() {
            count += 1;
            let x = (idx % width) as isize;
            let y = (idx / width) as isize;
            for dy in -1..=1isize {
                for dx in -1..=1isize {
                    if dx == 0 && dy == 0 {
                        continue;
                    }
                    let (nx, ny) = (x + dx, y + dy);
                    if nx < 0 || ny < 0 || nx >= width as isize || ny >= height as isize {
                        continue;
                    }
                    let nidx = ny as usize * width + nx as usize;
                    if mask[nidx] && labels[nidx] == 0 {
                        labels[nidx] = label;
                        stack.push(nidx);
                    }
                }
            }
        }
        if count > best_count {
            best_count = count;
            best_label = label;
        }
    }
    labels
        .iter()
        .map(|&l| l != 0 && l == best_label)
        .collect()
}

/// Resampling map from a raw frame into the normalized canvas. Applying the
/// same transform to a second raster of identical size reproduces the exact
/// crop, scale, and horizontal placement (used to align ground-truth frames
/// with processed ones).
#[derive(Clone, Copy, Debug)]
pub struct NormTransform {
    src_x0: usize,
    src_y0: usize,
    src_w: usize,
    src_h: usize,
    scaled_w: usize,
    shift: i64,
    out_w: usize,
    out_h: usize,
}

impl NormTransform {
    fn map_row(&self, r: usize) -> usize {
        if self.out_h <= 1 {
            return self.src_y0;
        }
        let f = r as f64 * (self.src_h - 1) as f64 / (self.out_h - 1) as f64;
        self.src_y0 + (f + 0.5).floor() as usize
    }

    fn map_scaled_col(&self, c: usize) -> usize {
        if self.scaled_w <= 1 {
            return self.src_x0;
        }
        let f = c as f64 * (self.src_w - 1) as f64 / (self.scaled_w - 1) as f64;
        self.src_x0 + (f + 0.5).floor() as usize
    }

    fn render(&self, width: usize, mask: &[bool]) -> Vec<bool> {
        let mut out = vec![false; self.out_w * self.out_h];
        for r in 0..self.out_h {
            let sy = self.map_row(r);
            for c in 0..self.out_w {
                let sc = c as i64 - self.shift;
                if sc < 0 || sc >= self.scaled_w as i64 {
                    continue;
                }
                let sx = self.map_scaled_col(sc as usize);
                out[r * self.out_w + c] = mask[sy * width + sx];
            }
        }
        out
    }

    /// Replay this transform on another raster of the same source size.
    pub fn apply(&self, src: &RawSilhouette, source_id: &str) -> NormalizedSilhouette {
        NormalizedSilhouette {
            width: self.out_w,
            height: self.out_h,
            mask: self.render(src.width(), src.mask()),
            source_id: source_id.to_string(),
        }
    }
}

/// Register a silhouette to `out_h` x `out_w`: keep the largest connected
/// component inside `bbox`, crop to its tight extent, rescale so the
/// foreground height fills `out_h` (nearest-neighbor, aspect preserved), then
/// shift horizontally so the centroid column lands at `out_w / 2`, padding or
/// cropping the sides.
pub fn normalize(
    s: &RawSilhouette,
    bbox: &BoundingBox,
    out_h: usize,
    out_w: usize,
    source_id: &str,
) -> Result<NormalizedSilhouette> {
    normalize_with_transform(s, bbox, out_h, out_w, source_id).map(|(n, _)| n)
}

/// Like [`normalize`] but also returns the resampling map that produced the
/// output.
pub fn normalize_with_transform(
    s: &RawSilhouette,
    bbox: &BoundingBox,
    out_h: usize,
    out_w: usize,
    source_id: &str,
) -> Result<(NormalizedSilhouette, NormTransform)> {
    if out_h == 0 || out_w == 0 {
        return Err(Error::InvalidParam("output size must be positive".into()));
    }
    let clipped = bbox.clip(s.width(), s.height()).ok_or(Error::DegenerateBox)?;

    // Restrict the mask to the box, then keep the largest component only.
    let mut region = vec![false; s.width() * s.height()];
    for y in clipped.y..clipped.y + clipped.height {
        for x in clipped.x..clipped.x + clipped.width {
            region[y * s.width() + x] = s.get(x, y);
        }
    }
    let comp = largest_component(s.width(), s.height(), &region);

    let mut x0 = usize::MAX;
    let mut y0 = usize::MAX;
    let mut x1 = 0usize;
    let mut y1 = 0usize;
    for (idx, &fg) in comp.iter().enumerate() {
        if fg {
            let x = idx % s.width();
            let y = idx / s.width();
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
    }
    if x0 == usize::MAX {
        return Err(Error::EmptySilhouette);
    }

    let src_h = y1 - y0 + 1;
    let src_w = x1 - x0 + 1;
    let scaled_w = ((src_w as f64 * out_h as f64 / src_h as f64).round() as usize).max(1);
    let mut t = NormTransform {
        src_x0: x0,
        src_y0: y0,
        src_w,
        src_h,
        scaled_w,
        shift: 0,
        out_w,
        out_h,
    };

    // Centroid of the rescaled-but-unshifted image decides the placement.
    let wide = NormTransform {
        shift: 0,
        out_w: scaled_w,
        ..t
    };
    let scaled = wide.render(s.width(), &comp);
    let c = centroid_of(scaled_w, &scaled)?;
    let target = out_w as f64 / 2.0;
    t.shift = (target - c.x).round() as i64;

    // Cropping at the canvas edges can move the centroid; nudge at most a
    // couple of times.
    let mut mask = t.render(s.width(), &comp);
    for _ in 0..3 {
        let c = centroid_of(out_w, &mask)?;
        if (c.x - target).abs() <= 1.0 {
            break;
        }
        t.shift += (target - c.x).round() as i64;
        mask = t.render(s.width(), &comp);
    }

    Ok((
        NormalizedSilhouette {
            width: out_w,
            height: out_h,
            mask,
            source_id: source_id.to_string(),
        },
        t,
    ))
}

/// Ordered outer boundary of a silhouette.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contour {
    points: Vec<(i32, i32)>,
}

impl Contour {
    pub fn points(&self) -> &[(i32, i32)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Polar angle of (x, y) around `c`, degrees in [0, 360), counterclockwise
/// as displayed (up is decreasing y).
pub(crate) fn polar_angle_deg(c: &Centroid, x: f64, y: f64) -> f64 {
    let mut a = (c.y - y).atan2(x - c.x).to_degrees();
    if a < 0.0 {
        a += 360.0;
    }
    if a >= 360.0 {
        a -= 360.0;
    }
    a
}

/// Assign an angle to its bin: bin k covers [k*step - step/2, k*step + step/2).
pub(crate) fn bin_of_angle(angle_deg: f64, nbins: usize) -> usize {
    let step = 360.0 / nbins as f64;
    ((angle_deg / step + 0.5).floor() as usize) % nbins
}

/// Trace the outer boundary of the largest 8-connected component of `s`,
/// counterclockwise, starting at the boundary point with the smallest angular
/// distance to the horizontal +x ray from `c`.
pub fn trace_contour(s: &NormalizedSilhouette, c: &Centroid) -> Result<Contour> {
    let w = s.width();
    let h = s.height();
    let comp = largest_component(w, h, s.mask());

    let mut start = None;
    'scan: for y in 0..h {
        for x in 0..w {
            if comp[y * w + x] {
                start = Some((x as i32, y as i32));
                break 'scan;
            }
        }
    }
    let start = start.ok_or(Error::EmptySilhouette)?;

    let at = |x: i32, y: i32| -> bool {
        x >= 0 && y >= 0 && (x as usize) < w && (y as usize) < h && comp[y as usize * w + x as usize]
    };

    // Moore neighborhood in visual clockwise order starting west.
    const DIRS: [(i32, i32); 8] = [
        (-1, 0),
        (-1, -1),
        (0, -1),
        (1, -1),
        (1, 0),
        (1, 1),
        (0, 1),
        (-1, 1),
    ];
    let find_next = |p: (i32, i32), b: (i32, i32)| -> Option<((i32, i32), (i32, i32))> {
        let rel = (b.0 - p.0, b.1 - p.1);
        let bi = DIRS.iter().position(|d| *d == rel).expect("backtrack adjacent");
        for k in 1..=8 {
            let q = (p.0 + DIRS[(bi + k) % 8].0, p.1 + DIRS[(bi + k) % 8].1);
            if at(q.0, q.1) {
                let nb = (
                    p.0 + DIRS[(bi + k - 1) % 8].0,
                    p.1 + DIRS[(bi + k - 1) % 8].1,
                );
                return Some((q, nb));
            }
        }
        None
    };

    let mut points = vec![start];
    let b0 = (start.0 - 1, start.1);
    let mut p = start;
    let mut b = b0;
    let mut first_move: Option<((i32, i32), (i32, i32))> = None;
    let limit = 8 * w * h + 8;
    loop {
        let Some((q, nb)) = find_next(p, b) else {
            break; // isolated pixel
        };
        match first_move {
            None => first_move = Some((p, q)),
            Some((fp, fq)) => {
                if p == fp && q == fq {
                    break; // the opening transition repeated: loop closed
                }
            }
        }
        points.push(q);
        p = q;
        b = nb;
        if points.len() > limit {
            debug_assert!(false, "contour trace exceeded bound");
            break;
        }
    }
    if points.len() > 1 && points.last() == points.first() {
        points.pop();
    }

    // Normalize orientation to counterclockwise as displayed. With y growing
    // down, that direction has a negative image-space shoelace sum.
    if points.len() > 2 {
        let mut shoelace = 0i64;
        for i in 0..points.len() {
            let (x0, y0) = points[i];
            let (x1, y1) = points[(i + 1) % points.len()];
            shoelace += x0 as i64 * y1 as i64 - x1 as i64 * y0 as i64;
        }
        if shoelace > 0 {
            points.reverse();
        }
    }

    // Rotate so index 0 is the point nearest the +x ray from the centroid.
    let key = |&(x, y): &(i32, i32)| {
        let a = polar_angle_deg(c, x as f64, y as f64);
        (a.min(360.0 - a), a)
    };
    let mut best = 0usize;
    let mut best_key = key(&points[0]);
    for (i, pt) in points.iter().enumerate().skip(1) {
        let k = key(pt);
        if k.0 < best_key.0 || (k.0 == best_key.0 && k.1 < best_key.1) {
            best_key = k;
            best = i;
        }
    }
    points.rotate_left(best);

    Ok(Contour { points })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect_mask(w: usize, h: usize, x0: usize, y0: usize, rw: usize, rh: usize) -> RawSilhouette {
        RawSilhouette::from_fn(w, h, |x, y| {
            x >= x0 && x < x0 + rw && y >= y0 && y < y0 + rh
        })
    }

    #[test]
    fn moment_counts_single_pixel() {
        let s = RawSilhouette::from_fn(8, 8, |x, y| x == 3 && y == 5);
        assert_eq!(s.raw_moment(0, 0), 1.0);
        assert_eq!(s.raw_moment(1, 0), 3.0);
        assert_eq!(s.raw_moment(0, 1), 5.0);
    }

    #[test]
    fn moment_of_two_by_two_block() {
        let s = rect_mask(4, 4, 0, 0, 2, 2);
        assert_eq!(s.raw_moment(1, 0), 2.0);
        assert_eq!(s.raw_moment(0, 1), 2.0);
        assert_eq!(s.raw_moment(0, 0), 4.0);
    }

    #[test]
    fn centroid_of_symmetric_square() {
        let s = rect_mask(5, 5, 0, 0, 3, 3);
        let c = s.centroid().unwrap();
        assert_eq!(c.x, 1.0);
        assert_eq!(c.y, 1.0);
    }

    #[test]
    fn centroid_of_single_pixel() {
        let s = RawSilhouette::from_fn(10, 6, |x, y| x == 7 && y == 2);
        let c = s.centroid().unwrap();
        assert_eq!(c.x, 7.0);
        assert_eq!(c.y, 2.0);
    }

    #[test]
    fn centroid_on_empty_mask_is_an_error() {
        let s = RawSilhouette::from_fn(4, 4, |_, _| false);
        assert!(matches!(s.centroid(), Err(Error::EmptySilhouette)));
    }

    #[test]
    fn largest_component_drops_specks() {
        let s = RawSilhouette::from_fn(10, 10, |x, y| {
            (x >= 2 && x <= 5 && y >= 2 && y <= 7) || (x == 9 && y == 9)
        });
        let comp = largest_component(10, 10, s.mask());
        assert!(!comp[9 * 10 + 9]);
        assert!(comp[3 * 10 + 3]);
    }

    #[test]
    fn normalize_is_identity_for_registered_input() {
        // A 144-tall centered column: the resampling must be a fixed point.
        let w = 144;
        let h = 144;
        let s = RawSilhouette::from_fn(w, h, |x, _| x >= 66 && x < 78);
        let n = normalize(&s, &BoundingBox::full(w, h), h, w, "t").unwrap();
        assert_eq!(n.mask(), s.mask());
    }

    #[test]
    fn normalize_preserves_aspect_ratio() {
        let s = rect_mask(60, 60, 10, 20, 10, 20);
        let n = normalize(&s, &BoundingBox::full(60, 60), 144, 144, "t").unwrap();
        // Foreground must fill the full height.
        let top_fg = (0..144).any(|x| n.get(x, 0));
        let bottom_fg = (0..144).any(|x| n.get(x, 143));
        assert!(top_fg && bottom_fg);
        // Width of the scaled 10x20 rectangle should be ~72 columns.
        let fg_cols: Vec<usize> = (0..144)
            .filter(|&x| (0..144).any(|y| n.get(x, y)))
            .collect();
        let width = fg_cols.last().unwrap() - fg_cols.first().unwrap() + 1;
        assert!((width as i64 - 72).abs() <= 1, "width was {width}");
    }

    #[test]
    fn normalize_centers_the_centroid() {
        let s = rect_mask(100, 100, 3, 10, 8, 50);
        let n = normalize(&s, &BoundingBox::full(100, 100), 144, 144, "t").unwrap();
        let c = n.centroid().unwrap();
        assert!((c.x - 72.0).abs() <= 1.0, "centroid at {}", c.x);
    }

    #[test]
    fn normalize_errors_on_empty_box() {
        let s = rect_mask(40, 40, 0, 0, 5, 5);
        let b = BoundingBox {
            x: 20,
            y: 20,
            width: 10,
            height: 10,
        };
        assert!(matches!(
            normalize(&s, &b, 144, 144, "t"),
            Err(Error::EmptySilhouette)
        ));
        let z = BoundingBox {
            x: 50,
            y: 0,
            width: 10,
            height: 10,
        };
        assert!(matches!(
            normalize(&s, &z, 144, 144, "t"),
            Err(Error::DegenerateBox)
        ));
    }

    fn norm_from_fn(w: usize, h: usize, f: impl Fn(usize, usize) -> bool) -> NormalizedSilhouette {
        let mut mask = vec![false; w * h];
        for y in 0..h {
            for x in 0..w {
                mask[y * w + x] = f(x, y);
            }
        }
        NormalizedSilhouette::from_parts(w, h, mask, "t").unwrap()
    }

    #[test]
    fn contour_of_single_pixel() {
        let s = norm_from_fn(5, 5, |x, y| x == 2 && y == 2);
        let c = s.centroid().unwrap();
        let contour = trace_contour(&s, &c).unwrap();
        assert_eq!(contour.points(), &[(2, 2)]);
    }

    #[test]
    fn contour_of_rectangle_visits_exactly_its_perimeter() {
        let s = norm_from_fn(12, 10, |x, y| x >= 2 && x <= 8 && y >= 3 && y <= 7);
        let c = s.centroid().unwrap();
        let contour = trace_contour(&s, &c).unwrap();
        let got: std::collections::BTreeSet<(i32, i32)> =
            contour.points().iter().copied().collect();
        let mut expected = std::collections::BTreeSet::new();
        for x in 2..=8i32 {
            for y in 3..=7i32 {
                if x == 2 || x == 8 || y == 3 || y == 7 {
                    expected.insert((x, y));
                }
            }
        }
        assert_eq!(got, expected);
        // Closed 8-connected loop.
        let pts = contour.points();
        for i in 0..pts.len() {
            let (x0, y0) = pts[i];
            let (x1, y1) = pts[(i + 1) % pts.len()];
            assert!((x0 - x1).abs() <= 1 && (y0 - y1).abs() <= 1);
            assert!((x0, y0) != (x1, y1) || pts.len() == 1);
        }
    }

    #[test]
    fn contour_runs_counterclockwise_from_the_horizontal_ray() {
        let s = norm_from_fn(21, 21, |x, y| {
            let dx = x as f64 - 10.0;
            let dy = y as f64 - 10.0;
            dx * dx + dy * dy <= 64.0
        });
        let c = s.centroid().unwrap();
        let contour = trace_contour(&s, &c).unwrap();
        let pts = contour.points();
        // Index 0 hugs the +x ray.
        let a0 = polar_angle_deg(&c, pts[0].0 as f64, pts[0].1 as f64);
        assert!(a0.min(360.0 - a0) < 8.0, "start angle {a0}");
        // Angles increase (mod 360) over the first quarter of the loop.
        let quarter = pts.len() / 4;
        let mut last = a0;
        for pt in &pts[1..quarter] {
            let a = polar_angle_deg(&c, pt.0 as f64, pt.1 as f64);
            let delta = (a - last + 360.0) % 360.0;
            assert!(delta < 180.0, "angle went backwards: {last} -> {a}");
            last = a;
        }
    }

    #[test]
    fn normalize_transform_replays_identically() {
        let s = rect_mask(80, 90, 11, 7, 20, 61);
        let (n, t) = normalize_with_transform(&s, &BoundingBox::full(80, 90), 144, 144, "a")
            .unwrap();
        let replay = t.apply(&s, "b");
        assert_eq!(n.mask(), replay.mask());
    }
}
