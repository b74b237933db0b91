use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Gender label. Serialized decision values use -1 for female, +1 for male.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gender {
    Female,
    Male,
}

impl Gender {
    pub fn label(self) -> i8 {
        match self {
            Gender::Female => -1,
            Gender::Male => 1,
        }
    }

    pub fn from_label(label: i8) -> Gender {
        if label >= 0 {
            Gender::Male
        } else {
            Gender::Female
        }
    }

    pub fn parse(s: &str) -> Option<Gender> {
        match s.trim().to_ascii_lowercase().as_str() {
            "f" | "female" => Some(Gender::Female),
            "m" | "male" => Some(Gender::Male),
            _ => None,
        }
    }
}

impl std::fmt::Display for Gender {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Gender::Female => write!(f, "female"),
            Gender::Male => write!(f, "male"),
        }
    }
}

/// Walking condition of a sequence. Directory names use the short codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    Normal,
    Bag,
    Coat,
}

impl Condition {
    pub fn code(self) -> &'static str {
        match self {
            Condition::Normal => "nm",
            Condition::Bag => "bg",
            Condition::Coat => "cl",
        }
    }

    pub fn from_code(code: &str) -> Option<Condition> {
        match code {
            "nm" => Some(Condition::Normal),
            "bg" => Some(Condition::Bag),
            "cl" => Some(Condition::Coat),
            _ => None,
        }
    }

    pub fn parse(s: &str) -> Option<Condition> {
        match s.trim().to_ascii_lowercase().as_str() {
            "nm" | "normal" => Some(Condition::Normal),
            "bg" | "bag" => Some(Condition::Bag),
            "cl" | "coat" => Some(Condition::Coat),
            _ => None,
        }
    }
}

impl std::fmt::Display for Condition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Condition::Normal => write!(f, "normal"),
            Condition::Bag => write!(f, "bag"),
            Condition::Coat => write!(f, "coat"),
        }
    }
}

/// Camera-relative walking direction in degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ViewpointLabel(pub u16);

impl ViewpointLabel {
    pub fn degrees(self) -> u16 {
        self.0
    }
}

impl std::fmt::Display for ViewpointLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Adaptive window sizing: the window covers one nominal gait cycle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaitWindowParams {
    /// Video frame rate in frames per second.
    pub frame_rate: f64,
    /// Nominal gait cycle time in seconds.
    pub cycle_time: f64,
}

impl GaitWindowParams {
    /// Window length in frames: round(cycle_time * frame_rate), at least 1.
    pub fn window_len(&self) -> usize {
        let t = (self.cycle_time * self.frame_rate).round();
        if t < 1.0 {
            1
        } else {
            t as usize
        }
    }
}

impl Default for GaitWindowParams {
    fn default() -> Self {
        GaitWindowParams {
            frame_rate: 25.0,
            cycle_time: 0.6,
        }
    }
}

/// All tunable parameters of the pipeline. This struct is the schema of the
/// JSON config file and of the model-file header.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PipelineParams {
    /// Height of a normalized silhouette in pixels.
    pub norm_height: usize,
    /// Width of a normalized silhouette in pixels.
    pub norm_width: usize,
    /// Number of angular bins in a distance signal.
    pub ds_bins: usize,
    /// Moving-average window applied to distance signals (odd).
    pub smooth_window: usize,
    pub window: GaitWindowParams,
    /// Configured view angles in degrees, ascending.
    pub views: Vec<u16>,
    /// Soft-margin penalty of the linear SVM.
    pub svm_c: f64,
    /// Outer epoch budget of the SVM solver.
    pub svm_max_iter: usize,
    /// Stride between training feature windows within a sequence.
    pub train_window_stride: usize,
    /// Seed recorded in the model file; also drives evaluation shuffles.
    pub seed: u64,
}

impl Default for PipelineParams {
    fn default() -> Self {
        PipelineParams {
            norm_height: 144,
            norm_width: 144,
            ds_bins: 360,
            smooth_window: 3,
            window: GaitWindowParams::default(),
            views: (0..=10).map(|i| i * 18).collect(),
            svm_c: 1.0,
            svm_max_iter: 100,
            train_window_stride: 1,
            seed: 0,
        }
    }
}

impl PipelineParams {
    pub fn window_len(&self) -> usize {
        self.window.window_len()
    }

    /// Feature dimension of a flattened average gait image.
    pub fn feature_dim(&self) -> usize {
        self.norm_height * self.norm_width
    }

    pub fn validate(&self) -> Result<()> {
        if self.norm_height == 0 || self.norm_width == 0 {
            return Err(Error::InvalidParam("norm size must be positive".into()));
        }
        if self.ds_bins < 4 {
            return Err(Error::InvalidParam("ds_bins must be at least 4".into()));
        }
        if self.smooth_window % 2 == 0 {
            return Err(Error::EvenWindow(self.smooth_window));
        }
        if self.views.is_empty() {
            return Err(Error::InvalidParam("view set must be non-empty".into()));
        }
        if self.views.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParam(
                "views must be strictly ascending".into(),
            ));
        }
        if self.svm_c <= 0.0 {
            return Err(Error::InvalidParam("svm_c must be positive".into()));
        }
        if self.svm_max_iter == 0 {
            return Err(Error::InvalidParam("svm_max_iter must be >= 1".into()));
        }
        if self.train_window_stride == 0 {
            return Err(Error::InvalidParam("stride must be >= 1".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_window_is_fifteen_frames() {
        assert_eq!(GaitWindowParams::default().window_len(), 15);
    }

    #[test]
    fn window_len_never_below_one() {
        let p = GaitWindowParams {
            frame_rate: 1.0,
            cycle_time: 0.1,
        };
        assert_eq!(p.window_len(), 1);
    }

    #[test]
    fn default_views_cover_eleven_angles() {
        let p = PipelineParams::default();
        assert_eq!(p.views.len(), 11);
        assert_eq!(p.views[0], 0);
        assert_eq!(*p.views.last().unwrap(), 180);
        p.validate().unwrap();
    }

    #[test]
    fn validate_rejects_even_smoothing() {
        let p = PipelineParams {
            smooth_window: 4,
            ..Default::default()
        };
        assert!(matches!(p.validate(), Err(Error::EvenWindow(4))));
    }
}
