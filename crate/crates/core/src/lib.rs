//! Signal-to-motion regression engine for high-density surface EMG.
//!
//! Maps 320-channel sEMG recordings to 20 hand-joint 3D positions plus grip
//! force, end to end: on-disk recording formats and a deterministic synthetic
//! session generator, framing and Butterworth preprocessing, sEMG
//! augmentation, a small reverse-mode autodiff engine carrying the
//! 3D-CNN + MLP regressor, MAE/AdamW-AMSGrad training with transfer
//! learning, offline evaluation metrics, and a streaming inference engine
//! with a fixed timing contract (93.75 ms warm-up, 32 predictions/s).

pub mod augment;
pub mod autodiff;
pub mod config;
pub mod dataset;
pub mod dsp;
pub mod eval;
pub mod ingest;
pub mod model;
pub mod realtime;
pub mod scalar;
pub mod train;

pub use scalar::Scalar;

/// Sampling rate of the EMG front end in Hz.
pub const SAMPLE_RATE_HZ: u32 = 2048;
/// Electrode grids on the forearm.
pub const NUM_GRIDS: usize = 5;
/// Electrodes per grid (8 x 8).
pub const ELECTRODES_PER_GRID: usize = 64;
/// Total EMG channels.
pub const NUM_CHANNELS: usize = NUM_GRIDS * ELECTRODES_PER_GRID;
/// Samples per non-overlapping frame.
pub const FRAME_SAMPLES: usize = 64;
/// Frames combined into one model window.
pub const FRAMES_PER_WINDOW: usize = 3;
/// Samples per model window (192).
pub const WINDOW_SAMPLES: usize = FRAME_SAMPLES * FRAMES_PER_WINDOW;
/// Tracked hand joints (wrist excluded).
pub const NUM_JOINTS: usize = 20;
/// Model output width: 20 joints x 3 axes + grip force.
pub const OUTPUT_DIM: usize = NUM_JOINTS * 3 + 1;
/// Frame (and prediction) rate in Hz.
pub const FRAME_RATE_HZ: f64 = SAMPLE_RATE_HZ as f64 / FRAME_SAMPLES as f64;
/// Per-frame compute budget for the real-time engine, in seconds (31.25 ms).
pub const FRAME_PERIOD_S: f64 = FRAME_SAMPLES as f64 / SAMPLE_RATE_HZ as f64;
