//! One-stage object detection with joint multi-label attribute prediction.
//!
//! The crate builds a small feature-pyramid detector with three parallel
//! convolutional heads (class, box offsets, attributes), trains it with a
//! sigmoid focal loss, and evaluates attribute quality with ROC-AUC over
//! detections matched to ground truth.
//!
//! Modules follow the data flow: [`geometry`] and [`anchors`] define the
//! box/anchor machinery, [`model`] the network, [`losses`] the training
//! objective, [`data`] the datasets, [`postprocess`] the decoding of raw
//! head outputs into detections, [`eval`] the metrics, and [`trainer`] the
//! optimization loop. [`profiles`] bundles ready-made configurations.

pub mod anchors;
pub mod data;
pub mod error;
pub mod eval;
pub mod geometry;
pub mod losses;
pub mod model;
pub mod nn;
pub mod postprocess;
pub mod profiles;
pub mod trainer;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
