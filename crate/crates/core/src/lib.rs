//! Talk-attendance prediction for conferences with parallel sessions.
//!
//! The crate loads a conference schedule, room-level attendance records,
//! face-to-face contact intervals and participants' prior publications, and
//! predicts which of the parallel talks each participant attends. Predictors
//! range from simple baselines through tf-idf cosine models to the hybrid
//! rooted random walk over layered interaction graphs.
//!
//! Module map:
//!
//! - [`dataset`]: input formats, validation, summary statistics, synthetic fixtures
//! - [`text`]: tokenization, Porter stemming, tf-idf vectors, cosine, silhouette
//! - [`graphs`]: per-slot cosine / coffee-break / presenter layers and session merging
//! - [`walk`]: hybrid rooted random walk transitions and stationary distributions
//! - [`predict`]: attendance decisions from every predictor, mixture sweep
//! - [`eval`]: accuracy, AUC and the contact influence analyses
//! - [`cli`]: the `talkwalk` command-line front end

pub mod cli;
pub mod dataset;
pub mod error;
pub mod eval;
pub mod graphs;
pub mod predict;
pub mod text;
pub mod walk;

pub use error::{Error, Result};
