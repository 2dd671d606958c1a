//! Toolkit for training unsupervised sentence representations (additive
//! skip-gram, FastSent, Paragraph Vector, sequential denoising autoencoder),
//! probing how much sentiment polarity they retain with a small MLP, and
//! benchmarking against a supervised bi-directional LSTM.
//!
//! Everything is deterministic given a seed: training, encoding, evaluation
//! and file output. The random generator is xoshiro256** seeded through
//! SplitMix64 (see [`numerics::rng`]).

pub mod bilstm;
pub mod config;
pub mod corpus;
pub mod encoder;
pub mod error;
pub mod fastsent;
pub mod manifest;
pub mod model_io;
pub mod numerics;
pub mod pipeline;
pub mod probe;
pub mod pvec;
pub mod saliency;
pub mod sdae;
pub mod sgns;

pub use error::{Error, Result};

/// Toolkit version stamped into model files and run manifests.
pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");
