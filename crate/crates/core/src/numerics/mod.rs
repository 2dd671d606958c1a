//! Dense linear algebra, activations, seeded randomness, SGD and the
//! finite-difference gradient oracle used by every model's tests.

pub mod gradcheck;
pub mod matrix;
pub mod ops;
pub mod rng;
pub mod sampling;

pub use gradcheck::{finite_difference_gradient, gradients_close, relative_error};
pub use matrix::{DType, Matrix};
pub use ops::{log_softmax, sgd_step, sigmoid, softmax, xavier_init};
pub use rng::{derive_seed, SeededRng};
pub use sampling::WeightedSampler;
