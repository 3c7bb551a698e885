//! Vectors and matrices over the completed max-plus semiring.

mod matrix;
mod vector;

pub use matrix::TropMatrix;
pub use vector::{Orientation, TropVector};
