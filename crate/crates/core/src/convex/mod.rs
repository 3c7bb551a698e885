//! Finitely generated tropical convex sets.

mod extended;
mod span;

pub use extended::{extend_iso_eval, extended_equal, ExtendedPair};
pub use span::{principal_solution, ConvexSpan};
