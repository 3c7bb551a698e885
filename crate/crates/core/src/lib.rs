//! Exact max-plus linear algebra over the finitary, tropical and completed
//! tropical semirings.
//!
//! The crate is organised bottom-up:
//!
//! - [`scalar`]: exact scalars with the completed semiring's product rule;
//! - [`linalg`]: vectors, matrices, the residuation bracket and the Hilbert
//!   projective metric;
//! - [`convex`]: finitely generated spans, membership, weak bases and the
//!   `inf a ⊕ b` extension calculus;
//! - [`duality`]: the duality maps between row and column spaces, kernel
//!   witnesses and isomorphisms between spans;
//! - [`greens`]: decision procedures with witnesses for Green's relations on
//!   square matrices;
//! - [`text`]: the plain-text exchange format.
//!
//! ```
//! use trop_core::{TropMatrix, TropVector, TropScalar};
//!
//! let x = TropVector::row(vec![TropScalar::int(0), TropScalar::int(0)]);
//! let y = TropVector::row(vec![TropScalar::int(1), TropScalar::int(2)]);
//! assert_eq!(x.bracket(&y).unwrap(), TropScalar::int(1));
//!
//! let a = TropMatrix::parse_rows("0 1; -inf 2").unwrap();
//! let v = TropMatrix::parse_rows("0; 0").unwrap();
//! assert_eq!(a.mul(&v).unwrap(), TropMatrix::parse_rows("1; 2").unwrap());
//! ```

pub mod convex;
pub mod duality;
pub mod error;
pub mod greens;
pub mod linalg;
pub mod scalar;
pub mod text;

pub use convex::{principal_solution, ConvexSpan, ExtendedPair};
pub use duality::IsoDescriptor;
pub use error::{Result, TropError};
pub use greens::{GreenVerdict, Relation};
pub use linalg::{Orientation, TropMatrix, TropVector};
pub use scalar::{Domain, TropScalar};
