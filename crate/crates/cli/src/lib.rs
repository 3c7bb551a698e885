//! Command-line front end and seeded property harness for `trop-core`.
//!
//! The harness draws instances with a per-trial ChaCha8 stream (see
//! [`sample`]), checks them against the property catalog in
//! [`properties`], and reports failures as replayable [`Instance`] files.

pub mod commands;
pub mod harness;
pub mod instance;
pub mod io;
pub mod json;
pub mod oracle;
pub mod properties;
pub mod sample;

pub use commands::{execute, Cli, Outcome};
pub use harness::{HarnessConfig, RunReport};
pub use instance::Instance;
