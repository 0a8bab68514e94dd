//! Two-photon co-excitation of two atoms by biphoton light.
//!
//! See the crate README and `examples/` for usage.

pub mod cli;
pub mod correlations;
pub mod engine;
pub mod error;
pub mod model;
pub mod numeric;
pub mod states;
pub mod validation;

pub use error::{Error, Result};
