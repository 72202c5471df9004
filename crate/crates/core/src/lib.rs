pub mod analysis;
pub mod cli;
pub mod envelope;
pub mod error;
pub mod extension;
pub mod grid;
pub mod instances;
pub mod repro;

pub use error::{Error, Result};
