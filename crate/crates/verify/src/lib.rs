//! Reports, certificate files and batch verification on top of `lmp-core`.

pub mod certfile;
pub mod error;
pub mod markdown;
pub mod report;
pub mod suite;

pub use error::{Result, VerifyError};
