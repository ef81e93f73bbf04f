pub mod bundle;
pub mod cli;
pub mod error;
pub mod field;
pub mod hnr;
pub mod manifest;
pub mod poly;
pub mod report;
pub mod symbol;

pub use error::{Error, Result};
