pub mod error;
pub mod linalg;
pub mod polyalg;
pub mod rootsys;

pub use error::{Error, Result};
pub mod charclass;
pub mod cli;
pub mod oracle;
pub mod powersum;
pub mod weylsum;
