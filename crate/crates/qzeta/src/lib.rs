pub mod cli;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod partitions;
pub mod qkit;
pub mod report;
pub mod rrsums;
pub mod zeta;

pub use error::{Error, Result};
