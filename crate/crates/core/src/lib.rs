pub mod cli;
pub mod crystal;
pub mod error;
pub mod klcells;
pub mod report;
pub mod symgroup;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
