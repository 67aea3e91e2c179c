//! File formats, threading and the command line for random Artin group
//! experiments. The computations themselves live in `artin-randlab-core`.

pub mod cli;
mod error;
pub mod experiment;
pub mod format;
pub mod parallel;
pub mod table;
pub mod verify;

pub use error::CliError;
