pub mod commands;
pub mod dot;
pub mod error;
pub mod format;

pub use error::CliError;
