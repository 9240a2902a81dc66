use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] trunkit::Error),

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Input and usage problems exit with 2.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
