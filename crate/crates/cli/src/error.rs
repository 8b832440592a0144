use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}:{line}:{column}: {message}", path.display())]
    Schema { path: PathBuf, line: usize, column: usize, message: String },
    #[error(transparent)]
    Library(#[from] qframe::Error),
    #[error("{0}")]
    Usage(String),
}
