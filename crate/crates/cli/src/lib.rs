//! File formats, reports and subcommands behind the `qframe` binary.

pub mod commands;
pub mod error;
pub mod format;
pub mod report;

pub use commands::{ExampleKind, Options};
pub use error::CliError;
pub use format::{parse_frame_file, FrameFile};
pub use report::ReportDocument;
