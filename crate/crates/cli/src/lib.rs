//! Command-line front end: parameter derivation, constraint solving,
//! verification runs and the comma-separated datasets for plotting.

pub mod cli;
pub mod commands;
pub mod format;
pub mod summary;

pub use cli::{Cli, Command, OutputFormat};
pub use commands::{run, CliError, Outcome};
pub use format::{sig9, write_csv};
pub use summary::{DatasetSummary, RunSummary, SolutionSummary, Verdict};
