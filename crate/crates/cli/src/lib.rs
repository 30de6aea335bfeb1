//! Pipelines behind the `kstab` command-line tool.

pub mod commands;
pub mod error;
pub mod job;
pub mod report;

pub use commands::{AppendixOptions, Overrides};
pub use error::CliError;
pub use job::{Job, JobDocument};
pub use report::{render, Format, Output};
