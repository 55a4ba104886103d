//! Command-line front end for `colmahon-core`: statistics of single colored
//! permutations, enumerated distributions, integer sequences, reproduction
//! of the published tables, and the verification report.

pub mod commands;
pub mod fixtures;
pub mod output;
pub mod parallel;
pub mod tables;

pub use commands::{main_with, Cli, CliError, Command, Outcome};
pub use output::Format;
