//! Library surface of the command-line tool; the binary in `main.rs` is a
//! thin wrapper so that parsing and execution stay directly testable.

pub mod args;
pub mod json;
pub mod run;

pub use args::{parse_args, Command, CommandKind, OutputFormat, UsageError, USAGE};
pub use run::run;
