//! Element parsing, seeded sampling and the verification suites behind the
//! `amalgam` command-line tool.

pub mod config;
pub mod parse;
pub mod report;
pub mod sampling;
pub mod suites;

pub use config::{Config, ConfigError};
pub use parse::{parse_element, ParseError};
pub use report::{CheckRecord, Outcome, Report};
pub use suites::{run_all, run_suite, Suite};
