//! Command-line front end for the residue current engine: expression parsing,
//! canonical printing, JSON encoding and subcommand dispatch.

pub mod app;
pub mod json;
pub mod parse;

pub use app::{run, run_args, Cli, Outcome};
pub use json::{current_from_json, current_to_json, report_from_json, report_to_json};
pub use parse::{parse_current, parse_ideal, parse_module, parse_set, ParseError};
