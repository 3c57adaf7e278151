//! Text formats, JSON encodings, rendering and the command-line front end
//! for `hncalc-core`.

pub mod commands;
pub mod json;
pub mod parse;
pub mod render;

pub use commands::{run, Cli, CliError, Output};
pub use parse::{parse_bundle, parse_slope, ParseError};
