//! Text grammar, printers, and command-line front end for the
//! difference-algebra strength toolkit.
//!
//! The heavy lifting lives in `delta-strength-core`; this crate owns the
//! system-file syntax ([`mod@parse`]), the canonical printers ([`syntax`]), the
//! text and JSON emitters ([`emit`]), and the subcommand dispatch
//! ([`cli::run`]).

pub mod cli;
pub mod emit;
pub mod parse;
pub mod syntax;

pub use cli::{run, CliError};
pub use parse::{parse, ParseError, ParseErrorKind, SystemFile};

/// Environment variable overriding the reduction step cap used by the
/// `reduce` subcommand.
pub const STEP_CAP_ENV: &str = "DELTA_STRENGTH_STEP_CAP";
