//! The `ug` command-line tool: parsing of `.ug` graph descriptions and
//! analysis commands over ultragraphs — quotients by admissible pairs,
//! Conditions (L) and (K), dual graphs of fragments, and the lattice of
//! admissible pairs with primitivity classification.
//!
//! The binary is a thin wrapper; everything it does is reachable
//! through [`cli::execute`], which keeps the whole surface testable
//! in-process.

pub mod cli;
pub mod flags;
pub mod parse;
pub mod report;

pub use cli::{execute, Cli, Command, Outcome};
pub use flags::FlagError;
pub use parse::{parse_ug, print_ug, ParseError};
