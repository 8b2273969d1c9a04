//! Command-line front end: an expression parser for index combinations and
//! the `mzv` subcommands.

pub mod app;
pub mod expr;

pub use app::{run, Cli};
pub use expr::{evaluate, parse_expression, Expr, ParseError};
