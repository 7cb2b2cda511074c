//! File formats, command-line front end and acceptance suite for
//! [`sl2cp_core`].

pub mod acceptance;
pub mod cli;
pub mod expr;
pub mod json;
pub mod text;

pub use cli::{run, CommandResult, Execution, Status};
