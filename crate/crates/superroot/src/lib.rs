//! JSON formats and the command-line front end for `superroot-core`.

pub mod cli;
pub mod json;

pub use cli::{run, run_with_env, Outcome};
