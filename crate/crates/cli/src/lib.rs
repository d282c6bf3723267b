//! Command-line front end for `genusdist`.
//!
//! Kept as a library so the JSON records can be parsed back in tests.

pub mod args;
pub mod record;
mod render;
mod run;

pub use render::render;
pub use run::{execute, exit_code, Limits};
