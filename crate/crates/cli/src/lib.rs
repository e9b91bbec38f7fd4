//! Command-line front end for the `outstanding` library.

pub mod commands;
pub mod record;
