//! Command-line front end: JSON algebra files, identity checks, constructions
//! and exhaustive searches.

pub mod commands;
pub mod error;
pub mod format;
pub mod report;
