//! Library half of the command-line crate: file and argument formats.
//!
//! The binary in `main.rs` stays a thin dispatcher; everything that is
//! testable without a process boundary lives here.

pub mod format;
