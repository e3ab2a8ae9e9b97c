//! Library half of the `loopmu` command: reports, census and randomized
//! identity suites, shared by the binary and the acceptance checks.

pub mod census;
pub mod report;
pub mod verify;

pub use report::{bracket, compute, BracketReport, Report};

/// Surface used when a command does not name one.
pub const DEFAULT_SURFACE: &str = "genus:2,boundary:1";

/// Process exit status for an error: 2 for internal invariant violations,
/// 1 for everything else (bad input, unreadable files).
pub fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<loopmu::Error>() {
        Some(e) if e.is_internal() => 2,
        _ => 1,
    }
}
