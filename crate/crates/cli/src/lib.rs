//! Library backing the `qrcs` command-line tool.
//!
//! The binary is a thin shell over three layers:
//!
//! - [`scenario`] — the declarative input: which parameter point to
//!   analyze and which artifacts to produce, loadable from JSON;
//! - [`report`] — scenario execution against `qrcs-core`, collecting
//!   per-artifact results, errors, and caveats into a single [`Report`];
//! - [`emit`] — deterministic renderings of a report as JSON, plain
//!   text, and CSV series files.
//!
//! Keeping these in a library crate lets integration tests drive the
//! exact pipeline the binary runs without spawning processes.

pub mod emit;
pub mod report;
pub mod scenario;

pub use emit::{csv_files, to_json, to_text, write_csv_files};
pub use report::{ArtifactError, ArtifactResult, Report, run_scenario};
pub use scenario::{ArtifactKind, CurvesSpec, Scenario, SweepSpec};
