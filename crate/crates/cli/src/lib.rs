//! Library surface of the `arraybeam` CLI: configuration parsing, file
//! emitters and workflow orchestration, kept out of `main.rs` so the
//! integration and acceptance suites can drive them directly.

pub mod colormap;
pub mod config;
pub mod emit;
pub mod error;
pub mod expr;
pub mod workflows;

pub use config::{parse_config, RunConfig, ScaleFlag, UnitsFlag, Workflow};
pub use error::{CliError, Result};
