//! Instance files, the law registry and runner, counterexample search and
//! the `pnbd` command-line interface, on top of `pnbd-core`.

pub mod error;
pub mod instance;
pub mod laws;
pub mod runner;
pub mod search;
pub mod universe;

pub use error::{CliError, Result};
pub use instance::{load_instance, parse_instance, witness_instance, Instance, InstanceFile};
