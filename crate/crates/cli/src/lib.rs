//! Verification harness around `hamspec`: reproducible checks of the spectral
//! Hamiltonicity conditions, threshold sweeps, seeded falsification suites and a
//! graph6 front-end to the certifier.

pub mod certify;
pub mod config;
pub mod error;
pub mod generate;
pub mod proofs;
pub mod prop;
pub mod report;
pub mod suite;
pub mod sweep;

pub use config::{parse_k_list, ExperimentConfig};
pub use error::{CliError, CliResult};
pub use report::{Relation, ReportRow};
