//! Expected-values dataset, recomputation of every table and report output.

pub mod expected;
pub mod factor;
pub mod report;
pub mod verify;

pub use expected::{expected_tables, ExpectedCell, ExpectedTable, TABLE_IDS};
pub use factor::{format_factored, parse_factored};
pub use report::{Format, Table};
pub use verify::{compute_table, run_verification, CellResult, Scope, VerificationReport};
