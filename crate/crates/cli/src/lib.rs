//! Instance files, run reports, oracle summaries and benchmarks behind the
//! `esn` binary.

#![allow(clippy::result_large_err)]

pub mod bench;
pub mod generate;
pub mod instance;
pub mod report;

/// Environment variable overriding the enumeration cap.
pub const ENUM_CAP_VAR: &str = "ESN_ENUM_CAP";

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INVALID_INPUT: i32 = 1;
    pub const RESOURCE_CAP: i32 = 2;
    pub const VIOLATION: i32 = 3;
}
