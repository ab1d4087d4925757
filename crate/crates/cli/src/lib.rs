//! Command implementations, file formats, caching and the sweep driver for
//! the `pbwdeg` binary. Kept as a library so the integration and
//! acceptance suites can drive the exact code paths the binary uses.

pub mod cache;
pub mod commands;
pub mod report;
pub mod sweep;
