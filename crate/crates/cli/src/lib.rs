//! File formats and command-line driver for `colorshift-core`.

pub mod cli;
pub mod format;
