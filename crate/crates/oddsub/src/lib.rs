//! File formats, rendering and the command line for `oddsub-core`.

pub mod cli;
pub mod dot;
pub mod json;
