//! Constructions and certification of totally odd subdivisions and
//! immersions of complete graphs in Kneser graphs, generalized Mycielskians
//! and graphs whose zigzag number equals their chromatic number.

#![no_std]

extern crate alloc;

pub mod certify;
pub mod chromatic;
mod error;
pub mod graph;
pub mod host;
pub mod kset;
pub mod lift;
pub mod subdivision;
pub mod zigzag;

pub use error::{Error, Result};
