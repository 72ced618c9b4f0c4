//! Explicit totally odd subdivisions of complete graphs in Kneser graphs.

pub mod chromatic_clique;
pub mod large_clique;

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::kset::KSubset;

/// One terminal-to-terminal path, terminals included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFamily {
    pub pair: (usize, usize),
    pub vertices: Vec<KSubset>,
}

impl PathFamily {
    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn internal(&self) -> &[KSubset] {
        let n = self.vertices.len();
        if n <= 2 {
            &[]
        } else {
            &self.vertices[1..n - 1]
        }
    }
}

/// Consecutive vertices disjoint and an odd number of edges.
pub(crate) fn check_chain(vertices: &[KSubset], label: &str) -> Result<()> {
    for (pos, w) in vertices.windows(2).enumerate() {
        if !w[0].is_disjoint(&w[1]) {
            return Err(Error::ConstructionBug(format!(
                "{label}: steps {pos} and {} meet: {} and {}",
                pos + 1,
                w[0],
                w[1]
            )));
        }
    }
    if vertices.len() % 2 != 0 {
        return Err(Error::ConstructionBug(format!(
            "{label}: {} edges, expected an odd count",
            vertices.len().saturating_sub(1)
        )));
    }
    Ok(())
}
