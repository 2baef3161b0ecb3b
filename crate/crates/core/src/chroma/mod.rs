//! Exact chromatic number with certificates.
//!
//! `clique_lower` and `dsatur_upper` bracket `χ`; `is_k_colorable` closes
//! the gap with a DSATUR-ordered branch-and-bound that seeds the search
//! with the clique. Every positive answer carries a colouring that
//! `verify_coloring` re-checks.

mod clique;
mod dsatur;
mod search;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

pub use clique::clique_lower;
pub use dsatur::dsatur_upper;
pub use search::{chromatic_number, is_k_colorable, ChiResult, SearchStats};

/// Node limit used when nothing else is configured.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Per-call limits for the exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Maximum colour assignments tried by one `is_k_colorable` call.
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: DEFAULT_NODE_BUDGET,
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Self { max_nodes }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    /// The search hit its node limit; `χ` lies in `lower..=upper`.
    #[error("node budget of {budget} exhausted while testing {palette}-colourability (χ in {lower}..={upper})")]
    BudgetExhausted {
        budget: u64,
        palette: usize,
        lower: usize,
        upper: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("colouring assigns {got} vertices but the graph has {expected}")]
    MissingAssignment { expected: usize, got: usize },
}

/// A vertex colouring drawn from the palette `0..palette_size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<usize>,
    palette_size: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, palette_size: usize) -> Self {
        Self {
            colors,
            palette_size,
        }
    }

    /// A colouring whose palette is exactly the colours it uses.
    pub fn tight(colors: Vec<usize>) -> Self {
        let palette_size = colors.iter().max().map_or(0, |&c| c + 1);
        Self::new(colors, palette_size)
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colours actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// `Ok(true)` iff no edge is monochromatic and every colour is inside the
/// palette. A colouring that does not cover every vertex is an error, not
/// an improper colouring.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    if c.len() != g.n() {
        return Err(ColoringError::MissingAssignment {
            expected: g.n(),
            got: c.len(),
        });
    }
    if c.colors.iter().any(|&x| x >= c.palette_size) {
        return Ok(false);
    }
    Ok(g.edges().all(|(u, v)| c.colors[u] != c.colors[v]))
}
