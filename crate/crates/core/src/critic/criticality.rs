use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::chroma::{chromatic_number, Budget, ChiResult, Coloring, SolverError};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriticalityError {
    #[error("graph has no vertices")]
    Empty,
    #[error("solving χ(G): {0}")]
    Whole(SolverError),
    #[error("solving χ(G - {vertex}): {source}")]
    Deletion { vertex: usize, source: SolverError },
}

impl CriticalityError {
    /// The vertex whose deletion was being solved, if any.
    pub fn vertex(&self) -> Option<usize> {
        match self {
            Self::Deletion { vertex, .. } => Some(*vertex),
            _ => None,
        }
    }
}

/// `χ(G - v)` with an optimal colouring of `G - v`.
///
/// `coloring` is indexed by the vertices of `G - v` relabelled in
/// ascending order, i.e. original vertex `u` sits at `u` if `u < v` and at
/// `u - 1` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Deletion {
    pub vertex: usize,
    pub chi: usize,
    pub coloring: Coloring,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub chi: usize,
    pub critical: bool,
    pub whole: ChiResult,
    pub per_vertex: Vec<Deletion>,
}

/// Solves `χ(G)` and `χ(G - v)` for every `v`. Deletions run in parallel on
/// the current rayon pool; results are ordered by vertex.
pub fn criticality_report(
    g: &Graph,
    budget: Budget,
) -> Result<CriticalityReport, CriticalityError> {
    if g.n() == 0 {
        return Err(CriticalityError::Empty);
    }
    let whole = chromatic_number(g, budget).map_err(CriticalityError::Whole)?;
    let per_vertex = (0..g.n())
        .into_par_iter()
        .map(|v| {
            let h = g.remove_vertex(v).expect("vertex in range");
            chromatic_number(&h, budget)
                .map(|r| Deletion {
                    vertex: v,
                    chi: r.chi,
                    coloring: r.coloring,
                    nodes: r.stats.nodes,
                })
                .map_err(|source| CriticalityError::Deletion { vertex: v, source })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let chi = whole.chi;
    let critical = per_vertex.iter().all(|d| d.chi + 1 == chi);
    Ok(CriticalityReport {
        chi,
        critical,
        whole,
        per_vertex,
    })
}
