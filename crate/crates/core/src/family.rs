//! The family `G(q, k)`: vertices `v_0..v_{qk}`, indices taken modulo
//! `qk + 1`, with `v_i` adjacent to `v_{i-1}`, `v_{i+1}` and to
//! `v_{i+kj+m}` for `m = 2..=k-1`, `j = 0..q`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chroma::{verify_coloring, Coloring};
use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("q must be ≥ 1 (got {0})")]
    QTooSmall(usize),
    #[error("k must be ≥ 3 (got {0})")]
    KTooSmall(usize),
    #[error("q·k+1 overflows")]
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    q: usize,
    k: usize,
}

impl FamilyParams {
    pub fn new(q: usize, k: usize) -> Result<Self, ParamError> {
        if q < 1 {
            return Err(ParamError::QTooSmall(q));
        }
        if k < 3 {
            return Err(ParamError::KTooSmall(k));
        }
        q.checked_mul(k)
            .and_then(|x| x.checked_add(1))
            .ok_or(ParamError::Overflow)?;
        Ok(Self { q, k })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Vertex count `qk + 1`.
    pub fn n(&self) -> usize {
        self.q * self.k + 1
    }

    /// The last vertex `v_{qk}`.
    pub fn last(&self) -> usize {
        self.q * self.k
    }

    /// Common degree `q(k-2) + 2`.
    pub fn degree(&self) -> usize {
        self.q * (self.k - 2) + 2
    }

    pub fn edge_count(&self) -> usize {
        self.n() * self.degree() / 2
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.q, self.k)
    }
}

/// The neighbour list of `v_i` exactly as the defining formula lists it,
/// reduced into `0..=qk` but *not* deduplicated.
pub fn raw_neighbourhood(p: FamilyParams, i: usize) -> Vec<usize> {
    let n = p.n();
    let mut out = Vec::with_capacity(p.degree());
    out.push((i + n - 1) % n);
    out.push((i + 1) % n);
    for j in 0..p.q {
        for m in 2..p.k {
            out.push((i + p.k * j + m) % n);
        }
    }
    out
}

pub fn build_family(p: FamilyParams) -> Graph {
    let n = p.n();
    let raw: Vec<Vec<usize>> = (0..n).map(|i| raw_neighbourhood(p, i)).collect();
    let mut g = Graph::empty(n);
    for (i, nbrs) in raw.iter().enumerate() {
        for &t in nbrs {
            assert_ne!(t, i, "{p}: formula produced a self-loop at v_{i}");
            // The formula is symmetric on its own; closure adds nothing.
            assert!(
                raw[t].contains(&i),
                "{p}: v_{t} listed for v_{i} but not conversely"
            );
            g.set_edge(i, t);
        }
    }
    g
}

/// The residue classes `V_i = { v_t : t ≡ i (mod k) }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionClasses {
    pub classes: Vec<VertexSet>,
}

pub fn partition_classes(p: FamilyParams) -> PartitionClasses {
    let mut classes = vec![VertexSet::new(); p.k];
    for t in 0..p.n() {
        classes[t % p.k].insert(t);
    }
    PartitionClasses { classes }
}

/// `{v_i, ..., v_{i+k-1}}`, one of the consecutive windows inducing `K_k`.
/// Valid for `0 <= i <= (q-1)k + 1`.
pub fn clique_window(p: FamilyParams, i: usize) -> VertexSet {
    assert!(i + p.k <= p.n(), "window start {i} out of range for {p}");
    (i..i + p.k).collect()
}

/// Number of window starts `i` with `0 <= i <= (q-1)k + 1`.
pub fn clique_window_count(p: FamilyParams) -> usize {
    (p.q - 1) * p.k + 2
}

/// `v_j -> j mod k` for `j < qk`, and `v_{qk} -> k`.
///
/// Panics if the result is not a proper colouring of `build_family(p)`,
/// which would mean the construction itself is broken.
pub fn canonical_coloring(p: FamilyParams) -> Coloring {
    let c = canonical_colors(p);
    let g = build_family(p);
    assert_eq!(
        verify_coloring(&g, &c),
        Ok(true),
        "canonical colouring of {p} is improper"
    );
    c
}

/// The canonical colouring without the properness check.
pub fn canonical_colors(p: FamilyParams) -> Coloring {
    let colors = (0..p.n())
        .map(|j| if j == p.last() { p.k } else { j % p.k })
        .collect();
    Coloring::new(colors, p.k + 1)
}

/// The rotation `v_i -> v_{i+1}`.
pub fn rotation(p: FamilyParams) -> Vec<usize> {
    let n = p.n();
    (0..n).map(|i| (i + 1) % n).collect()
}

/// True iff `perm` preserves adjacency and non-adjacency.
pub fn is_automorphism(g: &Graph, perm: &[usize]) -> Result<bool, GraphError> {
    let n = g.n();
    if perm.len() != n {
        return Err(GraphError::NotBijection {
            n,
            reason: format!("length {} differs from n", perm.len()),
        });
    }
    let mut seen = vec![false; n];
    for (u, &x) in perm.iter().enumerate() {
        if x >= n {
            return Err(GraphError::NotBijection {
                n,
                reason: format!("{u} maps to {x}, out of range"),
            });
        }
        if std::mem::replace(&mut seen[x], true) {
            return Err(GraphError::NotBijection {
                n,
                reason: format!("{x} is hit twice"),
            });
        }
    }
    Ok((0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == g.has_edge(perm[u], perm[v]))))
}
