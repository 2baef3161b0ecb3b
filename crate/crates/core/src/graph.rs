//! Simple undirected graphs with bit-packed adjacency rows.
//!
//! Vertices are the dense integers `0..n`. Every row is `words` 64-bit
//! words long; bit `v` of row `u` is set iff `u ~ v`. Constructors keep the
//! relation symmetric and loop-free, and graphs are immutable afterwards.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop ({0}, {0}) is not allowed")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) is out of range for a graph on {n} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("graph on {n} vertices exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("mapping is not a bijection on 0..{n}: {reason}")]
    NotBijection { n: usize, reason: String },
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Iterates the set bits of a word slice in ascending order.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

/// A set of vertex indices, kept sorted and free of duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Every vertex of a graph on `n` vertices.
    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn check_range(&self, n: usize) -> Result<(), GraphError> {
        match self.max() {
            Some(v) if v >= n => Err(GraphError::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(a: [usize; N]) -> Self {
        a.into_iter().collect()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Self {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        g
    }

    /// The cycle `0-1-...-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::path(n);
        g.set_edge(n - 1, 0);
        g
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of 64-bit words per adjacency row.
    pub fn words(&self) -> usize {
        self.words
    }

    /// The bit-packed neighbourhood row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Open neighbourhood `N(v)` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        self.neighbors(v).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// `Some(d)` if every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degs = (0..self.n).map(|v| self.degree(v));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// `self + other`; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let off = self.n;
        let mut g = Self::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + off, v + off);
        }
        g
    }

    /// `G[S]`, relabelled so that the i-th smallest member of `s` becomes `i`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Self, GraphError> {
        s.check_range(self.n)?;
        let members = s.as_slice();
        let mut g = Self::empty(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// `G - v`, relabelled in ascending order of the remaining vertices.
    pub fn remove_vertex(&self, v: usize) -> Result<Self, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        self.induced_subgraph(&(0..self.n).filter(|&u| u != v).collect())
    }

    pub fn is_stable_set(&self, s: &VertexSet) -> Result<bool, GraphError> {
        s.check_range(self.n)?;
        Ok(self.edge_inside(s).is_none())
    }

    /// Some edge with both endpoints in `s`, if one exists.
    pub fn edge_inside(&self, s: &VertexSet) -> Option<(usize, usize)> {
        let m = s.as_slice();
        for (i, &u) in m.iter().enumerate() {
            for &v in &m[i + 1..] {
                if u < self.n && v < self.n && self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let m = s.as_slice();
        m.iter()
            .enumerate()
            .all(|(i, &u)| m[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Checks the representation invariants (symmetry, no loops, no stray
    /// bits past `n`).
    pub fn check_invariants(&self) -> bool {
        let tail_mask = if self.n.is_multiple_of(64) {
            u64::MAX
        } else {
            (1u64 << (self.n % 64)) - 1
        };
        (0..self.n).all(|u| {
            let row = self.row(u);
            let tail_ok = row.last().is_none_or(|&w| w & !tail_mask == 0);
            tail_ok
                && !self.has_edge(u, u)
                && self.neighbors(u).all(|v| v < self.n && self.has_edge(v, u))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_builds_k4_and_p3() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4, Graph::complete(4));
        assert_eq!(k4.edge_count(), 6);
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3, Graph::path(3));
        let single = Graph::from_edges(1, []).unwrap();
        assert_eq!(single.n(), 1);
        assert_eq!(single.edge_count(), 0);
    }

    #[test]
    fn from_edges_rejects_bad_pairs() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::EdgeOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        let p5 = Graph::path(5);
        assert_eq!(p5.complement().complement(), p5);
    }

    #[test]
    fn disjoint_union_examples() {
        let k3p1 = Graph::complete(3).disjoint_union(&Graph::empty(1));
        assert_eq!((k3p1.n(), k3p1.edge_count()), (4, 3));
        assert_eq!(k3p1.degree(3), 0);
        let two_k2 = Graph::path(2).disjoint_union(&Graph::path(2));
        assert_eq!((two_k2.n(), two_k2.edge_count()), (4, 2));
        assert!(!two_k2.has_edge(1, 2));
        assert_eq!(
            Graph::empty(0).disjoint_union(&Graph::complete(4)),
            Graph::complete(4)
        );
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = Graph::cycle(5);
        for drop in 0..5 {
            let s: VertexSet = (0..5).filter(|&v| v != drop).collect();
            let h = c5.induced_subgraph(&s).unwrap();
            assert_eq!(h.edge_count(), 3);
            let mut degs = h.degrees();
            degs.sort();
            assert_eq!(degs, vec![1, 1, 2, 2]);
        }
        assert_eq!(
            Graph::complete(4)
                .induced_subgraph(&VertexSet::from([0, 1]))
                .unwrap(),
            Graph::complete(2)
        );
        assert!(matches!(
            c5.induced_subgraph(&VertexSet::from([0, 5])),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 5 })
        ));
    }

    #[test]
    fn stable_set_of_empty_set() {
        assert!(Graph::complete(3).is_stable_set(&VertexSet::new()).unwrap());
        assert!(!Graph::complete(3)
            .is_stable_set(&VertexSet::from([0, 2]))
            .unwrap());
        assert!(Graph::complete(3)
            .is_stable_set(&VertexSet::from([7]))
            .is_err());
    }

    #[test]
    fn wide_graphs_use_multiple_words() {
        let g = Graph::cycle(130);
        assert_eq!(g.words(), 3);
        assert!(g.has_edge(129, 0));
        assert!(g.has_edge(63, 64));
        assert_eq!(g.regular_degree(), Some(2));
        assert!(g.check_invariants());
        assert!(g.complement().check_invariants());
    }

    #[test]
    fn vertex_set_dedups_and_sorts() {
        let s: VertexSet = vec![3, 1, 3, 2].into();
        assert_eq!(s.as_slice(), &[1, 2, 3]);
    }
}
