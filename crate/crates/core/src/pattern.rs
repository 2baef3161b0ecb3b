//! Named forbidden patterns and exact induced-subgraph containment.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{iter_bits, Graph, VertexSet};
use crate::iso::is_isomorphic_small;

/// Largest `t` accepted for the parametric names `Pt`, `Ct`, `Kt`.
pub const MAX_PATTERN_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("unknown pattern `{0}` (expected Pt, Ct, Kt, 2K2, 2P2 or K3+P1)")]
    Unknown(String),
    #[error("pattern `{name}`: size {t} outside {min}..={max}")]
    SizeOutOfRange {
        name: String,
        t: usize,
        min: usize,
        max: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    graph: Graph,
}

impl Pattern {
    pub fn custom(name: impl Into<String>, graph: Graph) -> Self {
        Self {
            name: name.into(),
            graph,
        }
    }

    pub fn path(t: usize) -> Self {
        Self::custom(format!("P{t}"), Graph::path(t))
    }

    pub fn cycle(t: usize) -> Self {
        Self::custom(format!("C{t}"), Graph::cycle(t))
    }

    pub fn complete(t: usize) -> Self {
        Self::custom(format!("K{t}"), Graph::complete(t))
    }

    /// Two disjoint edges. Also known as 2P2.
    pub fn two_k2() -> Self {
        Self::custom("2K2", Graph::path(2).disjoint_union(&Graph::path(2)))
    }

    pub fn k3_plus_p1() -> Self {
        Self::custom("K3+P1", Graph::complete(3).disjoint_union(&Graph::empty(1)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Parses a pattern token such as `P5`, `C5`, `K4`, `2K2` or `K3+P1`.
pub fn make_pattern(name: &str) -> Result<Pattern, PatternError> {
    name.parse()
}

impl FromStr for Pattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tok = s.trim();
        match tok.to_ascii_uppercase().as_str() {
            "2K2" | "2P2" => return Ok(Self::two_k2()),
            "K3+P1" | "P1+K3" => return Ok(Self::k3_plus_p1()),
            _ => {}
        }
        let unknown = || PatternError::Unknown(tok.to_string());
        let mut chars = tok.chars();
        let kind = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(unknown());
        }
        let t: usize = digits.parse().map_err(|_| unknown())?;
        let min = match kind {
            'P' | 'K' => 1,
            'C' => 3,
            _ => return Err(unknown()),
        };
        if !(min..=MAX_PATTERN_ORDER).contains(&t) {
            return Err(PatternError::SizeOutOfRange {
                name: tok.to_string(),
                t,
                min,
                max: MAX_PATTERN_ORDER,
            });
        }
        Ok(match kind {
            'P' => Self::path(t),
            'C' => Self::cycle(t),
            _ => Self::complete(t),
        })
    }
}

/// Searches for an induced copy of `h` in `g`.
///
/// Returns `phi` with `phi[u]` the image of pattern vertex `u`, such that
/// `phi[u] ~ phi[v]` in `g` iff `u ~ v` in `h`. Pattern vertices are
/// placed in order of most already-placed neighbours; host candidates are
/// tried in ascending index, so the first witness found is deterministic.
pub fn contains_induced(g: &Graph, h: &Pattern) -> Option<Vec<usize>> {
    let hg = h.graph();
    let (n, t) = (g.n(), hg.n());
    if t > n {
        return None;
    }
    if t == 0 {
        return Some(Vec::new());
    }
    let order = pattern_order(hg);
    let gdeg = g.degrees();
    // Host vertices whose degree and co-degree can accommodate each
    // pattern vertex.
    let fits: Vec<Vec<u64>> = (0..t)
        .map(|u| {
            let d = hg.degree(u);
            let co = t - 1 - d;
            let mut mask = vec![0u64; g.words()];
            for x in 0..n {
                if gdeg[x] >= d && n - 1 - gdeg[x] >= co {
                    mask[x / 64] |= 1 << (x % 64);
                }
            }
            mask
        })
        .collect();
    let mut state = Embed {
        g,
        h: hg,
        order: &order,
        fits: &fits,
        map: vec![usize::MAX; t],
        used: vec![0u64; g.words()],
    };
    state.extend(0).then_some(state.map)
}

fn pattern_order(h: &Graph) -> Vec<usize> {
    let t = h.n();
    let mut placed = vec![false; t];
    let mut order = Vec::with_capacity(t);
    for _ in 0..t {
        let next = (0..t)
            .filter(|&u| !placed[u])
            .max_by_key(|&u| {
                let back = h.neighbors(u).filter(|&w| placed[w]).count();
                (back, h.degree(u), std::cmp::Reverse(u))
            })
            .expect("unplaced pattern vertex");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Embed<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: &'a [usize],
    fits: &'a [Vec<u64>],
    map: Vec<usize>,
    used: Vec<u64>,
}

impl Embed<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        let mut cand = self.fits[u].clone();
        for (c, used) in cand.iter_mut().zip(&self.used) {
            *c &= !used;
        }
        for &w in &self.order[..depth] {
            let row = self.g.row(self.map[w]);
            let adjacent = self.h.has_edge(u, w);
            for (c, r) in cand.iter_mut().zip(row) {
                *c &= if adjacent { *r } else { !*r };
            }
        }
        for x in iter_bits(&cand) {
            self.map[u] = x;
            self.used[x / 64] |= 1 << (x % 64);
            if self.extend(depth + 1) {
                return true;
            }
            self.used[x / 64] &= !(1 << (x % 64));
        }
        self.map[u] = usize::MAX;
        false
    }
}

/// Whether `g` is free of one pattern, with a witness when it is not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreenessVerdict {
    pub pattern: String,
    pub free: bool,
    /// Vertex set of `g` inducing the pattern.
    pub witness: Option<VertexSet>,
    /// `embedding[u]` is the image of pattern vertex `u`.
    pub embedding: Option<Vec<usize>>,
}

impl FreenessVerdict {
    /// Re-checks the witness independently of the search: the induced
    /// subgraph on it must be isomorphic to the pattern.
    pub fn witness_verifies(&self, g: &Graph, h: &Pattern) -> bool {
        match &self.witness {
            None => self.free,
            Some(w) => {
                !self.free
                    && g.induced_subgraph(w)
                        .ok()
                        .and_then(|sub| is_isomorphic_small(&sub, h.graph()).ok().flatten())
                        .is_some()
            }
        }
    }
}

pub fn freeness_verdict(g: &Graph, h: &Pattern) -> FreenessVerdict {
    let embedding = contains_induced(g, h);
    FreenessVerdict {
        pattern: h.name().to_string(),
        free: embedding.is_none(),
        witness: embedding.as_ref().map(|e| e.iter().copied().collect()),
        embedding,
    }
}

/// One verdict per pattern, in input order. Panics if the report shows a
/// graph that is 2K2-free but contains P5, which is impossible and would
/// indicate a search bug.
pub fn freeness_report(g: &Graph, hs: &[Pattern]) -> Vec<FreenessVerdict> {
    let out: Vec<FreenessVerdict> = hs.iter().map(|h| freeness_verdict(g, h)).collect();
    let lookup = |name: &str| out.iter().find(|v| v.pattern == name).map(|v| v.free);
    if let (Some(true), Some(false)) = (lookup("2K2"), lookup("P5")) {
        panic!("graph reported 2K2-free but containing an induced P5");
    }
    out
}
