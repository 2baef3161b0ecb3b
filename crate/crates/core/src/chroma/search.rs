use std::time::{Duration, Instant};

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

use super::{clique_lower, dsatur_upper, verify_coloring, Budget, Coloring, SolverError};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Colour assignments tried across all palette sizes.
    pub nodes: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiResult {
    pub chi: usize,
    pub coloring: Coloring,
    /// Pairwise adjacent; certifies `chi >= clique.len()`.
    pub clique: VertexSet,
    pub stats: SearchStats,
}

/// Outcome of one bounded search.
enum Outcome {
    Found(Vec<usize>),
    Infeasible,
    Exhausted,
}

struct KSearch<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    /// counts[v * k + c]: coloured neighbours of v with colour c
    counts: Vec<u32>,
    sat: Vec<usize>,
    uncolored: Vec<u64>,
    used: usize,
    nodes: u64,
    limit: u64,
}

impl<'a> KSearch<'a> {
    fn new(g: &'a Graph, k: usize, limit: u64) -> Self {
        let n = g.n();
        let mut uncolored = vec![0u64; g.words()];
        for v in 0..n {
            uncolored[v / 64] |= 1 << (v % 64);
        }
        Self {
            g,
            k,
            color: vec![NONE; n],
            counts: vec![0; n * k],
            sat: vec![0; n],
            uncolored,
            used: 0,
            nodes: 0,
            limit,
        }
    }

    /// Colours `v` with `c`. Returns false if some uncoloured neighbour is
    /// left with no colour available (the assignment stays applied).
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        self.uncolored[v / 64] &= !(1 << (v % 64));
        let mut ok = true;
        for w in self.g.neighbors(v) {
            let slot = &mut self.counts[w * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.sat[w] += 1;
                if self.sat[w] == self.k && self.color[w] == NONE {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = NONE;
        self.uncolored[v / 64] |= 1 << (v % 64);
        for w in self.g.neighbors(v) {
            let slot = &mut self.counts[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn pick(&self) -> usize {
        let g = self.g;
        (0..g.n())
            .filter(|&v| self.color[v] == NONE)
            .max_by_key(|&v| {
                let udeg: u32 = g
                    .row(v)
                    .iter()
                    .zip(&self.uncolored)
                    .map(|(a, b)| (a & b).count_ones())
                    .sum();
                (self.sat[v], udeg, std::cmp::Reverse(v))
            })
            .expect("an uncoloured vertex remains")
    }

    /// Returns `Some(true)` on success, `Some(false)` when the subtree is
    /// infeasible and `None` when the node budget runs out.
    fn search(&mut self, remaining: usize) -> Option<bool> {
        if remaining == 0 {
            return Some(true);
        }
        let v = self.pick();
        let top = (self.used + 1).min(self.k);
        for c in 0..top {
            if self.counts[v * self.k + c] != 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.limit {
                return None;
            }
            let prev_used = self.used;
            self.used = self.used.max(c + 1);
            let ok = self.assign(v, c);
            if ok {
                match self.search(remaining - 1) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
            }
            self.unassign(v, c);
            self.used = prev_used;
        }
        Some(false)
    }

    fn run(mut self, seed: &VertexSet) -> (Outcome, u64) {
        let n = self.g.n();
        if seed.len() > self.k {
            return (Outcome::Infeasible, 0);
        }
        // Distinct colours on a clique lose no generality.
        let mut ok = true;
        for (c, v) in seed.iter().enumerate() {
            ok &= self.assign(v, c);
        }
        self.used = seed.len();
        if !ok {
            return (Outcome::Infeasible, 0);
        }
        let outcome = match self.search(n - seed.len()) {
            Some(true) => Outcome::Found(self.color.clone()),
            Some(false) => Outcome::Infeasible,
            None => Outcome::Exhausted,
        };
        (outcome, self.nodes)
    }
}

fn k_search(g: &Graph, k: usize, seed: &VertexSet, budget: Budget) -> (Outcome, u64) {
    if g.n() == 0 {
        return (Outcome::Found(Vec::new()), 0);
    }
    if k == 0 {
        return (Outcome::Infeasible, 0);
    }
    KSearch::new(g, k, budget.max_nodes).run(seed)
}

/// Decides whether `g` has a proper colouring with `k` colours.
///
/// The search is complete: colours are introduced in order and the seed
/// clique from `clique_lower` is pre-coloured `0, 1, ...`, both of which
/// only remove colour permutations.
pub fn is_k_colorable(
    g: &Graph,
    k: usize,
    budget: Budget,
) -> Result<Option<Coloring>, SolverError> {
    let seed = clique_lower(g);
    let (outcome, _) = k_search(g, k, &seed, budget);
    match outcome {
        Outcome::Found(colors) => {
            let c = Coloring::new(colors, k);
            debug_assert_eq!(verify_coloring(g, &c), Ok(true));
            Ok(Some(c))
        }
        Outcome::Infeasible => Ok(None),
        Outcome::Exhausted => Err(SolverError::BudgetExhausted {
            budget: budget.max_nodes,
            palette: k,
            lower: seed.len(),
            upper: dsatur_upper(g).palette_size(),
        }),
    }
}

/// Exact `χ(g)`: tries palettes upward from the clique bound until one is
/// feasible, falling back to the DSATUR colouring when every smaller
/// palette is refuted. `budget` applies to each palette size separately.
pub fn chromatic_number(g: &Graph, budget: Budget) -> Result<ChiResult, SolverError> {
    let start = Instant::now();
    let clique = clique_lower(g);
    let upper = dsatur_upper(g);
    let mut nodes = 0;
    let mut best = upper;
    for k in clique.len()..best.palette_size() {
        let (outcome, used) = k_search(g, k, &clique, budget);
        nodes += used;
        match outcome {
            Outcome::Found(colors) => {
                best = Coloring::new(colors, k);
                break;
            }
            Outcome::Infeasible => {}
            Outcome::Exhausted => {
                return Err(SolverError::BudgetExhausted {
                    budget: budget.max_nodes,
                    palette: k,
                    lower: k,
                    upper: best.palette_size(),
                })
            }
        }
    }
    let chi = best.palette_size();
    debug_assert_eq!(verify_coloring(g, &best), Ok(true));
    debug_assert_eq!(best.colors_used(), chi);
    Ok(ChiResult {
        chi,
        coloring: best,
        clique,
        stats: SearchStats {
            nodes,
            elapsed: start.elapsed(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilyParams};

    fn fam(q: usize, k: usize) -> Graph {
        build_family(FamilyParams::new(q, k).unwrap())
    }

    #[test]
    fn colorability_examples() {
        let b = Budget::default();
        assert_eq!(is_k_colorable(&Graph::cycle(5), 2, b), Ok(None));
        assert!(is_k_colorable(&Graph::cycle(5), 3, b).unwrap().is_some());
        let g = fam(3, 6);
        assert_eq!(is_k_colorable(&g, 6, b), Ok(None));
        let c = is_k_colorable(&g, 7, b).unwrap().unwrap();
        assert_eq!(verify_coloring(&g, &c), Ok(true));
        assert_eq!(c.palette_size(), 7);
    }

    #[test]
    fn trivial_palettes() {
        let b = Budget::default();
        assert_eq!(
            is_k_colorable(&Graph::empty(0), 0, b)
                .unwrap()
                .map(|c| c.len()),
            Some(0)
        );
        assert_eq!(is_k_colorable(&Graph::empty(1), 0, b), Ok(None));
        assert!(is_k_colorable(&Graph::empty(3), 1, b).unwrap().is_some());
        assert_eq!(is_k_colorable(&Graph::path(2), 1, b), Ok(None));
    }

    #[test]
    fn chromatic_examples() {
        let b = Budget::default();
        assert_eq!(chromatic_number(&Graph::complete(4), b).unwrap().chi, 4);
        assert_eq!(chromatic_number(&Graph::cycle(5), b).unwrap().chi, 3);
        assert_eq!(chromatic_number(&Graph::empty(0), b).unwrap().chi, 0);
        assert_eq!(chromatic_number(&Graph::empty(4), b).unwrap().chi, 1);
        let r = chromatic_number(&fam(2, 5), b).unwrap();
        assert_eq!(r.chi, 6);
        assert_eq!(verify_coloring(&fam(2, 5), &r.coloring), Ok(true));
        assert!(fam(2, 5).is_clique(&r.clique));
    }

    #[test]
    fn tiny_budget_is_reported_not_guessed() {
        // Mycielski graph of C5: triangle-free with χ = 4.
        let mycielski4 = Graph::from_edges(
            11,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 1),
                (5, 4),
                (6, 0),
                (6, 2),
                (7, 1),
                (7, 3),
                (8, 2),
                (8, 4),
                (9, 3),
                (9, 0),
                (10, 5),
                (10, 6),
                (10, 7),
                (10, 8),
                (10, 9),
            ],
        )
        .unwrap();
        assert!(matches!(
            chromatic_number(&mycielski4, Budget::nodes(1)),
            Err(SolverError::BudgetExhausted { .. })
        ));
        assert_eq!(
            chromatic_number(&mycielski4, Budget::default())
                .unwrap()
                .chi,
            4
        );
    }
}
