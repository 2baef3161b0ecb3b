//! Backtracking isomorphism test for small graphs (at most 64 vertices).
//!
//! Candidates are pruned by degree and by the sorted multiset of neighbour
//! degrees, and every extension must agree on adjacency *and* non-adjacency
//! with all vertices mapped so far. Dense inputs are handled through their
//! complements, which have the same isomorphisms.

use crate::graph::{iter_bits, Graph, GraphError};

pub const MAX_ISO_VERTICES: usize = 64;

/// Returns a bijection `phi` (as `phi[u]` for each vertex `u` of `g`) with
/// `u ~ v` in `g` iff `phi[u] ~ phi[v]` in `h`, or `None` when the graphs
/// are not isomorphic.
pub fn is_isomorphic_small(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>, GraphError> {
    for x in [g, h] {
        if x.n() > MAX_ISO_VERTICES {
            return Err(GraphError::TooLarge {
                n: x.n(),
                max: MAX_ISO_VERTICES,
            });
        }
    }
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    // Work in the sparser of the two complementary views.
    let dense = 2 * g.edge_count() > n * (n - 1) / 2;
    let (g, h) = if dense {
        (g.complement(), h.complement())
    } else {
        (g.clone(), h.clone())
    };

    let gs = signatures(&g);
    let hs = signatures(&h);
    let mut a = gs.clone();
    let mut b = hs.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(None);
    }

    let grows = u64_rows(&g);
    let hrows = u64_rows(&h);
    let order = search_order(&grows);
    // For every g-vertex, the h-vertices carrying the same signature.
    let class_mask: Vec<u64> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&x| hs[x] == gs[u])
                .fold(0u64, |m, x| m | (1 << x))
        })
        .collect();

    let mut search = IsoSearch {
        grows: &grows,
        hrows: &hrows,
        order: &order,
        class_mask: &class_mask,
        map: vec![usize::MAX; n],
        used: 0,
    };
    Ok(search.extend(0).then_some(search.map))
}

/// Degree plus sorted neighbour degrees; invariant under isomorphism.
fn signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let deg = g.degrees();
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| deg[u]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect()
}

fn u64_rows(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.row(v).first().copied().unwrap_or(0))
        .collect()
}

/// Orders vertices so each one has as many earlier neighbours as possible.
fn search_order(rows: &[u64]) -> Vec<usize> {
    let n = rows.len();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (rows[v] & placed).count_ones(),
                    rows[v].count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex remains");
        placed |= 1 << next;
        order.push(next);
    }
    order
}

struct IsoSearch<'a> {
    grows: &'a [u64],
    hrows: &'a [u64],
    order: &'a [usize],
    class_mask: &'a [u64],
    map: Vec<usize>,
    used: u64,
}

impl IsoSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        let mut cand = self.class_mask[u] & !self.used;
        for &w in &self.order[..depth] {
            let image = self.hrows[self.map[w]];
            if self.grows[u] >> w & 1 == 1 {
                cand &= image;
            } else {
                cand &= !image;
            }
        }
        for x in iter_bits(std::slice::from_ref(&cand)) {
            self.map[u] = x;
            self.used |= 1 << x;
            if self.extend(depth + 1) {
                return true;
            }
            self.used &= !(1 << x);
        }
        self.map[u] = usize::MAX;
        false
    }
}

/// Checks that `phi` is an isomorphism from `g` onto `h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, phi: &[usize]) -> bool {
    let n = g.n();
    if h.n() != n || phi.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in phi {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(phi[u], phi[v])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5);
        let phi = is_isomorphic_small(&c5, &c5.complement()).unwrap().unwrap();
        assert!(is_isomorphism(&c5, &c5.complement(), &phi));
    }

    #[test]
    fn p4_is_not_a_star() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(is_isomorphic_small(&Graph::path(4), &star).unwrap(), None);
    }

    #[test]
    fn relabelled_cycle_is_found() {
        // 0-4-8-3-7-2-6-1-5-0
        let walk = [0, 4, 8, 3, 7, 2, 6, 1, 5];
        let g = Graph::from_edges(9, (0..9).map(|i| (walk[i], walk[(i + 1) % 9]))).unwrap();
        let phi = is_isomorphic_small(&g, &Graph::cycle(9)).unwrap().unwrap();
        assert!(is_isomorphism(&g, &Graph::cycle(9), &phi));
    }

    #[test]
    fn same_degrees_different_graphs() {
        // C6 versus two triangles: both 2-regular.
        let two_c3 = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert_eq!(
            is_isomorphic_small(&Graph::cycle(6), &two_c3).unwrap(),
            None
        );
    }

    #[test]
    fn size_cap_is_explicit() {
        let big = Graph::empty(65);
        assert_eq!(
            is_isomorphic_small(&big, &big),
            Err(GraphError::TooLarge { n: 65, max: 64 })
        );
        let edge64 = Graph::cycle(64);
        assert!(is_isomorphic_small(&edge64, &edge64).unwrap().is_some());
    }

    #[test]
    fn empty_graphs() {
        assert_eq!(
            is_isomorphic_small(&Graph::empty(0), &Graph::empty(0)).unwrap(),
            Some(vec![])
        );
    }
}
