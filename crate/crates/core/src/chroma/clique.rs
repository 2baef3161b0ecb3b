use crate::graph::{iter_bits, Graph, VertexSet};

fn popcount(w: &[u64]) -> usize {
    w.iter().map(|x| x.count_ones() as usize).sum()
}

fn and_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= s;
    }
}

/// Grows a clique from `start`, always adding the candidate with the most
/// neighbours among the remaining candidates (lowest index on ties).
fn greedy_from(g: &Graph, start: usize) -> Vec<usize> {
    let mut clique = vec![start];
    let mut cand = g.row(start).to_vec();
    let mut scratch = vec![0u64; g.words()];
    while popcount(&cand) > 0 {
        let best = iter_bits(&cand)
            .max_by_key(|&v| {
                scratch.copy_from_slice(&cand);
                and_into(&mut scratch, g.row(v));
                (popcount(&scratch), std::cmp::Reverse(v))
            })
            .expect("candidate set is nonempty");
        clique.push(best);
        and_into(&mut cand, g.row(best));
    }
    clique
}

/// One round of (1,2)-swaps: drop a member `u` when two adjacent vertices
/// are complete to the rest of the clique. Returns true if it grew.
fn improve(g: &Graph, clique: &mut Vec<usize>) -> bool {
    let words = g.words();
    for drop in 0..clique.len() {
        let mut common = vec![u64::MAX; words];
        for (i, &w) in clique.iter().enumerate() {
            if i != drop {
                and_into(&mut common, g.row(w));
            }
        }
        // keep only real vertices, and exclude the dropped member
        for v in g.n()..words * 64 {
            common[v / 64] &= !(1 << (v % 64));
        }
        let u = clique[drop];
        common[u / 64] &= !(1 << (u % 64));
        for a in iter_bits(&common) {
            let mut rest = common.clone();
            and_into(&mut rest, g.row(a));
            let found = iter_bits(&rest).next();
            if let Some(b) = found {
                clique.swap_remove(drop);
                clique.push(a);
                clique.push(b);
                return true;
            }
        }
    }
    false
}

/// A clique found by greedy growth from every start vertex, followed by
/// local (1,2)-swap improvement of the best one. Deterministic.
pub fn clique_lower(g: &Graph) -> VertexSet {
    if g.n() == 0 {
        return VertexSet::new();
    }
    let mut best = (0..g.n())
        .map(|s| greedy_from(g, s))
        .max_by_key(|c| (c.len(), std::cmp::Reverse(c[0])))
        .expect("graph is nonempty");
    while improve(g, &mut best) {}
    let out: VertexSet = best.into_iter().collect();
    debug_assert!(g.is_clique(&out));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilyParams};

    #[test]
    fn examples() {
        assert_eq!(clique_lower(&Graph::complete(4)).len(), 4);
        assert_eq!(clique_lower(&Graph::cycle(5)).len(), 2);
        assert_eq!(clique_lower(&Graph::empty(3)).len(), 1);
        assert_eq!(clique_lower(&Graph::empty(0)).len(), 0);
        let g = build_family(FamilyParams::new(3, 6).unwrap());
        let c = clique_lower(&g);
        assert!(c.len() >= 6);
        assert!(g.is_clique(&c));
    }

    #[test]
    fn swap_improves_a_greedy_trap() {
        // A star centre joined to everything, plus a triangle hidden among
        // the leaves; greedy from any vertex must still find K4.
        let mut edges = vec![(1, 2), (2, 3), (1, 3)];
        for v in 1..7 {
            edges.push((0, v));
        }
        let g = Graph::from_edges(7, edges).unwrap();
        assert_eq!(clique_lower(&g), VertexSet::from([0, 1, 2, 3]));
    }
}
