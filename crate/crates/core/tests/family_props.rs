mod common;

use critfam::family::{
    build_family, canonical_coloring, clique_window, clique_window_count, is_automorphism,
    partition_classes, raw_neighbourhood, rotation, FamilyParams,
};
use critfam::{verify_coloring, Coloring, VertexSet};

fn grid() -> impl Iterator<Item = FamilyParams> {
    (1..=7).flat_map(|q| (3..=9).map(move |k| FamilyParams::new(q, k).unwrap()))
}

#[test]
fn sizes_degrees_and_edge_counts() {
    for p in grid() {
        let g = build_family(p);
        assert_eq!(g.n(), p.q() * p.k() + 1, "{p}");
        assert_eq!(g.regular_degree(), Some(p.q() * (p.k() - 2) + 2), "{p}");
        assert_eq!(
            g.edge_count(),
            (p.n() * (p.q() * (p.k() - 2) + 2)) / 2,
            "{p}"
        );
        assert!(g.check_invariants());
    }
}

#[test]
fn literal_formula_matches_graph() {
    // Re-derive each neighbourhood straight from the definition, with
    // signed arithmetic, and compare with the built graph.
    for p in grid() {
        let g = build_family(p);
        let n = p.n() as i64;
        let (q, k) = (p.q() as i64, p.k() as i64);
        for i in 0..n {
            let mut expect: Vec<i64> = vec![i - 1, i + 1];
            for j in 0..q {
                for m in 2..k {
                    expect.push(i + k * j + m);
                }
            }
            let expect: VertexSet = expect
                .into_iter()
                .map(|x| x.rem_euclid(n) as usize)
                .collect();
            assert_eq!(g.neighborhood(i as usize), expect, "{p} v_{i}");
            let raw = raw_neighbourhood(p, i as usize);
            assert_eq!(
                raw.len(),
                expect.len(),
                "{p} v_{i}: duplicates in the formula"
            );
        }
    }
}

#[test]
fn neighbourhood_of_v0_is_classes_two_and_up() {
    for p in grid() {
        let g = build_family(p);
        let classes = partition_classes(p).classes;
        let mut expect: VertexSet = classes[2..].iter().flat_map(|c| c.iter()).collect();
        expect.insert(1);
        expect.insert(p.q() * p.k());
        assert_eq!(g.neighborhood(0), expect, "{p}");
    }
}

#[test]
fn partition_and_stability() {
    for p in grid() {
        let g = build_family(p);
        let classes = partition_classes(p).classes;
        assert_eq!(classes.len(), p.k());
        assert_eq!(classes[0].len(), p.q() + 1);
        assert!(classes[1..].iter().all(|c| c.len() == p.q()));
        let all: VertexSet = classes.iter().flat_map(|c| c.iter()).collect();
        assert_eq!(all, VertexSet::full(p.n()));
        for c in &classes[1..] {
            assert!(g.is_stable_set(c).unwrap(), "{p}");
        }
        let v0 = g.induced_subgraph(&classes[0]).unwrap();
        assert_eq!(v0.edge_count(), 1, "{p}");
        assert!(g.has_edge(0, p.q() * p.k()));
    }
}

#[test]
fn windows_rotation_and_colourings() {
    for p in grid() {
        let g = build_family(p);
        for i in 0..clique_window_count(p) {
            assert!(g.is_clique(&clique_window(p, i)), "{p} window {i}");
        }
        assert_eq!(is_automorphism(&g, &rotation(p)), Ok(true), "{p}");
        let c = canonical_coloring(p);
        assert_eq!(verify_coloring(&g, &c), Ok(true));
        assert!(common::properly_colored(&g, c.colors(), p.k() + 1));
        // G - v_{qk} is k-coloured by j -> j mod k.
        let last = p.q() * p.k();
        let h = g.remove_vertex(last).unwrap();
        let trunc = Coloring::new((0..last).map(|j| j % p.k()).collect(), p.k());
        assert_eq!(verify_coloring(&h, &trunc), Ok(true), "{p}");
    }
}
