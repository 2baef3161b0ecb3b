mod common;

use common::random_graph;
use critfam::formats::{
    decode_graph6, encode_graph6, read_dimacs, read_edge_list, write_dimacs, write_edge_list,
};
use critfam::{Graph, VertexSet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>())
        .prop_map(|(n, seed)| random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n))
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(62)) {
        let s = encode_graph6(&g).unwrap();
        let back = decode_graph6(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(encode_graph6(&back).unwrap(), s);
    }

    #[test]
    fn text_formats_round_trip(g in arb_graph(40)) {
        prop_assert_eq!(read_dimacs(&write_dimacs(&g)).unwrap(), g.clone());
        prop_assert_eq!(read_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn constructors_keep_invariants(g in arb_graph(70), h in arb_graph(20)) {
        prop_assert!(g.check_invariants());
        let c = g.complement();
        prop_assert!(c.check_invariants());
        prop_assert_eq!(c.complement(), g.clone());
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        let u = g.disjoint_union(&h);
        prop_assert!(u.check_invariants());
        prop_assert_eq!(u.n(), g.n() + h.n());
        prop_assert_eq!(u.edge_count(), g.edge_count() + h.edge_count());
    }

    #[test]
    fn induced_subgraphs_compose(g in arb_graph(30), mask in any::<u64>(), mask2 in any::<u64>()) {
        prop_assert_eq!(g.induced_subgraph(&VertexSet::full(g.n())).unwrap(), g.clone());
        let s: VertexSet = (0..g.n()).filter(|v| mask >> (v % 64) & 1 == 1).collect();
        let gs = g.induced_subgraph(&s).unwrap();
        prop_assert!(gs.check_invariants());
        // T' indexes into G[S]; map it back through S.
        let t: VertexSet = (0..gs.n()).filter(|v| mask2 >> v & 1 == 1).collect();
        let mapped: VertexSet = t.iter().map(|i| s.as_slice()[i]).collect();
        prop_assert_eq!(gs.induced_subgraph(&t).unwrap(), g.induced_subgraph(&mapped).unwrap());
    }
}
