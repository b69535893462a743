use domcrit_core::{
    brute_force_matching_size, canonical_form, domination_number, factor_critical_violator,
    from_graph6, has_perfect_matching, is_dominating, is_factor_critical, maximum_matching,
    to_graph6, tutte_violator, Graph, VertexSet,
};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::build(n, &edges).unwrap()
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

fn graph_with_subset(max_n: usize) -> impl Strategy<Value = (Graph, u64)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), 0..(1u64 << n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in graph(64)) {
        let text = to_graph6(&g);
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
        prop_assert_eq!(to_graph6(&from_graph6(&text).unwrap()), text);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_with_perm(12)) {
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(h.size(), g.size());
        prop_assert_eq!(canonical_form(&h).unwrap(), canonical_form(&g).unwrap());
    }

    #[test]
    fn odd_components_match_parity((g, s) in graph_with_subset(12)) {
        let n = g.order();
        let removed = VertexSet::from_bits(s, n).unwrap();
        prop_assume!(removed.len() < n);
        let parts = g.components(&removed).unwrap();
        prop_assert_eq!(parts.odd_count % 2, (n - removed.len()) % 2);
        let covered = parts.parts.iter().fold(0u64, |acc, p| {
            assert_eq!(acc & p.bits(), 0);
            acc | p.bits()
        });
        prop_assert_eq!(covered, removed.complement().bits());
    }

    #[test]
    fn vertex_deletion_matches_components(g in graph(12), v in 0usize..12) {
        prop_assume!(g.order() >= 2 && v < g.order());
        let h = g.delete_vertex(v).unwrap();
        let direct = g.components(&VertexSet::from_vertices(g.order(), [v]).unwrap()).unwrap();
        let via_subgraph = h.components(&VertexSet::empty(h.order())).unwrap();
        prop_assert_eq!(direct.count(), via_subgraph.count());
        prop_assert_eq!(direct.odd_count, via_subgraph.odd_count);
        prop_assert_eq!(h.size() + g.degree(v), g.size());
    }

    #[test]
    fn biconnected_graphs_are_connected(g in graph(12)) {
        if g.is_biconnected() {
            prop_assert!(g.is_connected());
            prop_assert!(g.order() >= 3);
            prop_assert!(g.min_degree() >= 2);
        }
    }

    #[test]
    fn blossom_matches_brute_force(g in graph(11)) {
        let m = maximum_matching(&g);
        prop_assert!(m.is_valid_in(&g));
        prop_assert_eq!(m.size(), brute_force_matching_size(&g).unwrap());
    }

    #[test]
    fn tutte_and_lemma1_equivalences(g in graph(10)) {
        let tutte = tutte_violator(&g).unwrap();
        prop_assert_eq!(has_perfect_matching(&g), tutte.is_none());
        if let Some(c) = tutte {
            prop_assert!(c.validate(&g));
        }
        let (fc, witness) = is_factor_critical(&g);
        let violator = factor_critical_violator(&g).unwrap();
        prop_assert_eq!(fc, violator.is_none());
        if let Some(c) = violator {
            prop_assert!(c.validate(&g));
        }
        if let Some(v) = witness {
            prop_assert!(!has_perfect_matching(&g.delete_vertex(v).unwrap()));
        }
    }

    #[test]
    fn factor_critical_graphs_are_odd_and_connected(g in graph(10)) {
        if is_factor_critical(&g).0 {
            prop_assert_eq!(g.order() % 2, 1);
            prop_assert!(g.is_connected());
        }
    }

    #[test]
    fn deleting_a_vertex_lowers_gamma_by_at_most_one(g in graph(10)) {
        prop_assume!(g.order() >= 2);
        let dom = domination_number(&g).unwrap();
        prop_assert!(is_dominating(&g, &dom.witness));
        prop_assert_eq!(dom.witness.len(), dom.gamma);
        for v in 0..g.order() {
            let h = g.delete_vertex(v).unwrap();
            prop_assert!(domination_number(&h).unwrap().gamma + 1 >= dom.gamma);
        }
    }
}
