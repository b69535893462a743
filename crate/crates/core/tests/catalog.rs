use domcrit_core::catalog::{named_graph, NamedGraph, S5};
use domcrit_core::criticality::{check_facts, check_lemma2, check_lemma3, check_lemma4};
use domcrit_core::{
    are_isomorphic, case42_build, dominating_pairs, domination_number, enumerate_case42_candidates,
    factor_critical_violator, has_perfect_matching, is_factor_critical, is_k1k_free,
    is_k_vertex_critical, k2n_minus_pm, theorem_check, CertificateKind, Case42Skeleton, Graph,
    TheoremStatus, VertexSet,
};

fn g1() -> Graph {
    named_graph(NamedGraph::G1).graph
}

#[test]
fn exceptions_meet_every_hypothesis() {
    for name in [NamedGraph::G1, NamedGraph::G2] {
        let entry = named_graph(name);
        let g = &entry.graph;
        assert_eq!(g.order(), 11);
        assert_eq!(g.min_degree(), 3);
        assert!(g.is_biconnected());
        assert!(is_k1k_free(g, 5).unwrap().0);
        let crit = is_k_vertex_critical(g, 3).unwrap();
        assert_eq!(crit.gamma, 3);
        assert!(crit.is_k_critical, "{name}");

        assert_eq!(entry.distinguished, S5);
        let without = g.delete_vertex(entry.distinguished).unwrap();
        assert!(!has_perfect_matching(&without), "{name} - v has a perfect matching");
        assert!(!is_factor_critical(g).0);

        let verdict = theorem_check(g).unwrap();
        assert!(verdict.hypotheses.all());
        assert_eq!(verdict.status, TheoremStatus::ListedException);
    }
}

#[test]
fn exception_certificate() {
    let g = g1();
    let cert = factor_critical_violator(&g).unwrap().unwrap();
    assert_eq!(cert.kind, CertificateKind::Lemma1Violator);
    assert_eq!(cert.set, VertexSet::from_vertices(11, 0..5).unwrap());
    assert_eq!(cert.odd_components, 6);
    assert!(cert.validate(&g));

    // G[S] is the 4-cycle on s1..s4 plus the isolated s5
    let induced = g.induced_subgraph(&cert.set).unwrap();
    let c4_plus_k1 = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert!(are_isomorphic(&induced, &c4_plus_k1).unwrap());
}

#[test]
fn other_two_fail_criticality() {
    for name in [NamedGraph::G3, NamedGraph::G4] {
        let entry = named_graph(name);
        let g = &entry.graph;
        let crit = is_k_vertex_critical(g, 3).unwrap();
        assert!(!crit.is_k_critical, "{name}");
        let v = entry.distinguished;
        let h = g.delete_vertex(v).unwrap();
        assert_eq!(domination_number(&h).unwrap().gamma, 3, "{name}");
        assert_eq!(theorem_check(g).unwrap().status, TheoremStatus::HypothesesUnmet);
    }
}

#[test]
fn drawings_agree_with_skeletons() {
    for name in NamedGraph::ALL {
        let built = case42_build(&name.skeleton()).unwrap();
        assert!(are_isomorphic(&built, &named_graph(name).graph).unwrap(), "{name}");
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let a = named_graph(NamedGraph::ALL[i]).graph;
            let b = named_graph(NamedGraph::ALL[j]).graph;
            assert!(!are_isomorphic(&a, &b).unwrap());
        }
    }
}

#[test]
fn case42_closure_is_the_four_named_graphs() {
    let classes = enumerate_case42_candidates();
    assert_eq!(classes.len(), 4);
    for name in NamedGraph::ALL {
        let g = named_graph(name).graph;
        let hits = classes.iter().filter(|c| are_isomorphic(c, &g).unwrap()).count();
        assert_eq!(hits, 1, "{name}");
    }
    for sk in Case42Skeleton::all() {
        let g = case42_build(&sk).unwrap();
        assert_eq!(g.order(), 11);
        assert!(g.min_degree() >= 3);
    }
}

#[test]
fn dominating_pairs_avoid_the_neighbourhood() {
    let g = g1();
    for v in 0..11 {
        let pairs = dominating_pairs(&g, v).unwrap();
        assert!(!pairs.is_empty(), "v={v}");
        for p in pairs {
            assert_eq!(p.len(), 2);
            assert!(!p.contains(v));
            assert!(p.iter().all(|x| !g.has_edge(v, x)), "v={v} pair={p:?}");
        }
    }
}

#[test]
fn facts_and_lemmas_hold_on_exceptions() {
    for name in [NamedGraph::G1, NamedGraph::G2] {
        let g = named_graph(name).graph;
        assert!(check_facts(&g).unwrap().passed(), "{name}");
        assert!(check_lemma2(&g).unwrap().passed(), "{name}");
        assert!(check_lemma3(&g).unwrap().passed(), "{name}");
        assert!(check_lemma4(&g).unwrap().passed(), "{name}");
    }
    // the checks refuse graphs that are not 3-critical
    assert!(check_facts(&named_graph(NamedGraph::G3).graph).is_err());
}

#[test]
fn distinct_vertices_have_disjoint_pair_families() {
    let g = g1();
    let report = check_facts(&g).unwrap();
    for v in 0..11 {
        for w in v + 1..11 {
            for p in &report.pairs[v] {
                assert!(!report.pairs[w].contains(p), "{v} {w} share {p:?}");
            }
        }
    }
}

#[test]
fn complete_minus_perfect_matching_is_two_critical() {
    for m in 2..=6 {
        let g = k2n_minus_pm(m).unwrap();
        assert_eq!(g.order(), 2 * m);
        let crit = is_k_vertex_critical(&g, 2).unwrap();
        assert!(crit.is_k_critical, "m={m}");
    }
    assert!(k2n_minus_pm(0).is_err());
}
