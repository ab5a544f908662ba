#![allow(clippy::needless_range_loop)]

mod common;

use localdim::families::{apex_triangle_sets, apex_triangles, complete, gamma1, gamma2, lambda_graph, upsilon};
use localdim::{
    canonical_key, clique_number, connected_graphs, distinguisher_sets, find_induced, is_gamma_free,
    is_local_resolving, is_resolving, local_metric_dimension, metric_dimension, twin_partition, Graph, Mode, VertexSet,
};
use proptest::prelude::*;

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, any::<u64>(), 0.0..0.8f64)
        .prop_map(|(n, seed, p)| common::random_connected(&mut common::rng(seed), n, p))
}

proptest! {
    #[test]
    fn graph6_round_trip(g in any_graph(20)) {
        let text = g.to_graph6();
        prop_assert_eq!(Graph::from_graph6(&text).unwrap(), g.clone());
        prop_assert_eq!(text.parse::<Graph>().unwrap(), g);
    }

    #[test]
    fn distances_agree_with_floyd_warshall(g in connected_graph(1, 14)) {
        let dm = g.distances().unwrap();
        let fw = common::floyd_warshall(&g);
        let n = g.order();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(dm.get(u, v), fw[u][v]);
                prop_assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..n {
                    prop_assert!(dm.get(u, v) <= dm.get(u, w) + dm.get(w, v));
                }
            }
        }
    }

    #[test]
    fn bipartite_iff_edges_split_by_every_vertex(g in connected_graph(2, 12)) {
        // In a bipartite graph every vertex sees the ends of an edge at
        // distances differing by exactly one.
        let dm = g.distances().unwrap();
        let split = g.edges().all(|(u, v)| (0..g.order()).all(|w| dm.get(w, u) != dm.get(w, v)));
        prop_assert_eq!(g.is_bipartite(), split);
    }

    #[test]
    fn clique_matches_naive(g in any_graph(7)) {
        let c = clique_number(&g);
        prop_assert_eq!(c.size, common::naive_clique_number(&g));
        prop_assert_eq!(c.vertices.len(), c.size);
        for v in c.vertices.iter() {
            prop_assert!(c.vertices.without(v).is_subset(g.neighbors(v)));
        }
    }

    #[test]
    fn twin_classes_are_cliques_and_label_free(g in any_graph(10), seed in any::<u64>()) {
        let t = twin_partition(&g);
        for class in &t.classes {
            for u in class.iter() {
                prop_assert!(class.without(u).is_subset(g.neighbors(u)));
                for v in class.iter() {
                    prop_assert_eq!(g.closed_neighborhood(u), g.closed_neighborhood(v));
                }
            }
        }
        let perm = common::random_permutation(&mut common::rng(seed), g.order());
        prop_assert_eq!(twin_partition(&g.relabel(&perm)).sizes(), t.sizes());
    }

    #[test]
    fn resolving_checks_match_definition(g in connected_graph(1, 10), bits in any::<u64>()) {
        let w = VertexSet::from_bits(bits).intersection(g.vertices());
        prop_assert_eq!(is_local_resolving(&g, w).unwrap(), common::naive_is_local_resolving(&g, w, false));
        prop_assert_eq!(is_resolving(&g, w).unwrap(), common::naive_is_local_resolving(&g, w, true));
    }

    #[test]
    fn pattern_search_matches_naive(host in any_graph(7), pattern in any_graph(4)) {
        let found = find_induced(&host, &pattern);
        prop_assert_eq!(found.is_some(), common::naive_has_induced(&host, &pattern));
        if let Some(m) = found {
            prop_assert!(m.is_induced_embedding(&host, &pattern));
            // Deleting a host vertex the copy does not use keeps it.
            if let Some(x) = host.vertices().difference(m.image()).first() {
                let keep = host.vertices().without(x);
                let smaller = host.induced(keep).unwrap();
                prop_assert!(find_induced(&smaller, &pattern).is_some());
            }
        }
    }

    #[test]
    fn local_dimension_is_label_free(g in connected_graph(1, 10), seed in any::<u64>()) {
        let perm = common::random_permutation(&mut common::rng(seed), g.order());
        let h = g.relabel(&perm);
        prop_assert_eq!(local_metric_dimension(&g).unwrap().value, local_metric_dimension(&h).unwrap().value);
        prop_assert_eq!(metric_dimension(&g).unwrap().value, metric_dimension(&h).unwrap().value);
    }
}

#[test]
fn random_sets_hit_constraints_iff_local_resolving() {
    let mut rng = common::rng(7);
    for i in 0..1000 {
        let n = 2 + i % 11;
        let g = common::random_connected(&mut rng, n, 0.3);
        let w = VertexSet::from_bits(rand::Rng::gen::<u64>(&mut rng)).intersection(g.vertices());
        let sys = distinguisher_sets(&g, &g.distances().unwrap(), Mode::Local);
        assert_eq!(sys.is_hit_by(w), common::naive_is_local_resolving(&g, w, false), "{g:?} {w}");
    }
}

#[test]
fn extreme_values_characterise_clique_number() {
    for n in 3..=6 {
        for g in connected_graphs(n).unwrap() {
            let d = local_metric_dimension(&g).unwrap().value;
            let omega = clique_number(&g).size;
            assert_eq!(d == n - 1, g.is_complete(), "{g:?}");
            assert_eq!(d == n - 2, omega == n - 1, "{g:?}");
        }
    }
    for n in 3..=12 {
        assert_eq!(local_metric_dimension(&complete(n).unwrap()).unwrap().value, n - 1);
    }
}

#[test]
fn gamma_freedom_decides_n_minus_3_when_omega_is_n_minus_2() {
    for n in 5..=7 {
        for g in connected_graphs(n).unwrap() {
            if clique_number(&g).size != n - 2 {
                continue;
            }
            let d = local_metric_dimension(&g).unwrap().value;
            let naive = find_induced(&g, &gamma1()).is_none() && find_induced(&g, &gamma2()).is_none();
            assert_eq!(is_gamma_free(&g), naive);
            assert_eq!(d == n - 3, is_gamma_free(&g), "{g:?}");
            assert_eq!(d == n - 4, !is_gamma_free(&g), "{g:?}");
        }
    }
}

#[test]
fn canonical_key_ignores_labels() {
    let mut rng = common::rng(11);
    for n in 1..=6 {
        for g in connected_graphs(n).unwrap() {
            let key = canonical_key(&g).unwrap();
            for _ in 0..100 {
                let perm = common::random_permutation(&mut rng, n);
                assert_eq!(canonical_key(&g.relabel(&perm)).unwrap(), key);
            }
        }
    }
}

#[test]
fn apex_witness_takes_two_vertices_per_triangle() {
    for l in 2..=5 {
        let g = apex_triangles(l).unwrap();
        let r = local_metric_dimension(&g).unwrap();
        assert_eq!(r.value, 2 * l);
        assert!(!r.witness.contains(3 * l));
        for t in apex_triangle_sets(l) {
            let lowest_two: VertexSet = t.iter().take(2).collect();
            assert_eq!(r.witness.intersection(t), lowest_two, "l={l}");
        }
    }
}

#[test]
fn outer_vertices_see_distinct_parts_of_the_clique() {
    for mask in 0..8 {
        let g = upsilon(mask).unwrap();
        let outer: VertexSet = [8, 9, 10].into_iter().collect();
        let seen: Vec<VertexSet> = (0..8).map(|v| g.neighbors(v).intersection(outer)).collect();
        for i in 0..8 {
            for j in i + 1..8 {
                assert_ne!(seen[i], seen[j], "mask {mask}: v{i} and v{j}");
            }
        }
    }
    assert_eq!(upsilon(0).unwrap(), lambda_graph());
}
