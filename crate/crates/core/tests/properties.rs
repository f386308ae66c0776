//! Randomised invariants over small graphs.

use entangle::connectivity::{effective_connectivity, is_k_connected};
use entangle::cyclicity::{cyclicity_undirected, cyclicity_value, is_edge_cover};
use entangle::game::entanglement_value;
use entangle::io::{emit_edge_list, emit_json, parse_graph};
use entangle::tutte::{build_tutte_tree, recompose, two_sum, validate_tree_decomposition};
use entangle::Graph;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", Graph::is_connected)
}

fn two_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("2-connected", |g| g.n() >= 3 && is_k_connected(g, 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn entanglement_is_sandwiched(g in connected(7)) {
        let ent = entanglement_value(&g).unwrap();
        prop_assert!(effective_connectivity(&g) <= ent);
        prop_assert!(ent <= cyclicity_value(&g).unwrap());
    }

    #[test]
    fn text_formats_round_trip(g in graph(9)) {
        prop_assert_eq!(&parse_graph(&emit_edge_list(&g)).unwrap(), &g);
        prop_assert_eq!(&parse_graph(&emit_json(&g)).unwrap(), &g);
    }

    #[test]
    fn decomposition_recomposes(g in two_connected(8)) {
        let t = build_tutte_tree(&g).unwrap();
        let report = validate_tree_decomposition(&g, &t);
        prop_assert!(report.is_valid(), "{:?}", report);
        prop_assert_eq!(&recompose(&t).unwrap(), &g);
    }

    #[test]
    fn two_sum_keeps_two_connectivity(a in two_connected(6), b in two_connected(6)) {
        let e1 = a.edges().next().unwrap();
        let e2 = b.edges().next().unwrap();
        let s = two_sum(&a, e1, &b, e2).unwrap();
        prop_assert_eq!(s.n(), a.n() + b.n() - 2);
        prop_assert!(is_k_connected(&s, 2));
    }

    #[test]
    fn optimal_covers_are_covers(g in graph(9)) {
        let sol = cyclicity_undirected(&g).unwrap();
        for w in &sol.witnesses {
            prop_assert_eq!(w.len(), sol.size);
            prop_assert!(is_edge_cover(&g, w));
            // minimum, so dropping any vertex breaks it
            for &v in w {
                let mut smaller = w.clone();
                smaller.remove(&v);
                prop_assert!(!is_edge_cover(&g, &smaller));
            }
        }
    }
}
