use std::collections::HashSet;

use proptest::prelude::*;
use sisp_core::apsisp::{compute_apsisp, compute_q2};
use sisp_core::exclude::{exclude_shortest_paths, IndependentEdgeSet};
use sisp_core::oracles::{brute_all_paths, brute_cycles, brute_paths};
use sisp_core::split::split_vertex;
use sisp_core::sssp::sssp_filtered;
use sisp_core::{
    all_sisc, all_sisp, apsisp, k_sisc, sssp, two_apsisp, undirected_k_sisc, Edge, Graph, PathWeight, SimplePath,
};

fn arb_graph(max_n: usize, directed: bool) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n, 0u64..10), 0..(n * n)).prop_map(move |raw| {
            let mut seen = HashSet::new();
            let edges: Vec<Edge> = raw
                .into_iter()
                .filter(|&(u, v, _)| u != v)
                .filter(|&(u, v, _)| seen.insert(if directed { (u, v) } else { (u.min(v), u.max(v)) }))
                .map(|(u, v, w)| Edge::new(u, v, w))
                .collect();
            if directed {
                Graph::directed(n, edges).unwrap()
            } else {
                Graph::undirected(n, edges).unwrap()
            }
        })
    })
}

fn wts(ps: &[SimplePath]) -> Vec<PathWeight> {
    ps.iter().map(|p| p.weight).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn sssp_equals_brute_minimum(g in arb_graph(7, true)) {
        for s in g.vertices() {
            let t = sssp(&g, s);
            for v in g.vertices().filter(|&v| v != s) {
                let best = brute_paths(&g, s, v, 1).unwrap().first().map(|p| p.weight);
                prop_assert_eq!(t.dist(v), best, "{} -> {}", s, v);
            }
        }
    }

    #[test]
    fn exclude_matches_arc_removal(g in arb_graph(7, true)) {
        for s in g.vertices() {
            let tree = sssp(&g, s);
            let set = IndependentEdgeSet::root_arcs(&g, &tree);
            let res = exclude_shortest_paths(&g, s, &tree, &set).unwrap();
            for &e in set.arcs() {
                let naive = sssp_filtered(&g, s, |a| a != e);
                for v in g.vertices() {
                    let d = res.dist(e, v);
                    prop_assert_eq!(d, naive.dist(v));
                    if let (Some(d), Some(base)) = (d, tree.dist(v)) {
                        prop_assert!(d >= base);
                    }
                }
            }
        }
    }

    #[test]
    fn apsisp_equals_brute(g in arb_graph(6, true), k in 2usize..=4) {
        let table = apsisp(&g, k).unwrap();
        table.validate(&g).unwrap();
        for (x, y) in table.pairs() {
            let got = table.paths(x, y);
            prop_assert!(got.iter().all(SimplePath::is_simple));
            prop_assert!(got.windows(2).all(|w| w[0] <= w[1]));
            let want = brute_paths(&g, x, y, k).unwrap();
            prop_assert_eq!(wts(&got), wts(&want), "pair ({}, {})", x, y);
        }
    }

    #[test]
    fn apsisp_on_undirected_graphs(g in arb_graph(6, false), k in 2usize..=3) {
        let table = apsisp(&g, k).unwrap();
        for (x, y) in table.pairs() {
            let want = brute_paths(&g, x, y, k).unwrap();
            prop_assert_eq!(table.weights(x, y), wts(&want));
        }
    }

    #[test]
    fn main_loop_bounds(g in arb_graph(7, true)) {
        let (_, stats) = compute_apsisp(&g, 2, compute_q2(&g)).unwrap();
        prop_assert!(stats.violations().is_empty(), "{:?}", stats.violations());
        let n = g.vertex_count();
        prop_assert!(stats.max_updates_per_pair <= 1);
        prop_assert!(stats.queue_pushes() <= 2 * n * (n - 1));
        prop_assert!(stats.extension_entries <= n * (n - 1));
    }

    #[test]
    fn right_subpaths_line_up(g in arb_graph(6, true), k in 2usize..=3) {
        let table = apsisp(&g, k).unwrap();
        for (x, y) in table.pairs() {
            let ps = table.paths(x, y);
            if ps.len() < k {
                continue;
            }
            let a = ps[0].vertices[1];
            if !ps.iter().all(|p| p.vertices[1] == a) {
                continue;
            }
            let w = g.arc(g.find_arc(x, a).unwrap()).weight;
            let rest = table.weights(a, y);
            prop_assert!(rest.len() >= k);
            for (p, r) in ps.iter().zip(&rest) {
                prop_assert_eq!(p.weight.wt - w, r.wt);
            }
        }
    }

    #[test]
    fn two_apsisp_equals_brute(g in arb_graph(7, true)) {
        let table = two_apsisp(&g);
        for (x, y) in table.pairs() {
            prop_assert_eq!(table.weights(x, y), wts(&brute_paths(&g, x, y, 2).unwrap()));
        }
    }

    #[test]
    fn all_sisp_is_complete_and_ordered(g in arb_graph(6, true)) {
        let got = all_sisp(&g, usize::MAX).unwrap();
        prop_assert!(got.iter().all(SimplePath::is_simple));
        prop_assert!(got.windows(2).all(|w| w[0].weight <= w[1].weight));
        prop_assert_eq!(got, brute_all_paths(&g).unwrap());
    }

    #[test]
    fn all_sisc_is_complete_and_ordered(g in arb_graph(6, true)) {
        let got = all_sisc(&g, usize::MAX).unwrap();
        prop_assert!(got.iter().all(|c| c.is_simple()));
        prop_assert!(got.windows(2).all(|w| w[0].weight <= w[1].weight));
        prop_assert_eq!(got, brute_cycles(&g, usize::MAX, None).unwrap());
    }

    #[test]
    fn cycles_through_vertex_equal_brute(g in arb_graph(7, true), k in 1usize..=4) {
        for z in g.vertices() {
            let set = k_sisc(&g, z, k).unwrap();
            prop_assert!(set.cycles.iter().all(|c| c.is_simple() && c.contains(z)));
            prop_assert_eq!(set.cycles, brute_cycles(&g, k, Some(z)).unwrap());
        }
    }

    #[test]
    fn undirected_cycles_equal_brute(g in arb_graph(7, false), k in 1usize..=4) {
        for z in g.vertices() {
            let set = undirected_k_sisc(&g, z, k).unwrap();
            prop_assert_eq!(set.weights(), brute_cycles(&g, k, Some(z)).unwrap().iter().map(|c| c.weight).collect::<Vec<_>>());
        }
    }

    #[test]
    fn split_vertex_preserves_cycle_weights(g in arb_graph(7, true)) {
        for z in g.vertices() {
            let sv = split_vertex(&g, z).unwrap();
            let paths = brute_paths(&sv.graph, sv.out_vertex, sv.in_vertex, usize::MAX).unwrap();
            let cycles = brute_cycles(&g, usize::MAX, Some(z)).unwrap();
            let mut pw: Vec<_> = paths.iter().map(|p| p.weight.wt).collect();
            let mut cw: Vec<_> = cycles.iter().map(|c| c.weight.wt).collect();
            pw.sort_unstable();
            cw.sort_unstable();
            prop_assert_eq!(pw, cw);
        }
    }
}
