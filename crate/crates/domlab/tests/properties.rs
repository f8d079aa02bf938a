//! Randomized structural properties over arbitrary small graphs.

use proptest::prelude::*;

use domlab::canon::canonical_form;
use domlab::domination::{domination_number, is_dominating};
use domlab::graph::{Edge, Graph};
use domlab::graph6::{parse_graph6, to_graph6};

/// Arbitrary graph on 1..=max_n vertices from a random edge mask.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let count = pairs.len();
        prop::collection::vec(any::<bool>(), count).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn remove_then_readd_restores_the_graph(g in arb_graph(10)) {
        for e in g.edges() {
            let removed = g.remove_edge(e).unwrap();
            prop_assert!(!removed.contains_edge(e));
            let mut edges: Vec<(usize, usize)> = removed
                .edges()
                .into_iter()
                .map(|e| (e.u(), e.v()))
                .collect();
            edges.push((e.u(), e.v()));
            let restored = Graph::from_edges(g.n(), &edges).unwrap();
            prop_assert_eq!(&restored, &g);
        }
    }

    #[test]
    fn subdivision_adds_one_vertex_and_one_edge(g in arb_graph(10)) {
        for e in g.edges() {
            let s = g.subdivide_edge(e).unwrap();
            prop_assert_eq!(s.n(), g.n() + 1);
            prop_assert_eq!(s.m(), g.m() + 1);
            prop_assert_eq!(s.degree(g.n()).unwrap(), 2);
        }
    }

    #[test]
    fn corona_output_is_hairy(g in arb_graph(8)) {
        let c = g.corona().unwrap();
        prop_assert!(c.is_hairy());
        prop_assert_eq!(c.n(), 2 * g.n());
        prop_assert_eq!(c.induced_subgraph(g.vertices()).unwrap(), g);
    }

    #[test]
    fn join_connects_every_cross_pair(g in arb_graph(5), h in arb_graph(5)) {
        let j = g.join(&h).unwrap();
        for u in 0..g.n() {
            for v in 0..h.n() {
                prop_assert!(j.has_edge(u, g.n() + v));
            }
        }
        prop_assert_eq!(j.m(), g.m() + h.m() + g.n() * h.n());
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(20)) {
        let s = to_graph6(&g).unwrap();
        let back = parse_graph6(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_graph6(&back).unwrap(), s);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(
        (g, perm) in arb_graph(8).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_permutation(n))
        })
    ) {
        let relabeled_edges: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .map(|e| (perm[e.u()], perm[e.v()]))
            .collect();
        let relabeled = Graph::from_edges(g.n(), &relabeled_edges).unwrap();
        prop_assert_eq!(
            canonical_form(&g).unwrap(),
            canonical_form(&relabeled).unwrap()
        );
    }

    #[test]
    fn solver_witness_dominates_minimally(g in arb_graph(8)) {
        let cert = domination_number(&g);
        prop_assert!(is_dominating(&g, cert.witness).unwrap());
        prop_assert_eq!(cert.witness.len(), cert.gamma);
        // nothing smaller dominates
        if cert.gamma > 1 {
            let smaller = (0u64..1 << g.n())
                .filter(|m| (m.count_ones() as usize) < cert.gamma)
                .any(|m| g.closed_neighborhood_of_set(
                    domlab::graph::VertexSet::from_bits(m)).unwrap() == g.vertices());
            prop_assert!(!smaller);
        }
    }

    #[test]
    fn edge_normalization(a in 0usize..64, b in 0usize..64) {
        if a == b {
            prop_assert!(Edge::new(a, b).is_err());
        } else {
            let e = Edge::new(a, b).unwrap();
            prop_assert!(e.u() < e.v());
            prop_assert_eq!(e.other(e.u()), e.v());
            prop_assert_eq!(e.other(e.v()), e.u());
        }
    }
}
