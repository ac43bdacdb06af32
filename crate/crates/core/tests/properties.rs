use proptest::prelude::*;
use ramcert::certify::verify;
use ramcert::detect::contains_pattern;
use ramcert::pattern::patterns_up_to;
use ramcert::{Graph, PatternSpec, TwoColoring};

fn graph_strategy(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn pattern_strategy() -> impl Strategy<Value = PatternSpec> {
    proptest::sample::select(patterns_up_to(7))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Adding an edge never destroys a copy of a pattern.
    #[test]
    fn containment_is_monotone(g in graph_strategy(9), p in pattern_strategy(), pick in any::<prop::sample::Index>()) {
        let non_edges: Vec<(usize, usize)> = g.complement().edges();
        prop_assume!(!non_edges.is_empty());
        let (u, v) = non_edges[pick.index(non_edges.len())];
        let h = g.with_flipped(u, v);
        prop_assert!(!contains_pattern(&g, p) || contains_pattern(&h, p));
    }

    #[test]
    fn color_swap_is_consistent(g in graph_strategy(9), r in pattern_strategy(), b in pattern_strategy()) {
        let c = TwoColoring::from_red(g);
        let direct = verify(&c, r, b).is_verified();
        let swapped = verify(&c.swapped(), b, r).is_verified();
        prop_assert_eq!(direct, swapped);
    }

    #[test]
    fn blow_up_by_k1_is_identity(g in graph_strategy(10)) {
        prop_assert_eq!(g.blow_up(&Graph::complete(1)), g);
    }

    #[test]
    fn blow_up_by_k2_shape(g in graph_strategy(8)) {
        let b = g.blow_up(&Graph::complete(2));
        let n = g.order();
        prop_assert_eq!(b.order(), 2 * n);
        // each vertex keeps its twin plus two copies of every old neighbour
        for u in 0..n {
            for i in 0..2 {
                prop_assert_eq!(b.degree(2 * u + i), 2 * g.degree(u) + 1);
            }
        }
        prop_assert_eq!(b.edge_count(), 4 * g.edge_count() + n);
        // clique number doubles
        let w = ramcert::detect::clique_number(&g);
        prop_assert_eq!(ramcert::detect::clique_number(&b), 2 * w);
    }
}
