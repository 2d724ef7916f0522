use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zfkit::forcing::{
    closure, closure_set, failed_zero_forcing_number_brute_force, is_fort, is_stalled,
    maximum_failed_set,
};
use zfkit::io::{parse_graph6, to_graph6};
use zfkit::structure::is_extension_safe;
use zfkit::{canonical_form, failed_zero_forcing_number, min_fort, Graph, VertexSet};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn arb_graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), 0..1u64 << n).prop_map(|(g, m)| (g, VertexSet::from_bits(m)))
    })
}

/// Applies one randomly chosen available force at a time until none is left.
fn random_order_closure(g: &Graph, s: VertexSet, rng: &mut ChaCha8Rng) -> VertexSet {
    let mut blue = s;
    loop {
        let moves: Vec<usize> = blue
            .iter()
            .filter_map(|v| {
                let white = g.neighbors(v) - blue;
                (white.len() == 1).then(|| white.first().unwrap())
            })
            .collect();
        match moves.choose(rng) {
            Some(&w) => blue.insert(w),
            None => return blue,
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn closure_is_monotone((g, s) in arb_graph_and_set(10), extra in any::<u64>()) {
        let t = s | (VertexSet::from_bits(extra) & g.vertices());
        prop_assert!(closure_set(&g, s).is_subset(closure_set(&g, t)));
        prop_assert!(closure(&g, s).final_set.is_subset(closure(&g, t).final_set));
    }

    #[test]
    fn closure_is_idempotent((g, s) in arb_graph_and_set(10)) {
        let c = closure(&g, s).final_set;
        prop_assert!(s.is_subset(c));
        prop_assert_eq!(closure(&g, c).final_set, c);
        prop_assert!(closure(&g, c).trace.is_empty());
        prop_assert!(is_stalled(&g, c));
    }

    #[test]
    fn closure_is_confluent((g, s) in arb_graph_and_set(10), seed in any::<u64>()) {
        let expected = closure(&g, s);
        prop_assert_eq!(expected.trace.replay(&g, s), Some(expected.final_set));
        prop_assert_eq!(closure_set(&g, s), expected.final_set);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..100 {
            prop_assert_eq!(random_order_closure(&g, s, &mut rng), expected.final_set);
        }
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(9), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(failed_zero_forcing_number(&g), failed_zero_forcing_number(&h));
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(parse_graph6(to_graph6(&g).as_bytes()).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn forts_and_failed_sets_agree(g in arb_graph(9)) {
        let t = min_fort(&g);
        prop_assert!(is_fort(&g, t));
        prop_assert_eq!(g.order() - t.len(), failed_zero_forcing_number_brute_force(&g));
        let s = maximum_failed_set(&g);
        prop_assert!(is_fort(&g, g.vertices() - closure_set(&g, s)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    /// A stalled extension-safe set stays stalled, and failed, after adding
    /// a white vertex with any neighborhood.
    #[test]
    fn extension_safe_sets_survive(g in arb_graph(9), seed in any::<u64>()) {
        let n = g.order();
        let safe: Vec<VertexSet> = (1..1u64 << n)
            .map(VertexSet::from_bits)
            .filter(|&s| is_extension_safe(&g, s))
            .collect();
        prop_assume!(!safe.is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = *safe.choose(&mut rng).unwrap();
        prop_assert!(is_stalled(&g, s));
        let nbhd = VertexSet::from_bits(rng.gen_range(0..1u64 << n));
        let h = g.with_new_vertex(nbhd).unwrap();
        prop_assert!(is_stalled(&h, s));
        prop_assert_eq!(closure(&h, s).final_set, s);
        prop_assert!(failed_zero_forcing_number(&h) >= s.len());
    }
}
