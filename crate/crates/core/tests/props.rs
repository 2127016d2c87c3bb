//! Property-based invariants for the permutation and graph primitives.

use proptest::prelude::*;

use cayley_core::graph::Graph;
use cayley_core::perm::{factorial, Perm};

fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).expect("shuffle is a bijection"))
}

fn perm_triple() -> impl Strategy<Value = (Perm, Perm, Perm)> {
    (2usize..=7).prop_flat_map(|n| (perm_strategy(n), perm_strategy(n), perm_strategy(n)))
}

fn graph_with_relabeling() -> impl Strategy<Value = (Graph, Perm)> {
    (2usize..=7).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        ((0u64..1 << bits), perm_strategy(n)).prop_map(move |(mask, p)| {
            let mut g = Graph::new(n).unwrap();
            let mut idx = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if mask >> idx & 1 == 1 {
                        g.add_edge(i, j).unwrap();
                    }
                    idx += 1;
                }
            }
            (g, p)
        })
    })
}

proptest! {
    #[test]
    fn compose_is_associative((a, b, c) in perm_triple()) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_cancels(p in (2usize..=7).prop_flat_map(perm_strategy)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn rank_is_within_range_and_roundtrips(p in (2usize..=6).prop_flat_map(perm_strategy)) {
        let n = p.n();
        let r = p.rank();
        prop_assert!(r < factorial(n));
        prop_assert_eq!(Perm::unrank(r, n).unwrap(), p);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant((g, p) in graph_with_relabeling()) {
        let relabeled = g.relabel(&p).unwrap();
        prop_assert_eq!(
            g.canonical_form().unwrap(),
            relabeled.canonical_form().unwrap()
        );
    }

    #[test]
    fn line_graph_edge_count_formula((g, _) in graph_with_relabeling()) {
        let expected: usize = (0..g.n())
            .map(|v| g.degree(v) * (g.degree(v).saturating_sub(1)) / 2)
            .sum();
        let (lg, _) = g.line_graph().unwrap();
        prop_assert_eq!(lg.edge_count(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn rank_unrank_roundtrip_n7(p in perm_strategy(7)) {
        prop_assert_eq!(Perm::unrank(p.rank(), 7).unwrap(), p);
    }
}
