//! The three counting engines must never disagree: brute-force enumeration
//! is the ground truth on small graphs, the recurrence must match it on
//! arbitrary graphs, and the closed forms must match both on the
//! constructed families.

use indseq::counting::{
    brute_force_sequence, gab_sequence, generalized_sequence, sequence_by_recurrence,
    total_count_identity,
};
use indseq::graph::{
    build_gab, build_generalized, random_graph, random_tree, GabConstruction,
    GeneralizedConstruction, Graph,
};
use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

#[test]
fn engines_agree_on_gab_family() {
    for a in 1..=6u64 {
        for b in a + 1..=8 {
            let g = build_gab(&GabConstruction::new(a, b).unwrap());
            let closed = gab_sequence(a, b).unwrap();
            let brute = brute_force_sequence(&g).unwrap();
            let recurrence = sequence_by_recurrence(&g).unwrap();
            assert_eq!(closed, brute, "closed vs brute on G({a}, {b})");
            assert_eq!(closed, recurrence, "closed vs recurrence on G({a}, {b})");
        }
    }
}

#[test]
fn engines_agree_on_generalized_family() {
    for a in 1..=3u64 {
        for parts in [
            vec![1u64],
            vec![3],
            vec![1, 1],
            vec![2, 2],
            vec![1, 1, 1],
            vec![2, 1, 1],
        ] {
            let params = GeneralizedConstruction::new(a, parts.clone()).unwrap();
            let g = build_generalized(&params);
            let closed = generalized_sequence(&params);
            let recurrence = sequence_by_recurrence(&g).unwrap();
            assert_eq!(closed, recurrence, "a = {a}, parts = {parts:?}");
            if g.n() <= 16 {
                assert_eq!(
                    closed,
                    brute_force_sequence(&g).unwrap(),
                    "a = {a}, parts = {parts:?}"
                );
            }
        }
    }
}

#[test]
fn engines_agree_on_fixed_random_graphs() {
    for seed in 0..20u64 {
        let n = 4 + (seed as usize % 11);
        let g = random_graph(n, 0.4, seed);
        assert_eq!(
            brute_force_sequence(&g).unwrap(),
            sequence_by_recurrence(&g).unwrap(),
            "n = {n}, seed = {seed}"
        );
    }
}

#[test]
fn engines_agree_on_trees() {
    for seed in 0..10u64 {
        let g = random_tree(14, seed).unwrap();
        assert_eq!(
            brute_force_sequence(&g).unwrap(),
            sequence_by_recurrence(&g).unwrap(),
            "seed = {seed}"
        );
    }
}

#[test]
fn totals_hold_across_parameter_grid() {
    for a in 1..=8u64 {
        for b in a + 1..=9 {
            let total = total_count_identity(a, b).unwrap();
            let expected =
                (BigUint::one() << b) + BigUint::from(3u32).pow(a as u32) - (BigUint::one() << a);
            assert_eq!(total, expected, "G({a}, {b})");
            assert_eq!(total, gab_sequence(a, b).unwrap().total(), "G({a}, {b})");
        }
    }
}

fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n();
    let mut edges = Vec::new();
    for u in 0..g.n() {
        for v in g.neighbors(u) {
            if u < v {
                edges.push((u, v));
            }
        }
    }
    for u in 0..h.n() {
        for v in h.neighbors(u) {
            if u < v {
                edges.push((u + shift, v + shift));
            }
        }
    }
    Graph::from_edges(g.n() + h.n(), edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recurrence_matches_brute_force(n in 1usize..12, p in 0.0f64..=1.0, seed in 0u64..10_000) {
        let g = random_graph(n, p, seed);
        prop_assert_eq!(
            brute_force_sequence(&g).unwrap(),
            sequence_by_recurrence(&g).unwrap()
        );
    }

    #[test]
    fn disjoint_union_multiplies_counts(
        n1 in 1usize..8, n2 in 1usize..8,
        p in 0.0f64..=1.0, s1 in 0u64..1000, s2 in 0u64..1000,
    ) {
        let g = random_graph(n1, p, s1);
        let h = random_graph(n2, 1.0 - p, s2);
        let u = disjoint_union(&g, &h);
        let gs = sequence_by_recurrence(&g).unwrap();
        let hs = sequence_by_recurrence(&h).unwrap();
        let us = sequence_by_recurrence(&u).unwrap();
        prop_assert_eq!(us.alpha(), gs.alpha() + hs.alpha());
        for t in 0..=us.alpha() {
            let convolved: BigUint = (0..=t)
                .map(|i| gs.coefficient(i) * hs.coefficient(t - i))
                .sum();
            prop_assert_eq!(us.coefficient(t), convolved, "t = {}", t);
        }
    }

    #[test]
    fn tree_sequences_satisfy_basic_invariants(n in 1u64..20, seed in 0u64..10_000) {
        let g = random_tree(n, seed).unwrap();
        let seq = sequence_by_recurrence(&g).unwrap();
        prop_assert!(seq.coefficient(0).is_one());
        prop_assert_eq!(seq.coefficient(1), BigUint::from(n));
        prop_assert!(seq.alpha() as u64 >= n / 2);
    }
}
