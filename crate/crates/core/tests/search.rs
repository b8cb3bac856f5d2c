mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use rainbow_core::geometry::PointSet;
use rainbow_core::matchings::{enumerate_matchings, CenteredFlips, MatchingFlips};
use rainbow_core::permutations::{Permutation, PermutationFlips};
use rainbow_core::search::{edge_count, NoneReason};
use rainbow_core::spanning_trees::{star_tree, TreeFlips};
use rainbow_core::subsets::{enumerate_subsets, SubsetFlips};
use rainbow_core::triangulations::{enumerate_triangulations, star, TriangulationFlips};
use rainbow_core::{
    connected_components, cyclic_dist, exhaustive_rainbow_search, sigma, verify_rainbow, Anchor, FlipGraphOracle,
    Label, SearchConfig, SearchVerdict,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn modular_examples() {
    assert_eq!(cyclic_dist(17, Label::pair(1, 15)).unwrap(), 3);
    assert_eq!(cyclic_dist(9, Label::pair(1, 9)).unwrap(), 1);
    assert!(Label::new(2, 2).is_err());
    assert_eq!(sigma(7, &[1, 7], 1).unwrap(), vec![1, 2]);
    assert_eq!(sigma(7, &[1, 3], 7).unwrap(), vec![1, 3]);
    assert_eq!(sigma(5, &[2, 4], 3).unwrap(), vec![2, 5]);
}

#[test]
fn centered_m6_has_no_rainbow_cycle() {
    let all = enumerate_matchings(6).unwrap();
    let out = exhaustive_rainbow_search(&CenteredFlips { m: 6 }, &all, &SearchConfig::new(1)).unwrap();
    assert_eq!(out.verdict, SearchVerdict::None(NoneReason::Exhausted));
}

#[test]
fn odd_targets_give_none() {
    let out = exhaustive_rainbow_search(
        &PermutationFlips { n: 3 },
        &[Permutation::identity(3)],
        &SearchConfig::new(1),
    )
    .unwrap();
    // length 3 is integral but the graph is bipartite
    assert_eq!(out.verdict, SearchVerdict::None(NoneReason::Exhausted));
    // odd m: m^2 edges entering two per step
    let out = exhaustive_rainbow_search(
        &MatchingFlips { m: 3 },
        &enumerate_matchings(3).unwrap(),
        &SearchConfig::new(1),
    )
    .unwrap();
    assert_eq!(out.verdict, SearchVerdict::None(NoneReason::Parity));
    assert_eq!(out.stats.nodes_expanded, 0);
}

#[test]
fn four_convex_points_have_a_tree_cycle_of_length_six() {
    let fam = TreeFlips::new(PointSet::convex(4).unwrap());
    let out = exhaustive_rainbow_search(&fam, &[star_tree(4, 1)], &SearchConfig::new(1)).unwrap();
    let SearchVerdict::Found(c) = out.verdict else {
        panic!("expected a cycle")
    };
    assert_eq!(c.len(), 6);
    assert!(verify_rainbow(&fam, &c, 1).is_rainbow_r);
}

#[test]
fn component_counts() {
    let h6 = connected_components(&CenteredFlips { m: 6 }, &enumerate_matchings(6).unwrap());
    assert_eq!(h6.len(), 8);
    let g6 = connected_components(&TriangulationFlips::new(6), &enumerate_triangulations(6).unwrap());
    assert_eq!(g6.len(), 1);
    let h8 = connected_components(&CenteredFlips { m: 8 }, &enumerate_matchings(8).unwrap());
    assert!(h8.len() >= 7);
    // components partition the state set
    let total: usize = h8.iter().map(Vec::len).sum();
    assert_eq!(total, 1430);
}

#[test]
fn search_is_deterministic() {
    let fam = PermutationFlips { n: 4 };
    let cfg = SearchConfig::new(1);
    let a = exhaustive_rainbow_search(&fam, &[Permutation::identity(4)], &cfg).unwrap();
    let b = exhaustive_rainbow_search(&fam, &[Permutation::identity(4)], &cfg).unwrap();
    assert_eq!(a.verdict, b.verdict);
    assert_eq!(a.stats, b.stats);
}

#[test]
fn node_budget_is_inconclusive_not_none() {
    let fam = SubsetFlips { n: 7, k: 2 };
    let cfg = SearchConfig::new(1).closure_pruning(false).max_nodes(10);
    let out = exhaustive_rainbow_search(&fam, &enumerate_subsets(7, 2)[..1], &cfg).unwrap();
    assert!(out.verdict.is_inconclusive());
}

#[test]
fn reachable_anchor_agrees_with_starts_only_on_transitive_graphs() {
    let fam = SubsetFlips { n: 5, k: 2 };
    let all = enumerate_subsets(5, 2);
    for anchor in [Anchor::StartsOnly, Anchor::Reachable] {
        let out = exhaustive_rainbow_search(&fam, &all[..1], &SearchConfig::new(1).anchor(anchor)).unwrap();
        let SearchVerdict::Found(c) = out.verdict else {
            panic!("{anchor:?}")
        };
        assert!(verify_rainbow(&fam, &c, 1).is_rainbow_r);
    }
}

/// Every neighbor lists the state back among its own neighbors.
fn check_symmetry<O: FlipGraphOracle>(oracle: &O, sample: &[O::State]) {
    for s in sample {
        for (t, _) in oracle.neighbors(s) {
            assert!(
                oracle.neighbors(&t).iter().any(|(u, _)| u == s),
                "{t:?} does not lead back to {s:?}"
            );
        }
    }
}

fn sample<T: Clone>(all: &[T], count: usize, seed: u64) -> Vec<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| all.choose(&mut rng).unwrap().clone()).collect()
}

#[test]
fn adjacency_is_symmetric() {
    check_symmetry(
        &TriangulationFlips::new(9),
        &sample(&enumerate_triangulations(9).unwrap(), 1000, 1),
    );
    check_symmetry(
        &MatchingFlips { m: 7 },
        &sample(&enumerate_matchings(7).unwrap(), 1000, 2),
    );
    check_symmetry(
        &CenteredFlips { m: 8 },
        &sample(&enumerate_matchings(8).unwrap(), 1000, 3),
    );
    check_symmetry(
        &SubsetFlips { n: 11, k: 4 },
        &sample(&enumerate_subsets(11, 4), 1000, 4),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let perms: Vec<Permutation> = (0..1000)
        .map(|_| {
            let mut v: Vec<u32> = (1..=7).collect();
            v.shuffle(&mut rng);
            Permutation::new(v).unwrap()
        })
        .collect();
    check_symmetry(&PermutationFlips { n: 7 }, &perms);
    let trees = TreeFlips::new(common::random_points(6, 11));
    let all = trees.enumerate();
    check_symmetry(&trees, &sample(&all, 1000, 6));
}

#[test]
fn edge_count_matches_degree_sum() {
    let fam = TriangulationFlips::new(7);
    let all = enumerate_triangulations(7).unwrap();
    // every triangulation of the heptagon has 4 flippable diagonals
    assert_eq!(edge_count(&fam, &all), all.len() * 4 / 2);
    assert_eq!(fam.neighbors(&star(7, 1).unwrap()).len(), 4);
}

proptest! {
    #[test]
    fn cyclic_dist_is_symmetric_and_bounded(n in 3u32..40, x in 1u32..40, y in 1u32..40) {
        prop_assume!(x <= n && y <= n && x != y);
        let d = cyclic_dist(n, Label::pair(x, y)).unwrap();
        prop_assert!(d >= 1 && d <= n / 2);
        let shifted = Label::pair(x, y).shifted(n, 5);
        prop_assert_eq!(cyclic_dist(n, shifted).unwrap(), d);
    }

    #[test]
    fn sigma_preserves_size_and_composes(n in 3u32..30, shift in -50i64..50, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut all: Vec<u32> = (1..=n).collect();
        all.shuffle(&mut rng);
        let set: Vec<u32> = all[..(n as usize / 2)].to_vec();
        let once = sigma(n, &set, shift).unwrap();
        prop_assert_eq!(once.iter().collect::<HashSet<_>>().len(), set.len());
        let back = sigma(n, &once, -shift).unwrap();
        let mut sorted = set.clone();
        sorted.sort_unstable();
        prop_assert_eq!(back, sorted);
    }
}
