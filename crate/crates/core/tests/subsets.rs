use std::collections::HashSet;

use proptest::prelude::*;
use rainbow_core::subsets::{
    b_sequence, check_block, cycle_edge_set, d_sequence, edge_disjoint_pair, enumerate_rainbow_sequences,
    enumerate_subsets, hamilton_k2, is_rainbow_sequence, max_edge_disjoint, rainbow_cycle, reversed, special_block,
    zigzag_block, zigzag_path, Subset, SubsetFlips, ZigzagEdge,
};
use rainbow_core::{exhaustive_rainbow_search, verify_rainbow, SearchConfig, SearchVerdict};

/// Checks a cycle of k-sets with plain set arithmetic: each step swaps one
/// element, every pair of `[n]` is swapped once, no set repeats.
fn independent_check(n: u32, k: usize, states: &[Subset]) -> bool {
    let len = states.len();
    if len != (n * (n - 1) / 2) as usize {
        return false;
    }
    let distinct: HashSet<&[u32]> = states.iter().map(|s| s.elems()).collect();
    if distinct.len() != len || states.iter().any(|s| s.elems().len() != k) {
        return false;
    }
    let mut swapped = HashSet::new();
    for i in 0..len {
        let a: HashSet<u32> = states[i].elems().iter().copied().collect();
        let b: HashSet<u32> = states[(i + 1) % len].elems().iter().copied().collect();
        let out: Vec<u32> = a.difference(&b).copied().collect();
        let inn: Vec<u32> = b.difference(&a).copied().collect();
        if out.len() != 1 || inn.len() != 1 {
            return false;
        }
        swapped.insert((out[0].min(inn[0]), out[0].max(inn[0])));
    }
    swapped.len() == len
}

#[test]
fn pair_cycles_for_odd_n() {
    for n in (5..=15u32).step_by(2) {
        let c = hamilton_k2(n).unwrap();
        assert!(independent_check(n, 2, &c.states), "n = {n}");
        assert!(verify_rainbow(&SubsetFlips { n, k: 2 }, &c, 1).is_rainbow_r);
        assert!(is_rainbow_sequence((n - 1) / 2, &d_sequence((n - 1) / 2).unwrap()));
    }
}

#[test]
fn a_sequence_and_its_reversal_give_edge_disjoint_cycles() {
    for n in (5..=15u32).step_by(2) {
        let (a, b) = edge_disjoint_pair(n).unwrap();
        assert!(independent_check(n, 2, &b.states));
        let shared = cycle_edge_set(&a).intersection(&cycle_edge_set(&b)).count();
        assert_eq!(shared, 0, "n = {n}");
    }
}

#[test]
fn sequence_counts_are_even_and_closed_under_reversal() {
    assert_eq!(enumerate_rainbow_sequences(1, None).unwrap().sequences.len(), 1);
    for ell in 2..=6u32 {
        let e = enumerate_rainbow_sequences(ell, None).unwrap();
        assert!(e.complete);
        assert!(
            !e.sequences.is_empty() && e.sequences.len().is_multiple_of(2),
            "l = {ell}: {}",
            e.sequences.len()
        );
        let all: HashSet<&Vec<i64>> = e.sequences.iter().collect();
        for d in &e.sequences {
            assert!(is_rainbow_sequence(ell, d));
            let r = reversed(d);
            assert_ne!(&r, d);
            assert!(all.contains(&r));
        }
        assert!(all.contains(&d_sequence(ell).unwrap()));
    }
}

#[test]
fn enumeration_agrees_with_brute_force() {
    // all sign and length choices, filtered by the block conditions
    for ell in 2..=4u32 {
        let l = ell as i64;
        let mut brute = Vec::new();
        let total = (2 * l).pow(ell);
        for code in 0..total {
            let mut c = code;
            let d: Vec<i64> = (0..ell)
                .map(|_| {
                    let v = c % (2 * l);
                    c /= 2 * l;
                    if v < l {
                        v + 1
                    } else {
                        l - v - 1
                    }
                })
                .collect();
            if is_rainbow_sequence(ell, &d) {
                brute.push(d);
            }
        }
        brute.sort();
        let mut found = enumerate_rainbow_sequences(ell, None).unwrap().sequences;
        found.sort();
        assert_eq!(found, brute, "l = {ell}");
    }
}

#[test]
fn edge_disjoint_maximum() {
    let six = max_edge_disjoint(6).unwrap();
    assert_eq!(six.size, 10);
    for ell in 2..=5u32 {
        assert!(max_edge_disjoint(ell).unwrap().size <= (2 * ell + 1 - 3) as usize);
    }
    // re-check the witness pairwise
    let n = 13;
    let edges: Vec<_> = six
        .witness
        .iter()
        .map(|d| {
            let blk = rainbow_core::subsets::block_from_d(6, d).unwrap();
            cycle_edge_set(&rainbow_core::subsets::cycle_from_block(n, 2, &blk).unwrap())
        })
        .collect();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            assert!(edges[i].is_disjoint(&edges[j]));
        }
    }
}

#[test]
fn no_rainbow_cycle_for_even_n() {
    for n in (4..=8u32).step_by(2) {
        for k in 1..n {
            let fam = SubsetFlips { n, k };
            let out = exhaustive_rainbow_search(&fam, &enumerate_subsets(n, k)[..1], &SearchConfig::new(1)).unwrap();
            assert!(matches!(out.verdict, SearchVerdict::None(_)), "n = {n}, k = {k}");
        }
    }
    // without the closure shortcut the search must still come up empty
    for (n, k) in [(4, 2), (6, 2), (6, 3)] {
        let fam = SubsetFlips { n, k };
        let cfg = SearchConfig::new(1).closure_pruning(false);
        let out = exhaustive_rainbow_search(&fam, &enumerate_subsets(n, k)[..1], &cfg).unwrap();
        assert!(matches!(out.verdict, SearchVerdict::None(_)), "n = {n}, k = {k}");
    }
}

#[test]
fn zigzag_blocks_for_all_small_k() {
    for ell in 2..=14u32 {
        let n = 2 * ell + 1;
        for k in (3..).take_while(|k| 3 * k < n) {
            let path = zigzag_path(ell, k).unwrap();
            // a simple path on [k, n] from n to k using every length once
            assert_eq!(path.vertices.first(), Some(&n));
            assert_eq!(path.vertices.last(), Some(&k));
            assert!(path.vertices.iter().all(|&v| v >= k && v <= n));
            assert_eq!(path.vertices.iter().collect::<HashSet<_>>().len(), path.vertices.len());
            let mut lens = path.lengths();
            lens.sort_unstable();
            assert_eq!(lens, (1..=ell).collect::<Vec<_>>());
            assert_eq!(path.kinds.last(), Some(&ZigzagEdge::Closing));
            let blk = zigzag_block(ell, k).unwrap();
            assert!(check_block(n, k, &blk).unwrap().all(), "l = {ell}, k = {k}");
            let c = rainbow_cycle(n, k).unwrap();
            assert!(independent_check(n, k as usize, &c.states), "l = {ell}, k = {k}");
        }
    }
    assert_eq!(zigzag_path(14, 8).unwrap().s, 11);
    assert_eq!(zigzag_path(13, 7).unwrap().s, 9);
    assert!(zigzag_path(4, 3).is_err());
}

#[test]
fn stored_blocks() {
    for (ell, k) in [(4u32, 4u32), (8, 8)] {
        let n = 2 * ell + 1;
        let blk = special_block(ell, k).unwrap();
        assert!(check_block(n, k, &blk).unwrap().rainbow);
        let c = rainbow_cycle(n, k).unwrap();
        assert!(independent_check(n, k as usize, &c.states));
        // and the complementary size
        let c = rainbow_cycle(n, n - k).unwrap();
        assert!(independent_check(n, (n - k) as usize, &c.states));
    }
}

#[test]
fn complements_carry_rainbow_cycles_over() {
    let c = rainbow_cycle(7, 5).unwrap();
    assert!(independent_check(7, 5, &c.states));
    assert!(verify_rainbow(&SubsetFlips { n: 7, k: 5 }, &c, 1).is_rainbow_r);
    let pair = hamilton_k2(7).unwrap();
    assert_eq!(pair.label_sequence(), c.label_sequence());
}

#[test]
fn block_for_l8_matches_the_table() {
    let d = d_sequence(8).unwrap();
    assert_eq!(b_sequence(17, &d), vec![17, 3, 15, 5, 6, 12, 8, 10]);
    let abs: Vec<u64> = d.iter().map(|x| x.unsigned_abs()).collect();
    assert_eq!(abs, vec![3, 5, 7, 1, 6, 4, 2, 8]);
}

proptest! {
    #[test]
    fn shifting_preserves_exchange_labels(n in 5u32..20, seed in any::<u64>(), shift in -30i64..30) {
        let k = 2 + (seed % 3) as u32;
        prop_assume!(k < n);
        let all = enumerate_subsets(n, k);
        let a = &all[(seed as usize) % all.len()];
        let b = &all[(seed as usize / 7) % all.len()];
        let (sa, sb) = (a.shifted(n, shift), b.shifted(n, shift));
        match (a.exchange_with(b), sa.exchange_with(&sb)) {
            (Some(t), Some(u)) => prop_assert_eq!(t.shifted(n, shift), u),
            (None, None) => {}
            other => prop_assert!(false, "{:?}", other),
        }
    }
}
