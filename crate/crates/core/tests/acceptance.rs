//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines are always shown; any failure makes the process
//! exit nonzero.

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rainbow_core::matchings::{
    cross_class_edges, enumerate_matchings, explicit_rainbows, hm_components, is_centered, partition_classes,
    predicted_class_size, prove_no_rainbow1, CenteredFlips, MatchingFlips, Quad,
};
use rainbow_core::permutations::{apply_sequence, rainbow_sequence, Permutation, PermutationFlips};
use rainbow_core::spanning_trees::{
    max_r, rainbow1_cycle as tree_rainbow1, rainbow_cycle as tree_cycle, rainbow_small, TreeFlips,
};
use rainbow_core::subsets::{
    check_block, cycle_edge_set, edge_disjoint_pair, enumerate_rainbow_sequences, enumerate_subsets, hamilton_k2,
    max_edge_disjoint, rainbow_cycle as subset_cycle, special_block, zigzag_block, SubsetFlips,
};
use rainbow_core::triangulations::{rainbow1_cycle, rainbow2_cycle, TriangulationFlips};
use rainbow_core::{
    exhaustive_rainbow_search, verify_rainbow, CycleRecord, Error, FlipFamily, FlipGraphOracle, LabeledFlipCycle,
    RecordFamily, SearchConfig, SearchVerdict,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const EACH_TRIANGULATION: Duration = Duration::from_secs(1);
const EACH_SMALL_TREE_SEARCH: Duration = Duration::from_secs(60);
const MATCHING_STRUCTURE_TOTAL: Duration = Duration::from_secs(5 * 60);
const M10_BUDGET: Duration = Duration::from_secs(30 * 60);
const PARITY_REFUSAL: Duration = Duration::from_millis(10);
const PERMUTATIONS_TOTAL: Duration = Duration::from_secs(30);
const SUBSETS_TOTAL: Duration = Duration::from_secs(10 * 60);

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn binom2(n: u32) -> usize {
    (n * (n - 1) / 2) as usize
}

fn rainbow<F: FlipFamily>(fam: &F, c: &LabeledFlipCycle<F::State>, r: usize) -> bool {
    verify_rainbow(fam, c, r).is_rainbow_r
}

fn triangulations() -> Outcome {
    let mut slowest = Duration::ZERO;
    for n in 4..=12u32 {
        let t = Instant::now();
        let c = rainbow1_cycle(n).map_err(|e| e.to_string())?;
        ensure!(
            c.len() == binom2(n) - n as usize,
            "rainbow1 n = {n} has length {}",
            c.len()
        );
        ensure!(
            rainbow(&TriangulationFlips::new(n), &c, 1),
            "rainbow1 n = {n} does not verify"
        );
        slowest = slowest.max(t.elapsed());
        ensure!(
            t.elapsed() < EACH_TRIANGULATION,
            "rainbow1 n = {n} took {:?}",
            t.elapsed()
        );
    }
    for n in 7..=12u32 {
        let t = Instant::now();
        let c = rainbow2_cycle(n).map_err(|e| e.to_string())?;
        ensure!(
            c.len() == 2 * (binom2(n) - n as usize),
            "rainbow2 n = {n} has length {}",
            c.len()
        );
        ensure!(
            rainbow(&TriangulationFlips::new(n), &c, 2),
            "rainbow2 n = {n} does not verify"
        );
        slowest = slowest.max(t.elapsed());
        ensure!(
            t.elapsed() < EACH_TRIANGULATION,
            "rainbow2 n = {n} took {:?}",
            t.elapsed()
        );
    }
    Ok(format!("r=1 for n=4..12, r=2 for n=7..12; slowest {slowest:.2?}"))
}

fn spanning_trees() -> Outcome {
    for seed in 0..20u64 {
        let n = 3 + (seed % 6) as usize;
        let x = common::random_points(n, 1000 + seed);
        let c = tree_rainbow1(&x).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure!(c.len() == binom2(n as u32), "seed {seed}: length {}", c.len());
        ensure!(
            rainbow(&TreeFlips::new(x), &c, 1),
            "seed {seed}: rainbow1 does not verify"
        );
    }
    let mut large = 0;
    for n in 6..=8u32 {
        for seed in 0..2u64 {
            let x = common::random_points(n as usize, 2000 + 10 * n as u64 + seed);
            for r in 2..=max_r(n) {
                let c = tree_cycle(&x, r).map_err(|e| format!("n = {n}, r = {r}: {e}"))?;
                ensure!(c.len() == r * binom2(n), "n = {n}, r = {r}: length {}", c.len());
                ensure!(
                    rainbow(&TreeFlips::new(x.clone()), &c, r),
                    "n = {n}, r = {r} does not verify"
                );
                large += 1;
            }
        }
    }
    let mut slowest = Duration::ZERO;
    let mut small = 0;
    for (n, hulls, rs) in [(4usize, 3..=4usize, 2..=2usize), (5, 3..=5, 2..=4)] {
        for h in hulls {
            let x = common::random_points_with_hull(n, h, 7 * h as u64 + n as u64);
            for r in rs.clone() {
                let t = Instant::now();
                let c = rainbow_small(&x, r).map_err(|e| format!("n = {n}, hull {h}, r = {r}: {e}"))?;
                ensure!(
                    rainbow(&TreeFlips::new(x.clone()), &c, r),
                    "n = {n}, hull {h}, r = {r} does not verify"
                );
                ensure!(
                    t.elapsed() <= EACH_SMALL_TREE_SEARCH,
                    "n = {n}, hull {h}, r = {r} took {:?}",
                    t.elapsed()
                );
                slowest = slowest.max(t.elapsed());
                small += 1;
            }
        }
    }
    Ok(format!(
        "20 random r=1 sets; {large} even/odd instances; {small} small searches, slowest {slowest:.2?}"
    ))
}

fn matching_structure() -> Outcome {
    let start = Instant::now();
    let h6 = hm_components(6).map_err(|e| e.to_string())?;
    let total: usize = h6.iter().map(|c| c.len()).sum();
    let trees = h6.iter().filter(|c| c.is_tree()).count();
    ensure!(
        h6.len() == 8 && total == 132 && trees == 5,
        "H_6: {} components, {total} matchings, {trees} trees",
        h6.len()
    );
    let mut counts = Vec::new();
    for m in [4u32, 6, 8, 10] {
        let comps = hm_components(m).map_err(|e| e.to_string())?.len();
        ensure!(comps >= m as usize - 1, "H_{m} has only {comps} components");
        let cross = cross_class_edges(m).map_err(|e| e.to_string())?;
        ensure!(cross == 0, "H_{m} has {cross} edges across merged classes");
        counts.push(format!("H_{m}:{comps}"));
    }
    for m in [2u32, 4, 6, 8] {
        let (classes, _) = partition_classes(m).map_err(|e| e.to_string())?;
        for cl in classes {
            let want = predicted_class_size(m, cl.c);
            ensure!(
                cl.members.len() as u128 == want,
                "m = {m}, c = {}: {} vs {want}",
                cl.c,
                cl.members.len()
            );
        }
    }
    let took = start.elapsed();
    ensure!(took < MATCHING_STRUCTURE_TOTAL, "took {took:?}");
    Ok(format!(
        "H_6 8/132/5; {}; class sizes exact for m=2,4,6,8; {took:.1?}",
        counts.join(" ")
    ))
}

fn matching_existence() -> Outcome {
    let all = explicit_rainbows().map_err(|e| e.to_string())?;
    for ((m, r), len) in [((2u32, 1usize), 2usize), ((4, 1), 8), ((6, 2), 36), ((8, 2), 64)] {
        let c = &all[&(m, r)];
        ensure!(c.len() == len, "({m},{r}) has length {}", c.len());
        ensure!(rainbow(&MatchingFlips { m }, c, r), "({m},{r}) does not verify");
    }
    let mut times = Vec::new();
    for m in [6u32, 8, 10] {
        let t = Instant::now();
        let rep = prove_no_rainbow1(m, Some(M10_BUDGET)).map_err(|e| e.to_string())?;
        ensure!(rep.verdict == "none", "m = {m}: {}", rep.verdict);
        times.push(format!("m={m} {:.1?}", t.elapsed()));
    }
    for m in [3u32, 5, 7, 9, 11] {
        let t = Instant::now();
        let rep = prove_no_rainbow1(m, None).map_err(|e| e.to_string())?;
        ensure!(rep.verdict == "parity", "odd m = {m}: {}", rep.verdict);
        ensure!(t.elapsed() < PARITY_REFUSAL, "odd m = {m} took {:?}", t.elapsed());
    }
    Ok(format!(
        "lengths 2/8/36/64; none for {}; odd m refused",
        times.join(", ")
    ))
}

fn permutations() -> Outcome {
    let start = Instant::now();
    for n in [4u32, 5, 8, 9, 12, 13] {
        let seq = rainbow_sequence(n).map_err(|e| e.to_string())?;
        ensure!(seq.len() == binom2(n), "n = {n}: length {}", seq.len());
        let c = apply_sequence(&Permutation::identity(n), &seq).map_err(|e| e.to_string())?;
        ensure!(rainbow(&PermutationFlips { n }, &c, 1), "n = {n} does not verify");
    }
    for n in [2u32, 3, 6, 7, 10, 11] {
        ensure!(
            matches!(rainbow_sequence(n), Err(Error::Parity(_))),
            "n = {n} not refused"
        );
    }
    let fam = PermutationFlips { n: 5 };
    let out = exhaustive_rainbow_search(&fam, &[Permutation::identity(5)], &SearchConfig::new(1))
        .map_err(|e| e.to_string())?;
    let SearchVerdict::Found(c) = out.verdict else {
        return Err("no cycle found for n = 5".into());
    };
    ensure!(rainbow(&fam, &c, 1), "search result for n = 5 does not verify");
    let took = start.elapsed();
    ensure!(took < PERMUTATIONS_TOTAL, "took {took:?}");
    Ok(format!(
        "n=4,5,8,9,12,13 verified; refusals; n=5 search found; {took:.2?}"
    ))
}

fn subsets() -> Outcome {
    let start = Instant::now();
    for n in (5..=15u32).step_by(2) {
        let c = hamilton_k2(n).map_err(|e| e.to_string())?;
        ensure!(c.len() == binom2(n), "n = {n}: length {}", c.len());
        ensure!(
            rainbow(&SubsetFlips { n, k: 2 }, &c, 1),
            "hamilton_k2({n}) does not verify"
        );
        let (a, b) = edge_disjoint_pair(n).map_err(|e| e.to_string())?;
        ensure!(
            rainbow(&SubsetFlips { n, k: 2 }, &b, 1),
            "reversed cycle for n = {n} does not verify"
        );
        ensure!(
            cycle_edge_set(&a).is_disjoint(&cycle_edge_set(&b)),
            "n = {n}: pair shares edges"
        );
    }
    // l = 1 has the single self-reversing sequence (-1); evenness starts at l = 2
    let mut counts = vec![enumerate_rainbow_sequences(1, None)
        .map_err(|e| e.to_string())?
        .sequences
        .len()];
    for ell in 2..=6u32 {
        let e = enumerate_rainbow_sequences(ell, None).map_err(|e| e.to_string())?;
        ensure!(
            e.complete && e.sequences.len() % 2 == 0,
            "l = {ell}: {} sequences",
            e.sequences.len()
        );
        counts.push(e.sequences.len());
    }
    let best = max_edge_disjoint(6).map_err(|e| e.to_string())?.size;
    ensure!(best == 10, "max_edge_disjoint(6) = {best}");
    for n in (4..=8u32).step_by(2) {
        for k in 1..n {
            let out = exhaustive_rainbow_search(
                &SubsetFlips { n, k },
                &enumerate_subsets(n, k)[..1],
                &SearchConfig::new(1),
            )
            .map_err(|e| e.to_string())?;
            ensure!(
                matches!(out.verdict, SearchVerdict::None(_)),
                "n = {n}, k = {k}: {:?}",
                out.verdict.tag()
            );
        }
    }
    let mut zig = 0;
    for ell in 2..=14u32 {
        let n = 2 * ell + 1;
        for k in (3..).take_while(|k| 3 * k < n) {
            let blk = zigzag_block(ell, k).map_err(|e| e.to_string())?;
            ensure!(
                check_block(n, k, &blk).map_err(|e| e.to_string())?.all(),
                "zigzag l = {ell}, k = {k} fails"
            );
            zig += 1;
        }
    }
    for (ell, k) in [(4u32, 4u32), (8, 8)] {
        let n = 2 * ell + 1;
        ensure!(
            check_block(n, k, &special_block(ell, k).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?
                .rainbow,
            "special ({ell},{k}) fails"
        );
        let c = subset_cycle(n, k).map_err(|e| e.to_string())?;
        ensure!(
            rainbow(&SubsetFlips { n, k }, &c, 1),
            "cycle for ({n},{k}) does not verify"
        );
    }
    let took = start.elapsed();
    ensure!(took < SUBSETS_TOTAL, "took {took:?}");
    Ok(format!("odd n=5..15 pairs; counts l=1..6 {counts:?}; max disjoint 10; even n<=8 none; {zig} zigzag blocks; special blocks; {took:.1?}"))
}

fn geometric_center(m: u32, q: &Quad) -> bool {
    let pt = |i: u32| {
        let a = std::f64::consts::TAU * f64::from(i - 1) / f64::from(2 * m);
        (a.cos(), a.sin())
    };
    let c = q.corners.map(pt);
    (0..4).all(|t| c[t].0 * c[(t + 1) % 4].1 - c[t].1 * c[(t + 1) % 4].0 > 1e-12)
}

fn round_trip<F: RecordFamily>(fam: &F, c: &LabeledFlipCycle<F::State>, r: usize) -> bool {
    let text = CycleRecord::new(fam, c, r).to_json();
    match CycleRecord::from_json(&text) {
        Ok(back) => back.to_json() == text && back.verify().is_ok_and(|v| v.is_rainbow_r),
        Err(_) => false,
    }
}

fn cross_cutting() -> Outcome {
    let mut arcs = 0;
    for m in [2u32, 4, 6, 8] {
        let oracle = CenteredFlips { m };
        for s in enumerate_matchings(m).map_err(|e| e.to_string())? {
            for (t, _) in oracle.neighbors(&s) {
                ensure!((t.weight() - s.weight()).abs() == m as i64 - 2, "m = {m}: weight jump");
                arcs += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pools: Vec<(u32, Vec<_>)> = [6u32, 8, 10]
        .into_iter()
        .map(|m| (m, enumerate_matchings(m).unwrap()))
        .collect();
    for walk in 0..10_000 {
        let (m, pool) = &pools[walk % pools.len()];
        let oracle = CenteredFlips { m: *m };
        let mut s = pool.choose(&mut rng).unwrap().clone();
        let mut last = 0i64;
        for _ in 0..12 {
            let nb = oracle.neighbors(&s);
            let Some((t, _)) = nb.choose(&mut rng) else { break };
            let dw = t.weight() - s.weight();
            ensure!(
                last == 0 || dw.signum() == -last.signum(),
                "walk {walk}: signs {last} then {dw}"
            );
            last = dw;
            s = t.clone();
        }
    }
    let mut quads = 0;
    for m in [2u32, 4, 6, 8] {
        let n = 2 * m;
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    for d in c + 1..=n {
                        let q = Quad::new(a, b, c, d).unwrap();
                        if (b - a) % 2 == 1 && (c - b) % 2 == 1 && (d - c) % 2 == 1 {
                            let comb = is_centered(m, &q).map_err(|e| e.to_string())?;
                            ensure!(comb == geometric_center(m, &q), "m = {m}: {q:?}");
                            quads += 1;
                        }
                    }
                }
            }
        }
    }
    let mut trips: HashSet<&str> = HashSet::new();
    if round_trip(&TriangulationFlips::new(9), &rainbow2_cycle(9).unwrap(), 2) {
        trips.insert("triangulation");
    }
    let x = common::random_points(7, 99);
    if round_trip(&TreeFlips::new(x.clone()), &tree_cycle(&x, 2).unwrap(), 2) {
        trips.insert("tree");
    }
    if round_trip(&MatchingFlips { m: 8 }, &explicit_rainbows().unwrap()[&(8, 2)], 2) {
        trips.insert("matching");
    }
    let seq = rainbow_sequence(9).unwrap();
    if round_trip(
        &PermutationFlips { n: 9 },
        &apply_sequence(&Permutation::identity(9), &seq).unwrap(),
        1,
    ) {
        trips.insert("permutation");
    }
    if round_trip(&SubsetFlips { n: 11, k: 3 }, &subset_cycle(11, 3).unwrap(), 1) {
        trips.insert("subset");
    }
    ensure!(trips.len() == 5, "round trip failed outside {trips:?}");
    Ok(format!(
        "{arcs} arcs with |dw| = m-2; 10000 alternating walks; {quads} quads agree; 5 families round-trip"
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("triangulations", triangulations),
        ("spanning trees", spanning_trees),
        ("matchings structure", matching_structure),
        ("matchings existence", matching_existence),
        ("permutations", permutations),
        ("subsets", subsets),
        ("cross-cutting", cross_cutting),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} ({name}): PASS - {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL - {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
