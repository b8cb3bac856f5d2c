//! The acceptance suite behind `rainbow repro`. Each criterion writes
//! `criterion-N.json` holding its parameters, seed, budgets and verdicts.
//! Timings are left out so that reruns with the same seed give identical
//! bytes.

use std::path::Path;
use std::time::Duration;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use rainbow_core::geometry::PointSet;
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
    exhaustive_rainbow_search, CycleRecord, FlipGraphOracle, LabeledFlipCycle, RecordFamily, SearchConfig,
    SearchVerdict,
};

use crate::{Failure, Global, Status};

const M10_BUDGET: Duration = Duration::from_secs(30 * 60);

/// Verdicts gathered for one criterion.
#[derive(Default)]
struct Checks {
    verdicts: Map<String, Value>,
    pass: bool,
    failures: Vec<String>,
}

impl Checks {
    fn new() -> Self {
        Checks {
            pass: true,
            ..Checks::default()
        }
    }

    fn record(&mut self, key: impl Into<String>, value: Value, ok: bool) {
        let key = key.into();
        if !ok {
            self.pass = false;
            self.failures.push(key.clone());
        }
        self.verdicts.insert(key, value);
    }
}

fn verified<F: RecordFamily>(family: &F, cycle: &LabeledFlipCycle<F::State>, r: usize) -> bool {
    CycleRecord::new(family, cycle, r)
        .verify()
        .is_ok_and(|rep| rep.is_rainbow_r)
}

fn binom2(n: u32) -> usize {
    (n * (n - 1) / 2) as usize
}

/// Random points in general position, rejecting collinear draws.
fn random_points(n: usize, rng: &mut ChaCha8Rng) -> PointSet {
    loop {
        let coords: Vec<(i64, i64)> = (0..n)
            .map(|_| (rng.gen_range(-1000..=1000), rng.gen_range(-1000..=1000)))
            .collect();
        if let Ok(x) = PointSet::from_coords(&coords) {
            return x;
        }
    }
}

/// Random points with exactly `h` of them on the hull: a perturbed regular
/// `h`-gon with the rest drawn well inside it.
fn random_points_with_hull(n: usize, h: usize, rng: &mut ChaCha8Rng) -> PointSet {
    use std::f64::consts::{PI, TAU};
    loop {
        let mut coords = Vec::with_capacity(n);
        for t in 0..h {
            let a = TAU * (t as f64 + rng.gen_range(0.0..0.3)) / h as f64;
            coords.push(((100_000.0 * a.cos()) as i64, (100_000.0 * a.sin()) as i64));
        }
        let inner = 100_000.0 * (PI / h as f64).cos() * 0.5;
        while coords.len() < n {
            let a = rng.gen_range(0.0..TAU);
            let d = rng.gen_range(0.0..inner);
            coords.push(((d * a.cos()) as i64, (d * a.sin()) as i64));
        }
        if let Ok(x) = PointSet::from_coords(&coords) {
            if x.hull().len() == h {
                return x;
            }
        }
    }
}

fn triangulations(c: &mut Checks) -> Value {
    for n in 4..=12u32 {
        let ok = rainbow1_cycle(n)
            .is_ok_and(|cy| cy.len() == binom2(n) - n as usize && verified(&TriangulationFlips::new(n), &cy, 1));
        c.record(format!("rainbow1/n={n}"), json!(ok), ok);
    }
    for n in 7..=12u32 {
        let ok = rainbow2_cycle(n)
            .is_ok_and(|cy| cy.len() == 2 * (binom2(n) - n as usize) && verified(&TriangulationFlips::new(n), &cy, 2));
        c.record(format!("rainbow2/n={n}"), json!(ok), ok);
    }
    json!({"rainbow1_n": [4, 12], "rainbow2_n": [7, 12]})
}

fn spanning_trees(c: &mut Checks, seed: u64) -> Value {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..20usize {
        let n = 3 + i % 6;
        let x = random_points(n, &mut rng);
        let ok = tree_rainbow1(&x)
            .is_ok_and(|cy| cy.len() == binom2(n as u32) && verified(&TreeFlips::new(x.clone()), &cy, 1));
        c.record(format!("rainbow1/set={i:02}/n={n}"), json!(ok), ok);
    }
    for n in 6..=8u32 {
        let x = random_points(n as usize, &mut rng);
        for r in 2..=max_r(n) {
            let ok = tree_cycle(&x, r)
                .is_ok_and(|cy| cy.len() == r * binom2(n) && verified(&TreeFlips::new(x.clone()), &cy, r));
            c.record(format!("rainbow/n={n}/r={r}"), json!(ok), ok);
        }
    }
    for (n, hulls, rs) in [(4usize, 3..=4usize, 2..=2usize), (5, 3..=5, 2..=4)] {
        for h in hulls {
            let x = random_points_with_hull(n, h, &mut rng);
            for r in rs.clone() {
                let ok = rainbow_small(&x, r).is_ok_and(|cy| verified(&TreeFlips::new(x.clone()), &cy, r));
                c.record(format!("small/n={n}/hull={h}/r={r}"), json!(ok), ok);
            }
        }
    }
    json!({"random_sets": 20, "random_n": [3, 8], "even_odd_n": [6, 8], "small_n": [4, 5]})
}

fn matching_structure(c: &mut Checks) -> Result<Value, Failure> {
    let h6 = hm_components(6)?;
    let total: usize = h6.iter().map(|x| x.len()).sum();
    let trees = h6.iter().filter(|x| x.is_tree()).count();
    c.record(
        "H_6",
        json!({"components": h6.len(), "matchings": total, "trees": trees}),
        h6.len() == 8 && total == 132 && trees == 5,
    );
    for m in [4u32, 6, 8, 10] {
        let comps = hm_components(m)?.len();
        let cross = cross_class_edges(m)?;
        c.record(
            format!("H_{m:02}"),
            json!({"components": comps, "cross_class_edges": cross}),
            comps >= m as usize - 1 && cross == 0,
        );
    }
    for m in [2u32, 4, 6, 8] {
        let (classes, _) = partition_classes(m)?;
        let sizes: Vec<Value> = classes
            .iter()
            .map(|cl| json!([cl.c, cl.members.len(), predicted_class_size(m, cl.c).to_string()]))
            .collect();
        let ok = classes
            .iter()
            .all(|cl| cl.members.len() as u128 == predicted_class_size(m, cl.c));
        c.record(format!("classes/m={m}"), Value::Array(sizes), ok);
    }
    Ok(json!({"hm_m": [4, 6, 8, 10], "narayana_m": [2, 4, 6, 8], "tolerance": "exact"}))
}

fn matching_existence(c: &mut Checks, quick: bool) -> Result<Value, Failure> {
    let all = explicit_rainbows()?;
    for ((m, r), len) in [((2u32, 1usize), 2usize), ((4, 1), 8), ((6, 2), 36), ((8, 2), 64)] {
        let cy = &all[&(m, r)];
        let ok = cy.len() == len && verified(&MatchingFlips { m }, cy, r);
        c.record(
            format!("explicit/m={m}/r={r}"),
            json!({"length": cy.len(), "verified": ok}),
            ok,
        );
    }
    let ms: &[u32] = if quick { &[6, 8] } else { &[6, 8, 10] };
    for &m in ms {
        let rep = prove_no_rainbow1(m, Some(M10_BUDGET))?;
        let nodes: u64 = rep.components.iter().map(|x| x.nodes_expanded).sum();
        c.record(
            format!("no_rainbow1/m={m:02}"),
            json!({"verdict": rep.verdict, "components": rep.components.len(), "nodes": nodes}),
            rep.verdict == "none",
        );
    }
    for m in [3u32, 5, 7, 9, 11] {
        let rep = prove_no_rainbow1(m, None)?;
        c.record(format!("odd/m={m:02}"), json!(rep.verdict), rep.verdict == "parity");
    }
    Ok(json!({"no_rainbow1_m": ms, "quick": quick}))
}

fn permutations(c: &mut Checks) -> Result<Value, Failure> {
    for n in [4u32, 5, 8, 9, 12, 13] {
        let ok = rainbow_sequence(n).is_ok_and(|seq| {
            seq.len() == binom2(n)
                && apply_sequence(&Permutation::identity(n), &seq)
                    .is_ok_and(|cy| verified(&PermutationFlips { n }, &cy, 1))
        });
        c.record(format!("sequence/n={n:02}"), json!(ok), ok);
    }
    for n in [2u32, 3, 6, 7, 10, 11] {
        let refused = matches!(rainbow_sequence(n), Err(rainbow_core::Error::Parity(_)));
        c.record(format!("refused/n={n:02}"), json!(refused), refused);
    }
    let fam = PermutationFlips { n: 5 };
    let out = exhaustive_rainbow_search(&fam, &[Permutation::identity(5)], &SearchConfig::new(1))?;
    let found = matches!(&out.verdict, SearchVerdict::Found(cy) if verified(&fam, cy, 1));
    c.record(
        "search/n=5",
        json!({"verdict": out.verdict.tag(), "nodes": out.stats.nodes_expanded}),
        found,
    );
    Ok(json!({"n": [4, 5, 8, 9, 12, 13]}))
}

fn subsets(c: &mut Checks) -> Result<Value, Failure> {
    for n in (5..=15u32).step_by(2) {
        let ok = hamilton_k2(n).is_ok_and(|cy| cy.len() == binom2(n) && verified(&SubsetFlips { n, k: 2 }, &cy, 1));
        c.record(format!("hamilton_k2/n={n:02}"), json!(ok), ok);
        let (a, b) = edge_disjoint_pair(n)?;
        let shared = cycle_edge_set(&a).intersection(&cycle_edge_set(&b)).count();
        let ok = shared == 0 && verified(&SubsetFlips { n, k: 2 }, &b, 1);
        c.record(format!("disjoint_pair/n={n:02}"), json!({"shared_edges": shared}), ok);
    }
    for ell in 1..=6u32 {
        let e = enumerate_rainbow_sequences(ell, None)?;
        // l = 1 has a single self-reversing sequence
        let ok = e.complete && (ell == 1 || e.sequences.len() % 2 == 0);
        c.record(format!("enumerate/l={ell}"), json!(e.sequences.len()), ok);
    }
    let best = max_edge_disjoint(6)?.size;
    c.record("max_edge_disjoint/l=6", json!(best), best == 10);
    for n in (4..=8u32).step_by(2) {
        for k in 1..n {
            let out = exhaustive_rainbow_search(
                &SubsetFlips { n, k },
                &enumerate_subsets(n, k)[..1],
                &SearchConfig::new(1),
            )?;
            c.record(
                format!("even/n={n}/k={k}"),
                json!(out.verdict.tag()),
                out.verdict.is_none(),
            );
        }
    }
    for ell in 2..=14u32 {
        let n = 2 * ell + 1;
        for k in (3..).take_while(|k| 3 * k < n) {
            let ok = check_block(n, k, &zigzag_block(ell, k)?)?.all();
            c.record(format!("zigzag/l={ell:02}/k={k:02}"), json!(ok), ok);
        }
    }
    for (ell, k) in [(4u32, 4u32), (8, 8)] {
        let n = 2 * ell + 1;
        let ok = check_block(n, k, &special_block(ell, k)?)?.rainbow
            && subset_cycle(n, k).is_ok_and(|cy| verified(&SubsetFlips { n, k }, &cy, 1));
        c.record(format!("special/l={ell}/k={k}"), json!(ok), ok);
    }
    Ok(json!({"odd_n": [5, 15], "enumerate_l": [1, 6], "even_n": [4, 8], "zigzag_l": [2, 14]}))
}

fn round_trip<F: RecordFamily>(family: &F, cycle: &LabeledFlipCycle<F::State>, r: usize) -> bool {
    let text = CycleRecord::new(family, cycle, r).to_json();
    CycleRecord::from_json(&text)
        .is_ok_and(|back| back.to_json() == text && back.verify().is_ok_and(|rep| rep.is_rainbow_r))
}

fn cross_cutting(c: &mut Checks, seed: u64) -> Result<Value, Failure> {
    for m in [2u32, 4, 6, 8] {
        let oracle = CenteredFlips { m };
        let mut arcs = 0usize;
        let mut ok = true;
        for s in enumerate_matchings(m)? {
            for (t, _) in oracle.neighbors(&s) {
                ok &= (t.weight() - s.weight()).abs() == m as i64 - 2;
                arcs += 1;
            }
        }
        c.record(format!("weight_step/m={m}"), json!({"arcs": arcs}), ok);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pools: Vec<(u32, Vec<_>)> = [6u32, 8, 10]
        .into_iter()
        .map(|m| Ok((m, enumerate_matchings(m)?)))
        .collect::<Result<_, Failure>>()?;
    let mut bad = 0usize;
    for walk in 0..10_000 {
        let (m, pool) = &pools[walk % pools.len()];
        let oracle = CenteredFlips { m: *m };
        let mut s = pool.choose(&mut rng).expect("non-empty").clone();
        let mut last = 0i64;
        for _ in 0..12 {
            let nb = oracle.neighbors(&s);
            let Some((t, _)) = nb.choose(&mut rng) else { break };
            let dw = t.weight() - s.weight();
            if last != 0 && dw.signum() != -last.signum() {
                bad += 1;
            }
            last = dw;
            s = t.clone();
        }
    }
    c.record("alternation/walks=10000", json!({"violations": bad}), bad == 0);
    for m in [2u32, 4, 6, 8] {
        let n = 2 * m;
        let (mut quads, mut disagree) = (0usize, 0usize);
        for a in 1..=n {
            for b in (a + 1..=n).step_by(2) {
                for cc in (b + 1..=n).step_by(2) {
                    for d in (cc + 1..=n).step_by(2) {
                        let q = Quad::new(a, b, cc, d)?;
                        if is_centered(m, &q)? != q.contains_center(m) {
                            disagree += 1;
                        }
                        quads += 1;
                    }
                }
            }
        }
        c.record(
            format!("centered/m={m}"),
            json!({"quads": quads, "disagree": disagree}),
            disagree == 0,
        );
    }
    let ok = round_trip(&TriangulationFlips::new(9), &rainbow2_cycle(9)?, 2);
    c.record("round_trip/triangulation", json!(ok), ok);
    let x = random_points(7, &mut rng);
    let ok = round_trip(&TreeFlips::new(x.clone()), &tree_cycle(&x, 2)?, 2);
    c.record("round_trip/tree", json!(ok), ok);
    let ok = round_trip(&MatchingFlips { m: 8 }, &explicit_rainbows()?[&(8, 2)], 2);
    c.record("round_trip/matching", json!(ok), ok);
    let ok = round_trip(
        &PermutationFlips { n: 9 },
        &apply_sequence(&Permutation::identity(9), &rainbow_sequence(9)?)?,
        1,
    );
    c.record("round_trip/permutation", json!(ok), ok);
    let ok = round_trip(&SubsetFlips { n: 11, k: 3 }, &subset_cycle(11, 3)?, 1);
    c.record("round_trip/subset", json!(ok), ok);
    Ok(json!({"weight_m": [2, 8], "walk_m": [6, 8, 10], "walks": 10000, "walk_length": 12}))
}

pub fn run(g: &Global, out: &Path, quick: bool) -> Result<Status, Failure> {
    std::fs::create_dir_all(out).map_err(|e| Failure::io(out, e))?;
    let budgets = json!({
        "m10_seconds": M10_BUDGET.as_secs(),
        "small_tree_search_seconds": rainbow_core::spanning_trees::SMALL_SEARCH_BUDGET.as_secs(),
    });
    let names = [
        "triangulations",
        "spanning trees",
        "matchings structure",
        "matchings existence",
        "permutations",
        "subsets",
        "cross-cutting",
    ];
    let mut all_pass = true;
    for (i, name) in names.iter().enumerate() {
        let mut c = Checks::new();
        let params = match i {
            0 => triangulations(&mut c),
            1 => spanning_trees(&mut c, g.seed),
            2 => matching_structure(&mut c)?,
            3 => matching_existence(&mut c, quick)?,
            4 => permutations(&mut c)?,
            5 => subsets(&mut c)?,
            _ => cross_cutting(&mut c, g.seed)?,
        };
        let manifest = json!({
            "command": "repro",
            "criterion": i + 1,
            "name": name,
            "parameters": params,
            "seed": g.seed,
            "budgets": budgets,
            "verdicts": Value::Object(std::mem::take(&mut c.verdicts)),
            "pass": c.pass,
        });
        let path = out.join(format!("criterion-{}.json", i + 1));
        let text = serde_json::to_string_pretty(&manifest).expect("manifests serialize") + "\n";
        std::fs::write(&path, text).map_err(|e| Failure::io(&path, e))?;
        if c.pass {
            println!("criterion {} ({name}): PASS", i + 1);
        } else {
            println!("criterion {} ({name}): FAIL {}", i + 1, c.failures.join(", "));
        }
        all_pass &= c.pass;
    }
    Ok(if all_pass { Status::Ok } else { Status::Rejected })
}
