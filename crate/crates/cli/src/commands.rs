use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use serde_json::{json, Value};

use rainbow_core::geometry::{canonical_label, parse_points, PointSet};
use rainbow_core::matchings::{
    cross_class_edges, enumerate_matchings, explicit_rainbow, hm_components, partition_classes, predicted_class_size,
    prove_no_rainbow1_with, MatchingFlips,
};
use rainbow_core::permutations::{apply_sequence, rainbow_sequence, Permutation, PermutationFlips};
use rainbow_core::search::NoneReason;
use rainbow_core::spanning_trees::{rainbow_cycle as tree_cycle, star_tree, TreeFlips};
use rainbow_core::subsets::{
    cycle_edge_set, d_sequence, edge_disjoint_pair, enumerate_rainbow_sequences, enumerate_subsets, max_edge_disjoint,
    rainbow_cycle as subset_cycle, SubsetFlips,
};
use rainbow_core::triangulations::{rainbow1_cycle, rainbow2_cycle, rainbow2_walk, star, TriangulationFlips};
use rainbow_core::{
    exhaustive_rainbow_search, Anchor, CycleRecord, RecordFamily, SearchConfig, SearchOutcome, SearchVerdict,
};

use crate::output::{emit_cycle, print_json, report_json};
use crate::{
    repro, Cli, CombCmd, Command, Failure, FamilyArg, Global, MatchCmd, PermCmd, SearchArgs, Status, TreesCmd,
    TriangCmd,
};

type Outcome = Result<Status, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    match &cli.command {
        Command::Triang {
            action: TriangCmd::Rainbow { n, r, experimental },
        } => triang(g, *n, *r, *experimental),
        Command::Trees {
            action: TreesCmd::Rainbow { r },
        } => trees(g, *r),
        Command::Match { action } => matchings(g, action),
        Command::Perm {
            action: PermCmd::Rainbow { n, start },
        } => perm(g, *n, start.as_deref()),
        Command::Comb { action } => comb(g, action),
        Command::Verify { file } => verify(g, file),
        Command::Search(args) => search(g, args),
        Command::Repro { out, quick } => repro::run(g, out, *quick),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::io(path, e))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::io(path, e))
    }
}

fn load_points(g: &Global) -> Result<PointSet, Failure> {
    let path = g
        .points
        .as_ref()
        .ok_or_else(|| Failure::new(Status::Usage, "--points FILE is required"))?;
    Ok(canonical_label(&parse_points(&read_input(path)?)?)?)
}

fn points_json(x: &PointSet) -> Value {
    Value::Array(x.points().iter().map(|p| json!([p.x, p.y])).collect())
}

fn triang(g: &Global, n: u32, r: u32, experimental: bool) -> Outcome {
    let cycle = match (r, experimental) {
        (1, _) => rainbow1_cycle(n)?,
        (_, false) => rainbow2_cycle(n)?,
        (_, true) => rainbow2_walk(n)?,
    };
    emit_cycle(g, &TriangulationFlips::new(n), &cycle, r as usize, Vec::new())
}

fn trees(g: &Global, r: usize) -> Outcome {
    let x = load_points(g)?;
    let cycle = tree_cycle(&x, r)?;
    let hull: Vec<u32> = x.hull().to_vec();
    emit_cycle(
        g,
        &TreeFlips::new(x.clone()),
        &cycle,
        r,
        vec![("canonical_points", points_json(&x)), ("hull", json!(hull))],
    )
}

fn search_config(g: &Global, r: usize) -> SearchConfig {
    let mut config = SearchConfig::new(r).anchor(Anchor::Reachable);
    if let Some(nodes) = g.budget_nodes {
        config = config.max_nodes(nodes);
    }
    if let Some(t) = g.time_budget() {
        config = config.max_time(t);
    }
    config
}

fn matchings(g: &Global, action: &MatchCmd) -> Outcome {
    match action {
        MatchCmd::Hm {
            m,
            components,
            classes,
            check_narayana,
        } => hm(g, *m, *components, *classes, *check_narayana),
        MatchCmd::Rainbow { m, r } => {
            emit_cycle(g, &MatchingFlips { m: *m }, &explicit_rainbow(*m, *r)?, *r, Vec::new())
        }
        MatchCmd::Search { m, r, budget } => {
            let time = match (budget.map(std::time::Duration::from_secs_f64), g.time_budget()) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
            if *r == 1 {
                let report = prove_no_rainbow1_with(*m, time, g.budget_nodes)?;
                let status = match report.verdict {
                    "found" => Status::Ok,
                    "none" => Status::NoneFound,
                    "parity" => Status::Parity,
                    _ => Status::Inconclusive,
                };
                if let Some(c) = &report.witness {
                    return emit_cycle(g, &MatchingFlips { m: *m }, c, 1, vec![("verdict", json!("found"))]);
                }
                if g.json {
                    print_json(&serde_json::to_value(&report).expect("reports serialize"));
                } else {
                    println!("m = {m}, r = 1: {}", report.verdict);
                    if report.verdict == "parity" {
                        println!("m^2 = {} labels entering two per step cannot be split evenly", m * m);
                    }
                    for (i, c) in report.components.iter().enumerate() {
                        println!(
                            "  component {i}: {} states, {} edges, core {}, {} nodes, {}",
                            c.size, c.edges, c.core_states, c.nodes_expanded, c.verdict
                        );
                    }
                }
                Ok(status)
            } else {
                let mut config = search_config(g, *r);
                if let Some(t) = time {
                    config = config.max_time(t);
                }
                let fam = MatchingFlips { m: *m };
                let starts = enumerate_matchings(*m)?;
                let outcome = exhaustive_rainbow_search(&fam, &starts[..1], &config)?;
                finish_search(g, &fam, outcome, *r)
            }
        }
    }
}

fn hm(g: &Global, m: u32, show_components: bool, show_classes: bool, check: bool) -> Outcome {
    let comps = hm_components(m)?;
    let total: usize = comps.iter().map(|c| c.len()).sum();
    let trees = comps.iter().filter(|c| c.is_tree()).count();
    let cross = cross_class_edges(m)?;
    let (classes, merged) = partition_classes(m)?;
    let mut mismatches = 0;
    let narayana: Vec<Value> = classes
        .iter()
        .map(|c| {
            let want = predicted_class_size(m, c.c);
            let ok = c.members.len() as u128 == want;
            mismatches += usize::from(!ok);
            json!({"c": c.c, "size": c.members.len(), "predicted": want.to_string(), "ok": ok})
        })
        .collect();
    if g.json {
        let mut out = json!({
            "m": m,
            "matchings": total,
            "components": comps.len(),
            "tree_components": trees,
            "cross_class_edges": cross,
        });
        if show_components {
            out["component_list"] = comps
                .iter()
                .map(|c| json!({"size": c.len(), "edges": c.edges, "tree": c.is_tree()}))
                .collect();
        }
        if show_classes {
            out["classes"] = classes
                .iter()
                .map(|c| json!({"c": c.c, "size": c.members.len()}))
                .collect();
            out["merged_classes"] = merged
                .iter()
                .map(|c| json!({"c": c.c, "size": c.members.len()}))
                .collect();
        }
        if check {
            out["narayana"] = Value::Array(narayana.clone());
        }
        print_json(&out);
    } else {
        println!(
            "H_{m}: {total} matchings, {} components ({trees} trees), {cross} edges across merged classes",
            comps.len()
        );
        if show_components {
            for (i, c) in comps.iter().enumerate() {
                println!(
                    "  component {i}: {} states, {} edges{}",
                    c.len(),
                    c.edges,
                    if c.is_tree() { ", tree" } else { "" }
                );
            }
        }
        if show_classes {
            for c in &classes {
                println!("  M_{}: {}", c.c, c.members.len());
            }
            for c in &merged {
                println!("  M+_{}: {}", c.c, c.members.len());
            }
        }
        if check {
            for v in &narayana {
                println!(
                    "  c = {}: {} (predicted {}) {}",
                    v["c"],
                    v["size"],
                    v["predicted"].as_str().unwrap_or(""),
                    if v["ok"] == true { "ok" } else { "MISMATCH" }
                );
            }
        }
    }
    Ok(if check && mismatches > 0 {
        Status::Rejected
    } else {
        Status::Ok
    })
}

fn parse_permutation(text: &str, n: u32) -> Result<Permutation, Failure> {
    let values: Result<Vec<u32>, _> = if text.contains(',') {
        text.split(',').map(|s| s.trim().parse::<u32>()).collect()
    } else {
        text.chars().map(|c| c.to_string().parse::<u32>()).collect()
    };
    let values = values.map_err(|e| Failure::new(Status::Usage, format!("--start {text:?}: {e}")))?;
    if values.len() != n as usize {
        return Err(Failure::new(
            Status::Usage,
            format!("--start has {} entries, expected {n}", values.len()),
        ));
    }
    Ok(Permutation::new(values)?)
}

fn perm(g: &Global, n: u32, start: Option<&str>) -> Outcome {
    let seq = rainbow_sequence(n)?;
    let start = match start {
        Some(text) => parse_permutation(text, n)?,
        None => Permutation::identity(n),
    };
    let cycle = apply_sequence(&start, &seq)?;
    emit_cycle(g, &PermutationFlips { n }, &cycle, 1, Vec::new())
}

fn comb(g: &Global, action: &CombCmd) -> Outcome {
    match action {
        CombCmd::Rainbow { n, k } => {
            let (n, k) = (*n, *k);
            let cycle = subset_cycle(n, k)?;
            let ell = ((n - 1) / 2) as usize;
            let block: Vec<Value> = cycle.states[..ell].iter().map(|s| json!(s.elems())).collect();
            let mut extras = vec![("block", Value::Array(block))];
            if k == 2 || n - k == 2 {
                extras.push(("d", json!(d_sequence(ell as u32)?)));
            }
            emit_cycle(g, &SubsetFlips { n, k }, &cycle, 1, extras)
        }
        CombCmd::Enumerate { ell } => {
            let e = enumerate_rainbow_sequences(*ell, g.time_budget())?;
            if g.json {
                print_json(
                    &json!({"ell": e.ell, "count": e.sequences.len(), "complete": e.complete, "sequences": e.sequences}),
                );
            } else {
                println!(
                    "l = {}: {} rainbow sequences{}",
                    e.ell,
                    e.sequences.len(),
                    if e.complete { "" } else { " (incomplete)" }
                );
                for d in &e.sequences {
                    let parts: Vec<String> = d.iter().map(ToString::to_string).collect();
                    println!("  {}", parts.join(" "));
                }
            }
            Ok(if e.complete { Status::Ok } else { Status::Inconclusive })
        }
        CombCmd::Disjoint { ell, max } => {
            let n = 2 * ell + 1;
            if *max {
                let fam = max_edge_disjoint(*ell)?;
                if g.json {
                    print_json(
                        &json!({"ell": fam.ell, "n": n, "size": fam.size, "bound": n.saturating_sub(3), "witness": fam.witness}),
                    );
                } else {
                    println!(
                        "l = {ell}: {} pairwise edge-disjoint cycles of the form C(d) (at most n-3 = {})",
                        fam.size,
                        n.saturating_sub(3)
                    );
                    for d in &fam.witness {
                        let parts: Vec<String> = d.iter().map(ToString::to_string).collect();
                        println!("  {}", parts.join(" "));
                    }
                }
                Ok(Status::Ok)
            } else {
                let (a, b) = edge_disjoint_pair(n)?;
                let fam = SubsetFlips { n, k: 2 };
                let ok_a = CycleRecord::new(&fam, &a, 1).verify()?.is_rainbow_r;
                let ok_b = CycleRecord::new(&fam, &b, 1).verify()?.is_rainbow_r;
                let shared = cycle_edge_set(&a).intersection(&cycle_edge_set(&b)).count();
                let d = d_sequence(*ell)?;
                if g.json {
                    print_json(&json!({"ell": ell, "n": n, "d": d, "verified": [ok_a, ok_b], "shared_edges": shared}));
                } else {
                    println!("l = {ell}: C(d) and C(rev d) verified {ok_a}/{ok_b}, shared edges {shared}");
                }
                Ok(if ok_a && ok_b && shared == 0 {
                    Status::Ok
                } else {
                    Status::Rejected
                })
            }
        }
    }
}

fn verify(g: &Global, file: &Path) -> Outcome {
    let record = CycleRecord::from_json(&read_input(file)?)?;
    let report = record.verify()?;
    if g.json {
        let mut out = report_json(&report);
        out["family"] = json!(record.family);
        out["r"] = json!(record.r);
        out["length"] = json!(record.states.len());
        print_json(&out);
    } else {
        println!(
            "{} cycle of length {}, r = {}: rainbow={}",
            record.family.name(),
            record.states.len(),
            record.r,
            report.is_rainbow_r
        );
        for v in &report.violations {
            println!("  {v:?}");
        }
    }
    Ok(if report.is_rainbow_r {
        Status::Ok
    } else {
        Status::Rejected
    })
}

fn finish_search<F: RecordFamily>(g: &Global, family: &F, outcome: SearchOutcome<F::State>, r: usize) -> Outcome {
    let stats = serde_json::to_value(&outcome.stats).expect("stats serialize");
    let (tag, status) = match &outcome.verdict {
        SearchVerdict::Found(_) => ("found", Status::Ok),
        SearchVerdict::None(NoneReason::Parity) => ("parity", Status::Parity),
        SearchVerdict::None(NoneReason::Exhausted) => ("none", Status::NoneFound),
        SearchVerdict::Inconclusive(_) => ("inconclusive", Status::Inconclusive),
    };
    if let SearchVerdict::Found(cycle) = &outcome.verdict {
        return emit_cycle(g, family, cycle, r, vec![("verdict", json!(tag)), ("stats", stats)]);
    }
    if g.json {
        print_json(&json!({"verdict": tag, "stats": stats}));
    } else {
        println!("verdict: {tag}");
        let fields: BTreeMap<String, Value> = serde_json::from_value(stats).expect("stats are an object");
        for (k, v) in fields {
            println!("  {k}: {v}");
        }
    }
    Ok(status)
}

fn need(value: Option<u32>, flag: &str) -> Result<u32, Failure> {
    value.ok_or_else(|| Failure::new(Status::Usage, format!("{flag} is required for this family")))
}

fn search(g: &Global, args: &SearchArgs) -> Outcome {
    let config = search_config(g, args.r);
    match args.family {
        FamilyArg::Triangulation => {
            let n = need(args.n, "--n")?;
            let fam = TriangulationFlips::new(n);
            let out = exhaustive_rainbow_search(&fam, &[star(n, 1)?], &config)?;
            finish_search(g, &fam, out, args.r)
        }
        FamilyArg::Tree => {
            let x = load_points(g)?;
            let n = x.n();
            let fam = TreeFlips::new(x);
            let out = exhaustive_rainbow_search(&fam, &[star_tree(n, 1)], &config)?;
            finish_search(g, &fam, out, args.r)
        }
        FamilyArg::Matching => {
            let m = match (args.m, args.n) {
                (Some(m), _) => m,
                (None, Some(n)) if n % 2 == 0 => n / 2,
                _ => {
                    return Err(Failure::new(
                        Status::Usage,
                        "--m (or an even --n) is required for matchings",
                    ))
                }
            };
            let fam = MatchingFlips { m };
            let starts = enumerate_matchings(m)?;
            let out = exhaustive_rainbow_search(&fam, &starts[..1], &config)?;
            finish_search(g, &fam, out, args.r)
        }
        FamilyArg::Permutation => {
            let n = need(args.n, "--n")?;
            let fam = PermutationFlips { n };
            let out = exhaustive_rainbow_search(&fam, &[Permutation::identity(n)], &config)?;
            finish_search(g, &fam, out, args.r)
        }
        FamilyArg::Subset => {
            let (n, k) = (need(args.n, "--n")?, need(args.k, "--k")?);
            if k == 0 || k >= n {
                return Err(Failure::new(
                    Status::Usage,
                    format!("needs 1 <= k < n, got n = {n}, k = {k}"),
                ));
            }
            let fam = SubsetFlips { n, k };
            let out = exhaustive_rainbow_search(&fam, &enumerate_subsets(n, k)[..1], &config)?;
            finish_search(g, &fam, out, args.r)
        }
    }
}
