//! Non-crossing perfect matchings on `2m` points in convex position.
//!
//! Points are `1..=2m` clockwise around a circle. A flip replaces two
//! matching edges spanning an empty quadrilateral by the other two sides of
//! that quadrilateral, and the arc carries both entering edges. The
//! subgraph `H_m` keeps only centered flips, whose quadrilateral contains
//! the circle center.

use std::collections::{BTreeMap, HashMap};
use std::time::Duration;

use serde::Serialize;

use crate::cycle::{FlipFamily, LabeledFlipCycle};
use crate::error::{Error, Result};
use crate::label::{binomial, catalan, Label};
use crate::search::{
    connected_components, exhaustive_rainbow_search, Anchor, BudgetKind, FlipGraphOracle, NoneReason, SearchConfig,
    SearchVerdict,
};

/// Largest `m` accepted by [`enumerate_matchings`].
pub const MAX_ENUM_M: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Matching {
    m: u32,
    edges: Vec<Label>,
}

fn chords_cross(a: Label, b: Label) -> bool {
    let (p, q, r, s) = (a.lo(), a.hi(), b.lo(), b.hi());
    (p < r && r < q && q < s) || (r < p && p < s && s < q)
}

fn check_edge(m: u32, e: Label) -> Result<()> {
    if e.hi() > 2 * m || (e.hi() - e.lo()).is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("{e} is not an edge of E_{m}")));
    }
    Ok(())
}

/// All edges `{i,j}` over `[2m]` with `j - i` odd.
pub fn edge_universe(m: u32) -> Vec<Label> {
    let n = 2 * m;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1..=n).step_by(2) {
            out.push(Label::pair(i, j));
        }
    }
    out
}

/// Number of matching edges on the shorter side of `e`.
pub fn edge_length(m: u32, e: Label) -> Result<u32> {
    check_edge(m, e)?;
    let d = e.hi() - e.lo();
    Ok((d - 1).min(2 * m - d - 1) / 2)
}

/// `+1` when the shorter side of `e`, read in increasing labels, starts at
/// an odd point. That point is the tail of the ray along `e` that has the
/// center on its right.
pub fn edge_sign(m: u32, e: Label) -> Result<i32> {
    check_edge(m, e)?;
    let d = e.hi() - e.lo();
    let start = if d - 1 < 2 * m - d - 1 { e.lo() } else { e.hi() };
    Ok(if start % 2 == 1 { 1 } else { -1 })
}

impl Matching {
    pub fn new(m: u32, mut edges: Vec<Label>) -> Result<Self> {
        edges.sort_unstable();
        let out = Matching { m, edges };
        out.validate()?;
        Ok(out)
    }

    pub fn from_pairs(m: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|&(a, b)| Label::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Matching::new(m, edges)
    }

    /// `{1,2}, {3,4}, ..., {2m-1,2m}`.
    pub fn hull_matching(m: u32) -> Self {
        Matching {
            m,
            edges: (0..m).map(|t| Label::pair(2 * t + 1, 2 * t + 2)).collect(),
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn edges(&self) -> &[Label] {
        &self.edges
    }

    pub fn contains(&self, e: Label) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    fn validate(&self) -> Result<()> {
        let m = self.m;
        if m == 0 {
            return Err(Error::InvalidParameter("a matching needs m >= 1".into()));
        }
        if self.edges.len() != m as usize {
            return Err(Error::InvalidState(format!(
                "expected {m} edges, got {}",
                self.edges.len()
            )));
        }
        let mut covered = vec![false; 2 * m as usize + 1];
        for &e in &self.edges {
            check_edge(m, e).map_err(|_| Error::InvalidState(format!("{e} is not in E_{m}")))?;
            for x in e.as_array() {
                if covered[x as usize] {
                    return Err(Error::InvalidState(format!("point {x} is matched twice")));
                }
                covered[x as usize] = true;
            }
        }
        for (a, &e) in self.edges.iter().enumerate() {
            for &f in &self.edges[a + 1..] {
                if chords_cross(e, f) {
                    return Err(Error::InvalidState(format!("{e} crosses {f}")));
                }
            }
        }
        Ok(())
    }

    /// Every label shifted by `shift` modulo `2m`. A shift by one is a
    /// rotation by `pi/m`.
    pub fn rotated(&self, shift: i64) -> Matching {
        let n = 2 * self.m;
        let mut edges: Vec<Label> = self.edges.iter().map(|e| e.shifted(n, shift)).collect();
        edges.sort_unstable();
        Matching { m: self.m, edges }
    }

    /// Sum of signed edge lengths.
    pub fn weight(&self) -> i64 {
        self.edges
            .iter()
            .map(|&e| {
                let l = edge_length(self.m, e).expect("validated") as i64;
                l * edge_sign(self.m, e).expect("validated") as i64
            })
            .sum()
    }

    /// Number of edges of each length `0..=(m-2)/2`.
    pub fn length_profile(&self) -> Vec<usize> {
        let mut out = vec![0; (self.m as usize).saturating_sub(2) / 2 + 1];
        for &e in &self.edges {
            out[edge_length(self.m, e).expect("validated") as usize] += 1;
        }
        out
    }

    /// Exchanges `e1`, `e2` for the other non-crossing pairing of their
    /// endpoints. Returns the new matching and the entering edges.
    pub fn flip(&self, e1: Label, e2: Label) -> Result<(Matching, [Label; 2])> {
        if !self.contains(e1) || !self.contains(e2) || e1 == e2 {
            return Err(Error::IllegalFlip(format!(
                "{e1} and {e2} are not two edges of the matching"
            )));
        }
        let quad = Quad::new(e1.lo(), e1.hi(), e2.lo(), e2.hi())?;
        let [a, b, c, d] = quad.corners;
        let added = if e1 == Label::pair(a, b) || e1 == Label::pair(c, d) {
            [Label::pair(a, d), Label::pair(b, c)]
        } else {
            [Label::pair(a, b), Label::pair(c, d)]
        };
        for &f in &self.edges {
            if f != e1 && f != e2 && added.iter().any(|&g| chords_cross(f, g)) {
                return Err(Error::IllegalFlip(format!("replacing {e1}, {e2} would cross {f}")));
            }
        }
        let mut edges: Vec<Label> = self.edges.iter().copied().filter(|&f| f != e1 && f != e2).collect();
        edges.extend(added);
        edges.sort_unstable();
        let mut added = added;
        added.sort_unstable();
        Ok((Matching { m: self.m, edges }, added))
    }

    /// All legal flips with their quadrilaterals.
    pub fn flips(&self) -> Vec<(Matching, [Label; 2], Quad)> {
        let mut out = Vec::new();
        for (a, &e1) in self.edges.iter().enumerate() {
            for &e2 in &self.edges[a + 1..] {
                if let Ok((next, added)) = self.flip(e1, e2) {
                    let quad = Quad::new(e1.lo(), e1.hi(), e2.lo(), e2.hi()).expect("distinct");
                    out.push((next, added, quad));
                }
            }
        }
        out
    }
}

/// Four distinct points on the circle, stored in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Quad {
    pub corners: [u32; 4],
}

impl Quad {
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Result<Self> {
        let mut corners = [a, b, c, d];
        corners.sort_unstable();
        if corners.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!(
                "quadrilateral {corners:?} repeats a corner"
            )));
        }
        Ok(Quad { corners })
    }

    /// The four sides in cyclic order.
    pub fn sides(&self) -> [Label; 4] {
        let [a, b, c, d] = self.corners;
        [
            Label::pair(a, b),
            Label::pair(b, c),
            Label::pair(c, d),
            Label::pair(a, d),
        ]
    }

    /// Edge lengths of the four sides, in cyclic order.
    pub fn side_lengths(&self, m: u32) -> Result<[u32; 4]> {
        let s = self.sides();
        Ok([
            edge_length(m, s[0])?,
            edge_length(m, s[1])?,
            edge_length(m, s[2])?,
            edge_length(m, s[3])?,
        ])
    }

    /// Side lengths up to rotation and reflection, as the smallest
    /// lexicographic reading.
    pub fn length_type(&self, m: u32) -> Result<[u32; 4]> {
        let l = self.side_lengths(m)?;
        let mut best = l;
        for start in 0..4 {
            let fwd = [l[start], l[(start + 1) % 4], l[(start + 2) % 4], l[(start + 3) % 4]];
            let bwd = [l[start], l[(start + 3) % 4], l[(start + 2) % 4], l[(start + 1) % 4]];
            best = best.min(fwd).min(bwd);
        }
        Ok(best)
    }

    /// The circle center lies inside the quadrilateral: every arc between
    /// consecutive corners holds fewer than half of the circle's gaps.
    pub fn contains_center(&self, m: u32) -> bool {
        let [a, b, c, d] = self.corners;
        [b - a, c - b, d - c, 2 * m - d + a].iter().all(|&gap| gap < m)
    }
}

/// Centered iff the side lengths sum to `m - 2`.
pub fn is_centered(m: u32, quad: &Quad) -> Result<bool> {
    if quad.corners[3] > 2 * m {
        return Err(Error::InvalidParameter(format!(
            "{quad:?} has a corner beyond {}",
            2 * m
        )));
    }
    Ok(quad.side_lengths(m)?.iter().sum::<u32>() == m - 2)
}

fn enumerate_range(lo: u32, hi: u32, acc: &mut Vec<Label>, out: &mut Vec<Vec<Label>>, rest: &mut Vec<(u32, u32)>) {
    if lo > hi {
        match rest.pop() {
            None => out.push(acc.clone()),
            Some((a, b)) => {
                enumerate_range(a, b, acc, out, rest);
                rest.push((a, b));
            }
        }
        return;
    }
    for j in (lo + 1..=hi).step_by(2) {
        acc.push(Label::pair(lo, j));
        rest.push((j + 1, hi));
        enumerate_range(lo + 1, j - 1, acc, out, rest);
        rest.pop();
        acc.pop();
    }
}

/// All `Catalan(m)` matchings, sorted.
pub fn enumerate_matchings(m: u32) -> Result<Vec<Matching>> {
    if m == 0 || m > MAX_ENUM_M {
        return Err(Error::InvalidParameter(format!(
            "enumeration needs 1 <= m <= {MAX_ENUM_M}"
        )));
    }
    let mut raw = Vec::new();
    enumerate_range(1, 2 * m, &mut Vec::new(), &mut raw, &mut Vec::new());
    let mut out: Vec<Matching> = raw
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            Matching { m, edges }
        })
        .collect();
    out.sort();
    debug_assert_eq!(out.len() as u128, catalan(m as u64));
    Ok(out)
}

/// The full flip graph `G_m`.
#[derive(Debug, Clone, Copy)]
pub struct MatchingFlips {
    pub m: u32,
}

/// The centered-flip subgraph `H_m`.
#[derive(Debug, Clone, Copy)]
pub struct CenteredFlips {
    pub m: u32,
}

impl FlipFamily for MatchingFlips {
    type State = Matching;

    fn name(&self) -> &'static str {
        "matching"
    }

    fn universe(&self) -> Vec<Label> {
        edge_universe(self.m)
    }

    fn labels_per_step(&self) -> usize {
        2
    }

    fn validate_state(&self, s: &Matching) -> Result<()> {
        if s.m != self.m {
            return Err(Error::InvalidState(format!(
                "matching with {} edges in a family with m = {}",
                s.m, self.m
            )));
        }
        s.validate()
    }

    fn flip_labels(&self, from: &Matching, to: &Matching) -> Result<Vec<Label>> {
        let removed: Vec<Label> = from.edges.iter().copied().filter(|e| !to.contains(*e)).collect();
        if removed.len() != 2 {
            return Err(Error::IllegalFlip(format!("states differ in {} edges", removed.len())));
        }
        let (next, added) = from.flip(removed[0], removed[1])?;
        if next != *to {
            return Err(Error::IllegalFlip("edges are re-paired inconsistently".into()));
        }
        Ok(added.to_vec())
    }
}

impl FlipGraphOracle for MatchingFlips {
    type State = Matching;

    fn universe(&self) -> Vec<Label> {
        edge_universe(self.m)
    }

    fn labels_per_step(&self) -> usize {
        2
    }

    fn neighbors(&self, s: &Matching) -> Vec<(Matching, Vec<Label>)> {
        let mut out: Vec<_> = s.flips().into_iter().map(|(t, a, _)| (t, a.to_vec())).collect();
        out.sort_by(|x, y| x.1.cmp(&y.1));
        out
    }
}

impl FlipGraphOracle for CenteredFlips {
    type State = Matching;

    fn universe(&self) -> Vec<Label> {
        edge_universe(self.m)
    }

    fn labels_per_step(&self) -> usize {
        2
    }

    fn neighbors(&self, s: &Matching) -> Vec<(Matching, Vec<Label>)> {
        let m = self.m;
        let mut out: Vec<_> = s
            .flips()
            .into_iter()
            .filter(|(_, _, q)| is_centered(m, q).expect("quad of a valid flip"))
            .map(|(t, a, _)| (t, a.to_vec()))
            .collect();
        out.sort_by(|x, y| x.1.cmp(&y.1));
        out
    }
}

fn require_even(m: u32) -> Result<()> {
    if m < 2 || m % 2 == 1 {
        return Err(Error::Parity(format!("H_m is studied for even m >= 2, got m = {m}")));
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct HmComponent {
    pub states: Vec<Matching>,
    pub edges: usize,
}

impl HmComponent {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn is_tree(&self) -> bool {
        self.edges + 1 == self.states.len()
    }
}

/// Connected components of `H_m`, smallest first (ties by smallest
/// member).
pub fn hm_components(m: u32) -> Result<Vec<HmComponent>> {
    require_even(m)?;
    let all = enumerate_matchings(m)?;
    let oracle = CenteredFlips { m };
    let mut comps: Vec<HmComponent> = connected_components(&oracle, &all)
        .into_iter()
        .map(|states| {
            let degree: usize = states.iter().map(|s| oracle.neighbors(s).len()).sum();
            HmComponent {
                states,
                edges: degree / 2,
            }
        })
        .collect();
    comps.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.states[0].cmp(&b.states[0])));
    Ok(comps)
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightedClass {
    pub c: i64,
    pub members: Vec<Matching>,
}

/// Matchings grouped by weight `c` in `-(m-2)..=m-2`, and the merged
/// classes `M+_c = M_c + M_{c-(m-2)}` for `c` in `0..=m-2`.
pub fn partition_classes(m: u32) -> Result<(Vec<WeightedClass>, Vec<WeightedClass>)> {
    require_even(m)?;
    let w = m as i64 - 2;
    let mut by_weight: BTreeMap<i64, Vec<Matching>> = (-w..=w).map(|c| (c, Vec::new())).collect();
    for s in enumerate_matchings(m)? {
        let c = s.weight();
        by_weight
            .get_mut(&c)
            .ok_or_else(|| Error::Construction(format!("weight {c} outside [-{w}, {w}]")))?
            .push(s);
    }
    let classes: Vec<WeightedClass> = by_weight
        .iter()
        .map(|(&c, members)| WeightedClass {
            c,
            members: members.clone(),
        })
        .collect();
    let merged = (0..=w)
        .map(|c| {
            let mut members = by_weight[&c].clone();
            if w != 0 {
                members.extend(by_weight[&(c - w)].iter().cloned());
            }
            members.sort();
            WeightedClass { c, members }
        })
        .collect();
    Ok((classes, merged))
}

/// Indices of the merged classes holding weight `c`. Weight zero lies in
/// both `M+_0` and `M+_{m-2}`.
pub fn merged_classes_of(m: u32, c: i64) -> Vec<i64> {
    let w = m as i64 - 2;
    match c {
        0 if w > 0 => vec![0, w],
        _ if c < 0 => vec![c + w],
        _ => vec![c],
    }
}

/// Number of `H_m` edges whose endpoints share no merged class.
pub fn cross_class_edges(m: u32) -> Result<usize> {
    require_even(m)?;
    let oracle = CenteredFlips { m };
    let mut count = 0;
    for s in enumerate_matchings(m)? {
        let here = merged_classes_of(m, s.weight());
        count += oracle
            .neighbors(&s)
            .iter()
            .filter(|(t, _)| !merged_classes_of(m, t.weight()).iter().any(|c| here.contains(c)))
            .count();
    }
    Ok(count / 2)
}

/// Generalized Narayana number `(r+1)/(m+1) C(m+1,k) C(m-r-1,k-1)`. Zero
/// outside `1 <= k <= m-r`.
pub fn narayana(r: u64, m: u64, k: u64) -> u128 {
    if k == 0 || k + r > m {
        return 0;
    }
    let num = (r as u128 + 1) * binomial(m + 1, k) * binomial(m - r - 1, k - 1);
    debug_assert_eq!(num % (m as u128 + 1), 0);
    num / (m as u128 + 1)
}

/// Size of the weight class `c` predicted by generalized Narayana numbers.
pub fn predicted_class_size(m: u32, c: i64) -> u128 {
    if c == 0 {
        2
    } else {
        narayana(1, m as u64, c.unsigned_abs() + 1) / 2
    }
}

const PATH6: [[(u32, u32); 6]; 7] = [
    [(1, 4), (2, 3), (5, 6), (7, 8), (9, 12), (10, 11)],
    [(1, 4), (2, 3), (5, 12), (6, 9), (7, 8), (10, 11)],
    [(1, 4), (2, 3), (5, 10), (6, 9), (7, 8), (11, 12)],
    [(1, 10), (2, 3), (4, 5), (6, 9), (7, 8), (11, 12)],
    [(1, 6), (2, 3), (4, 5), (7, 8), (9, 10), (11, 12)],
    [(1, 12), (2, 3), (4, 5), (6, 11), (7, 8), (9, 10)],
    [(1, 12), (2, 11), (3, 6), (4, 5), (7, 8), (9, 10)],
];

const PATH8: [[(u32, u32); 8]; 9] = [
    [(1, 6), (2, 3), (4, 5), (7, 8), (9, 10), (11, 12), (13, 16), (14, 15)],
    [(1, 10), (2, 3), (4, 5), (6, 9), (7, 8), (11, 12), (13, 16), (14, 15)],
    [(1, 4), (2, 3), (5, 10), (6, 9), (7, 8), (11, 12), (13, 16), (14, 15)],
    [(1, 4), (2, 3), (5, 16), (6, 9), (7, 8), (10, 13), (11, 12), (14, 15)],
    [(1, 4), (2, 3), (5, 6), (7, 8), (9, 16), (10, 13), (11, 12), (14, 15)],
    [(1, 16), (2, 3), (4, 9), (5, 6), (7, 8), (10, 13), (11, 12), (14, 15)],
    [(1, 16), (2, 3), (4, 13), (5, 6), (7, 8), (9, 10), (11, 12), (14, 15)],
    [(1, 16), (2, 3), (4, 11), (5, 6), (7, 8), (9, 10), (12, 13), (14, 15)],
    [(1, 16), (2, 3), (4, 15), (5, 6), (7, 8), (9, 10), (11, 14), (12, 13)],
];

/// The stored path for `m` in {6, 8} and the label shift that maps its
/// first matching to its last.
pub fn explicit_path(m: u32) -> Result<(Vec<Matching>, i64)> {
    let (rows, shift): (Vec<&[(u32, u32)]>, i64) = match m {
        6 => (PATH6.iter().map(|r| &r[..]).collect(), 2),
        8 => (PATH8.iter().map(|r| &r[..]).collect(), -2),
        _ => return Err(Error::Unsupported(format!("no stored path for m = {m}"))),
    };
    let path = rows
        .into_iter()
        .map(|r| Matching::from_pairs(m, r))
        .collect::<Result<Vec<_>>>()?;
    Ok((path, shift))
}

/// Explicit rainbow cycles for `(m, r)` in {(2,1), (4,1), (6,2), (8,2)}.
pub fn explicit_rainbow(m: u32, r: usize) -> Result<LabeledFlipCycle<Matching>> {
    let family = MatchingFlips { m };
    match (m, r) {
        (2, 1) => {
            let a = Matching::hull_matching(2);
            let b = a.rotated(1);
            LabeledFlipCycle::from_states(&family, vec![a, b])
        }
        (4, 1) => {
            // no such cycle passes through the hull matching itself
            let config = SearchConfig::new(1).anchor(Anchor::Reachable);
            let start = Matching::hull_matching(4);
            match exhaustive_rainbow_search(&family, &[start], &config)?.verdict {
                SearchVerdict::Found(c) => Ok(c),
                _ => Err(Error::Construction("no 1-rainbow cycle for m = 4".into())),
            }
        }
        (6, 2) | (8, 2) => {
            let (path, shift) = explicit_path(m)?;
            let body = &path[..path.len() - 1];
            let states = (0..m as i64)
                .flat_map(|i| body.iter().map(move |s| s.rotated(shift * i)))
                .collect();
            LabeledFlipCycle::from_states(&family, states)
        }
        _ => Err(Error::Unsupported(format!("no explicit {r}-rainbow cycle for m = {m}"))),
    }
}

/// All explicit rainbow cycles keyed by `(m, r)`.
pub fn explicit_rainbows() -> Result<BTreeMap<(u32, usize), LabeledFlipCycle<Matching>>> {
    [(2, 1), (4, 1), (6, 2), (8, 2)]
        .into_iter()
        .map(|(m, r)| Ok(((m, r), explicit_rainbow(m, r)?)))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentSearch {
    pub size: usize,
    pub edges: usize,
    pub core_states: usize,
    pub nodes_expanded: u64,
    pub verdict: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct NoRainbowReport {
    pub m: u32,
    /// `"none"`, `"found"`, `"inconclusive"` or `"parity"`.
    pub verdict: &'static str,
    pub components: Vec<ComponentSearch>,
    #[serde(skip)]
    pub witness: Option<LabeledFlipCycle<Matching>>,
}

/// Searches every component of `H_m` for a 1-rainbow cycle. Only centered
/// flips can occur on such a cycle, so an exhausted search rules it out in
/// the whole flip graph. Odd `m` is refused at once since `m^2/2` is not
/// integral.
pub fn prove_no_rainbow1(m: u32, budget: Option<Duration>) -> Result<NoRainbowReport> {
    prove_no_rainbow1_with(m, budget, None)
}

/// As [`prove_no_rainbow1`], with an optional cap on the nodes expanded
/// across all components.
pub fn prove_no_rainbow1_with(m: u32, budget: Option<Duration>, max_nodes: Option<u64>) -> Result<NoRainbowReport> {
    if m % 2 == 1 {
        return Ok(NoRainbowReport {
            m,
            verdict: "parity",
            components: Vec::new(),
            witness: None,
        });
    }
    let oracle = CenteredFlips { m };
    let mut report = NoRainbowReport {
        m,
        verdict: "none",
        components: Vec::new(),
        witness: None,
    };
    let started = std::time::Instant::now();
    for comp in hm_components(m)? {
        let mut config = SearchConfig::new(1).anchor(Anchor::Reachable);
        if let Some(b) = budget {
            config = config.max_time(b.saturating_sub(started.elapsed()));
        }
        if let Some(cap) = max_nodes {
            let spent: u64 = report.components.iter().map(|c| c.nodes_expanded).sum();
            config = config.max_nodes(cap.saturating_sub(spent));
        }
        let outcome = exhaustive_rainbow_search(&oracle, &comp.states[..1], &config)?;
        let verdict = match &outcome.verdict {
            SearchVerdict::None(NoneReason::Parity) => "parity",
            SearchVerdict::None(_) => "none",
            SearchVerdict::Found(_) => "found",
            SearchVerdict::Inconclusive(BudgetKind::Nodes | BudgetKind::Time) => "inconclusive",
        };
        report.components.push(ComponentSearch {
            size: comp.len(),
            edges: comp.edges,
            core_states: outcome.stats.core_states,
            nodes_expanded: outcome.stats.nodes_expanded,
            verdict,
        });
        match outcome.verdict {
            SearchVerdict::Found(c) => {
                report.verdict = "found";
                report.witness = Some(c);
                return Ok(report);
            }
            SearchVerdict::Inconclusive(_) => report.verdict = "inconclusive",
            SearchVerdict::None(_) => {}
        }
    }
    Ok(report)
}

/// How often each quadrilateral length type occurs among the flips of a
/// set of matchings, counting every undirected flip once.
pub fn flip_type_counts(m: u32, states: &[Matching]) -> Result<BTreeMap<[u32; 4], usize>> {
    let index: HashMap<&Matching, usize> = states.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut counts = BTreeMap::new();
    for (i, s) in states.iter().enumerate() {
        for (t, _, q) in s.flips() {
            if !is_centered(m, &q)? {
                continue;
            }
            if let Some(&j) = index.get(&t) {
                if i < j {
                    *counts.entry(q.length_type(m)?).or_insert(0) += 1;
                }
            }
        }
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths_and_signs_of_the_weight_example() {
        let s = Matching::from_pairs(
            8,
            &[(1, 4), (2, 3), (5, 6), (7, 8), (9, 16), (10, 13), (11, 12), (14, 15)],
        )
        .unwrap();
        assert_eq!(edge_length(8, Label::pair(9, 16)).unwrap(), 3);
        assert_eq!(edge_length(8, Label::pair(2, 3)).unwrap(), 0);
        assert_eq!(edge_sign(8, Label::pair(10, 13)).unwrap(), -1);
        assert_eq!(s.weight(), 3);
        let (t, added) = s.flip(Label::pair(1, 4), Label::pair(9, 16)).unwrap();
        assert_eq!(added, [Label::pair(1, 16), Label::pair(4, 9)]);
        assert_eq!(t.weight() - s.weight(), -6);
    }

    #[test]
    fn centered_examples() {
        let left = Quad::new(1, 4, 9, 16).unwrap();
        assert_eq!(left.side_lengths(8).unwrap().iter().sum::<u32>(), 6);
        assert!(is_centered(8, &left).unwrap());
        let right = Quad::new(1, 4, 7, 8).unwrap();
        assert_eq!(right.side_lengths(8).unwrap().iter().sum::<u32>(), 5);
        assert!(!is_centered(8, &right).unwrap());
        assert!(is_centered(2, &Quad::new(1, 2, 3, 4).unwrap()).unwrap());
    }

    #[test]
    fn two_edge_flip_graph() {
        let a = Matching::hull_matching(2);
        let fl = a.flips();
        assert_eq!(fl.len(), 1);
        assert_eq!(fl[0].0, Matching::from_pairs(2, &[(2, 3), (1, 4)]).unwrap());
    }

    #[test]
    fn catalan_counts() {
        for m in 1..=7 {
            assert_eq!(enumerate_matchings(m).unwrap().len() as u128, catalan(m as u64));
        }
    }

    #[test]
    fn narayana_values() {
        assert_eq!(narayana(1, 6, 2), 24);
        assert_eq!(narayana(1, 6, 5), 6);
        assert_eq!(
            (1..=6).map(|k| narayana(1, 6, k)).collect::<Vec<_>>(),
            vec![2, 24, 60, 40, 6, 0]
        );
    }

    #[test]
    fn explicit_path_ends_rotated() {
        for m in [6, 8] {
            let (path, shift) = explicit_path(m).unwrap();
            assert_eq!(path[0].rotated(shift), *path.last().unwrap());
        }
    }

    #[test]
    fn rotation_by_one_negates_weight() {
        for s in enumerate_matchings(6).unwrap() {
            assert_eq!(s.rotated(1).weight(), -s.weight());
        }
    }
}
