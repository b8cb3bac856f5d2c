//! Pruned exhaustive search for r-rainbow cycles over any flip graph.
//!
//! The reachable part of the graph is materialized once, then a depth-first
//! walk looks for a closed walk of the target length through distinct states
//! in which every label enters exactly `r` times.
//!
//! Pruning:
//! * every label may enter at most `r` times and leave at most `r` times
//!   (leaving labels of `s -> t` are the entering labels of `t -> s`);
//! * visited states are never revisited;
//! * a state is only entered if the start is still reachable in the
//!   remaining number of steps;
//! * no label may still owe more entries than there are steps left; when
//!   no arc enters and leaves the same label (true of every flip family
//!   here) its outstanding exits count as well;
//! * vertices outside the 2-core cannot lie on a cycle of length >= 3;
//! * cycles are searched from their smallest state, so each start bans all
//!   previously processed starts.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::cycle::LabeledFlipCycle;
use crate::error::{Error, Result};
use crate::label::Label;

/// A neighbor generator over canonical states.
///
/// Adjacency must be symmetric: if `t` is a neighbor of `s` then `s` is a
/// neighbor of `t`. Neighbor lists may come in any order; the search sorts
/// them by entering labels.
pub trait FlipGraphOracle {
    type State: Clone + Eq + Hash + Ord + Debug;

    fn universe(&self) -> Vec<Label>;

    fn labels_per_step(&self) -> usize {
        1
    }

    /// Each neighbor together with the labels entering along the arc.
    fn neighbors(&self, state: &Self::State) -> Vec<(Self::State, Vec<Label>)>;

    /// Whether a path now at `current` can still close at `start` when
    /// label `universe()[i]` must enter `remaining[i]` more times. Must
    /// never reject a path that can be completed. The default knows
    /// nothing and accepts everything.
    fn closure_feasible(&self, _start: &Self::State, _current: &Self::State, _remaining: &[u32]) -> bool {
        true
    }
}

/// Which cycles the search must cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Anchor {
    /// Only cycles through one of the given start states. Sufficient for
    /// vertex-transitive graphs whose automorphisms preserve labels.
    StartsOnly,
    /// Every cycle anywhere in the part of the graph reachable from the
    /// start states.
    Reachable,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub r: usize,
    pub anchor: Anchor,
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    /// Consult [`FlipGraphOracle::closure_feasible`] at every node.
    pub closure_pruning: bool,
}

impl SearchConfig {
    pub fn new(r: usize) -> Self {
        SearchConfig {
            r,
            anchor: Anchor::Reachable,
            max_nodes: None,
            max_time: None,
            closure_pruning: true,
        }
    }

    pub fn closure_pruning(mut self, on: bool) -> Self {
        self.closure_pruning = on;
        self
    }

    pub fn anchor(mut self, anchor: Anchor) -> Self {
        self.anchor = anchor;
        self
    }

    pub fn max_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = Some(nodes);
        self
    }

    pub fn max_time(mut self, time: Duration) -> Self {
        self.max_time = Some(time);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NoneReason {
    /// `r * |U| / labels_per_step` is not an integer.
    Parity,
    /// The whole search space was explored.
    Exhausted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetKind {
    Nodes,
    Time,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchVerdict<S> {
    Found(LabeledFlipCycle<S>),
    None(NoneReason),
    Inconclusive(BudgetKind),
}

impl<S> SearchVerdict<S> {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchVerdict::Found(_))
    }

    pub fn is_none(&self) -> bool {
        matches!(self, SearchVerdict::None(_))
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, SearchVerdict::Inconclusive(_))
    }

    pub fn tag(&self) -> &'static str {
        match self {
            SearchVerdict::Found(_) => "found",
            SearchVerdict::None(NoneReason::Parity) => "none_parity",
            SearchVerdict::None(NoneReason::Exhausted) => "none",
            SearchVerdict::Inconclusive(_) => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Target cycle length; zero when the length is not integral.
    pub target_len: usize,
    pub graph_states: usize,
    pub graph_arcs: usize,
    /// States left after stripping vertices outside the 2-core.
    pub core_states: usize,
    pub starts_tried: usize,
    pub nodes_expanded: u64,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome<S> {
    pub verdict: SearchVerdict<S>,
    pub stats: SearchStats,
    pub elapsed: Duration,
}

/// Entering and leaving label ids of one arc. Unused slots hold `NONE`.
#[derive(Debug, Clone, Copy)]
struct Arc {
    to: u32,
    enter: [u16; 2],
    leave: [u16; 2],
}

const NONE: u16 = u16::MAX;

/// The materialized reachable flip graph.
struct Explicit<S> {
    states: Vec<S>,
    adj: Vec<Vec<Arc>>,
    labels: Vec<Label>,
}

fn label_ids(ids: &HashMap<Label, u16>, labels: &[Label]) -> Result<[u16; 2]> {
    if labels.is_empty() || labels.len() > 2 {
        return Err(Error::InvalidParameter(format!(
            "an arc must carry one or two labels, got {}",
            labels.len()
        )));
    }
    let mut out = [NONE; 2];
    for (slot, label) in out.iter_mut().zip(labels) {
        *slot = *ids.get(label).ok_or(Error::UnknownLabel(*label))?;
    }
    Ok(out)
}

fn materialize<O: FlipGraphOracle>(oracle: &O, starts: &[O::State]) -> Result<Explicit<O::State>> {
    let labels = oracle.universe();
    if labels.len() >= usize::from(NONE) {
        return Err(Error::InvalidParameter("label universe too large".into()));
    }
    let ids: HashMap<Label, u16> = labels.iter().enumerate().map(|(i, &l)| (l, i as u16)).collect();

    let mut index: HashMap<O::State, u32> = HashMap::new();
    let mut states: Vec<O::State> = Vec::new();
    let mut raw: Vec<Vec<(u32, Vec<Label>)>> = Vec::new();
    let mut queue = VecDeque::new();
    let mut sorted_starts = starts.to_vec();
    sorted_starts.sort();
    sorted_starts.dedup();
    for s in sorted_starts {
        index.insert(s.clone(), states.len() as u32);
        queue.push_back(states.len() as u32);
        states.push(s);
        raw.push(Vec::new());
    }
    while let Some(v) = queue.pop_front() {
        let mut nbrs = oracle.neighbors(&states[v as usize]);
        for (_, labels) in nbrs.iter_mut() {
            labels.sort_unstable();
        }
        nbrs.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        let mut row = Vec::with_capacity(nbrs.len());
        for (t, labels) in nbrs {
            let id = match index.get(&t) {
                Some(&id) => id,
                None => {
                    let id = states.len() as u32;
                    index.insert(t.clone(), id);
                    states.push(t);
                    raw.push(Vec::new());
                    queue.push_back(id);
                    id
                }
            };
            row.push((id, labels));
        }
        raw[v as usize] = row;
    }

    let mut adj = Vec::with_capacity(states.len());
    for (v, row) in raw.iter().enumerate() {
        let mut arcs = Vec::with_capacity(row.len());
        for (t, labels) in row {
            let back = raw[*t as usize].iter().find(|(u, _)| *u as usize == v).ok_or_else(|| {
                Error::InvalidState(format!(
                    "asymmetric adjacency: {:?} -> {:?} has no reverse arc",
                    states[v], states[*t as usize]
                ))
            })?;
            arcs.push(Arc {
                to: *t,
                enter: label_ids(&ids, labels)?,
                leave: label_ids(&ids, &back.1)?,
            });
        }
        adj.push(arcs);
    }
    Ok(Explicit { states, adj, labels })
}

/// Marks vertices outside the 2-core (repeatedly strip degree <= 1).
fn strip_to_core(adj: &[Vec<Arc>], banned: &mut [bool]) {
    let mut degree: Vec<usize> = adj
        .iter()
        .map(|row| {
            let mut t: Vec<u32> = row.iter().map(|a| a.to).collect();
            t.dedup();
            t.len()
        })
        .collect();
    let mut stack: Vec<usize> = (0..adj.len()).filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if banned[v] {
            continue;
        }
        banned[v] = true;
        for a in &adj[v] {
            let t = a.to as usize;
            if !banned[t] {
                degree[t] -= 1;
                if degree[t] == 1 {
                    stack.push(t);
                }
            }
        }
    }
}

struct Dfs<'a> {
    adj: &'a [Vec<Arc>],
    r: u32,
    target: usize,
    start: u32,
    dist: Vec<u32>,
    banned: &'a [bool],
    visited: Vec<bool>,
    enter: Vec<u32>,
    leave: Vec<u32>,
    /// `need_hist[c]` = number of labels still owing `c` steps.
    need_hist: Vec<u32>,
    /// Outstanding exits count towards what a label owes.
    count_exits: bool,
    max_need: usize,
    path: Vec<u32>,
    path_arcs: Vec<Arc>,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    stopped: Option<BudgetKind>,
    /// Entries still due per label, kept only for `feasible`.
    remaining: Vec<u32>,
    feasible: Option<&'a dyn Fn(u32, &[u32]) -> bool>,
}

impl Dfs<'_> {
    fn labels_fit(&self, arc: &Arc) -> bool {
        let r = self.r;
        let e = arc.enter;
        let l = arc.leave;
        let e_ok = if e[1] == NONE {
            self.enter[e[0] as usize] < r
        } else {
            self.enter[e[0] as usize] < r && self.enter[e[1] as usize] < r
        };
        let l_ok = if l[1] == NONE {
            self.leave[l[0] as usize] < r
        } else if l[0] == l[1] {
            self.leave[l[0] as usize] + 1 < r
        } else {
            self.leave[l[0] as usize] < r && self.leave[l[1] as usize] < r
        };
        e_ok && l_ok
    }

    fn owed(&self, id: u16) -> usize {
        let exits = if self.count_exits {
            self.r - self.leave[id as usize]
        } else {
            0
        };
        (self.r - self.enter[id as usize] + exits) as usize
    }

    fn settle(&mut self, id: u16) {
        let need = self.owed(id);
        self.need_hist[need] -= 1;
        self.need_hist[need - 1] += 1;
    }

    fn unsettle(&mut self, id: u16) {
        let need = self.owed(id);
        self.need_hist[need - 1] -= 1;
        self.need_hist[need] += 1;
        self.max_need = self.max_need.max(need);
    }

    fn push_labels(&mut self, arc: &Arc) {
        for &id in arc.enter.iter().filter(|&&x| x != NONE) {
            self.settle(id);
            self.enter[id as usize] += 1;
            self.remaining[id as usize] -= 1;
        }
        for &id in arc.leave.iter().filter(|&&x| x != NONE) {
            if self.count_exits {
                self.settle(id);
            }
            self.leave[id as usize] += 1;
        }
        while self.max_need > 0 && self.need_hist[self.max_need] == 0 {
            self.max_need -= 1;
        }
    }

    fn pop_labels(&mut self, arc: &Arc) {
        for &id in arc.enter.iter().filter(|&&x| x != NONE) {
            self.enter[id as usize] -= 1;
            self.remaining[id as usize] += 1;
            self.unsettle(id);
        }
        for &id in arc.leave.iter().filter(|&&x| x != NONE) {
            self.leave[id as usize] -= 1;
            if self.count_exits {
                self.unsettle(id);
            }
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.stopped = Some(BudgetKind::Nodes);
            return false;
        }
        if self.nodes & 0x3ff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.stopped = Some(BudgetKind::Time);
                    return false;
                }
            }
        }
        true
    }

    /// Extends the path ending at `v` (path length `depth`). Returns true
    /// once a cycle is complete.
    fn extend(&mut self, v: u32, depth: usize) -> bool {
        if !self.tick() {
            return false;
        }
        if let Some(f) = self.feasible {
            if !f(v, &self.remaining) {
                return false;
            }
        }
        let left = self.target - depth - 1;
        for i in 0..self.adj[v as usize].len() {
            let arc = self.adj[v as usize][i];
            let t = arc.to;
            if t == self.start {
                if left == 0 && self.labels_fit(&arc) {
                    self.path_arcs.push(arc);
                    return true;
                }
                continue;
            }
            if left == 0 || self.visited[t as usize] || self.banned[t as usize] {
                continue;
            }
            if self.dist[t as usize] as usize > left {
                continue;
            }
            if !self.labels_fit(&arc) {
                continue;
            }
            self.push_labels(&arc);
            if self.max_need <= left {
                self.visited[t as usize] = true;
                self.path.push(t);
                self.path_arcs.push(arc);
                if self.extend(t, depth + 1) {
                    return true;
                }
                self.path.pop();
                self.path_arcs.pop();
                self.visited[t as usize] = false;
            }
            self.pop_labels(&arc);
            if self.stopped.is_some() {
                return false;
            }
        }
        false
    }
}

/// BFS distances from `start` avoiding banned states; unreachable states
/// get `u32::MAX`. Also returns the number of reachable states.
fn distances(adj: &[Vec<Arc>], start: u32, banned: &[bool]) -> (Vec<u32>, usize) {
    let mut dist = vec![u32::MAX; adj.len()];
    dist[start as usize] = 0;
    let mut queue = VecDeque::from([start]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for a in &adj[v as usize] {
            let t = a.to as usize;
            if !banned[t] && dist[t] == u32::MAX {
                dist[t] = dist[v as usize] + 1;
                reached += 1;
                queue.push_back(a.to);
            }
        }
    }
    (dist, reached)
}

/// Searches for an `r`-rainbow cycle. See [`Anchor`] for which cycles are
/// covered. Errors only on malformed oracles (labels outside the universe,
/// asymmetric adjacency).
pub fn exhaustive_rainbow_search<O: FlipGraphOracle>(
    oracle: &O,
    start_states: &[O::State],
    config: &SearchConfig,
) -> Result<SearchOutcome<O::State>> {
    let clock = Instant::now();
    let mut stats = SearchStats::default();
    let universe_len = oracle.universe().len();
    let lps = oracle.labels_per_step();
    let total = config.r * universe_len;
    if config.r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    if !total.is_multiple_of(lps) {
        return Ok(SearchOutcome {
            verdict: SearchVerdict::None(NoneReason::Parity),
            stats,
            elapsed: clock.elapsed(),
        });
    }
    let target = total / lps;
    stats.target_len = target;

    let graph = materialize(oracle, start_states)?;
    let n = graph.states.len();
    stats.graph_states = n;
    stats.graph_arcs = graph.adj.iter().map(Vec::len).sum();

    let mut banned = vec![false; n];
    if target >= 3 {
        strip_to_core(&graph.adj, &mut banned);
    }
    stats.core_states = banned.iter().filter(|b| !**b).count();

    let mut starts: Vec<u32> = match config.anchor {
        Anchor::StartsOnly => {
            let mut s: Vec<O::State> = start_states.to_vec();
            s.sort();
            s.dedup();
            // materialize inserts the sorted starts first
            (0..s.len() as u32).collect()
        }
        Anchor::Reachable => (0..n as u32).collect(),
    };
    starts.sort_by(|a, b| graph.states[*a as usize].cmp(&graph.states[*b as usize]));

    let count_exits = graph
        .adj
        .iter()
        .flatten()
        .all(|a| a.enter.iter().all(|&e| e == NONE || !a.leave.contains(&e)));
    let deadline = config.max_time.map(|t| clock + t);
    let r = config.r as u32;
    let mut nodes_total = 0u64;
    for &start in &starts {
        if banned[start as usize] {
            continue;
        }
        let (dist, reached) = distances(&graph.adj, start, &banned);
        if reached >= target {
            stats.starts_tried += 1;
            let max_need = if count_exits { 2 * config.r } else { config.r };
            let mut need_hist = vec![0u32; max_need + 1];
            need_hist[max_need] = graph.labels.len() as u32;
            let start_state = &graph.states[start as usize];
            let hook = |v: u32, rem: &[u32]| oracle.closure_feasible(start_state, &graph.states[v as usize], rem);
            let mut visited = vec![false; n];
            visited[start as usize] = true;
            let mut dfs = Dfs {
                adj: &graph.adj,
                r,
                target,
                start,
                dist,
                banned: &banned,
                visited,
                enter: vec![0; graph.labels.len()],
                leave: vec![0; graph.labels.len()],
                need_hist,
                count_exits,
                max_need,
                path: vec![start],
                path_arcs: Vec::with_capacity(target),
                nodes: 0,
                max_nodes: config.max_nodes.map_or(u64::MAX, |m| m.saturating_sub(nodes_total)),
                deadline,
                stopped: None,
                remaining: vec![r; graph.labels.len()],
                feasible: if config.closure_pruning { Some(&hook) } else { None },
            };
            let found = target <= n && dfs.extend(start, 0);
            nodes_total += dfs.nodes;
            stats.nodes_expanded = nodes_total;
            if found {
                let states = dfs.path.iter().map(|&v| graph.states[v as usize].clone()).collect();
                let step_labels = dfs
                    .path_arcs
                    .iter()
                    .map(|a| {
                        a.enter
                            .iter()
                            .filter(|&&x| x != NONE)
                            .map(|&x| graph.labels[x as usize])
                            .collect()
                    })
                    .collect();
                return Ok(SearchOutcome {
                    verdict: SearchVerdict::Found(LabeledFlipCycle::new(states, step_labels)),
                    stats,
                    elapsed: clock.elapsed(),
                });
            }
            if let Some(kind) = dfs.stopped {
                return Ok(SearchOutcome {
                    verdict: SearchVerdict::Inconclusive(kind),
                    stats,
                    elapsed: clock.elapsed(),
                });
            }
        }
        if config.anchor == Anchor::Reachable {
            banned[start as usize] = true;
        }
    }
    Ok(SearchOutcome {
        verdict: SearchVerdict::None(NoneReason::Exhausted),
        stats,
        elapsed: clock.elapsed(),
    })
}

/// Partitions `all_states` into connected components. Components are
/// sorted internally and listed by their smallest state.
pub fn connected_components<O: FlipGraphOracle>(oracle: &O, all_states: &[O::State]) -> Vec<Vec<O::State>> {
    let mut sorted = all_states.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut component: BTreeMap<O::State, Option<usize>> = sorted.iter().map(|s| (s.clone(), None)).collect();
    let mut out: Vec<Vec<O::State>> = Vec::new();
    for s in &sorted {
        if component[s].is_some() {
            continue;
        }
        let id = out.len();
        let mut members = vec![s.clone()];
        *component.get_mut(s).expect("present") = Some(id);
        let mut queue = VecDeque::from([s.clone()]);
        while let Some(v) = queue.pop_front() {
            for (t, _) in oracle.neighbors(&v) {
                if let Some(slot) = component.get_mut(&t) {
                    if slot.is_none() {
                        *slot = Some(id);
                        members.push(t.clone());
                        queue.push_back(t);
                    }
                }
            }
        }
        members.sort();
        out.push(members);
    }
    out
}

/// Number of undirected edges among `states` (each adjacency counted once).
pub fn edge_count<O: FlipGraphOracle>(oracle: &O, states: &[O::State]) -> usize {
    let set: std::collections::HashSet<&O::State> = states.iter().collect();
    let arcs: usize = states
        .iter()
        .map(|s| oracle.neighbors(s).iter().filter(|(t, _)| set.contains(t)).count())
        .sum();
    arcs / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::all_pairs;

    /// Complete graph on `n` singletons; the arc `a -> b` enters `{a, b}`.
    struct Complete(u32);

    impl FlipGraphOracle for Complete {
        type State = u32;
        fn universe(&self) -> Vec<Label> {
            all_pairs(self.0)
        }
        fn neighbors(&self, s: &u32) -> Vec<(u32, Vec<Label>)> {
            (1..=self.0)
                .filter(|t| t != s)
                .map(|t| (t, vec![Label::pair(*s, t)]))
                .collect()
        }
    }

    /// Path graph 1 - 2 - ... - n.
    struct Path(u32);

    impl FlipGraphOracle for Path {
        type State = u32;
        fn universe(&self) -> Vec<Label> {
            (1..self.0).map(|i| Label::pair(i, i + 1)).collect()
        }
        fn neighbors(&self, s: &u32) -> Vec<(u32, Vec<Label>)> {
            let mut out = Vec::new();
            if *s > 1 {
                out.push((s - 1, vec![Label::pair(s - 1, *s)]));
            }
            if *s < self.0 {
                out.push((s + 1, vec![Label::pair(*s, s + 1)]));
            }
            out
        }
    }

    #[test]
    fn k3_has_rainbow_triangle() {
        let out = exhaustive_rainbow_search(&Complete(3), &[1], &SearchConfig::new(1)).unwrap();
        match out.verdict {
            SearchVerdict::Found(c) => assert_eq!(c.states, vec![1, 2, 3]),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn k4_cannot_use_each_edge_once_in_a_cycle() {
        // 6 edges, 4 states: a simple cycle has at most 4 arcs
        let out = exhaustive_rainbow_search(&Complete(4), &[1], &SearchConfig::new(1)).unwrap();
        assert_eq!(out.verdict, SearchVerdict::None(NoneReason::Exhausted));
    }

    #[test]
    fn trees_have_no_long_cycles() {
        let out = exhaustive_rainbow_search(&Path(6), &[3], &SearchConfig::new(1)).unwrap();
        assert!(out.verdict.is_none());
        assert_eq!(out.stats.core_states, 0);
    }

    #[test]
    fn node_budget_gives_inconclusive() {
        let cfg = SearchConfig::new(1).max_nodes(0);
        let out = exhaustive_rainbow_search(&Complete(3), &[1], &cfg).unwrap();
        assert_eq!(out.verdict, SearchVerdict::Inconclusive(BudgetKind::Nodes));
    }

    #[test]
    fn components_of_disjoint_paths() {
        let comps = connected_components(&Path(5), &[1, 2, 3, 4, 5]);
        assert_eq!(comps, vec![vec![1, 2, 3, 4, 5]]);
        assert_eq!(edge_count(&Path(5), &[1, 2, 3, 4, 5]), 4);
    }
}
