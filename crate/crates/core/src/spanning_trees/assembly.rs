//! Rainbow cycles of plane spanning trees assembled from star paths.

use std::time::Duration;

use serde::Serialize;

use super::euler::euler_cycle;
use super::walecki::{cycle_edges, walecki};
use super::{path_p, star_tree, PlaneTree, Side, StarPath, TreeFlips};
use crate::cycle::LabeledFlipCycle;
use crate::error::{Error, Result};
use crate::geometry;
use crate::geometry::PointSet;
use crate::label::Label;
use crate::search::{exhaustive_rainbow_search, Anchor, SearchConfig, SearchVerdict};

/// Default wall-clock budget for the searches behind [`rainbow_small`].
pub const SMALL_SEARCH_BUDGET: Duration = Duration::from_secs(60);

fn rainbow1_states(points: &PointSet) -> Result<Vec<PlaneTree>> {
    let n = points.n();
    if n == 3 {
        return Ok(vec![star_tree(3, 1), star_tree(3, 3), star_tree(3, 2)]);
    }
    let prev = rainbow1_states(&points.prefix(n as usize - 1)?)?;
    // drop the n-3 intermediate trees of the closing path from S_{n-1}
    let keep = prev.len() - (n as usize - 3);
    if prev[keep - 1] != star_tree(n - 1, n - 1) {
        return Err(Error::Construction(format!(
            "smaller cycle does not pass S_{} before its closing path",
            n - 1
        )));
    }
    let mut states: Vec<PlaneTree> = prev[..keep].iter().map(|t| t.with_leaf(1)).collect();
    let up = path_p(points, n - 1, n, Side::L)?;
    if up.first() != 1 || up.intermediates()[0] != *states.last().expect("non-empty") {
        return Err(Error::Construction(
            "first flip from S_{n-1} towards S_n does not insert {1,n}".into(),
        ));
    }
    states.extend_from_slice(&up.intermediates()[1..]);
    states.push(star_tree(n, n));
    states.extend_from_slice(path_p(points, n, 1, Side::L)?.intermediates());
    Ok(states)
}

/// A 1-rainbow cycle of length `C(n, 2)` starting at `S_1` and ending with
/// the path from `S_n` to `S_1`, built by adding one point at a time.
pub fn rainbow1_cycle(points: &PointSet) -> Result<LabeledFlipCycle<PlaneTree>> {
    let states = rainbow1_states(points)?;
    LabeledFlipCycle::from_states(&TreeFlips::new(points.clone()), states)
}

/// The cyclic order in which the first Hamilton cycle is laid on the point
/// set: all hull points consecutively in counter-clockwise order, then the
/// interior points. It always contains `{n-1,n}`, `{n,1}` and `{1,2}`.
pub fn hull_sequence(points: &PointSet) -> Vec<u32> {
    let n = points.n();
    let hull = points.hull();
    if points.is_convex_position() {
        return (1..=n).collect();
    }
    let s = hull.len();
    let interior: Vec<u32> = (1..=n).filter(|&v| !points.on_hull(v)).collect();
    if hull[s - 2] == n - 1 {
        let mut seq = vec![n - 1, n];
        seq.extend_from_slice(&hull[..s - 2]);
        seq.extend(interior);
        seq
    } else {
        let mut seq = vec![n];
        seq.extend_from_slice(&hull[..s - 1]);
        seq.extend(interior.iter().copied().filter(|&v| v != n - 1));
        seq.push(n - 1);
        seq
    }
}

/// The oriented Hamilton cycles and the Eulerian circuit through them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerTour {
    /// The hull-following cycle, oriented counter-clockwise.
    pub h0: Vec<u32>,
    /// The oriented cycles whose union the circuit traverses.
    pub cycles: Vec<Vec<u32>>,
    /// Cyclic vertex sequence of the circuit.
    pub vertices: Vec<u32>,
}

fn reversed(cycle: &[u32]) -> Vec<u32> {
    let mut c = cycle.to_vec();
    c[1..].reverse();
    c
}

fn has_arc(cycle: &[u32], a: u32, b: u32) -> bool {
    (0..cycle.len()).any(|p| cycle[p] == a && cycle[(p + 1) % cycle.len()] == b)
}

/// Lays `count` Walecki cycles on the point set, orients them and builds the
/// Eulerian circuit, with or without the hull-following cycle.
pub fn euler_tour(points: &PointSet, count: usize, with_h0: bool) -> Result<EulerTour> {
    let n = points.n();
    let dec = walecki(n)?;
    if count == 0 || count > dec.cycles.len() {
        return Err(Error::InvalidParameter(format!(
            "need between 1 and {} Hamilton cycles, asked for {count}",
            dec.cycles.len()
        )));
    }
    let seq = hull_sequence(points);
    let mut map = vec![0u32; n as usize + 1];
    for (abstract_v, &v) in dec.cycles[0].iter().zip(&seq) {
        map[*abstract_v as usize] = v;
    }
    let mapped: Vec<Vec<u32>> = dec.cycles[..count]
        .iter()
        .map(|c| c.iter().map(|&v| map[v as usize]).collect())
        .collect();
    let h0 = mapped[0].clone();
    let hull = points.hull();
    let h0_edges = cycle_edges(&h0);
    let uncovered = (0..hull.len())
        .map(|t| (hull[t], hull[(t + 1) % hull.len()]))
        .find(|&(a, b)| !h0_edges.contains(&Label::pair(a, b)));

    let mut cycles = Vec::new();
    if with_h0 {
        cycles.push(h0.clone());
    }
    for c in &mapped[1..] {
        let oriented = match uncovered {
            Some((a, b)) if cycle_edges(c).contains(&Label::pair(a, b)) => {
                if has_arc(c, a, b) {
                    c.clone()
                } else {
                    reversed(c)
                }
            }
            _ => {
                let start = (0..c.len()).min_by_key(|&p| c[p]).expect("non-empty");
                let rot: Vec<u32> = c[start..].iter().chain(&c[..start]).copied().collect();
                if rot[1] < rot[rot.len() - 1] {
                    rot
                } else {
                    reversed(&rot)
                }
            }
        };
        cycles.push(oriented);
    }
    let arcs: Vec<(u32, u32)> = cycles
        .iter()
        .flat_map(|c| (0..c.len()).map(move |p| (c[p], c[(p + 1) % c.len()])))
        .collect();
    let vertices = euler_cycle(&arcs)?;
    Ok(EulerTour { h0, cycles, vertices })
}

/// Path side for the arc `j -> k` entered from `i`: the left order after a
/// right turn and the right order after a left turn.
fn turn_side(points: &PointSet, i: u32, j: u32, k: u32) -> Side {
    match points.side(j, k, i) {
        geometry::Side::Right => Side::L,
        geometry::Side::Left => Side::R,
    }
}

fn detour_from_paths(points: &PointSet, incoming: &StarPath, outgoing: &StarPath) -> Result<PlaneTree> {
    let (j, k) = (outgoing.i, outgoing.j);
    if incoming.j != j {
        return Err(Error::InvalidParameter("paths do not meet at a common star".into()));
    }
    if points.is_hull_edge(j, k) {
        return Err(Error::Unsupported(format!(
            "{{{j},{k}}} is a hull edge; no detour is defined"
        )));
    }
    let t1 = incoming.intermediates().last().expect("n >= 3");
    t1.exchange(Label::pair(j, k), Label::pair(k, outgoing.first()))
}

/// The tree `T1 - {j,k} + {k,b}` that bypasses `S_j` between the path
/// `S_i -> S_j` (taken on `in_side`) and the path `S_j -> S_k` (taken on
/// `out_side`). `T1` is the last tree before `S_j` and `b` the first point
/// of the outgoing order. Refused when `{j,k}` is a hull edge.
pub fn detour_tree(points: &PointSet, i: u32, j: u32, k: u32, in_side: Side, out_side: Side) -> Result<PlaneTree> {
    let incoming = path_p(points, i, j, in_side)?;
    let outgoing = path_p(points, j, k, out_side)?;
    detour_from_paths(points, &incoming, &outgoing)
}

fn check_range(n: u32, r: usize, min_r: usize) -> Result<()> {
    let max_r = ((n - 1) / 2) as usize;
    if n < 6 || r < min_r || r > max_r {
        return Err(Error::InvalidParameter(format!(
            "needs n >= 6 and {min_r} <= r <= {max_r}; got n = {n}, r = {r}"
        )));
    }
    Ok(())
}

/// Tour over the star paths chosen by the turns of `tour`, with stars
/// replaced by detour trees. Position `special` (if any) keeps its star,
/// uses the right-hand order and has `insert` spliced in after the star,
/// followed by the detour from the last inserted tree.
fn assemble(points: &PointSet, tour: &[u32], special: Option<(usize, &[PlaneTree])>) -> Result<Vec<PlaneTree>> {
    let len = tour.len();
    let at = |p: isize| tour[p.rem_euclid(len as isize) as usize];
    let mut paths = Vec::with_capacity(len);
    for p in 0..len as isize {
        let (i, j, k) = (at(p - 1), at(p), at(p + 1));
        let side = match special {
            Some((s, _)) if s == p as usize => Side::R,
            _ => turn_side(points, i, j, k),
        };
        paths.push(path_p(points, j, k, side)?);
    }
    let mut states = Vec::new();
    for p in 0..len {
        let (j, k) = (tour[p], tour[(p + 1) % len]);
        let incoming = &paths[(p + len - 1) % len];
        let outgoing = &paths[p];
        match special {
            Some((s, insert)) if s == p => {
                states.push(star_tree(points.n(), j));
                states.extend_from_slice(&insert[1..]);
                let last = states.last().expect("non-empty").clone();
                states.push(last.exchange(Label::pair(j, k), Label::pair(k, outgoing.first()))?);
            }
            _ if points.is_hull_edge(j, k) => states.push(star_tree(points.n(), j)),
            _ => states.push(detour_from_paths(points, incoming, outgoing)?),
        }
        states.extend_from_slice(outgoing.intermediates());
    }
    Ok(states)
}

/// A `2r`-rainbow cycle for `n >= 6` and `1 <= r <= (n-1)/2`.
pub fn rainbow_even(points: &PointSet, r: usize) -> Result<LabeledFlipCycle<PlaneTree>> {
    check_range(points.n(), r, 1)?;
    let tour = euler_tour(points, r, true)?;
    let states = assemble(points, &tour.vertices, None)?;
    LabeledFlipCycle::from_states(&TreeFlips::new(points.clone()), states)
}

/// A `(2r-1)`-rainbow cycle for `n >= 6` and `2 <= r <= (n-1)/2`: the
/// circuit skips the hull-following cycle and the 1-rainbow cycle is
/// spliced in at the first visit of point 1.
pub fn rainbow_odd(points: &PointSet, r: usize) -> Result<LabeledFlipCycle<PlaneTree>> {
    check_range(points.n(), r, 2)?;
    let tour = euler_tour(points, r, false)?;
    let special = tour
        .vertices
        .iter()
        .position(|&v| v == 1)
        .ok_or_else(|| Error::Construction("circuit misses point 1".into()))?;
    let c1 = rainbow1_states(points)?;
    let states = assemble(points, &tour.vertices, Some((special, &c1)))?;
    LabeledFlipCycle::from_states(&TreeFlips::new(points.clone()), states)
}

/// An r-rainbow cycle for `n = 4, r = 2` or `n = 5, r in {2, 3, 4}`, found
/// by exhaustive search of the whole flip graph.
pub fn rainbow_small(points: &PointSet, r: usize) -> Result<LabeledFlipCycle<PlaneTree>> {
    rainbow_small_with(points, r, SMALL_SEARCH_BUDGET)
}

/// Node budgets for the probing rounds of [`rainbow_small_with`].
const PROBE_BUDGETS: [u64; 4] = [1 << 14, 1 << 17, 1 << 20, 1 << 23];

/// Some starts sit in regions where the search drags on, so every tree is
/// first probed as a start under a node budget that grows each round. Only
/// if no probe succeeds does the full search over all cycles run.
pub fn rainbow_small_with(points: &PointSet, r: usize, budget: Duration) -> Result<LabeledFlipCycle<PlaneTree>> {
    let n = points.n();
    let ok = (n == 4 && r == 2) || (n == 5 && (2..=4).contains(&r));
    if !ok {
        return Err(Error::InvalidParameter(format!(
            "small cases are n = 4, r = 2 and n = 5, r in 2..=4; got n = {n}, r = {r}"
        )));
    }
    let oracle = TreeFlips::new(points.clone());
    let mut starts = oracle.enumerate();
    // S_1 first, the rest in their natural order
    let s1 = star_tree(n, 1);
    starts.retain(|t| *t != s1);
    starts.insert(0, s1.clone());
    for nodes in PROBE_BUDGETS {
        for s in &starts {
            let config = SearchConfig::new(r).anchor(Anchor::StartsOnly).max_nodes(nodes);
            if let SearchVerdict::Found(cycle) =
                exhaustive_rainbow_search(&oracle, std::slice::from_ref(s), &config)?.verdict
            {
                return Ok(cycle);
            }
        }
    }
    let config = SearchConfig::new(r).anchor(Anchor::Reachable).max_time(budget);
    let outcome = exhaustive_rainbow_search(&oracle, &[s1], &config)?;
    match outcome.verdict {
        SearchVerdict::Found(cycle) => Ok(cycle),
        SearchVerdict::None(_) => Err(Error::Construction(format!(
            "search exhausted without a {r}-rainbow cycle"
        ))),
        SearchVerdict::Inconclusive(_) => Err(Error::Construction(format!(
            "search budget exhausted before finding a {r}-rainbow cycle"
        ))),
    }
}

/// Largest `r` for which an r-rainbow cycle is constructed on `n` points.
pub fn max_r(n: u32) -> usize {
    match n {
        0..=2 => 0,
        3 => 1,
        _ if n % 2 == 1 => n as usize - 1,
        _ => n as usize - 2,
    }
}

/// Dispatches to the construction covering `(n, r)`.
pub fn rainbow_cycle(points: &PointSet, r: usize) -> Result<LabeledFlipCycle<PlaneTree>> {
    let n = points.n();
    if r == 0 || r > max_r(n) {
        return Err(Error::InvalidParameter(format!(
            "r must lie in 1..={} for n = {n}, got {r}",
            max_r(n)
        )));
    }
    match (n, r) {
        (_, 1) => rainbow1_cycle(points),
        (4 | 5, _) => rainbow_small(points, r),
        _ if r.is_multiple_of(2) => rainbow_even(points, r / 2),
        _ => rainbow_odd(points, r.div_ceil(2)),
    }
}
