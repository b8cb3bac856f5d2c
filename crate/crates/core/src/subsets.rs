//! k-subsets of `[n]` under element exchange.
//!
//! Two k-subsets are adjacent when they differ by exchanging one element,
//! and the step is labeled by the exchanged pair. For odd `n = 2l+1`
//! rainbow cycles come from blocks `B_1..B_l`: the cycle runs through the
//! block and its `2l` cyclic shifts.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::cycle::{verify_rainbow, FlipFamily, LabeledFlipCycle};
use crate::error::{Error, Result};
use crate::label::{all_pairs, cyclic_dist_of, shift_mod, Label};
use crate::search::FlipGraphOracle;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(Vec<u32>);

impl Subset {
    /// Sorts the elements; repeats are an error.
    pub fn new(n: u32, mut elems: Vec<u32>) -> Result<Self> {
        elems.sort_unstable();
        if elems.windows(2).any(|w| w[0] == w[1]) || elems.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::InvalidState(format!("{elems:?} is not a subset of 1..={n}")));
        }
        Ok(Subset(elems))
    }

    pub fn k(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn elems(&self) -> &[u32] {
        &self.0
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// Every element shifted by `shift` modulo `n`.
    pub fn shifted(&self, n: u32, shift: i64) -> Subset {
        let mut v: Vec<u32> = self.0.iter().map(|&x| shift_mod(n, x, shift)).collect();
        v.sort_unstable();
        Subset(v)
    }

    pub fn complement(&self, n: u32) -> Subset {
        Subset((1..=n).filter(|x| !self.contains(*x)).collect())
    }

    /// The symmetric difference, when it is a single pair.
    pub fn exchange_with(&self, other: &Subset) -> Option<Label> {
        let a: Vec<u32> = self.0.iter().copied().filter(|x| !other.contains(*x)).collect();
        let b: Vec<u32> = other.0.iter().copied().filter(|x| !self.contains(*x)).collect();
        (a.len() == 1 && b.len() == 1).then(|| Label::pair(a[0], b[0]))
    }
}

/// The flip graph of `k`-subsets of `[n]`.
#[derive(Debug, Clone, Copy)]
pub struct SubsetFlips {
    pub n: u32,
    pub k: u32,
}

impl FlipFamily for SubsetFlips {
    type State = Subset;

    fn name(&self) -> &'static str {
        "subset"
    }

    fn universe(&self) -> Vec<Label> {
        all_pairs(self.n)
    }

    fn validate_state(&self, s: &Subset) -> Result<()> {
        if s.k() != self.k {
            return Err(Error::InvalidState(format!(
                "{}-subset in a family with k = {}",
                s.k(),
                self.k
            )));
        }
        Subset::new(self.n, s.0.clone()).map(|_| ())
    }

    fn flip_labels(&self, from: &Subset, to: &Subset) -> Result<Vec<Label>> {
        from.exchange_with(to)
            .map(|t| vec![t])
            .ok_or_else(|| Error::IllegalFlip(format!("{:?} and {:?} do not differ by one exchange", from.0, to.0)))
    }
}

impl FlipGraphOracle for SubsetFlips {
    type State = Subset;

    fn universe(&self) -> Vec<Label> {
        all_pairs(self.n)
    }

    fn neighbors(&self, s: &Subset) -> Vec<(Subset, Vec<Label>)> {
        let mut out = Vec::new();
        for &x in &s.0 {
            for y in (1..=self.n).filter(|y| !s.contains(*y)) {
                let mut v: Vec<u32> = s.0.iter().map(|&z| if z == x { y } else { z }).collect();
                v.sort_unstable();
                out.push((Subset(v), vec![Label::pair(x, y)]));
            }
        }
        out.sort_by(|a, b| a.1.cmp(&b.1));
        out
    }

    /// Each exchange toggles membership of both its elements, so every
    /// element needs as many remaining exchanges, modulo 2, as it takes to
    /// restore its membership in `start`.
    fn closure_feasible(&self, start: &Subset, current: &Subset, remaining: &[u32]) -> bool {
        let mut count = vec![0u32; self.n as usize + 1];
        let mut id = 0;
        for x in 1..=self.n {
            for y in x + 1..=self.n {
                count[x as usize] += remaining[id];
                count[y as usize] += remaining[id];
                id += 1;
            }
        }
        (1..=self.n).all(|x| (count[x as usize] % 2 == 1) == (start.contains(x) != current.contains(x)))
    }
}

/// All `k`-subsets of `[n]`, sorted.
pub fn enumerate_subsets(n: u32, k: u32) -> Vec<Subset> {
    fn rec(start: u32, n: u32, k: u32, acc: &mut Vec<u32>, out: &mut Vec<Subset>) {
        if acc.len() as u32 == k {
            out.push(Subset(acc.clone()));
            return;
        }
        for x in start..=n {
            acc.push(x);
            rec(x + 1, n, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn ell_of(n: u32) -> Result<u32> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::Parity(format!(
            "every element enters and leaves along a rainbow cycle, so its n-1 = {} pairs must be even",
            n.saturating_sub(1)
        )));
    }
    Ok((n - 1) / 2)
}

/// The cycle through `B`, then `B` shifted by 1, 2, ..., `2l`.
pub fn cycle_from_block(n: u32, k: u32, block: &[Subset]) -> Result<LabeledFlipCycle<Subset>> {
    let ell = ell_of(n)?;
    if block.len() != ell as usize {
        return Err(Error::InvalidParameter(format!(
            "a block for n = {n} has {ell} sets, got {}",
            block.len()
        )));
    }
    let family = SubsetFlips { n, k };
    for s in block {
        family.validate_state(s)?;
    }
    let states: Vec<Subset> = (0..n as i64)
        .flat_map(|shift| block.iter().map(move |s| s.shifted(n, shift)))
        .collect();
    LabeledFlipCycle::from_states(&family, states)
}

/// Outcome of each block condition. `a` and `b` follow the pair variant
/// for `k = 2` and the `[k-1] + {b_i}` variant for larger `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    /// The generated cycle is a verified rainbow cycle.
    pub rainbow: bool,
}

impl BlockReport {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c && self.rainbow
    }
}

pub fn check_block(n: u32, k: u32, block: &[Subset]) -> Result<BlockReport> {
    let ell = ell_of(n)?;
    if block.is_empty() {
        return Err(Error::InvalidParameter("empty block".into()));
    }
    let prefix: Vec<u32> = (1..k).collect();
    let bs: Vec<Option<u32>> = block
        .iter()
        .map(|s| {
            let rest: Vec<u32> = s.0.iter().copied().filter(|x| !prefix.contains(x)).collect();
            (s.0.len() == k as usize && rest.len() == 1 && prefix.iter().all(|x| s.contains(*x))).then(|| rest[0])
        })
        .collect();
    let lowest = if k == 2 { 3 } else { k + 1 };
    let a = bs[0] == Some(n) && bs.iter().all(|b| b.is_some_and(|b| b >= lowest && b <= n));
    let full: HashSet<u32> = (1..=ell).collect();
    let b = if !a {
        false
    } else if k == 2 {
        let d: HashSet<u32> = bs
            .iter()
            .map(|b| cyclic_dist_of(n, 1, b.expect("checked")).expect("in range"))
            .collect();
        d == full && bs.len() == ell as usize
    } else {
        bs.iter().collect::<HashSet<_>>().len() == bs.len()
    };
    let mut steps: Vec<Option<Label>> = block.windows(2).map(|w| w[0].exchange_with(&w[1])).collect();
    steps.push(block[block.len() - 1].exchange_with(&block[0].shifted(n, 1)));
    let c = steps.iter().all(Option::is_some) && {
        let d: Vec<u32> = steps
            .iter()
            .map(|t| cyclic_dist_of(n, t.unwrap().lo(), t.unwrap().hi()).expect("in range"))
            .collect();
        d.len() == ell as usize && d.iter().collect::<HashSet<_>>() == full.iter().collect()
    };
    let rainbow = match cycle_from_block(n, k, block) {
        Ok(cycle) => verify_rainbow(&SubsetFlips { n, k }, &cycle, 1).is_rainbow_r,
        Err(_) => false,
    };
    Ok(BlockReport { a, b, c, rainbow })
}

/// Signed increments for `l >= 2`: odd lengths from 3 upwards with
/// alternating signs, then a unit step, then even lengths down to 2, and
/// finally the step back to point 2. Only the last sign is a choice; it is
/// taken so that `b_l + d_l = 2` modulo `n`.
pub fn d_sequence(ell: u32) -> Result<Vec<i64>> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("needs l >= 2, got {ell}")));
    }
    let l = ell as i64;
    let top_odd = if l % 2 == 0 { l - 1 } else { l };
    let mut d: Vec<i64> = (0..)
        .map(|t| 3 + 2 * t)
        .take_while(|&x| x <= top_odd)
        .enumerate()
        .map(|(t, x)| if t % 2 == 0 { x } else { -x })
        .collect();
    d.push(if l % 4 == 0 || l % 4 == 3 { 1 } else { -1 });
    let top_even = if l % 2 == 0 { l - 2 } else { l - 3 };
    let evens: Vec<i64> = (1..=top_even / 2).rev().map(|t| 2 * t).collect();
    let last_sign = if l % 2 == 0 { 1 } else { -1 };
    let cnt = evens.len();
    d.extend(evens.iter().enumerate().map(|(t, &x)| {
        if (cnt - 1 - t).is_multiple_of(2) {
            last_sign * x
        } else {
            -last_sign * x
        }
    }));
    let n = 2 * ell + 1;
    let b = b_sequence(n, &d);
    d.push(closing_step(n, *b.last().expect("non-empty")));
    Ok(d)
}

/// The representative of `2 - b` modulo `n` in `[-l, l]`.
fn closing_step(n: u32, b: u32) -> i64 {
    let n = n as i64;
    let mut x = (2 - b as i64).rem_euclid(n);
    if x > n / 2 {
        x -= n;
    }
    x
}

/// `b_1 = n` and `b_{i+1} = b_i + d_i` modulo `n`, for the first `l`
/// values; a trailing closing step is ignored.
pub fn b_sequence(n: u32, d: &[i64]) -> Vec<u32> {
    let ell = ((n - 1) / 2) as usize;
    let mut b = vec![n];
    for &x in d.iter().take(ell - 1) {
        b.push(shift_mod(n, *b.last().expect("non-empty"), x));
    }
    b
}

/// `B_i = {1, b_i}`.
pub fn block_from_d(ell: u32, d: &[i64]) -> Result<Vec<Subset>> {
    let n = 2 * ell + 1;
    if d.len() != ell as usize {
        return Err(Error::InvalidParameter(format!(
            "a sequence for l = {ell} has {ell} entries, got {}",
            d.len()
        )));
    }
    b_sequence(n, d)
        .into_iter()
        .map(|b| Subset::new(n, vec![1, b]))
        .collect()
}

/// `d` satisfies the block conditions with `|d_l| = dist({b_l, 2})`.
pub fn is_rainbow_sequence(ell: u32, d: &[i64]) -> bool {
    let n = 2 * ell + 1;
    if d.len() != ell as usize || d.iter().any(|x| x.unsigned_abs() > ell as u64 || *x == 0) {
        return false;
    }
    let b = b_sequence(n, d);
    if closing_step(n, b[b.len() - 1]) != d[d.len() - 1] {
        return false;
    }
    match block_from_d(ell, d).and_then(|blk| check_block(n, 2, &blk)) {
        Ok(r) => r.a && r.b && r.c,
        Err(_) => false,
    }
}

pub fn reversed(d: &[i64]) -> Vec<i64> {
    d.iter().rev().copied().collect()
}

/// A rainbow Hamilton cycle of the pairs of `[n]`, odd `n >= 5`.
pub fn hamilton_k2(n: u32) -> Result<LabeledFlipCycle<Subset>> {
    let ell = ell_of(n)?;
    if n < 5 {
        return Err(Error::InvalidParameter(format!("needs n >= 5, got {n}")));
    }
    cycle_from_block(n, 2, &block_from_d(ell, &d_sequence(ell)?)?)
}

/// The cycles of `d` and of its reversal.
pub fn edge_disjoint_pair(n: u32) -> Result<(LabeledFlipCycle<Subset>, LabeledFlipCycle<Subset>)> {
    let ell = ell_of(n)?;
    if n < 5 {
        return Err(Error::InvalidParameter(format!("needs n >= 5, got {n}")));
    }
    let d = d_sequence(ell)?;
    Ok((
        cycle_from_block(n, 2, &block_from_d(ell, &d)?)?,
        cycle_from_block(n, 2, &block_from_d(ell, &reversed(&d))?)?,
    ))
}

/// Undirected edges of a cycle as state pairs.
pub fn cycle_edge_set<S: Clone + Ord + std::hash::Hash>(cycle: &LabeledFlipCycle<S>) -> HashSet<(S, S)> {
    let n = cycle.states.len();
    (0..n)
        .map(|i| {
            let (a, b) = (cycle.states[i].clone(), cycle.states[(i + 1) % n].clone());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct SequenceEnumeration {
    pub ell: u32,
    pub sequences: Vec<Vec<i64>>,
    /// `false` when the time budget ran out first.
    pub complete: bool,
}

/// Every rainbow sequence for `l`, in lexicographic order of increments.
pub fn enumerate_rainbow_sequences(ell: u32, budget: Option<Duration>) -> Result<SequenceEnumeration> {
    if ell == 0 {
        return Err(Error::InvalidParameter("needs l >= 1".into()));
    }
    struct Ctx {
        n: u32,
        ell: u32,
        used_len: Vec<bool>,
        used_dist: Vec<bool>,
        d: Vec<i64>,
        out: Vec<Vec<i64>>,
        deadline: Option<Instant>,
        ticks: u64,
        stopped: bool,
    }
    fn rec(c: &mut Ctx, b: u32) {
        c.ticks += 1;
        if c.ticks.is_multiple_of(4096) && c.deadline.is_some_and(|t| Instant::now() > t) {
            c.stopped = true;
        }
        if c.stopped {
            return;
        }
        if c.d.len() + 1 == c.ell as usize {
            let last = closing_step(c.n, b);
            if last != 0 && !c.used_len[last.unsigned_abs() as usize] {
                let mut full = c.d.clone();
                full.push(last);
                c.out.push(full);
            }
            return;
        }
        let l = c.ell as i64;
        for x in (-l..=l).filter(|&x| x != 0) {
            if c.used_len[x.unsigned_abs() as usize] {
                continue;
            }
            let nb = shift_mod(c.n, b, x);
            if nb < 3 {
                continue;
            }
            let dist = cyclic_dist_of(c.n, 1, nb).expect("in range") as usize;
            if c.used_dist[dist] {
                continue;
            }
            c.used_len[x.unsigned_abs() as usize] = true;
            c.used_dist[dist] = true;
            c.d.push(x);
            rec(c, nb);
            c.d.pop();
            c.used_dist[dist] = false;
            c.used_len[x.unsigned_abs() as usize] = false;
        }
    }
    let n = 2 * ell + 1;
    let mut ctx = Ctx {
        n,
        ell,
        used_len: vec![false; ell as usize + 1],
        used_dist: vec![false; ell as usize + 1],
        d: Vec::new(),
        out: Vec::new(),
        deadline: budget.map(|b| Instant::now() + b),
        ticks: 0,
        stopped: false,
    };
    // b_1 = n has distance 1 from point 1
    ctx.used_dist[1] = true;
    rec(&mut ctx, n);
    Ok(SequenceEnumeration {
        ell,
        sequences: ctx.out,
        complete: !ctx.stopped,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DisjointFamily {
    pub ell: u32,
    pub size: usize,
    pub witness: Vec<Vec<i64>>,
}

/// Largest set of rainbow sequences whose cycles are pairwise
/// edge-disjoint. Sequences sharing `b_2` share the first edge, so at most
/// one is taken per value of `b_2`.
pub fn max_edge_disjoint(ell: u32) -> Result<DisjointFamily> {
    let n = 2 * ell + 1;
    let seqs = enumerate_rainbow_sequences(ell, None)?.sequences;
    let mut edge_ids: HashMap<(Subset, Subset), usize> = HashMap::new();
    let sets: Vec<Vec<u64>> = seqs
        .iter()
        .map(|d| {
            let cycle = cycle_from_block(n, 2, &block_from_d(ell, d)?)?;
            let mut ids: Vec<usize> = cycle_edge_set(&cycle)
                .into_iter()
                .map(|e| {
                    let next = edge_ids.len();
                    *edge_ids.entry(e).or_insert(next)
                })
                .collect();
            ids.sort_unstable();
            Ok(ids)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .map(|ids| {
            let mut bits = vec![0u64; (n as usize * n as usize * n as usize) / 64 + 1];
            for i in ids {
                bits[i / 64] |= 1 << (i % 64);
            }
            bits
        })
        .collect();
    let disjoint = |a: usize, b: usize| sets[a].iter().zip(&sets[b]).all(|(x, y)| x & y == 0);

    let mut classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, d) in seqs.iter().enumerate() {
        let b2 = if ell >= 2 { b_sequence(n, d)[1] } else { 0 };
        classes.entry(b2).or_default().push(i);
    }
    let classes: Vec<Vec<usize>> = classes.into_values().collect();

    fn grow(
        at: usize,
        classes: &[Vec<usize>],
        chosen: &mut Vec<usize>,
        best: &mut Vec<usize>,
        disjoint: &dyn Fn(usize, usize) -> bool,
    ) {
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        if at == classes.len() || chosen.len() + (classes.len() - at) <= best.len() {
            return;
        }
        for &v in &classes[at] {
            if chosen.iter().all(|&u| disjoint(u, v)) {
                chosen.push(v);
                grow(at + 1, classes, chosen, best, disjoint);
                chosen.pop();
            }
        }
        grow(at + 1, classes, chosen, best, disjoint);
    }
    let mut best = Vec::new();
    grow(0, &classes, &mut Vec::new(), &mut best, &disjoint);
    Ok(DisjointFamily {
        ell,
        size: best.len(),
        witness: best.iter().map(|&i| seqs[i].clone()).collect(),
    })
}

/// Kind of an edge along a zigzag path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ZigzagEdge {
    Level,
    Diagonal,
    Cycle,
    /// The final edge into `k`.
    Closing,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZigzagPath {
    pub ell: u32,
    pub k: u32,
    /// `n, b_2, ..., b_l, k`.
    pub vertices: Vec<u32>,
    pub kinds: Vec<ZigzagEdge>,
    /// Length of the diagonal replaced by a unit step and of the closing edge.
    pub s: u32,
}

impl ZigzagPath {
    pub fn lengths(&self) -> Vec<u32> {
        let n = 2 * self.ell + 1;
        self.vertices
            .windows(2)
            .map(|w| cyclic_dist_of(n, w[0], w[1]).expect("in range"))
            .collect()
    }
}

/// The modified zigzag rainbow path on `[k, n]` for `3 <= k < n/3`.
pub fn zigzag_path(ell: u32, k: u32) -> Result<ZigzagPath> {
    let n = 2 * ell + 1;
    if k < 3 || 3 * k >= n {
        return Err(Error::InvalidParameter(format!(
            "the zigzag construction needs 3 <= k < n/3; got n = {n}, k = {k}"
        )));
    }
    let m = ell - k.div_ceil(2);
    // (level, is_left) for each vertex
    let vertex = |level: u32, left: bool| if left { n - level } else { k + level };
    let mut walk: Vec<(u32, bool)> = vec![(0, true)];
    let mut kinds = Vec::new();
    let first_levels = ell - k + 1;
    while walk.last().expect("non-empty").0 < first_levels {
        let (lv, left) = *walk.last().expect("non-empty");
        walk.push((lv + 1, !left));
        kinds.push(ZigzagEdge::Diagonal);
    }
    let mut level_next = true;
    while kinds.len() < (ell - 1) as usize {
        let (lv, left) = *walk.last().expect("non-empty");
        if level_next {
            walk.push((lv, !left));
            kinds.push(ZigzagEdge::Level);
        } else {
            walk.push((lv + 1, !left));
            kinds.push(ZigzagEdge::Diagonal);
        }
        level_next = !level_next;
    }
    if walk.last().expect("non-empty").0 != m {
        return Err(Error::Construction(format!(
            "zigzag ends at level {} instead of {m}",
            walk.last().unwrap().0
        )));
    }
    let s = if ell % 2 == 1 {
        m
    } else if k.is_multiple_of(2) {
        m + 1
    } else {
        m + 2
    };
    let len = |a: (u32, bool), b: (u32, bool)| cyclic_dist_of(n, vertex(a.0, a.1), vertex(b.0, b.1)).expect("in range");
    let at = (0..kinds.len())
        .find(|&t| kinds[t] == ZigzagEdge::Diagonal && t < first_levels as usize && len(walk[t], walk[t + 1]) == s)
        .ok_or_else(|| Error::Construction(format!("no first-part diagonal of length {s}")))?;
    // unit step to the same side, then mirror the rest
    for p in walk.iter_mut().skip(at + 1) {
        p.1 = !p.1;
    }
    kinds[at] = ZigzagEdge::Cycle;
    let mut vertices: Vec<u32> = walk.iter().map(|&(lv, left)| vertex(lv, left)).collect();
    vertices.push(k);
    kinds.push(ZigzagEdge::Closing);
    let path = ZigzagPath {
        ell,
        k,
        vertices,
        kinds,
        s,
    };
    let closing = *path.lengths().last().expect("non-empty");
    if closing != s {
        return Err(Error::Construction(format!(
            "closing edge has length {closing}, expected {s}"
        )));
    }
    Ok(path)
}

/// `B_i = [k-1] + {b_i}` along the zigzag rainbow path.
pub fn zigzag_block(ell: u32, k: u32) -> Result<Vec<Subset>> {
    let path = zigzag_path(ell, k)?;
    let n = 2 * ell + 1;
    path.vertices[..ell as usize]
        .iter()
        .map(|&b| Subset::new(n, (1..k).chain([b]).collect()))
        .collect()
}

/// Rainbow cycle of `k`-subsets of `[n]` for odd `n`: the pair cycle for
/// `k = 2`, zigzag blocks for `3 <= k < n/3`, and the two stored blocks.
/// Larger `k` is handled through complements.
pub fn rainbow_cycle(n: u32, k: u32) -> Result<LabeledFlipCycle<Subset>> {
    let ell = ell_of(n)?;
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter(format!("needs 1 <= k < n, got k = {k}")));
    }
    if k > n / 2 {
        let c = rainbow_cycle(n, n - k)?;
        let states = c.states.iter().map(|s| s.complement(n)).collect();
        return Ok(LabeledFlipCycle::new(states, c.step_labels));
    }
    match k {
        2 => hamilton_k2(n),
        _ if 3 * k < n => cycle_from_block(n, k, &zigzag_block(ell, k)?),
        _ if (ell, k) == (4, 4) || (ell, k) == (8, 8) => cycle_from_block(n, k, &special_block(ell, k)?),
        _ => Err(Error::Unsupported(format!("no construction for n = {n}, k = {k}"))),
    }
}

const BLOCK44: [[u32; 4]; 4] = [[1, 2, 3, 9], [1, 2, 7, 9], [1, 2, 3, 7], [1, 2, 3, 5]];

const BLOCK88: [[u32; 8]; 8] = [
    [1, 2, 3, 4, 5, 6, 7, 17],
    [1, 2, 3, 4, 5, 6, 15, 17],
    [1, 2, 3, 4, 5, 6, 7, 15],
    [1, 2, 3, 4, 5, 6, 7, 9],
    [1, 2, 3, 4, 5, 6, 7, 14],
    [1, 2, 3, 4, 5, 6, 7, 11],
    [1, 2, 3, 4, 5, 6, 7, 13],
    [1, 2, 3, 4, 5, 6, 7, 12],
];

/// The stored blocks for `l = k = 4` and `l = k = 8`.
pub fn special_block(ell: u32, k: u32) -> Result<Vec<Subset>> {
    let n = 2 * ell + 1;
    let rows: Vec<Vec<u32>> = match (ell, k) {
        (4, 4) => BLOCK44.iter().map(|r| r.to_vec()).collect(),
        (8, 8) => BLOCK88.iter().map(|r| r.to_vec()).collect(),
        _ => return Err(Error::Unsupported(format!("no stored block for l = {ell}, k = {k}"))),
    };
    rows.into_iter().map(|r| Subset::new(n, r)).collect()
}
