//! Plane spanning trees on a point set and their flip graph.
//!
//! A flip removes one edge and inserts another so that the result is again
//! a plane spanning tree; the arc is labeled by the inserted edge. Every
//! pair of points is a label, so an r-rainbow cycle has length
//! `r * C(n, 2)`.

mod assembly;
pub mod euler;
pub mod walecki;

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::cycle::FlipFamily;
use crate::error::{Error, Result};
use crate::geometry::PointSet;
use crate::label::{all_pairs, Label};
use crate::search::FlipGraphOracle;

pub use assembly::{
    detour_tree, euler_tour, hull_sequence, max_r, rainbow1_cycle, rainbow_cycle, rainbow_even, rainbow_odd,
    rainbow_small, rainbow_small_with, EulerTour, SMALL_SEARCH_BUDGET,
};

/// A spanning tree given by its sorted edge list. Planarity depends on the
/// point set and is checked by [`TreeFlips`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PlaneTree {
    n: u32,
    edges: Vec<Label>,
}

impl PlaneTree {
    /// Builds a tree from edges without any structural check.
    pub fn from_edges(n: u32, mut edges: Vec<Label>) -> Self {
        edges.sort_unstable();
        PlaneTree { n, edges }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[Label] {
        &self.edges
    }

    pub fn contains(&self, e: Label) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// `self - e + f`.
    pub fn exchange(&self, e: Label, f: Label) -> Result<PlaneTree> {
        if !self.contains(e) {
            return Err(Error::IllegalFlip(format!("{e} is not an edge of the tree")));
        }
        if self.contains(f) {
            return Err(Error::IllegalFlip(format!("{f} is already an edge of the tree")));
        }
        let mut edges: Vec<Label> = self.edges.iter().copied().filter(|&x| x != e).collect();
        edges.push(f);
        Ok(PlaneTree::from_edges(self.n, edges))
    }

    /// The same edges with point `n + 1` attached to `anchor`.
    pub fn with_leaf(&self, anchor: u32) -> PlaneTree {
        let mut edges = self.edges.clone();
        edges.push(Label::pair(anchor, self.n + 1));
        PlaneTree::from_edges(self.n + 1, edges)
    }

    /// Degree of every point, indexed by `label - 1`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n as usize];
        for e in &self.edges {
            deg[e.lo() as usize - 1] += 1;
            deg[e.hi() as usize - 1] += 1;
        }
        deg
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.n as usize + 1];
        for e in &self.edges {
            adj[e.lo() as usize].push(e.hi());
            adj[e.hi() as usize].push(e.lo());
        }
        for row in adj.iter_mut() {
            row.sort_unstable();
        }
        adj
    }

    /// Hop distances from `v`; index 0 is unused.
    pub fn distances_from(&self, v: u32) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        let mut dist = vec![None; self.n as usize + 1];
        dist[v as usize] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x as usize].expect("visited");
            for &y in &adj[x as usize] {
                if dist[y as usize].is_none() {
                    dist[y as usize] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// True when the edges form a spanning tree on `1..=n`.
    pub fn is_spanning_tree(&self) -> bool {
        if self.edges.len() + 1 != self.n as usize {
            return false;
        }
        if self.edges.iter().any(|e| e.hi() > self.n) {
            return false;
        }
        self.distances_from(1).iter().skip(1).all(Option::is_some)
    }

    /// True when no two edges cross on `points`.
    pub fn is_plane(&self, points: &PointSet) -> bool {
        for (k, e) in self.edges.iter().enumerate() {
            for f in &self.edges[..k] {
                if points.crosses(e.lo(), e.hi(), f.lo(), f.hi()) {
                    return false;
                }
            }
        }
        true
    }

    /// Longest shortest path, in edges.
    pub fn diameter(&self) -> usize {
        (1..=self.n)
            .map(|v| self.distances_from(v).iter().flatten().copied().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }
}

/// The star with center `i` on points `1..=n`.
pub fn star_tree(n: u32, i: u32) -> PlaneTree {
    let edges = (1..=n).filter(|&x| x != i).map(|x| Label::pair(i, x)).collect();
    PlaneTree::from_edges(n, edges)
}

/// A caterpillar described by a central path and the degrees along it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaterpillarSignature {
    pub central_path: Vec<u32>,
    pub degrees: Vec<usize>,
}

impl CaterpillarSignature {
    /// Rebuilds the caterpillar on `n` points. Points off the central path
    /// become leaves, handed out in increasing label order to the path
    /// vertices in path order.
    pub fn reconstruct(&self, n: u32) -> Result<PlaneTree> {
        let on_path: HashSet<u32> = self.central_path.iter().copied().collect();
        let mut leaves = (1..=n).filter(|v| !on_path.contains(v));
        let mut edges: Vec<Label> = self.central_path.windows(2).map(|w| Label::pair(w[0], w[1])).collect();
        let len = self.central_path.len();
        for (idx, (&v, &d)) in self.central_path.iter().zip(&self.degrees).enumerate() {
            let path_nbrs = usize::from(idx > 0) + usize::from(idx + 1 < len);
            for _ in path_nbrs..d {
                let leaf = leaves
                    .next()
                    .ok_or_else(|| Error::InvalidParameter("degrees exceed point count".into()))?;
                edges.push(Label::pair(v, leaf));
            }
        }
        if leaves.next().is_some() {
            return Err(Error::InvalidParameter("degrees do not cover all points".into()));
        }
        Ok(PlaneTree::from_edges(n, edges))
    }
}

/// The central path obtained by deleting all leaves, oriented so that it
/// starts at its smaller endpoint, with full degrees. `None` when the tree
/// is not a caterpillar.
pub fn caterpillar_signature(tree: &PlaneTree) -> Option<CaterpillarSignature> {
    let deg = tree.degrees();
    let inner: Vec<u32> = (1..=tree.n).filter(|&v| deg[v as usize - 1] >= 2).collect();
    if inner.is_empty() {
        // a single edge
        return Some(CaterpillarSignature {
            central_path: vec![1],
            degrees: vec![deg[0]],
        });
    }
    let set: BTreeSet<u32> = inner.iter().copied().collect();
    let adj = tree.adjacency();
    let inner_deg = |v: u32| adj[v as usize].iter().filter(|x| set.contains(x)).count();
    if inner.iter().any(|&v| inner_deg(v) > 2) {
        return None;
    }
    let ends: Vec<u32> = inner.iter().copied().filter(|&v| inner_deg(v) <= 1).collect();
    let mut path = vec![ends[0]];
    let mut prev = 0;
    let mut cur = ends[0];
    while let Some(&next) = adj[cur as usize].iter().find(|&&x| x != prev && set.contains(&x)) {
        path.push(next);
        prev = cur;
        cur = next;
    }
    let degrees = path.iter().map(|&v| deg[v as usize - 1]).collect();
    Some(CaterpillarSignature {
        central_path: path,
        degrees,
    })
}

/// The unordered pair `{i, j}` of star centers at the ends of the star path
/// containing `tree` as an intermediate tree, recovered from degrees alone.
/// Meaningful for `n >= 6`.
pub fn recover_path_endpoints(tree: &PlaneTree) -> Option<Label> {
    let deg = tree.degrees();
    let big: Vec<u32> = (1..=tree.n).filter(|&v| deg[v as usize - 1] >= 3).collect();
    match big.len() {
        2 => Label::new(big[0], big[1]).ok(),
        1 => {
            let dist = tree.distances_from(big[0]);
            let at2: Vec<u32> = (1..=tree.n).filter(|&v| dist[v as usize] == Some(2)).collect();
            if at2.len() == 1 {
                Label::new(big[0], at2[0]).ok()
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Which of the two orders around `j` a star path follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    L,
    R,
}

/// The star-to-star path from `S_i` to `S_j` together with its point order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarPath {
    pub i: u32,
    pub j: u32,
    pub side: Side,
    /// The point order of the flip sequence, length `n - 2`.
    pub order: Vec<u32>,
    /// `S_i`, the `n - 2` intermediate trees, `S_j`.
    pub trees: Vec<PlaneTree>,
    /// The `n - 1` flips as `(removed, inserted)`.
    pub flips: Vec<(Label, Label)>,
}

impl StarPath {
    pub fn intermediates(&self) -> &[PlaneTree] {
        &self.trees[1..self.trees.len() - 1]
    }

    /// First point of the order: `S_i -> first intermediate` inserts
    /// `{j, first}`.
    pub fn first(&self) -> u32 {
        self.order[0]
    }

    /// Last point of the order: the last intermediate is
    /// `S_j - {j, i} + {i, last}`.
    pub fn last(&self) -> u32 {
        *self.order.last().expect("n >= 3")
    }
}

/// The flips `({i,j},{j,p1}), ({i,p1},{j,p2}), ..., ({i,p_{n-2}},{j,i})`
/// with `p` the chosen angular order around `j`, and the trees they visit.
pub fn path_p(points: &PointSet, i: u32, j: u32, side: Side) -> Result<StarPath> {
    let n = points.n();
    let (pi_l, pi_r) = points.angular_orders(i, j)?;
    let order = match side {
        Side::L => pi_l,
        Side::R => pi_r,
    };
    let mut flips = Vec::with_capacity(n as usize - 1);
    let mut prev = j;
    for &p in &order {
        flips.push((Label::pair(i, prev), Label::pair(j, p)));
        prev = p;
    }
    flips.push((Label::pair(i, prev), Label::pair(j, i)));
    let mut trees = vec![star_tree(n, i)];
    for &(e, f) in &flips {
        let next = trees.last().expect("non-empty").exchange(e, f)?;
        trees.push(next);
    }
    Ok(StarPath {
        i,
        j,
        side,
        order,
        trees,
        flips,
    })
}

/// The flip graph of plane spanning trees on a fixed point set.
#[derive(Debug, Clone)]
pub struct TreeFlips {
    points: PointSet,
}

impl TreeFlips {
    pub fn new(points: PointSet) -> Self {
        TreeFlips { points }
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn n(&self) -> u32 {
        self.points.n()
    }

    /// True when `f` crosses no edge of `tree` other than `except`.
    fn fits(&self, tree: &PlaneTree, f: Label, except: Label) -> bool {
        tree.edges
            .iter()
            .all(|&e| e == except || !self.points.crosses(e.lo(), e.hi(), f.lo(), f.hi()))
    }

    /// All plane spanning trees, found by flooding the (connected) flip
    /// graph from a star. Sorted.
    pub fn enumerate(&self) -> Vec<PlaneTree> {
        let start = star_tree(self.n(), 1);
        let mut seen: HashSet<PlaneTree> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(t) = queue.pop_front() {
            for (u, _) in FlipGraphOracle::neighbors(self, &t) {
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
        let mut out: Vec<PlaneTree> = seen.into_iter().collect();
        out.sort();
        out
    }
}

impl FlipFamily for TreeFlips {
    type State = PlaneTree;

    fn name(&self) -> &'static str {
        "tree"
    }

    fn universe(&self) -> Vec<Label> {
        all_pairs(self.n())
    }

    fn validate_state(&self, tree: &PlaneTree) -> Result<()> {
        if tree.n != self.n() {
            return Err(Error::InvalidState(format!(
                "tree on {} points for a set of {}",
                tree.n,
                self.n()
            )));
        }
        if !tree.is_spanning_tree() {
            return Err(Error::InvalidState("edges do not form a spanning tree".into()));
        }
        if !tree.is_plane(&self.points) {
            return Err(Error::InvalidState("tree edges cross".into()));
        }
        Ok(())
    }

    fn flip_labels(&self, from: &PlaneTree, to: &PlaneTree) -> Result<Vec<Label>> {
        let removed: Vec<Label> = from.edges.iter().copied().filter(|e| !to.contains(*e)).collect();
        let inserted: Vec<Label> = to.edges.iter().copied().filter(|e| !from.contains(*e)).collect();
        if removed.len() != 1 || inserted.len() != 1 || from.n != to.n {
            return Err(Error::IllegalFlip(format!(
                "trees differ in {} removed and {} inserted edges",
                removed.len(),
                inserted.len()
            )));
        }
        Ok(inserted)
    }
}

impl FlipGraphOracle for TreeFlips {
    type State = PlaneTree;

    fn universe(&self) -> Vec<Label> {
        all_pairs(self.n())
    }

    fn neighbors(&self, tree: &PlaneTree) -> Vec<(PlaneTree, Vec<Label>)> {
        let n = self.n();
        let mut out = Vec::new();
        for f in all_pairs(n) {
            if tree.contains(f) {
                continue;
            }
            // the unique cycle of tree + f is the tree path between f's ends
            let path = tree_path(tree, f.lo(), f.hi());
            for e in path.windows(2).map(|w| Label::pair(w[0], w[1])) {
                if self.fits(tree, f, e) {
                    let next = tree.exchange(e, f).expect("e in tree, f not");
                    out.push((next, vec![f]));
                }
            }
        }
        out
    }
}

/// Vertex sequence of the tree path from `a` to `b`.
fn tree_path(tree: &PlaneTree, a: u32, b: u32) -> Vec<u32> {
    let adj = tree.adjacency();
    let mut parent = vec![0u32; tree.n as usize + 1];
    let mut seen = vec![false; tree.n as usize + 1];
    seen[a as usize] = true;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for &y in &adj[x as usize] {
            if !seen[y as usize] {
                seen[y as usize] = true;
                parent[y as usize] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = parent[cur as usize];
        path.push(cur);
    }
    path.reverse();
    path
}
