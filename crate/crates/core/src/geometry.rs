//! Exact integer predicates and the canonical labeling of planar point sets.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted coordinate magnitude. Differences then stay below
/// 2^61 and every cross product fits comfortably in an `i128`.
pub const MAX_COORD: i64 = 1 << 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    fn tuple(self) -> (i64, i64) {
        (self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

fn cross(p: Point, q: Point, r: Point) -> i128 {
    let (px, py) = (i128::from(p.x), i128::from(p.y));
    (i128::from(q.x) - px) * (i128::from(r.y) - py) - (i128::from(q.y) - py) * (i128::from(r.x) - px)
}

/// Side of `r` relative to the directed line `p -> q`.
pub fn orientation(p: Point, q: Point, r: Point) -> Result<Side> {
    match cross(p, q, r).cmp(&0) {
        Ordering::Greater => Ok(Side::Left),
        Ordering::Less => Ok(Side::Right),
        Ordering::Equal => Err(Error::Collinear(p.tuple(), q.tuple(), r.tuple())),
    }
}

/// True when the closed segments `ab` and `cd` intersect anywhere other
/// than in a shared endpoint. Assumes general position.
pub fn segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let s1 = cross(a, b, c).signum();
    let s2 = cross(a, b, d).signum();
    let s3 = cross(c, d, a).signum();
    let s4 = cross(c, d, b).signum();
    s1 * s2 < 0 && s3 * s4 < 0
}

/// Points labeled `1..=n`; label `i` is stored at index `i - 1`.
///
/// Point 1 is the lowest point (ties broken by smaller x), and the others
/// follow in counter-clockwise order around it, so `{1,2}` and `{1,n}` are
/// hull edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointSet {
    points: Vec<Point>,
    hull: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfPlanePartition {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
}

fn check_general_position(points: &[Point]) -> Result<()> {
    for p in points {
        if p.x.abs() > MAX_COORD {
            return Err(Error::CoordinateTooLarge(p.x));
        }
        if p.y.abs() > MAX_COORD {
            return Err(Error::CoordinateTooLarge(p.y));
        }
    }
    let mut sorted = points.to_vec();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicatePoint(w[0].tuple()));
    }
    let n = points.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                orientation(points[a], points[b], points[c])?;
            }
        }
    }
    Ok(())
}

/// The order in which raw points receive labels: entry `i` is the raw
/// index of the point labeled `i + 1`.
pub fn canonical_permutation(raw: &[Point]) -> Result<Vec<usize>> {
    if raw.len() < 3 {
        return Err(Error::InvalidParameter(format!(
            "need at least 3 points, got {}",
            raw.len()
        )));
    }
    check_general_position(raw)?;
    let first = (0..raw.len()).min_by_key(|&i| (raw[i].y, raw[i].x)).expect("non-empty");
    let origin = raw[first];
    let mut rest: Vec<usize> = (0..raw.len()).filter(|&i| i != first).collect();
    // every other point lies in the half-open upper half-plane around origin,
    // so the orientation sign is a strict total order
    rest.sort_by(|&a, &b| match cross(origin, raw[a], raw[b]).cmp(&0) {
        Ordering::Greater => Ordering::Less,
        Ordering::Less => Ordering::Greater,
        Ordering::Equal => Ordering::Equal,
    });
    let mut perm = vec![first];
    perm.extend(rest);
    Ok(perm)
}

/// Labels `raw` canonically. Fails on collinear triples, duplicates and
/// oversized coordinates.
pub fn canonical_label(raw: &[Point]) -> Result<PointSet> {
    let perm = canonical_permutation(raw)?;
    let points: Vec<Point> = perm.iter().map(|&i| raw[i]).collect();
    let hull = hull_of(&points);
    Ok(PointSet { points, hull })
}

/// Graham scan over points already sorted around point 1.
fn hull_of(points: &[Point]) -> Vec<u32> {
    let mut stack: Vec<usize> = Vec::new();
    for i in 0..points.len() {
        while stack.len() >= 2
            && cross(
                points[stack[stack.len() - 2]],
                points[stack[stack.len() - 1]],
                points[i],
            ) < 0
        {
            stack.pop();
        }
        stack.push(i);
    }
    stack.into_iter().map(|i| i as u32 + 1).collect()
}

/// Parses one `x y` pair per line. Blank lines and text after `#` are
/// ignored.
pub fn parse_points(text: &str) -> Result<Vec<Point>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse(format!(
                "line {}: expected two integers, got {:?}",
                lineno + 1,
                line
            )));
        }
        let parse = |s: &str| {
            s.parse::<i64>()
                .map_err(|e| Error::Parse(format!("line {}: {s:?}: {e}", lineno + 1)))
        };
        out.push(Point::new(parse(fields[0])?, parse(fields[1])?));
    }
    Ok(out)
}

impl PointSet {
    /// Convenience for literal point lists.
    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self> {
        let raw: Vec<Point> = coords.iter().map(|&(x, y)| Point::new(x, y)).collect();
        canonical_label(&raw)
    }

    /// `n` points in convex position (on a parabola).
    pub fn convex(n: usize) -> Result<Self> {
        let raw: Vec<Point> = (0..n as i64).map(|i| Point::new(i, i * i)).collect();
        canonical_label(&raw)
    }

    /// The points labeled `1..=m`; they keep their labels.
    pub fn prefix(&self, m: usize) -> Result<PointSet> {
        if !(3..=self.points.len()).contains(&m) {
            return Err(Error::InvalidParameter(format!(
                "prefix of size {m} out of range 3..={}",
                self.points.len()
            )));
        }
        let points = self.points[..m].to_vec();
        let hull = hull_of(&points);
        Ok(PointSet { points, hull })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn n(&self) -> u32 {
        self.points.len() as u32
    }

    pub fn point(&self, label: u32) -> Point {
        self.points[label as usize - 1]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Hull labels in counter-clockwise order, starting at 1 and ending at n.
    pub fn hull(&self) -> &[u32] {
        &self.hull
    }

    pub fn is_convex_position(&self) -> bool {
        self.hull.len() == self.points.len()
    }

    pub fn on_hull(&self, label: u32) -> bool {
        self.hull.contains(&label)
    }

    /// True when `{i, j}` is an edge of the convex hull.
    pub fn is_hull_edge(&self, i: u32, j: u32) -> bool {
        let h = &self.hull;
        (0..h.len()).any(|t| {
            let (a, b) = (h[t], h[(t + 1) % h.len()]);
            (a, b) == (i, j) || (a, b) == (j, i)
        })
    }

    fn check_label(&self, x: u32) -> Result<()> {
        if x == 0 || x > self.n() {
            return Err(Error::OutOfRange {
                value: i64::from(x),
                modulus: self.n(),
            });
        }
        Ok(())
    }

    fn check_pair(&self, i: u32, j: u32) -> Result<()> {
        self.check_label(i)?;
        self.check_label(j)?;
        if i == j {
            return Err(Error::DegenerateLabel(i));
        }
        Ok(())
    }

    /// Side of point `k` relative to the directed line through `i` and `j`.
    pub fn side(&self, i: u32, j: u32, k: u32) -> Side {
        orientation(self.point(i), self.point(j), self.point(k)).expect("canonical point sets are in general position")
    }

    /// Points strictly left and strictly right of the directed line `i -> j`,
    /// each in increasing label order.
    pub fn half_planes(&self, i: u32, j: u32) -> Result<HalfPlanePartition> {
        self.check_pair(i, j)?;
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for k in 1..=self.n() {
            if k == i || k == j {
                continue;
            }
            match self.side(i, j, k) {
                Side::Left => left.push(k),
                Side::Right => right.push(k),
            }
        }
        Ok(HalfPlanePartition { left, right })
    }

    /// The orders `(pi_left, pi_right)` of the remaining points around `j`.
    ///
    /// Left points come sorted by decreasing clockwise angle from the ray
    /// `j -> i`, right points by decreasing counter-clockwise angle; in both
    /// cases the point closest to the extension of `i -> j` beyond `j` comes
    /// first. `pi_left` lists the left block first, `pi_right` the right one.
    pub fn angular_orders(&self, i: u32, j: u32) -> Result<(Vec<u32>, Vec<u32>)> {
        let HalfPlanePartition { mut left, mut right } = self.half_planes(i, j)?;
        left.sort_by(|&a, &b| match self.side(j, a, b) {
            Side::Left => Ordering::Less,
            Side::Right => Ordering::Greater,
        });
        right.sort_by(|&a, &b| match self.side(j, a, b) {
            Side::Right => Ordering::Less,
            Side::Left => Ordering::Greater,
        });
        let mut pi_l = left.clone();
        pi_l.extend(&right);
        let mut pi_r = right;
        pi_r.extend(left);
        Ok((pi_l, pi_r))
    }

    /// True when segments `{a, b}` and `{c, d}` cross.
    pub fn crosses(&self, a: u32, b: u32, c: u32, d: u32) -> bool {
        segments_cross(self.point(a), self.point(b), self.point(c), self.point(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(p(0, 0), p(1, 0), p(0, 1)), Ok(Side::Left));
        assert_eq!(orientation(p(0, 0), p(0, 1), p(1, 0)), Ok(Side::Right));
        assert!(orientation(p(0, 0), p(1, 0), p(2, 0)).is_err());
    }

    #[test]
    fn orientation_survives_large_coordinates() {
        let m = MAX_COORD;
        assert_eq!(orientation(p(-m, -m), p(m, -m), p(m, m)), Ok(Side::Left));
        assert_eq!(orientation(p(-m, -m), p(m, m - 1), p(m - 1, m)), Ok(Side::Left));
    }

    #[test]
    fn square_with_center() {
        let x = PointSet::from_coords(&[(2, 2), (0, 0), (4, 0), (4, 4), (0, 4)]);
        // the centre is collinear with opposite corners
        assert!(matches!(x, Err(Error::Collinear(..))));
        let x = PointSet::from_coords(&[(2, 1), (0, 0), (4, 0), (4, 4), (0, 4)]).unwrap();
        assert_eq!(x.point(1), p(0, 0));
        assert_eq!(x.point(2), p(4, 0));
        assert_eq!(x.point(3), p(2, 1));
        assert_eq!(x.point(4), p(4, 4));
        assert_eq!(x.point(5), p(0, 4));
        assert_eq!(x.hull(), &[1, 2, 4, 5]);
        assert!(!x.is_convex_position());
        assert!(x.is_hull_edge(1, 2) && x.is_hull_edge(5, 1));
    }

    #[test]
    fn triangle_labels_ccw() {
        let x = PointSet::from_coords(&[(5, 5), (0, 0), (3, -1)]).unwrap();
        assert_eq!(x.point(1), p(3, -1));
        assert_eq!(x.side(1, 2, 3), Side::Left);
        assert_eq!(x.hull(), &[1, 2, 3]);
    }

    #[test]
    fn hull_edge_has_an_empty_side() {
        let x = PointSet::convex(6).unwrap();
        let h = x.half_planes(1, 2).unwrap();
        assert!(h.left.is_empty() || h.right.is_empty());
        let h = x.half_planes(2, 5).unwrap();
        assert!(!h.left.is_empty() && !h.right.is_empty());
        assert!(x.half_planes(3, 3).is_err());
    }

    #[test]
    fn hull_edge_orders_agree() {
        let x = PointSet::from_coords(&[(0, 0), (10, 1), (7, 9), (3, 4), (1, 8)]).unwrap();
        let h = x.hull().to_vec();
        for t in 0..h.len() {
            let (a, b) = (h[t], h[(t + 1) % h.len()]);
            let (l, r) = x.angular_orders(a, b).unwrap();
            assert_eq!(l, r);
        }
    }

    #[test]
    fn parse_format() {
        let pts = parse_points("# a square\n0 0\n4 0 # corner\n\n4 4\n").unwrap();
        assert_eq!(pts, vec![p(0, 0), p(4, 0), p(4, 4)]);
        assert!(parse_points("1 2 3").is_err());
        assert!(parse_points("1 x").is_err());
    }

    #[test]
    fn crossing_segments() {
        assert!(segments_cross(p(0, 0), p(2, 2), p(0, 2), p(2, 0)));
        assert!(!segments_cross(p(0, 0), p(1, 1), p(0, 2), p(2, 3)));
        assert!(!segments_cross(p(0, 0), p(2, 2), p(2, 2), p(3, 0)));
    }
}
