//! Triangulations of a convex polygon and their flip graph.
//!
//! Vertices are `1..=n` around the polygon. A triangulation is stored as its
//! sorted set of `n - 3` diagonals; polygon sides are implicit. A flip
//! replaces a diagonal by the other diagonal of the quadrilateral formed by
//! its two incident triangles, and the arc is labeled by the entering
//! diagonal.

use serde::Serialize;

use crate::cycle::{FlipFamily, LabeledFlipCycle};
use crate::error::{Error, Result};
use crate::label::{catalan, shift_mod, Label};
use crate::search::FlipGraphOracle;

/// Largest polygon size [`enumerate_triangulations`] accepts.
pub const MAX_ENUM_N: u32 = 14;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Triangulation {
    n: u32,
    diagonals: Vec<Label>,
}

/// `(removed, inserted)` pairs applied in order.
pub type FlipSequence = Vec<(Label, Label)>;

/// All diagonals of the convex `n`-gon, sorted.
pub fn diagonal_universe(n: u32) -> Vec<Label> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 2..=n {
            if !(i == 1 && j == n) {
                out.push(Label::pair(i, j));
            }
        }
    }
    out
}

fn is_diagonal(n: u32, e: Label) -> bool {
    e.hi() <= n && e.hi() - e.lo() > 1 && !(e.lo() == 1 && e.hi() == n)
}

fn is_side(n: u32, e: Label) -> bool {
    e.hi() - e.lo() == 1 || (e.lo() == 1 && e.hi() == n)
}

/// Interiors of the two chords cross.
fn chords_cross(a: Label, b: Label) -> bool {
    let (p, q, r, s) = (a.lo(), a.hi(), b.lo(), b.hi());
    (p < r && r < q && q < s) || (r < p && p < s && s < q)
}

impl Triangulation {
    pub fn new(n: u32, mut diagonals: Vec<Label>) -> Result<Self> {
        diagonals.sort_unstable();
        let t = Triangulation { n, diagonals };
        t.validate()?;
        Ok(t)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn diagonals(&self) -> &[Label] {
        &self.diagonals
    }

    pub fn contains(&self, e: Label) -> bool {
        self.diagonals.binary_search(&e).is_ok()
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        if n < 3 {
            return Err(Error::InvalidParameter(format!("polygon needs n >= 3, got {n}")));
        }
        if self.diagonals.len() != (n - 3) as usize {
            return Err(Error::InvalidState(format!(
                "{} diagonals, expected {}",
                self.diagonals.len(),
                n - 3
            )));
        }
        for (k, &e) in self.diagonals.iter().enumerate() {
            if !is_diagonal(n, e) {
                return Err(Error::InvalidState(format!("{e} is not a diagonal of the {n}-gon")));
            }
            if k > 0 && self.diagonals[k - 1] == e {
                return Err(Error::InvalidState(format!("diagonal {e} repeated")));
            }
            for &f in &self.diagonals[..k] {
                if chords_cross(e, f) {
                    return Err(Error::InvalidState(format!("diagonals {e} and {f} cross")));
                }
            }
        }
        Ok(())
    }

    /// Sides and diagonals together.
    fn has_edge(&self, e: Label) -> bool {
        is_side(self.n, e) || self.contains(e)
    }

    /// The two apexes of the triangles on either side of diagonal `e`.
    fn apexes(&self, e: Label) -> Result<(u32, u32)> {
        if !self.contains(e) {
            return Err(Error::IllegalFlip(format!("{e} is not in the triangulation")));
        }
        let (a, b) = (e.lo(), e.hi());
        let inside = (a + 1..b).find(|&c| self.has_edge(Label::pair(a, c)) && self.has_edge(Label::pair(c, b)));
        let outside = (b + 1..=self.n)
            .chain(1..a)
            .find(|&c| self.has_edge(Label::pair(a, c)) && self.has_edge(Label::pair(c, b)));
        match (inside, outside) {
            (Some(c1), Some(c2)) => Ok((c1, c2)),
            _ => Err(Error::InvalidState(format!("no triangle pair around {e}"))),
        }
    }

    /// The diagonal that replaces `e`.
    pub fn flip_partner(&self, e: Label) -> Result<Label> {
        let (c1, c2) = self.apexes(e)?;
        Ok(Label::pair(c1, c2))
    }

    /// Replaces `e` by the other diagonal of its quadrilateral.
    pub fn flip(&self, e: Label) -> Result<(Triangulation, Label)> {
        let f = self.flip_partner(e)?;
        let mut diagonals: Vec<Label> = self.diagonals.iter().copied().filter(|&d| d != e).collect();
        diagonals.push(f);
        diagonals.sort_unstable();
        Ok((Triangulation { n: self.n, diagonals }, f))
    }

    /// Applies the flip `(e, f)`, checking that `f` is the partner of `e`.
    pub fn apply(&self, e: Label, f: Label) -> Result<Triangulation> {
        let (t, partner) = self.flip(e)?;
        if partner != f {
            return Err(Error::IllegalFlip(format!("removing {e} inserts {partner}, not {f}")));
        }
        Ok(t)
    }

    /// Number of diagonals at each vertex, indexed by `vertex - 1`.
    pub fn diagonal_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n as usize];
        for e in &self.diagonals {
            deg[e.lo() as usize - 1] += 1;
            deg[e.hi() as usize - 1] += 1;
        }
        deg
    }

    /// True when `c1` and `c2` are neighbors on the polygon, every other
    /// vertex has at most two diagonals and `c1`, `c2` carry all the rest.
    pub fn is_bicentered(&self, c1: u32, c2: u32) -> bool {
        let n = self.n;
        if shift_mod(n, c1, 1) != c2 && shift_mod(n, c2, 1) != c1 {
            return false;
        }
        self.diagonals.iter().all(|e| e.contains(c1) || e.contains(c2))
            && self
                .diagonal_degrees()
                .iter()
                .enumerate()
                .all(|(v, &d)| v as u32 + 1 == c1 || v as u32 + 1 == c2 || d <= 2)
    }
}

/// The star triangulation around vertex `i`.
pub fn star(n: u32, i: u32) -> Result<Triangulation> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("polygon needs n >= 3, got {n}")));
    }
    if i == 0 || i > n {
        return Err(Error::OutOfRange {
            value: i64::from(i),
            modulus: n,
        });
    }
    let diagonals = (1..=n)
        .filter(|&x| x != i && x != shift_mod(n, i, 1) && x != shift_mod(n, i, -1))
        .map(|x| Label::pair(i, x))
        .collect();
    Triangulation::new(n, diagonals)
}

/// The flips `({1,k},{2,k+1})` for `k = 3..m-1`, shifted by `i - 1`
/// modulo `m`. Takes the star at `i` of the `m`-gon to the star at `i + 1`.
pub fn flip_sequence_f(m: u32, i: u32) -> Result<FlipSequence> {
    if m < 4 {
        return Err(Error::InvalidParameter(format!("flip sequence needs m >= 4, got {m}")));
    }
    if i == 0 || i > m {
        return Err(Error::OutOfRange {
            value: i64::from(i),
            modulus: m,
        });
    }
    let s = i64::from(i) - 1;
    Ok((3..m)
        .map(|k| {
            (
                Label::pair(shift_mod(m, 1, s), shift_mod(m, k, s)),
                Label::pair(shift_mod(m, 2, s), shift_mod(m, k + 1, s)),
            )
        })
        .collect())
}

/// Applies `seq` to `start` and returns every state reached, `start` first.
pub fn apply_sequence(start: &Triangulation, seq: &[(Label, Label)]) -> Result<Vec<Triangulation>> {
    let mut out = Vec::with_capacity(seq.len() + 1);
    out.push(start.clone());
    for (step, &(e, f)) in seq.iter().enumerate() {
        let next = out[step]
            .apply(e, f)
            .map_err(|err| Error::IllegalFlip(format!("step {step}: {err}")))?;
        out.push(next);
    }
    Ok(out)
}

fn close_cycle(n: u32, seq: &[(Label, Label)]) -> Result<LabeledFlipCycle<Triangulation>> {
    let start = star(n, 1)?;
    let mut states = apply_sequence(&start, seq)?;
    let last = states.pop().expect("non-empty");
    if last != start {
        return Err(Error::Construction("flip sequence does not return to its start".into()));
    }
    let step_labels = seq.iter().map(|&(_, f)| vec![f]).collect();
    Ok(LabeledFlipCycle::new(states, step_labels))
}

/// The concatenation `F(n,1), ..., F(n,n)`, defined for every `n >= 4`.
pub fn rainbow2_sequence(n: u32) -> Result<FlipSequence> {
    let mut seq = Vec::new();
    for i in 1..=n {
        seq.extend(flip_sequence_f(n, i)?);
    }
    Ok(seq)
}

/// The closed walk of [`rainbow2_sequence`] starting at the star of 1.
/// It is a cycle only from `n = 7` on; smaller `n` are exposed for
/// experiments.
pub fn rainbow2_walk(n: u32) -> Result<LabeledFlipCycle<Triangulation>> {
    close_cycle(n, &rainbow2_sequence(n)?)
}

/// A 2-rainbow cycle of length `2(C(n,2) - n)`, for `n >= 7`.
pub fn rainbow2_cycle(n: u32) -> Result<LabeledFlipCycle<Triangulation>> {
    if n < 7 {
        return Err(Error::Unsupported(format!(
            "the star-to-star 2-rainbow construction needs n >= 7, got {n}"
        )));
    }
    rainbow2_walk(n)
}

/// `F(3,4), F(4,5), ..., F(n-1,n), F(n,n)`, where `F(i,m)` acts on the
/// sub-polygon `1..=m`.
pub fn rainbow1_sequence(n: u32) -> Result<FlipSequence> {
    if n < 4 {
        return Err(Error::Unsupported(format!(
            "1-rainbow construction needs n >= 4, got {n}"
        )));
    }
    let mut seq = Vec::new();
    for m in 4..=n {
        seq.extend(flip_sequence_f(m, m - 1)?);
    }
    seq.extend(flip_sequence_f(n, n)?);
    Ok(seq)
}

/// A 1-rainbow cycle of length `C(n,2) - n` starting at the star of 1.
pub fn rainbow1_cycle(n: u32) -> Result<LabeledFlipCycle<Triangulation>> {
    close_cycle(n, &rainbow1_sequence(n)?)
}

/// Every triangulation of the convex `n`-gon, sorted.
pub fn enumerate_triangulations(n: u32) -> Result<Vec<Triangulation>> {
    if !(3..=MAX_ENUM_N).contains(&n) {
        return Err(Error::Unsupported(format!(
            "enumeration is limited to 3 <= n <= {MAX_ENUM_N}, got {n}"
        )));
    }
    let vertices: Vec<u32> = (1..=n).collect();
    let mut out: Vec<Triangulation> = diagonal_sets(&vertices)
        .into_iter()
        .map(|mut diagonals| {
            diagonals.sort_unstable();
            Triangulation { n, diagonals }
        })
        .collect();
    out.sort();
    debug_assert_eq!(out.len() as u128, catalan(u64::from(n) - 2));
    Ok(out)
}

/// Diagonal sets of the polygon with the given vertices in order. The apex
/// `c` of the triangle on the side `(first, last)` splits the polygon.
fn diagonal_sets(poly: &[u32]) -> Vec<Vec<Label>> {
    let k = poly.len();
    if k < 4 {
        return vec![Vec::new()];
    }
    let (a, b) = (poly[0], poly[k - 1]);
    let mut out = Vec::new();
    for c in 1..k - 1 {
        let left = diagonal_sets(&poly[..=c]);
        let right = diagonal_sets(&poly[c..]);
        for l in &left {
            for r in &right {
                let mut d = Vec::with_capacity(k - 3);
                d.extend_from_slice(l);
                d.extend_from_slice(r);
                if c > 1 {
                    d.push(Label::pair(a, poly[c]));
                }
                if c < k - 2 {
                    d.push(Label::pair(poly[c], b));
                }
                out.push(d);
            }
        }
    }
    out
}

/// The flip graph of the convex `n`-gon.
#[derive(Debug, Clone, Copy)]
pub struct TriangulationFlips {
    pub n: u32,
}

impl TriangulationFlips {
    pub fn new(n: u32) -> Self {
        TriangulationFlips { n }
    }
}

impl FlipFamily for TriangulationFlips {
    type State = Triangulation;

    fn name(&self) -> &'static str {
        "triangulation"
    }

    fn universe(&self) -> Vec<Label> {
        diagonal_universe(self.n)
    }

    fn validate_state(&self, t: &Triangulation) -> Result<()> {
        if t.n != self.n {
            return Err(Error::InvalidState(format!(
                "{}-gon state in a {}-gon family",
                t.n, self.n
            )));
        }
        t.validate()
    }

    fn flip_labels(&self, from: &Triangulation, to: &Triangulation) -> Result<Vec<Label>> {
        let removed: Vec<Label> = from.diagonals.iter().copied().filter(|e| !to.contains(*e)).collect();
        let inserted: Vec<Label> = to.diagonals.iter().copied().filter(|e| !from.contains(*e)).collect();
        if removed.len() != 1 || inserted.len() != 1 {
            return Err(Error::IllegalFlip(format!(
                "states differ in {} removed and {} inserted diagonals",
                removed.len(),
                inserted.len()
            )));
        }
        from.apply(removed[0], inserted[0])?;
        Ok(inserted)
    }
}

impl FlipGraphOracle for TriangulationFlips {
    type State = Triangulation;

    fn universe(&self) -> Vec<Label> {
        diagonal_universe(self.n)
    }

    fn neighbors(&self, t: &Triangulation) -> Vec<(Triangulation, Vec<Label>)> {
        t.diagonals
            .iter()
            .map(|&e| {
                let (next, f) = t.flip(e).expect("every diagonal of a triangulation is flippable");
                (next, vec![f])
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::verify_rainbow;

    fn l(x: u32, y: u32) -> Label {
        Label::pair(x, y)
    }

    #[test]
    fn stars() {
        assert_eq!(star(6, 1).unwrap().diagonals(), &[l(1, 3), l(1, 4), l(1, 5)]);
        assert_eq!(star(4, 1).unwrap(), star(4, 3).unwrap());
        assert!(star(3, 2).unwrap().diagonals().is_empty());
    }

    #[test]
    fn flip_sequence_examples() {
        assert_eq!(
            flip_sequence_f(6, 1).unwrap(),
            vec![(l(1, 3), l(2, 4)), (l(1, 4), l(2, 5)), (l(1, 5), l(2, 6))]
        );
        assert_eq!(flip_sequence_f(4, 3).unwrap(), vec![(l(1, 3), l(2, 4))]);
    }

    #[test]
    fn f_moves_star_to_next_star() {
        for n in 4..=9 {
            for i in 1..=n {
                let states = apply_sequence(&star(n, i).unwrap(), &flip_sequence_f(n, i).unwrap()).unwrap();
                assert_eq!(states.last().unwrap(), &star(n, shift_mod(n, i, 1)).unwrap());
            }
        }
    }

    #[test]
    fn rainbow1_small() {
        for (n, len) in [(4, 2), (5, 5), (6, 9)] {
            let c = rainbow1_cycle(n).unwrap();
            assert_eq!(c.len(), len);
            assert!(verify_rainbow(&TriangulationFlips::new(n), &c, 1).is_rainbow_r);
        }
    }

    #[test]
    fn rainbow2_seven() {
        let c = rainbow2_cycle(7).unwrap();
        assert_eq!(c.len(), 28);
        assert!(verify_rainbow(&TriangulationFlips::new(7), &c, 2).is_rainbow_r);
        assert!(rainbow2_cycle(6).is_err());
    }

    #[test]
    fn catalan_counts() {
        for (n, c) in [(3, 1), (4, 2), (5, 5), (6, 14), (7, 42), (10, 1430)] {
            assert_eq!(enumerate_triangulations(n).unwrap().len(), c);
        }
        assert!(enumerate_triangulations(15).is_err());
    }

    #[test]
    fn illegal_flip_rejected() {
        let s = star(6, 1).unwrap();
        assert!(s.apply(l(1, 4), l(2, 6)).is_err());
        assert!(s.apply(l(2, 4), l(1, 3)).is_err());
        assert_eq!(s.flip(l(1, 4)).unwrap().1, l(3, 5));
    }
}
