//! Permutations of `[n]` under transpositions of positions.
//!
//! A rainbow sequence is an ordering of all `C(n,2)` position pairs that,
//! applied to any permutation, walks a cycle through distinct permutations
//! and returns to the start. The graph is vertex-transitive, so one
//! sequence gives a rainbow cycle through every vertex.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cycle::{FlipFamily, LabeledFlipCycle};
use crate::error::{Error, Result};
use crate::label::{all_pairs, Label};
use crate::search::FlipGraphOracle;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let p = Permutation(values);
        p.validate()?;
        Ok(p)
    }

    pub fn identity(n: u32) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn n(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    fn validate(&self) -> Result<()> {
        let n = self.0.len();
        let mut seen = vec![false; n + 1];
        for &v in &self.0 {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidState(format!(
                    "{:?} is not a permutation of 1..={n}",
                    self.0
                )));
            }
            seen[v as usize] = true;
        }
        Ok(())
    }

    /// Swaps the entries at the two positions of `t`.
    pub fn transposed(&self, t: Label) -> Result<Permutation> {
        if t.hi() as usize > self.0.len() {
            return Err(Error::OutOfRange {
                value: t.hi() as i64,
                modulus: self.n(),
            });
        }
        let mut v = self.0.clone();
        v.swap(t.lo() as usize - 1, t.hi() as usize - 1);
        Ok(Permutation(v))
    }

    /// `true` for even permutations.
    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.0.len()];
        let mut transpositions = 0;
        for s in 0..self.0.len() {
            let mut x = s;
            let mut len = 0;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize - 1;
                len += 1;
            }
            transpositions += len.max(1) - 1;
        }
        transpositions % 2 == 0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() < 10 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// `{1,2}, {3,4}, {2,3}, {1,4}, {2,4}, {1,3}`.
pub fn base_r4() -> Vec<Label> {
    [(1, 2), (3, 4), (2, 3), (1, 4), (2, 4), (1, 3)]
        .into_iter()
        .map(|(a, b)| Label::pair(a, b))
        .collect()
}

/// Applies `seq` from `start`; the cycle must close and repeat no
/// permutation.
pub fn apply_sequence(start: &Permutation, seq: &[Label]) -> Result<LabeledFlipCycle<Permutation>> {
    if seq.is_empty() {
        return Err(Error::InvalidParameter(
            "an empty sequence does not describe a cycle".into(),
        ));
    }
    let mut states = vec![start.clone()];
    let mut seen: HashSet<Permutation> = HashSet::from([start.clone()]);
    let mut current = start.clone();
    for (step, &t) in seq.iter().enumerate() {
        current = current.transposed(t)?;
        if step + 1 == seq.len() {
            break;
        }
        if !seen.insert(current.clone()) {
            return Err(Error::Construction(format!(
                "step {} ({t}) revisits {current}",
                step + 1
            )));
        }
        states.push(current.clone());
    }
    if current != *start {
        return Err(Error::Construction(format!(
            "sequence ends at {current}, not at {start}"
        )));
    }
    Ok(LabeledFlipCycle::new(states, seq.iter().map(|&t| vec![t]).collect()))
}

/// Every pair of `[n]` occurs exactly once and the walk from the identity
/// is a cycle.
pub fn validate_sequence(n: u32, seq: &[Label]) -> Result<()> {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    if sorted != all_pairs(n) {
        return Err(Error::Construction(format!(
            "sequence of length {} is not an ordering of all {} pairs of [{n}]",
            seq.len(),
            n * (n - 1) / 2
        )));
    }
    apply_sequence(&Permutation::identity(n), seq).map(|_| ())
}

fn require_multiple_of_four(n: u32, seq: &[Label]) -> Result<()> {
    if n < 4 || !n.is_multiple_of(4) {
        return Err(Error::InvalidParameter(format!(
            "the extension needs n divisible by 4, got {n}"
        )));
    }
    validate_sequence(n, seq)
}

fn is_matching_pair(t: Label) -> bool {
    t.lo() % 2 == 1 && t.hi() == t.lo() + 1
}

/// Replaces each `{2i-1, 2i}` with `i <= n/2` by `{2i-1,p}, {2i-1,2i}, {2i,p}`.
fn expand(seq: &[Label], n: u32, p: u32) -> Vec<Label> {
    let mut out = Vec::with_capacity(seq.len() + n as usize);
    for &t in seq {
        if is_matching_pair(t) && t.hi() <= n {
            out.extend([Label::pair(t.lo(), p), t, Label::pair(t.hi(), p)]);
        } else {
            out.push(t);
        }
    }
    out
}

/// Rainbow sequence for `n + 1` from one for `n = 4l`.
pub fn extend_plus1(seq: &[Label], n: u32) -> Result<Vec<Label>> {
    require_multiple_of_four(n, seq)?;
    let out = expand(seq, n, n + 1);
    validate_sequence(n + 1, &out)?;
    Ok(out)
}

/// Rainbow sequence for `n + 4` from one for `n = 4l`. The input is first
/// rotated left by the fewest steps that leave a non-matching pair last.
pub fn extend_plus4(seq: &[Label], n: u32) -> Result<Vec<Label>> {
    require_multiple_of_four(n, seq)?;
    let shift = (0..seq.len())
        .find(|&s| !is_matching_pair(seq[(s + seq.len() - 1) % seq.len()]))
        .ok_or_else(|| Error::Construction("every pair in the sequence is a matching pair".into()))?;
    let mut q = seq.to_vec();
    q.rotate_left(shift);
    for k in 1..=4 {
        q = expand(&q, n, n + k);
    }
    let q4: Vec<Label> = base_r4().iter().map(|t| t.shifted(n + 4, n as i64)).collect();
    let (q_last, q4_last) = (q[q.len() - 1], q4[q4.len() - 1]);
    let mut out = q[..q.len() - 1].to_vec();
    out.extend_from_slice(&q4[..q4.len() - 1]);
    out.push(q_last);
    out.push(q4_last);
    validate_sequence(n + 4, &out)?;
    Ok(out)
}

/// A rainbow sequence for `[n]`, refused when `C(n,2)` is odd, that is when
/// `n/2` rounded down is odd.
pub fn rainbow_sequence(n: u32) -> Result<Vec<Label>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("needs n >= 2, got {n}")));
    }
    if (n / 2) % 2 == 1 {
        return Err(Error::Parity(format!(
            "C({n},2) = {} is odd and every transposition changes permutation parity",
            n * (n - 1) / 2
        )));
    }
    let mut seq = base_r4();
    let mut m = 4;
    while m + 4 <= n {
        seq = extend_plus4(&seq, m)?;
        m += 4;
    }
    if n == m + 1 {
        seq = extend_plus1(&seq, m)?;
    }
    Ok(seq)
}

/// The flip graph of permutations of `[n]`.
#[derive(Debug, Clone, Copy)]
pub struct PermutationFlips {
    pub n: u32,
}

impl FlipFamily for PermutationFlips {
    type State = Permutation;

    fn name(&self) -> &'static str {
        "permutation"
    }

    fn universe(&self) -> Vec<Label> {
        all_pairs(self.n)
    }

    fn validate_state(&self, s: &Permutation) -> Result<()> {
        if s.n() != self.n {
            return Err(Error::InvalidState(format!(
                "permutation of {} in a family with n = {}",
                s.n(),
                self.n
            )));
        }
        s.validate()
    }

    fn flip_labels(&self, from: &Permutation, to: &Permutation) -> Result<Vec<Label>> {
        let diff: Vec<u32> = (0..from.0.len())
            .filter(|&p| from.0[p] != to.0[p])
            .map(|p| p as u32 + 1)
            .collect();
        if diff.len() != 2 {
            return Err(Error::IllegalFlip(format!(
                "{from} and {to} differ in {} positions",
                diff.len()
            )));
        }
        let t = Label::pair(diff[0], diff[1]);
        if from.transposed(t)? != *to {
            return Err(Error::IllegalFlip(format!("{to} is not {from} with {t} swapped")));
        }
        Ok(vec![t])
    }
}

impl FlipGraphOracle for PermutationFlips {
    type State = Permutation;

    fn universe(&self) -> Vec<Label> {
        all_pairs(self.n)
    }

    fn neighbors(&self, s: &Permutation) -> Vec<(Permutation, Vec<Label>)> {
        all_pairs(self.n)
            .into_iter()
            .map(|t| (s.transposed(t).expect("pair inside [n]"), vec![t]))
            .collect()
    }
}
