//! Arc labels and the modular arithmetic shared by every family.
//!
//! Identifiers are 1-based. Residues modulo `n` are always represented in
//! `{1, ..., n}`, never `0`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An unordered pair `{x, y}` of distinct 1-based identifiers, stored with
/// the smaller element first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    lo: u32,
    hi: u32,
}

impl Label {
    pub fn new(x: u32, y: u32) -> Result<Self> {
        match x.cmp(&y) {
            std::cmp::Ordering::Less => Ok(Label { lo: x, hi: y }),
            std::cmp::Ordering::Greater => Ok(Label { lo: y, hi: x }),
            std::cmp::Ordering::Equal => Err(Error::DegenerateLabel(x)),
        }
    }

    /// Builds a label from two identifiers already known to be distinct.
    ///
    /// Panics if `x == y`; use [`Label::new`] for untrusted input.
    pub fn pair(x: u32, y: u32) -> Self {
        Self::new(x, y).expect("label endpoints must be distinct")
    }

    pub fn lo(self) -> u32 {
        self.lo
    }

    pub fn hi(self) -> u32 {
        self.hi
    }

    pub fn contains(self, x: u32) -> bool {
        self.lo == x || self.hi == x
    }

    /// The endpoint that is not `x`, if `x` is an endpoint.
    pub fn other(self, x: u32) -> Option<u32> {
        if self.lo == x {
            Some(self.hi)
        } else if self.hi == x {
            Some(self.lo)
        } else {
            None
        }
    }

    /// True when the two labels have an endpoint in common.
    pub fn shares_endpoint(self, other: Label) -> bool {
        self.contains(other.lo) || self.contains(other.hi)
    }

    /// The label with both endpoints shifted by `shift` modulo `n`.
    pub fn shifted(self, n: u32, shift: i64) -> Self {
        Label::pair(shift_mod(n, self.lo, shift), shift_mod(n, self.hi, shift))
    }

    pub fn as_array(self) -> [u32; 2] {
        [self.lo, self.hi]
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_array().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[u32; 2]>::deserialize(deserializer)?;
        Label::new(x, y).map_err(serde::de::Error::custom)
    }
}

/// `x + shift` modulo `n` with representatives `{1, ..., n}`.
pub fn shift_mod(n: u32, x: u32, shift: i64) -> u32 {
    let n = i64::from(n);
    ((i64::from(x) - 1 + shift).rem_euclid(n) + 1) as u32
}

fn check_range(n: u32, x: u32) -> Result<()> {
    if x == 0 || x > n {
        return Err(Error::OutOfRange {
            value: i64::from(x),
            modulus: n,
        });
    }
    Ok(())
}

/// Cyclic distance `min(y - x, x - y) mod n`, a value in `[1, n/2]`.
pub fn cyclic_dist(n: u32, pair: Label) -> Result<u32> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("modulus {n} < 3")));
    }
    check_range(n, pair.lo)?;
    check_range(n, pair.hi)?;
    let d = pair.hi - pair.lo;
    Ok(d.min(n - d))
}

/// Cyclic distance of two raw identifiers; rejects `x == y`.
pub fn cyclic_dist_of(n: u32, x: u32, y: u32) -> Result<u32> {
    cyclic_dist(n, Label::new(x, y)?)
}

/// Adds `shift` to every element modulo `n`. The result is sorted.
pub fn sigma(n: u32, set: &[u32], shift: i64) -> Result<Vec<u32>> {
    for &x in set {
        check_range(n, x)?;
    }
    let mut out: Vec<u32> = set.iter().map(|&x| shift_mod(n, x, shift)).collect();
    out.sort_unstable();
    Ok(out)
}

/// All `C(n, 2)` pairs over `[n]` in lexicographic order.
pub fn all_pairs(n: u32) -> Vec<Label> {
    let mut out = Vec::with_capacity((n as usize) * (n as usize).saturating_sub(1) / 2);
    for x in 1..=n {
        for y in (x + 1)..=n {
            out.push(Label::pair(x, y));
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

pub fn catalan(n: u64) -> u128 {
    binomial(2 * n, n) / u128::from(n + 1)
}
