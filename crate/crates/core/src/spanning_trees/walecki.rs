//! Walecki's decomposition of the complete graph into Hamilton cycles.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::label::Label;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// `floor((n-1)/2)` Hamilton cycles on `1..=n`, as cyclic vertex lists.
    pub cycles: Vec<Vec<u32>>,
    /// The unused perfect matching (empty for odd `n`).
    pub matching: Vec<Label>,
}

/// Zigzag cycles for odd `n = 2k + 1` on `Z_{2k}` plus a hub vertex `2k`:
/// `hub, i, i+1, i-1, i+2, i-2, ..., i+k` for `i = 0..k`.
fn odd_zero_based(n: u32) -> Vec<Vec<u32>> {
    let k = (n - 1) / 2;
    let m = 2 * k;
    let hub = m;
    (0..k)
        .map(|i| {
            let mut cyc = vec![hub, i];
            for s in 1..=k {
                cyc.push((i + s) % m);
                if s < k {
                    cyc.push((i + m - s) % m);
                }
            }
            cyc
        })
        .collect()
}

/// Hamilton decomposition of `K_n` on `1..=n`, `n >= 3`.
///
/// For even `n` every cycle of the odd decomposition on `n - 1` vertices
/// gives up one zigzag edge of cyclic length `(n-2)/2` to the new vertex;
/// those edges are pairwise disjoint and, with the edge from the new vertex
/// to the hub, form the leftover matching.
pub fn walecki(n: u32) -> Result<Decomposition> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("walecki needs n >= 3, got {n}")));
    }
    if n % 2 == 1 {
        let cycles = odd_zero_based(n)
            .into_iter()
            .map(|c| c.into_iter().map(|v| v + 1).collect())
            .collect();
        return Ok(Decomposition {
            cycles,
            matching: Vec::new(),
        });
    }
    let base = odd_zero_based(n - 1);
    let m = n - 2; // size of the cyclic group
    let half = m / 2;
    let new = n - 1; // zero-based id of the added vertex
    let hub = m;
    let mut cycles = Vec::new();
    let mut matching = vec![Label::pair(hub + 1, new + 1)];
    for cyc in base {
        let len = cyc.len();
        let pos = (0..len)
            .find(|&p| {
                let (a, b) = (cyc[p], cyc[(p + 1) % len]);
                a != hub && b != hub && (a + m - b) % m == half
            })
            .ok_or_else(|| Error::Construction("zigzag without a long edge".into()))?;
        let (a, b) = (cyc[pos], cyc[(pos + 1) % len]);
        matching.push(Label::pair(a + 1, b + 1));
        let mut out = Vec::with_capacity(len + 1);
        for (p, &v) in cyc.iter().enumerate() {
            out.push(v + 1);
            if p == pos {
                out.push(new + 1);
            }
        }
        cycles.push(out);
    }
    matching.sort_unstable();
    Ok(Decomposition { cycles, matching })
}

/// Edges of a cyclic vertex list.
pub fn cycle_edges(cycle: &[u32]) -> Vec<Label> {
    (0..cycle.len())
        .map(|p| Label::pair(cycle[p], cycle[(p + 1) % cycle.len()]))
        .collect()
}

/// True when the cycles and the matching use every edge of `K_n` once and
/// every cycle is Hamiltonian.
pub fn is_decomposition(n: u32, d: &Decomposition) -> bool {
    let mut seen = BTreeSet::new();
    for c in &d.cycles {
        let verts: BTreeSet<u32> = c.iter().copied().collect();
        if c.len() != n as usize || verts.len() != n as usize || verts.iter().any(|&v| v == 0 || v > n) {
            return false;
        }
        for e in cycle_edges(c) {
            if !seen.insert(e) {
                return false;
            }
        }
    }
    let mut covered = BTreeSet::new();
    for &e in &d.matching {
        if !seen.insert(e) || !covered.insert(e.lo()) || !covered.insert(e.hi()) {
            return false;
        }
    }
    seen.len() == (n * (n - 1) / 2) as usize && (n % 2 == 1 || covered.len() == n as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let d = walecki(5).unwrap();
        assert_eq!(d.cycles.len(), 2);
        assert!(d.matching.is_empty());
        let d = walecki(6).unwrap();
        assert_eq!(d.cycles.len(), 2);
        assert_eq!(d.matching.len(), 3);
        assert_eq!(walecki(7).unwrap().cycles.len(), 3);
    }

    #[test]
    fn decomposes_complete_graphs() {
        for n in 3..=30 {
            let d = walecki(n).unwrap();
            assert_eq!(d.cycles.len() as u32, (n - 1) / 2);
            assert!(is_decomposition(n, &d), "n = {n}");
        }
    }
}
