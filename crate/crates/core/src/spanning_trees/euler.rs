//! Eulerian circuits of balanced directed multigraphs (Hierholzer).

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// An Eulerian circuit through all `arcs`, as a cyclic vertex sequence of
/// length `arcs.len()` starting at the smallest vertex.
///
/// Out-arcs are consumed in increasing head order, so the result depends
/// only on the arc multiset.
pub fn euler_cycle(arcs: &[(u32, u32)]) -> Result<Vec<u32>> {
    if arcs.is_empty() {
        return Err(Error::InvalidParameter("no arcs".into()));
    }
    let mut out: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    let mut balance: BTreeMap<u32, i64> = BTreeMap::new();
    for &(u, v) in arcs {
        out.entry(u).or_default().push(v);
        out.entry(v).or_default();
        *balance.entry(u).or_default() += 1;
        *balance.entry(v).or_default() -= 1;
    }
    if let Some((v, b)) = balance.iter().find(|(_, b)| **b != 0) {
        return Err(Error::InvalidParameter(format!(
            "vertex {v} has out-degree minus in-degree {b}"
        )));
    }
    for heads in out.values_mut() {
        // popped from the back, so store in decreasing order
        heads.sort_unstable_by(|a, b| b.cmp(a));
    }
    let start = *out.keys().next().expect("non-empty");
    let mut stack = vec![start];
    let mut circuit = Vec::with_capacity(arcs.len() + 1);
    while let Some(&v) = stack.last() {
        match out.get_mut(&v).and_then(Vec::pop) {
            Some(w) => stack.push(w),
            None => circuit.push(stack.pop().expect("non-empty")),
        }
    }
    circuit.reverse();
    if circuit.len() != arcs.len() + 1 {
        let touched: BTreeSet<u32> = circuit.iter().copied().collect();
        let missed = out.keys().find(|v| !touched.contains(v)).copied().unwrap_or(0);
        return Err(Error::InvalidParameter(format!(
            "arcs are not connected (vertex {missed} unreachable)"
        )));
    }
    circuit.pop();
    Ok(circuit)
}
