//! Labeled flip cycles and the family-independent rainbow verifier.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use crate::error::Result;
use crate::label::Label;

/// The flip rule of one family of combinatorial objects.
///
/// `flip_labels` decides adjacency from the two states alone and returns the
/// labels entering along the arc `from -> to`. The verifier relies only on
/// this, never on how a cycle was produced.
pub trait FlipFamily {
    type State: Clone + Eq + Hash + Ord + Debug;

    fn name(&self) -> &'static str;

    /// Every label an arc of this flip graph can carry, sorted.
    fn universe(&self) -> Vec<Label>;

    /// Number of labels on each arc (2 for matchings, 1 otherwise).
    fn labels_per_step(&self) -> usize {
        1
    }

    fn validate_state(&self, state: &Self::State) -> Result<()>;

    /// Entering labels of the arc `from -> to`, sorted, or an error if the
    /// two states are not adjacent.
    fn flip_labels(&self, from: &Self::State, to: &Self::State) -> Result<Vec<Label>>;
}

/// A cyclic sequence of states with the labels entering at each step.
///
/// `step_labels[i]` belongs to the arc `states[i] -> states[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledFlipCycle<S> {
    pub states: Vec<S>,
    pub step_labels: Vec<Vec<Label>>,
}

impl<S: Clone> LabeledFlipCycle<S> {
    pub fn new(states: Vec<S>, step_labels: Vec<Vec<Label>>) -> Self {
        LabeledFlipCycle { states, step_labels }
    }

    /// Labels each step by asking `family` for the entering labels.
    pub fn from_states<F>(family: &F, states: Vec<S>) -> Result<Self>
    where
        F: FlipFamily<State = S>,
    {
        let len = states.len();
        let mut step_labels = Vec::with_capacity(len);
        for i in 0..len {
            step_labels.push(family.flip_labels(&states[i], &states[(i + 1) % len])?);
        }
        Ok(LabeledFlipCycle { states, step_labels })
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// The same cycle started at position `start`.
    pub fn rotated(&self, start: usize) -> Self {
        let len = self.len();
        let states = (0..len).map(|i| self.states[(start + i) % len].clone()).collect();
        let step_labels = (0..len).map(|i| self.step_labels[(start + i) % len].clone()).collect();
        LabeledFlipCycle { states, step_labels }
    }

    /// Flattened label sequence, step by step.
    pub fn label_sequence(&self) -> Vec<Label> {
        self.step_labels.iter().flatten().copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Empty,
    WrongLength {
        expected: String,
        actual: usize,
    },
    InvalidState {
        index: usize,
        reason: String,
    },
    IllegalFlip {
        step: usize,
        reason: String,
    },
    LabelMismatch {
        step: usize,
        claimed: Vec<Label>,
        actual: Vec<Label>,
    },
    RepeatedState {
        first: usize,
        second: usize,
    },
    LabelCount {
        label: Label,
        count: usize,
        expected: usize,
    },
    UnknownLabel {
        label: Label,
        count: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowReport {
    pub multiplicity_by_label: BTreeMap<Label, usize>,
    pub is_rainbow_r: bool,
    pub violations: Vec<Violation>,
}

impl RainbowReport {
    pub fn has_repeated_state(&self) -> bool {
        self.violations
            .iter()
            .any(|v| matches!(v, Violation::RepeatedState { .. }))
    }

    pub fn has_illegal_flip(&self) -> bool {
        self.violations
            .iter()
            .any(|v| matches!(v, Violation::IllegalFlip { .. }))
    }
}

/// Checks that `cycle` is an `r`-rainbow cycle of `family`.
///
/// Legality of every step and the entering labels are recomputed from the
/// states. The claimed labels must agree with the recomputed ones, the
/// states must be pairwise distinct, and every label of the universe must
/// enter exactly `r` times.
pub fn verify_rainbow<F: FlipFamily>(family: &F, cycle: &LabeledFlipCycle<F::State>, r: usize) -> RainbowReport {
    let universe = family.universe();
    let lps = family.labels_per_step();
    let mut violations = Vec::new();
    let mut multiplicity: BTreeMap<Label, usize> = universe.iter().map(|&l| (l, 0)).collect();

    let len = cycle.states.len();
    if len == 0 || r == 0 {
        violations.push(Violation::Empty);
        return RainbowReport {
            multiplicity_by_label: multiplicity,
            is_rainbow_r: false,
            violations,
        };
    }

    let total = r * universe.len();
    if !total.is_multiple_of(lps) || total / lps != len {
        let expected = if total.is_multiple_of(lps) {
            (total / lps).to_string()
        } else {
            format!("{total}/{lps} (not integral)")
        };
        violations.push(Violation::WrongLength { expected, actual: len });
    }
    if cycle.step_labels.len() != len {
        violations.push(Violation::WrongLength {
            expected: format!("{len} label steps"),
            actual: cycle.step_labels.len(),
        });
    }

    let mut valid = vec![true; len];
    for (index, state) in cycle.states.iter().enumerate() {
        if let Err(e) = family.validate_state(state) {
            valid[index] = false;
            violations.push(Violation::InvalidState {
                index,
                reason: e.to_string(),
            });
        }
    }

    let mut seen: HashMap<&F::State, usize> = HashMap::with_capacity(len);
    for (index, state) in cycle.states.iter().enumerate() {
        if let Some(&first) = seen.get(state) {
            violations.push(Violation::RepeatedState { first, second: index });
        } else {
            seen.insert(state, index);
        }
    }

    let mut unknown: BTreeMap<Label, usize> = BTreeMap::new();
    for step in 0..len {
        let next = (step + 1) % len;
        if !(valid[step] && valid[next]) {
            continue;
        }
        match family.flip_labels(&cycle.states[step], &cycle.states[next]) {
            Ok(actual) => {
                if let Some(claimed) = cycle.step_labels.get(step) {
                    let mut claimed_sorted = claimed.clone();
                    claimed_sorted.sort_unstable();
                    if claimed_sorted != actual {
                        violations.push(Violation::LabelMismatch {
                            step,
                            claimed: claimed.clone(),
                            actual: actual.clone(),
                        });
                    }
                }
                for label in actual {
                    match multiplicity.get_mut(&label) {
                        Some(count) => *count += 1,
                        None => *unknown.entry(label).or_insert(0) += 1,
                    }
                }
            }
            Err(e) => violations.push(Violation::IllegalFlip {
                step,
                reason: e.to_string(),
            }),
        }
    }

    for (&label, &count) in &multiplicity {
        if count != r {
            violations.push(Violation::LabelCount {
                label,
                count,
                expected: r,
            });
        }
    }
    for (label, count) in unknown {
        violations.push(Violation::UnknownLabel { label, count });
    }

    RainbowReport {
        multiplicity_by_label: multiplicity,
        is_rainbow_r: violations.is_empty(),
        violations,
    }
}
