//! JSON and DOT exchange formats for states and cycles.
//!
//! A state is written as `{"family", "n", "state"}` and a cycle as
//! `{"family", "params", "states", "labels", "r"}`. Reading a record back
//! rebuilds the family from `params` and re-checks the cycle from scratch,
//! so a record can be verified without knowing how it was produced.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cycle::{verify_rainbow, FlipFamily, LabeledFlipCycle, RainbowReport};
use crate::error::{Error, Result};
use crate::geometry::PointSet;
use crate::label::Label;
use crate::matchings::{Matching, MatchingFlips};
use crate::permutations::{Permutation, PermutationFlips};
use crate::spanning_trees::{PlaneTree, TreeFlips};
use crate::subsets::{Subset, SubsetFlips};
use crate::triangulations::{Triangulation, TriangulationFlips};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Triangulation,
    Tree,
    Matching,
    Permutation,
    Subset,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Triangulation => "triangulation",
            Family::Tree => "tree",
            Family::Matching => "matching",
            Family::Permutation => "permutation",
            Family::Subset => "subset",
        }
    }
}

/// Family parameters. `n` is the number of points or ground elements;
/// matchings also carry `m = n / 2`, subsets carry `k`, trees carry the
/// labeled point set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<[i64; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateRecord {
    pub family: Family,
    pub n: u32,
    pub state: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleRecord {
    pub family: Family,
    pub params: Params,
    pub states: Vec<Value>,
    pub labels: Vec<Vec<Label>>,
    pub r: usize,
}

/// A flip family whose states can be written to and read from records.
pub trait RecordFamily: FlipFamily {
    fn family(&self) -> Family;
    fn params(&self) -> Params;
    fn encode(&self, state: &Self::State) -> Value;
    fn decode(&self, value: &Value) -> Result<Self::State>;
}

fn from_value<T: for<'de> Deserialize<'de>>(value: &Value) -> Result<T> {
    T::deserialize(value).map_err(|e| Error::Parse(format!("{value}: {e}")))
}

fn pairs(labels: &[Label]) -> Value {
    serde_json::to_value(labels).expect("labels serialize")
}

impl RecordFamily for TriangulationFlips {
    fn family(&self) -> Family {
        Family::Triangulation
    }

    fn params(&self) -> Params {
        Params {
            n: self.n,
            ..Params::default()
        }
    }

    fn encode(&self, t: &Triangulation) -> Value {
        pairs(t.diagonals())
    }

    fn decode(&self, value: &Value) -> Result<Triangulation> {
        Triangulation::new(self.n, from_value(value)?)
    }
}

impl RecordFamily for TreeFlips {
    fn family(&self) -> Family {
        Family::Tree
    }

    fn params(&self) -> Params {
        let points = self.points().points().iter().map(|p| [p.x, p.y]).collect();
        Params {
            n: self.n(),
            points: Some(points),
            ..Params::default()
        }
    }

    fn encode(&self, t: &PlaneTree) -> Value {
        pairs(t.edges())
    }

    fn decode(&self, value: &Value) -> Result<PlaneTree> {
        Ok(PlaneTree::from_edges(self.n(), from_value(value)?))
    }
}

impl RecordFamily for MatchingFlips {
    fn family(&self) -> Family {
        Family::Matching
    }

    fn params(&self) -> Params {
        Params {
            n: 2 * self.m,
            m: Some(self.m),
            ..Params::default()
        }
    }

    fn encode(&self, s: &Matching) -> Value {
        pairs(s.edges())
    }

    fn decode(&self, value: &Value) -> Result<Matching> {
        Matching::new(self.m, from_value(value)?)
    }
}

impl RecordFamily for PermutationFlips {
    fn family(&self) -> Family {
        Family::Permutation
    }

    fn params(&self) -> Params {
        Params {
            n: self.n,
            ..Params::default()
        }
    }

    fn encode(&self, p: &Permutation) -> Value {
        serde_json::to_value(p.as_slice()).expect("integers serialize")
    }

    fn decode(&self, value: &Value) -> Result<Permutation> {
        Permutation::new(from_value(value)?)
    }
}

impl RecordFamily for SubsetFlips {
    fn family(&self) -> Family {
        Family::Subset
    }

    fn params(&self) -> Params {
        Params {
            n: self.n,
            k: Some(self.k),
            ..Params::default()
        }
    }

    fn encode(&self, s: &Subset) -> Value {
        serde_json::to_value(s.elems()).expect("integers serialize")
    }

    fn decode(&self, value: &Value) -> Result<Subset> {
        Subset::new(self.n, from_value(value)?)
    }
}

impl StateRecord {
    pub fn new<F: RecordFamily>(family: &F, state: &F::State) -> Self {
        StateRecord {
            family: family.family(),
            n: family.params().n,
            state: family.encode(state),
        }
    }
}

impl CycleRecord {
    pub fn new<F: RecordFamily>(family: &F, cycle: &LabeledFlipCycle<F::State>, r: usize) -> Self {
        CycleRecord {
            family: family.family(),
            params: family.params(),
            states: cycle.states.iter().map(|s| family.encode(s)).collect(),
            labels: cycle.step_labels.clone(),
            r,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Re-checks the record from its states alone. Claimed labels that
    /// disagree with the recomputed ones show up as violations.
    pub fn verify(&self) -> Result<RainbowReport> {
        let p = &self.params;
        match self.family {
            Family::Triangulation => self.verify_with(&TriangulationFlips::new(p.n)),
            Family::Tree => {
                let coords = p
                    .points
                    .as_ref()
                    .ok_or_else(|| Error::Parse("tree records need params.points".into()))?;
                let raw: Vec<(i64, i64)> = coords.iter().map(|&[x, y]| (x, y)).collect();
                let points = PointSet::from_coords(&raw)?;
                let relabeled: Vec<[i64; 2]> = points.points().iter().map(|q| [q.x, q.y]).collect();
                if &relabeled != coords || points.n() != p.n {
                    return Err(Error::Parse("params.points is not canonically labeled".into()));
                }
                self.verify_with(&TreeFlips::new(points))
            }
            Family::Matching => {
                let m = p.m.unwrap_or(p.n / 2);
                if 2 * m != p.n {
                    return Err(Error::Parse(format!("n = {} is not 2m for m = {m}", p.n)));
                }
                self.verify_with(&MatchingFlips { m })
            }
            Family::Permutation => self.verify_with(&PermutationFlips { n: p.n }),
            Family::Subset => {
                let k = p.k.ok_or_else(|| Error::Parse("subset records need params.k".into()))?;
                self.verify_with(&SubsetFlips { n: p.n, k })
            }
        }
    }

    fn verify_with<F: RecordFamily>(&self, family: &F) -> Result<RainbowReport> {
        let states = self
            .states
            .iter()
            .map(|v| family.decode(v))
            .collect::<Result<Vec<_>>>()?;
        let cycle = LabeledFlipCycle::new(states, self.labels.clone());
        Ok(verify_rainbow(family, &cycle, self.r))
    }

    /// Graphviz rendering: one node per state, one arc per step labeled by
    /// its entering labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {} {{", self.family.name()).unwrap();
        for (i, s) in self.states.iter().enumerate() {
            let text = s.to_string().replace('"', "\\\"");
            writeln!(out, "  s{i} [label=\"{text}\"];").unwrap();
        }
        let len = self.states.len();
        for (i, labels) in self.labels.iter().enumerate() {
            let text: Vec<String> = labels.iter().map(Label::to_string).collect();
            writeln!(
                out,
                "  s{i} -> s{} [label=\"{}\"];",
                (i + 1) % len.max(1),
                text.join(" ")
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}
