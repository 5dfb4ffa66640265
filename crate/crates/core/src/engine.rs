//! Game semantics, strategies and verification.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::StrategyError;
use crate::graph::Graph;
use crate::nodeset::NodeSet;

/// Propagation rule.
///
/// In the firefighter game fire keeps burning where it was and spreads to neighbours.
/// In the hunter game the fugitive must move, so only the neighbourhood survives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    #[default]
    Firefighter,
    Hunter,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Firefighter => "firefighter",
            Variant::Hunter => "hunter",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "firefighter" | "ff" => Ok(Variant::Firefighter),
            "hunter" => Ok(Variant::Hunter),
            _ => Err(format!("unknown variant '{s}' (expected firefighter or hunter)")),
        }
    }
}

/// One round: remove `f` from `burning`, then propagate.
pub fn step(g: &Graph, burning: &NodeSet, f: &NodeSet, variant: Variant) -> NodeSet {
    let rest = burning.difference(f);
    match variant {
        Variant::Firefighter => g.closed_neighborhood(&rest),
        Variant::Hunter => {
            let mut out = g.no_nodes();
            for u in &rest {
                out.union_with(g.neighbors(u));
            }
            out
        }
    }
}

/// [`step`] on graphs with at most 64 nodes, with adjacency rows as words.
#[inline]
pub fn step_mask(adj: &[u64], burning: u64, f: u64, variant: Variant) -> u64 {
    let rest = burning & !f;
    let mut out = match variant {
        Variant::Firefighter => rest,
        Variant::Hunter => 0,
    };
    let mut bits = rest;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out |= adj[v];
    }
    out
}

/// A sequence of firefighter sets, each of size at most `m`.
#[derive(Clone, PartialEq, Eq)]
pub struct Strategy {
    m: usize,
    steps: Vec<NodeSet>,
    provenance: Option<String>,
}

impl Strategy {
    pub fn new(m: usize, steps: Vec<NodeSet>) -> Result<Self, StrategyError> {
        for (i, f) in steps.iter().enumerate() {
            if f.len() > m {
                return Err(StrategyError::OverBudget {
                    step: i + 1,
                    size: f.len(),
                    m,
                });
            }
        }
        Ok(Strategy {
            m,
            steps,
            provenance: None,
        })
    }

    /// Builds a strategy for a graph with `n` nodes from node lists.
    pub fn from_lists(n: usize, m: usize, steps: &[Vec<usize>]) -> Result<Self, StrategyError> {
        let mut sets = Vec::with_capacity(steps.len());
        for (i, list) in steps.iter().enumerate() {
            let set = NodeSet::from_nodes(n, list.iter().copied()).map_err(|node| {
                StrategyError::NodeOutOfRange {
                    step: i + 1,
                    node,
                    n,
                }
            })?;
            sets.push(set);
        }
        Strategy::new(m, sets)
    }

    pub fn with_provenance(mut self, rule: impl Into<String>) -> Self {
        self.provenance = Some(rule.into());
        self
    }

    pub fn budget(&self) -> usize {
        self.m
    }

    pub fn steps(&self) -> &[NodeSet] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn to_json(&self) -> StrategyJson {
        StrategyJson {
            m: self.m,
            steps: self.steps.iter().map(NodeSet::to_vec).collect(),
            provenance: self.provenance.clone(),
        }
    }
}

impl fmt::Debug for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Strategy(m={}, steps=[", self.m)?;
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", s.to_vec())?;
        }
        write!(f, "])")
    }
}

/// Wire form: `{"m": int, "steps": [[int, ...], ...]}` with an optional provenance tag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyJson {
    pub m: usize,
    pub steps: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl StrategyJson {
    pub fn into_strategy(self, n: usize) -> Result<Strategy, StrategyError> {
        let s = Strategy::from_lists(n, self.m, &self.steps)?;
        Ok(match self.provenance {
            Some(p) => s.with_provenance(p),
            None => s,
        })
    }
}

/// Burning sets `B_0 = V, B_1, ..., B_T`.
pub fn run(g: &Graph, s: &Strategy, variant: Variant) -> Vec<NodeSet> {
    run_from(g, g.all_nodes(), s, variant)
}

pub fn run_from(g: &Graph, start: NodeSet, s: &Strategy, variant: Variant) -> Vec<NodeSet> {
    let mut trace = Vec::with_capacity(s.len() + 1);
    trace.push(start);
    for f in s.steps() {
        let next = step(g, trace.last().expect("trace is nonempty"), f, variant);
        trace.push(next);
    }
    trace
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The burning set is empty after step `cleared_at` (and stays empty).
    Win { cleared_at: usize },
    /// `remaining` still burns after the last step; `closest` is the first step with the
    /// fewest burning nodes.
    Loss {
        remaining: NodeSet,
        closest: usize,
        closest_size: usize,
    },
}

impl Verdict {
    pub fn is_win(&self) -> bool {
        matches!(self, Verdict::Win { .. })
    }
}

/// Streams the game without keeping the trace.
pub fn verify(g: &Graph, s: &Strategy, variant: Variant) -> Verdict {
    let mut b = g.all_nodes();
    let mut closest = (b.len(), 0);
    if b.is_empty() {
        return Verdict::Win { cleared_at: 0 };
    }
    for (i, f) in s.steps().iter().enumerate() {
        b = step(g, &b, f, variant);
        if b.is_empty() {
            return Verdict::Win { cleared_at: i + 1 };
        }
        if b.len() < closest.0 {
            closest = (b.len(), i + 1);
        }
    }
    Verdict::Loss {
        remaining: b,
        closest: closest.1,
        closest_size: closest.0,
    }
}

pub fn is_winning(g: &Graph, s: &Strategy, variant: Variant) -> bool {
    verify(g, s, variant).is_win()
}
