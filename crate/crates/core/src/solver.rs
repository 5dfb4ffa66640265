//! Exact search over burning sets.
//!
//! States are burning sets; the search runs breadth-first from the full node set and stops
//! at the first empty set, so the depth reached is the shortest winning length.

use std::time::{Duration, Instant};

use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

use crate::bounds::{lb_edge_count, lb_min_degree};
use crate::engine::{self, Strategy, StrategyJson, Variant};
use crate::error::SolveError;
use crate::graph::Graph;
use crate::nodeset::NodeSet;

/// Largest class count for which dominance uses a dense bitmap over all states.
const DENSE_LIMIT: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_states: Option<usize>,
    pub max_time: Option<Duration>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_states: Some(50_000_000),
            max_time: None,
        }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits {
            max_states: None,
            max_time: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Merge twin nodes and move whole classes only.
    pub twin_reduction: bool,
    /// Restrict moves to maximal subsets of the burning set and drop dominated states.
    pub pruning: bool,
    pub limits: Limits,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            twin_reduction: true,
            pruning: true,
            limits: Limits::default(),
        }
    }
}

impl SearchOptions {
    /// Every `F ⊆ V` with `|F| ≤ m`, exact duplicate detection, no quotient.
    pub fn naive() -> Self {
        SearchOptions {
            twin_reduction: false,
            pruning: false,
            limits: Limits::default(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub classes: usize,
    pub states: usize,
    pub expanded: usize,
    pub layers: usize,
    pub elapsed_ms: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.classes = other.classes;
        self.states += other.states;
        self.expanded += other.expanded;
        self.layers += other.layers;
        self.elapsed_ms += other.elapsed_ms;
    }
}

/// Outcome of one budget query.
#[derive(Debug, Clone)]
pub struct Decision {
    pub m: usize,
    /// Shortest winning length, `None` when no winning strategy exists (within the depth cap).
    pub shortest: Option<usize>,
    pub witness: Option<Strategy>,
    pub stats: SearchStats,
}

impl Decision {
    pub fn is_winning(&self) -> bool {
        self.shortest.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Probe {
    pub m: usize,
    pub winning: bool,
    pub t: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub ffn: usize,
    pub variant: Variant,
    /// Shortest winning length with budget `ffn`.
    pub t_m: Option<usize>,
    pub witness: Option<Strategy>,
    pub probes: Vec<Probe>,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultStats {
    #[serde(flatten)]
    pub search: SearchStats,
    pub t_m: Option<usize>,
    pub probes: Vec<Probe>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResultJson {
    pub ffn: usize,
    pub variant: Variant,
    pub witness: Option<StrategyJson>,
    pub stats: ResultStats,
}

impl SolveResult {
    pub fn to_json(&self) -> SolveResultJson {
        SolveResultJson {
            ffn: self.ffn,
            variant: self.variant,
            witness: self.witness.as_ref().map(Strategy::to_json),
            stats: ResultStats {
                search: self.stats.clone(),
                t_m: self.t_m,
                probes: self.probes.clone(),
            },
        }
    }
}

/// Twin classes for the given rule, ordered by smallest member.
///
/// Firefighter: equal closed neighbourhoods (each class is a clique).
/// Hunter: equal open neighbourhoods (each class is independent).
pub fn twin_classes(g: &Graph, variant: Variant) -> Vec<NodeSet> {
    let key = |v: usize| match variant {
        Variant::Firefighter => g.closed_neighbors(v),
        Variant::Hunter => g.neighbors(v).clone(),
    };
    let mut classes: Vec<NodeSet> = Vec::new();
    let mut keys: FxHashMap<NodeSet, usize> = FxHashMap::default();
    for v in 0..g.n() {
        let k = key(v);
        match keys.get(&k) {
            Some(&c) => {
                classes[c].insert(v);
            }
            None => {
                keys.insert(k, classes.len());
                let mut s = g.no_nodes();
                s.insert(v);
                classes.push(s);
            }
        }
    }
    classes
}

/// Maximal true-twin classes and the graph they induce on one another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueQuotient {
    pub classes: Vec<NodeSet>,
    pub class_of: Vec<usize>,
    /// Class `i` is adjacent to class `j` iff some (hence every) pair of members is adjacent.
    pub quotient: Graph,
}

impl CliqueQuotient {
    pub fn weights(&self) -> Vec<usize> {
        self.classes.iter().map(NodeSet::len).collect()
    }
}

pub fn clique_module_reduce(g: &Graph) -> CliqueQuotient {
    let classes = twin_classes(g, Variant::Firefighter);
    let mut class_of = vec![0; g.n()];
    for (c, members) in classes.iter().enumerate() {
        for v in members {
            class_of[v] = c;
        }
    }
    let mut quotient = Graph::new(classes.len());
    for (u, v) in g.edges() {
        let (a, b) = (class_of[u], class_of[v]);
        if a != b {
            quotient.add_edge(a, b).expect("class indices are in range");
        }
    }
    CliqueQuotient {
        classes,
        class_of,
        quotient,
    }
}

/// Class-level view of the game used by the search.
struct Model {
    n: usize,
    members: Vec<NodeSet>,
    weight: Vec<usize>,
    spread: Vec<u64>,
    variant: Variant,
}

impl Model {
    fn build(g: &Graph, variant: Variant, reduce: bool, start: &NodeSet) -> Result<Self, SolveError> {
        let mut members = if reduce {
            twin_classes(g, variant)
        } else {
            (0..g.n())
                .map(|v| NodeSet::from_nodes(g.n(), [v]).expect("in range"))
                .collect()
        };
        if reduce && members.iter().any(|c| !c.is_subset(start) && !c.is_disjoint(start)) {
            members = (0..g.n())
                .map(|v| NodeSet::from_nodes(g.n(), [v]).expect("in range"))
                .collect();
        }
        if members.len() > 64 {
            return Err(SolveError::TooLarge(format!(
                "{} classes after reduction; at most 64 supported",
                members.len()
            )));
        }
        let mut class_of = vec![0; g.n()];
        for (c, s) in members.iter().enumerate() {
            for v in s {
                class_of[v] = c;
            }
        }
        let spread = members
            .iter()
            .map(|s| {
                let rep = s.first().expect("classes are nonempty");
                let mut reach = g.neighbors(rep).clone();
                if variant == Variant::Firefighter {
                    reach.insert(rep);
                }
                reach.iter().fold(0u64, |acc, v| acc | 1 << class_of[v])
            })
            .collect();
        let weight = members.iter().map(NodeSet::len).collect();
        Ok(Model {
            n: g.n(),
            members,
            weight,
            spread,
            variant,
        })
    }

    fn k(&self) -> usize {
        self.members.len()
    }

    fn full(&self) -> u64 {
        match self.k() {
            64 => u64::MAX,
            k => (1u64 << k) - 1,
        }
    }

    #[inline]
    fn step(&self, b: u64, f: u64) -> u64 {
        let rest = b & !f;
        let mut out = match self.variant {
            Variant::Firefighter => rest,
            Variant::Hunter => 0,
        };
        let mut bits = rest;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= self.spread[c];
        }
        out
    }

    fn to_nodes(&self, mask: u64) -> NodeSet {
        let mut out = NodeSet::empty(self.n);
        let mut bits = mask;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out.union_with(&self.members[c]);
        }
        out
    }

    fn from_nodes(&self, set: &NodeSet) -> u64 {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_subset(set))
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    /// Calls `emit` with every move in lexicographic order of class indices.
    fn moves(&self, b: u64, m: usize, pruning: bool, emit: &mut impl FnMut(u64) -> bool) -> bool {
        if pruning {
            let weight: usize = iter_bits(b).map(|c| self.weight[c]).sum();
            if weight <= m {
                return emit(b);
            }
            let avail: Vec<usize> = iter_bits(b).collect();
            self.maximal_moves(&avail, 0, 0, m, b, emit)
        } else {
            let all: Vec<usize> = (0..self.k()).collect();
            self.bounded_moves(&all, 0, 0, m, emit)
        }
    }

    fn maximal_moves(
        &self,
        avail: &[usize],
        at: usize,
        chosen: u64,
        left: usize,
        b: u64,
        emit: &mut impl FnMut(u64) -> bool,
    ) -> bool {
        if at == avail.len() {
            let maximal = iter_bits(b & !chosen).all(|c| self.weight[c] > left);
            return !maximal || emit(chosen);
        }
        let c = avail[at];
        if self.weight[c] <= left
            && !self.maximal_moves(avail, at + 1, chosen | 1 << c, left - self.weight[c], b, emit)
        {
            return false;
        }
        self.maximal_moves(avail, at + 1, chosen, left, b, emit)
    }

    fn bounded_moves(
        &self,
        all: &[usize],
        at: usize,
        chosen: u64,
        left: usize,
        emit: &mut impl FnMut(u64) -> bool,
    ) -> bool {
        if !emit(chosen) {
            return false;
        }
        for i in at..all.len() {
            let c = all[i];
            if self.weight[c] <= left
                && !self.bounded_moves(all, i + 1, chosen | 1 << c, left - self.weight[c], emit)
            {
                return false;
            }
        }
        true
    }
}

fn iter_bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let c = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(c)
        }
    })
}

/// Reached states; in dominance mode the set is kept up-closed.
enum Visited {
    Covered { bits: Vec<u64>, full: u64 },
    Exact(FxHashSet<u64>),
}

impl Visited {
    fn new(k: usize, dominance: bool, full: u64) -> Self {
        if dominance && k <= DENSE_LIMIT {
            Visited::Covered {
                bits: vec![0; (1usize << k).div_ceil(64)],
                full,
            }
        } else {
            Visited::Exact(FxHashSet::default())
        }
    }

    fn contains(&self, s: u64) -> bool {
        match self {
            Visited::Covered { bits, .. } => bits[(s >> 6) as usize] & (1 << (s & 63)) != 0,
            Visited::Exact(set) => set.contains(&s),
        }
    }

    fn insert(&mut self, s: u64) {
        match self {
            Visited::Covered { bits, full } => {
                let get = |bits: &Vec<u64>, x: u64| bits[(x >> 6) as usize] & (1 << (x & 63)) != 0;
                let set = |bits: &mut Vec<u64>, x: u64| bits[(x >> 6) as usize] |= 1 << (x & 63);
                if get(bits, s) {
                    return;
                }
                set(bits, s);
                let mut stack = vec![s];
                while let Some(x) = stack.pop() {
                    let mut free = *full & !x;
                    while free != 0 {
                        let bit = free & free.wrapping_neg();
                        free ^= bit;
                        let y = x | bit;
                        if !get(bits, y) {
                            set(bits, y);
                            stack.push(y);
                        }
                    }
                }
            }
            Visited::Exact(set) => {
                set.insert(s);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Solver {
    pub options: SearchOptions,
}

impl Solver {
    pub fn new(options: SearchOptions) -> Self {
        Solver { options }
    }

    pub fn with_limits(limits: Limits) -> Self {
        Solver {
            options: SearchOptions {
                limits,
                ..SearchOptions::default()
            },
        }
    }

    /// Shortest winning `m`-strategy from `V`, searching at most `depth_cap` rounds.
    pub fn search(
        &self,
        g: &Graph,
        m: usize,
        variant: Variant,
        depth_cap: Option<usize>,
    ) -> Result<Decision, SolveError> {
        self.search_from(g, &g.all_nodes(), m, variant, depth_cap)
    }

    /// Like [`Solver::search`] but starting from an arbitrary burning set.
    pub fn search_from(
        &self,
        g: &Graph,
        start: &NodeSet,
        m: usize,
        variant: Variant,
        depth_cap: Option<usize>,
    ) -> Result<Decision, SolveError> {
        let clock = Instant::now();
        let opts = self.options;
        let model = Model::build(g, variant, opts.twin_reduction, start)?;
        let mut stats = SearchStats {
            classes: model.k(),
            ..SearchStats::default()
        };
        let origin = model.from_nodes(start);
        let finish = |stats: &mut SearchStats, shortest, moves: Option<Vec<u64>>| {
            stats.elapsed_ms = clock.elapsed().as_millis() as u64;
            let witness = moves.map(|mv| {
                let steps = mv.iter().map(|&f| model.to_nodes(f)).collect();
                let s = Strategy::new(m, steps)
                    .expect("moves respect the budget")
                    .with_provenance("solver");
                let trace_end = engine::run_from(g, start.clone(), &s, variant);
                assert!(
                    trace_end.last().is_some_and(NodeSet::is_empty),
                    "solver witness failed verification"
                );
                s
            });
            Decision {
                m,
                shortest,
                witness,
                stats: stats.clone(),
            }
        };
        if origin == 0 {
            return Ok(finish(&mut stats, Some(0), Some(vec![])));
        }

        let mut visited = Visited::new(model.k(), opts.pruning, model.full());
        let mut parents: FxHashMap<u64, (u64, u64)> = FxHashMap::default();
        visited.insert(origin);
        stats.states = 1;
        let mut frontier = vec![origin];
        let mut depth = 0usize;
        loop {
            if depth_cap.is_some_and(|cap| depth >= cap) {
                return Ok(finish(&mut stats, None, None));
            }
            let mut next = Vec::new();
            for &b in &frontier {
                stats.expanded += 1;
                if stats.expanded % 1024 == 0 {
                    if let Some(limit) = opts.limits.max_time {
                        if clock.elapsed() > limit {
                            return Err(SolveError::TimeLimit {
                                limit_ms: limit.as_millis() as u64,
                            });
                        }
                    }
                }
                let mut won = None;
                let mut overflow = false;
                model.moves(b, m, opts.pruning, &mut |f| {
                    let c = model.step(b, f);
                    if c == 0 {
                        won = Some(f);
                        return false;
                    }
                    if !visited.contains(c) {
                        visited.insert(c);
                        parents.insert(c, (b, f));
                        next.push(c);
                        stats.states += 1;
                        if opts.limits.max_states.is_some_and(|l| stats.states > l) {
                            overflow = true;
                            return false;
                        }
                    }
                    true
                });
                if let Some(f) = won {
                    let mut moves = vec![f];
                    let mut cur = b;
                    while cur != origin {
                        let (p, mv) = parents[&cur];
                        moves.push(mv);
                        cur = p;
                    }
                    moves.reverse();
                    stats.layers = depth + 1;
                    return Ok(finish(&mut stats, Some(depth + 1), Some(moves)));
                }
                if overflow {
                    return Err(SolveError::StateLimit {
                        limit: opts.limits.max_states.unwrap_or(0),
                    });
                }
            }
            depth += 1;
            stats.layers = depth;
            if next.is_empty() {
                return Ok(finish(&mut stats, None, None));
            }
            frontier = next;
        }
    }

    pub fn is_m_winning(&self, g: &Graph, m: usize, variant: Variant) -> Result<Decision, SolveError> {
        self.search(g, m, variant, None)
    }

    pub fn shortest_t(&self, g: &Graph, m: usize, variant: Variant) -> Result<Option<usize>, SolveError> {
        Ok(self.search(g, m, variant, None)?.shortest)
    }

    pub fn is_winning_in_time(
        &self,
        g: &Graph,
        m: usize,
        t: usize,
        variant: Variant,
    ) -> Result<bool, SolveError> {
        Ok(self.search(g, m, variant, Some(t))?.is_winning())
    }

    /// Smallest winning budget with a shortest witness for it.
    pub fn ffn(&self, g: &Graph, variant: Variant) -> Result<SolveResult, SolveError> {
        let mut stats = SearchStats::default();
        let mut probes = Vec::new();
        if g.n() == 0 {
            return Ok(SolveResult {
                ffn: 0,
                variant,
                t_m: Some(0),
                witness: Some(Strategy::new(0, vec![]).expect("empty").with_provenance("solver")),
                probes,
                stats,
            });
        }
        let start = match variant {
            Variant::Firefighter => 1.max(lb_min_degree(g)).max(lb_edge_count(g)),
            Variant::Hunter => 1,
        };
        for m in start..=g.n() {
            let d = self.search(g, m, variant, None)?;
            stats.absorb(&d.stats);
            probes.push(Probe {
                m,
                winning: d.is_winning(),
                t: d.shortest,
            });
            if d.is_winning() {
                return Ok(SolveResult {
                    ffn: m,
                    variant,
                    t_m: d.shortest,
                    witness: d.witness,
                    probes,
                    stats,
                });
            }
        }
        unreachable!("extinguishing every node at once always wins")
    }
}

pub fn is_m_winning(g: &Graph, m: usize, variant: Variant) -> Result<Decision, SolveError> {
    Solver::default().is_m_winning(g, m, variant)
}

pub fn ffn(g: &Graph, variant: Variant) -> Result<SolveResult, SolveError> {
    Solver::default().ffn(g, variant)
}

pub fn shortest_t(g: &Graph, m: usize, variant: Variant) -> Result<Option<usize>, SolveError> {
    Solver::default().shortest_t(g, m, variant)
}

pub fn is_winning_in_time(
    g: &Graph,
    m: usize,
    t: usize,
    variant: Variant,
) -> Result<bool, SolveError> {
    Solver::default().is_winning_in_time(g, m, t, variant)
}
