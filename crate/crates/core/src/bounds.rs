//! Lower bounds with checkable certificates, constructive upper bounds, the small-value
//! characterization, LimitedNeighbours and the subgraph-expansion conjecture checker.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::engine::{self, Strategy, Variant};
use crate::error::{BoundError, GraphError};
use crate::graph::Graph;
use crate::nodeset::NodeSet;
use crate::strategies;

/// Largest graph handled by subset enumeration.
pub const ENUM_LIMIT: usize = 24;
/// Largest graph whose induced subgraphs are all enumerated.
pub const EXHAUSTIVE_SUBGRAPH_LIMIT: usize = 14;
/// Node cap of the neighbourhood balls sampled above [`EXHAUSTIVE_SUBGRAPH_LIMIT`].
const BALL_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    MinDegree,
    EdgeCount,
    Expansion,
    SubgraphExpansion,
    Characterization,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CertificateKind::MinDegree => "min_degree",
            CertificateKind::EdgeCount => "edge_count",
            CertificateKind::Expansion => "expansion",
            CertificateKind::SubgraphExpansion => "subgraph_expansion",
            CertificateKind::Characterization => "characterization",
        };
        f.write_str(s)
    }
}

/// Evidence that `ffn ≥ m`.
///
/// For the expansion kinds, every `W ⊆ V_prime` with `|W| = i` has at least `m − 1`
/// neighbours inside the subgraph induced by `V_prime`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    #[serde(rename = "V_prime")]
    pub v_prime: Vec<usize>,
    pub i: usize,
    pub m: usize,
}

impl Certificate {
    /// Re-checks the certificate against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        match self.kind {
            CertificateKind::MinDegree => self.m <= lb_min_degree(g),
            CertificateKind::EdgeCount => self.m == 0 || edge_inequality(g, self.m),
            CertificateKind::Characterization => match self.m {
                0 | 1 => g.n() >= self.m,
                2 => !g.is_edgeless(),
                3 => !g.is_caterpillar_forest(),
                _ => false,
            },
            CertificateKind::Expansion | CertificateKind::SubgraphExpansion => {
                let mut nodes = self.v_prime.clone();
                nodes.sort_unstable();
                nodes.dedup();
                if nodes.len() != self.v_prime.len() || nodes.iter().any(|&v| v >= g.n()) {
                    return false;
                }
                if self.kind == CertificateKind::Expansion && nodes.len() != g.n() {
                    return false;
                }
                let h = g.induced_subgraph(&nodes);
                if self.m == 0 {
                    return true;
                }
                if self.i == 0 || self.i + self.m > h.n() + 1 {
                    return false;
                }
                if h.n() > ENUM_LIMIT {
                    return false;
                }
                min_neighbours_of_size(&h, self.i) + 1 >= self.m
            }
        }
    }
}

/// `δ_min + 1`, or 0 for the empty graph.
pub fn lb_min_degree(g: &Graph) -> usize {
    g.min_degree().map_or(0, |d| d + 1)
}

fn edge_inequality(g: &Graph, m: usize) -> bool {
    // |E| ≥ m(n − (m+1)/2), doubled to stay in integers.
    let n = g.n() as i64;
    let m = m as i64;
    2 * g.edge_count() as i64 >= m * (2 * n - m - 1)
}

/// Largest `m` with `|E| ≥ m(|V| − (m+1)/2)`, floored at 1 for nonempty graphs.
pub fn lb_edge_count(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    (1..=g.n()).filter(|&m| edge_inequality(g, m)).max().unwrap_or(1)
}

/// Visits all `k`-subsets of `0..n` as masks in increasing numeric order.
fn for_each_k_subset(n: usize, k: usize, mut visit: impl FnMut(u64) -> bool) {
    if k > n {
        return;
    }
    if k == 0 {
        visit(0);
        return;
    }
    let limit = 1u64 << n;
    let mut s: u64 = (1u64 << k) - 1;
    while s < limit {
        if !visit(s) {
            return;
        }
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

fn open_nb_mask(adj: &[u64], w: u64) -> u64 {
    let mut out = 0;
    let mut bits = w;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out |= adj[v];
    }
    out & !w
}

fn min_neighbours_of_size(g: &Graph, i: usize) -> usize {
    let adj = g.adjacency_masks().expect("small graph");
    let mut best = usize::MAX;
    for_each_k_subset(g.n(), i, |w| {
        best = best.min(open_nb_mask(&adj, w).count_ones() as usize);
        best > 0
    });
    best
}

fn check_enum_size(g: &Graph) -> Result<Vec<u64>, BoundError> {
    if g.n() > ENUM_LIMIT {
        return Err(BoundError::Precondition(format!(
            "subset enumeration supports at most {ENUM_LIMIT} nodes, got {}",
            g.n()
        )));
    }
    Ok(g.adjacency_masks().expect("at most 64 nodes"))
}

/// Whether every `W` with `|W| = i` has `|N(W)| ≥ m − 1`.
pub fn expansion_holds(g: &Graph, i: usize, m: usize) -> Result<bool, BoundError> {
    if i == 0 || i + m > g.n() + 1 {
        return Err(BoundError::Precondition(format!(
            "need 1 ≤ i ≤ n − m + 1, got i={i}, m={m}, n={}",
            g.n()
        )));
    }
    if m <= 1 {
        return Ok(true);
    }
    Ok(limited_neighbours_bruteforce(g, m - 1, i)?.is_none())
}

/// Best bound from applying the expansion criterion to `g` itself.
pub fn lb_expansion(g: &Graph) -> Result<(usize, Certificate), BoundError> {
    if g.n() > 20 {
        return Err(BoundError::Precondition("expansion profile limited to 20 nodes".into()));
    }
    let adj = g.adjacency_masks().expect("small graph");
    let full = if g.n() == 0 { 0 } else { u64::MAX >> (64 - g.n()) };
    let profile = subset_profile(&adj, full);
    let (m, i) = best_from_profile(&profile, g.n());
    Ok((
        m,
        Certificate {
            kind: CertificateKind::Expansion,
            v_prime: (0..g.n()).collect(),
            i,
            m,
        },
    ))
}

/// `profile[i]` = smallest `|N(W) ∩ within|` over `W ⊆ within`, `|W| = i`.
fn subset_profile(adj: &[u64], within: u64) -> Vec<usize> {
    let h = within.count_ones() as usize;
    let mut profile = vec![usize::MAX; h + 1];
    profile[0] = 0;
    let mut w = within;
    while w != 0 {
        let nb = (open_nb_mask(adj, w) & within).count_ones() as usize;
        let i = w.count_ones() as usize;
        if nb < profile[i] {
            profile[i] = nb;
        }
        w = (w - 1) & within;
    }
    profile
}

/// Largest `m` certified by a profile and the first `i` achieving it; `(0, 0)` if empty.
fn best_from_profile(profile: &[usize], h: usize) -> (usize, usize) {
    let mut best = (0, 0);
    for (i, &nb) in profile.iter().enumerate().skip(1) {
        let m = (nb + 1).min(h - i + 1);
        if m > best.0 {
            best = (m, i);
        }
    }
    best
}

/// Best subgraph-expansion bound: exhaustive over induced subgraphs for small graphs, over
/// subsets of bounded neighbourhood balls otherwise. `search_budget` caps the number of
/// `(V', W)` pairs examined.
pub fn lb_subgraph_expansion(g: &Graph, search_budget: usize) -> (usize, Certificate) {
    let mut best = Certificate {
        kind: CertificateKind::SubgraphExpansion,
        v_prime: vec![],
        i: 0,
        m: 0,
    };
    let mut spent = 0usize;
    let consider = |nodes: &[usize], profile: &[usize], best: &mut Certificate| {
        let (m, i) = best_from_profile(profile, nodes.len());
        if m > best.m {
            *best = Certificate {
                kind: CertificateKind::SubgraphExpansion,
                v_prime: nodes.to_vec(),
                i,
                m,
            };
        }
    };
    if g.n() == 0 {
        return (0, best);
    }
    if g.n() <= EXHAUSTIVE_SUBGRAPH_LIMIT {
        let adj = g.adjacency_masks().expect("small graph");
        let full = u64::MAX >> (64 - g.n());
        let mut vp = full;
        loop {
            let profile = subset_profile(&adj, vp);
            spent += 1 << vp.count_ones();
            let nodes: Vec<usize> = (0..g.n()).filter(|&v| vp >> v & 1 == 1).collect();
            consider(&nodes, &profile, &mut best);
            if vp == 0 || spent > search_budget {
                break;
            }
            vp -= 1;
        }
        return (best.m, best);
    }
    if g.n() <= 20 {
        if let Ok((m, cert)) = lb_expansion(g) {
            spent += 1 << g.n();
            if m > best.m {
                best = Certificate {
                    kind: CertificateKind::SubgraphExpansion,
                    ..cert
                };
            }
        }
    }
    'centres: for centre in 0..g.n() {
        let mut ball = Vec::new();
        let dist = g.distances_from(centre);
        let mut order: Vec<usize> = (0..g.n()).filter(|&v| dist[v].is_some()).collect();
        order.sort_by_key(|&v| (dist[v], v));
        ball.extend(order.into_iter().take(BALL_CAP));
        let local = g.induced_subgraph(&ball);
        let adj = local.adjacency_masks().expect("ball is small");
        let full = u64::MAX >> (64 - ball.len());
        let mut vp = full;
        while vp != 0 {
            let profile = subset_profile(&adj, vp);
            spent += 1 << vp.count_ones();
            let mut nodes: Vec<usize> = (0..ball.len())
                .filter(|&v| vp >> v & 1 == 1)
                .map(|v| ball[v])
                .collect();
            nodes.sort_unstable();
            consider(&nodes, &profile, &mut best);
            if spent > search_budget {
                break 'centres;
            }
            vp -= 1;
        }
    }
    (best.m, best)
}

/// Some `W` with `|W| = k` and `|N(W)| ≤ m − 1`, by enumerating all `k`-subsets.
pub fn limited_neighbours_bruteforce(g: &Graph, m: usize, k: usize) -> Result<Option<NodeSet>, BoundError> {
    let adj = check_enum_size(g)?;
    if m == 0 {
        return Ok(None);
    }
    let mut found = None;
    for_each_k_subset(g.n(), k, |w| {
        if open_nb_mask(&adj, w).count_ones() as usize <= m - 1 {
            found = Some(w);
            false
        } else {
            true
        }
    });
    Ok(found.map(|w| NodeSet::from_mask(g.n(), w)))
}

/// Same question answered by removing every `S` with `|S| ≤ m − 1` and picking whole
/// components of `G − S` whose sizes sum to `k`.
pub fn limited_neighbours_bounded_m(g: &Graph, m: usize, k: usize) -> Result<Option<NodeSet>, BoundError> {
    if g.n() > 64 {
        return Err(BoundError::Precondition("at most 64 nodes".into()));
    }
    if m == 0 || k > g.n() {
        return Ok(None);
    }
    for size in 0..m.min(g.n() + 1) {
        let mut found = None;
        for_each_k_subset(g.n(), size, |s| {
            let removed = NodeSet::from_mask(g.n(), s);
            let rest = removed.complement();
            let comps = g.components_within(&rest);
            let sizes: Vec<usize> = comps.iter().map(NodeSet::len).collect();
            if let Some(pick) = subset_sum(&sizes, k) {
                let mut w = g.no_nodes();
                for c in pick {
                    w.union_with(&comps[c]);
                }
                found = Some(w);
                false
            } else {
                true
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Indices of items summing to exactly `target`, via reachability over partial sums.
fn subset_sum(sizes: &[usize], target: usize) -> Option<Vec<usize>> {
    // via[s] = item that first reached sum s (usize::MAX for the empty sum).
    let mut via: Vec<Option<usize>> = vec![None; target + 1];
    let mut reached = vec![false; target + 1];
    reached[0] = true;
    for (idx, &w) in sizes.iter().enumerate() {
        for s in (w..=target).rev() {
            if !reached[s] && reached[s - w] {
                reached[s] = true;
                via[s] = Some(idx);
            }
        }
    }
    if !reached[target] {
        return None;
    }
    let mut pick = Vec::new();
    let mut s = target;
    while s > 0 {
        let idx = via[s].expect("reached sums record their item");
        pick.push(idx);
        s -= sizes[idx];
    }
    Some(pick)
}

/// 1 for edgeless graphs, 2 for caterpillar forests with an edge.
pub fn char_small_ffn(g: &Graph) -> Option<usize> {
    if g.n() == 0 {
        None
    } else if g.is_edgeless() {
        Some(1)
    } else if g.is_caterpillar_forest() {
        Some(2)
    } else {
        None
    }
}

/// Lower bound implied by the characterization: 1, 2 or 3.
pub fn lb_characterization(g: &Graph) -> usize {
    match char_small_ffn(g) {
        Some(v) => v,
        None if g.n() == 0 => 0,
        None => 3,
    }
}

/// `log_3(2|V| + 1) + 2` for forests.
pub fn forest_bound(g: &Graph) -> Result<f64, BoundError> {
    if !g.is_forest() {
        return Err(GraphError::NotAForest.into());
    }
    Ok(((2 * g.n() + 1) as f64).log(3.0) + 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BinaryTreeBounds {
    /// Lower bound value; exclusive when `strict` is set.
    pub lower: f64,
    pub strict: bool,
    /// Smallest integer the lower bound allows.
    pub lower_int: usize,
    pub upper: usize,
}

/// Bounds on the firefighter number of the complete binary tree of depth `d`.
pub fn binary_tree_bounds(d: usize) -> BinaryTreeBounds {
    const TABLE: [(usize, usize); 7] = [(1, 1), (2, 2), (2, 2), (3, 3), (3, 3), (3, 4), (3, 4)];
    if d < TABLE.len() {
        let (lo, hi) = TABLE[d];
        return BinaryTreeBounds {
            lower: lo as f64,
            strict: false,
            lower_int: lo,
            upper: hi,
        };
    }
    let lower = ((d - 1) / 2) as f64 - 0.5 * (((d - 5) / 2) as f64).log2() - 2.0;
    BinaryTreeBounds {
        lower,
        strict: true,
        lower_int: (lower.floor() as i64 + 1).max(1) as usize,
        upper: d.div_ceil(2) + 1,
    }
}

/// Bit transitions in the binary representation of `x`.
pub fn flips(x: u128) -> u32 {
    if x == 0 {
        0
    } else {
        (x ^ (x >> 1)).count_ones() - 1
    }
}

pub fn hamming_weight(x: u128) -> u32 {
    x.count_ones()
}

/// `Σ_{i=0}^{(d−1)/2} 2^{2i+1}` for odd `d`.
pub fn alternating_sum(d: u32) -> u128 {
    (0..=(d - 1) / 2).map(|i| 1u128 << (2 * i + 1)).sum()
}

/// For odd `d`: `flips(A_d + x) = d` when `x = 0`, otherwise `≥ d − ⌊log₂|x|⌋ − 4`.
pub fn check_alternating_flips(d: u32, x: i64) -> bool {
    assert!(d % 2 == 1 && d < 120, "d must be odd and small");
    let a = alternating_sum(d) as i128;
    let sum = a + x as i128;
    if x == 0 {
        return flips(sum as u128) == d;
    }
    let log = 63 - x.unsigned_abs().leading_zeros() as i64;
    let rhs = d as i64 - log - 4;
    if rhs <= 0 {
        return true;
    }
    sum > 0 && flips(sum as u128) as i64 >= rhs
}

/// Input hints for [`ub_constructive`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct UbHints {
    pub path_decomposition: Option<Vec<Vec<usize>>>,
    pub removal: Option<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct UpperBound {
    pub m: usize,
    pub rule: String,
    pub strategy: Strategy,
}

/// Best verified upper bound from the available constructions.
pub fn ub_constructive(g: &Graph, hints: &UbHints) -> Result<UpperBound, BoundError> {
    let mut candidates: Vec<UpperBound> = Vec::new();
    if let Some(bags) = &hints.path_decomposition {
        let s = strategies::strategy_path_decomposition(g, bags)?;
        candidates.push(UpperBound {
            m: s.budget(),
            rule: s.provenance().unwrap_or("path_decomposition").to_string(),
            strategy: s,
        });
    }
    if let Some(removal) = &hints.removal {
        let r = g.node_set(removal.iter().copied())?;
        candidates.push(removal_bound(g, &r)?.ok_or_else(|| {
            BoundError::Precondition("no construction applies to the graph left after removal".into())
        })?);
    }
    if let Some(b) = structural_bound(g)? {
        candidates.push(b);
    }
    if g.n() <= 16 {
        for k in 1..g.n() {
            let current = candidates.iter().map(|c| c.m).min().unwrap_or(g.n());
            if k + 1 >= current {
                break;
            }
            let mut found: Option<UpperBound> = None;
            for_each_k_subset(g.n(), k, |s| {
                let r = NodeSet::from_mask(g.n(), s);
                if let Ok(Some(b)) = removal_bound(g, &r) {
                    if found.as_ref().is_none_or(|f| b.m < f.m) {
                        found = Some(b);
                    }
                }
                true
            });
            candidates.extend(found);
        }
    }
    let all: Vec<usize> = (0..g.n()).collect();
    candidates.push(UpperBound {
        m: g.n(),
        rule: "clique".into(),
        strategy: strategies::strategy_clique_on(g, &all),
    });
    let best = candidates
        .into_iter()
        .min_by_key(|c| c.m)
        .expect("the trivial bound is always present");
    if !engine::is_winning(g, &best.strategy, Variant::Firefighter) {
        return Err(BoundError::Verification(format!("{} strategy loses", best.rule)));
    }
    Ok(best)
}

/// Bounds from structure alone: edgeless, caterpillar or tree components, combined
/// component by component.
fn structural_bound(g: &Graph) -> Result<Option<UpperBound>, BoundError> {
    if g.n() == 0 {
        return Ok(Some(UpperBound {
            m: 0,
            rule: "edgeless".into(),
            strategy: Strategy::new(0, vec![]).expect("empty").with_provenance("edgeless"),
        }));
    }
    if !g.is_forest() {
        return Ok(None);
    }
    let mut parts: Vec<(usize, Vec<NodeSet>)> = Vec::new();
    let mut rules: Vec<&str> = Vec::new();
    for comp in g.components() {
        let nodes = comp.to_vec();
        let t = g.induced_subgraph(&nodes);
        let (s, rule) = if t.n() == 1 {
            (strategies::strategy_edgeless(&t)?, "edgeless")
        } else if t.is_caterpillar_forest() {
            let bags = caterpillar_bags(&t);
            (strategies::strategy_path_decomposition(&t, &bags)?, "caterpillar")
        } else {
            let diam = t.diameter().expect("tree is connected");
            let m = diam.div_ceil(2) + 1;
            (strategies::strategy_tree_diameter(&t, m)?, "tree_diameter")
        };
        if !rules.contains(&rule) {
            rules.push(rule);
        }
        let lifted = s.steps().iter().map(|f| lift(f, &nodes, g.n())).collect();
        parts.push((s.budget(), lifted));
    }
    let m = parts.iter().map(|p| p.0).max().unwrap_or(0);
    let steps: Vec<NodeSet> = parts.into_iter().flat_map(|p| p.1).collect();
    let rule = rules.join("+");
    let strategy = Strategy::new(m, steps).expect("component budgets").with_provenance(rule.clone());
    Ok(Some(UpperBound { m, rule, strategy }))
}

fn lift(f: &NodeSet, nodes: &[usize], n: usize) -> NodeSet {
    NodeSet::from_nodes(n, f.iter().map(|v| nodes[v])).expect("lifted nodes are in range")
}

/// Holding `r` every step while solving `G − r` structurally.
fn removal_bound(g: &Graph, r: &NodeSet) -> Result<Option<UpperBound>, BoundError> {
    let keep: Vec<usize> = r.complement().to_vec();
    let rest = g.induced_subgraph(&keep);
    let Some(inner) = structural_bound(&rest)? else {
        return Ok(None);
    };
    let k = r.len();
    let mut steps: Vec<NodeSet> = inner
        .strategy
        .steps()
        .iter()
        .map(|f| lift(f, &keep, g.n()).union(r))
        .collect();
    if steps.is_empty() {
        steps.push(r.clone());
    }
    let rule = format!("removal({k})+{}", inner.rule);
    let strategy = Strategy::new(inner.m + k, steps)
        .expect("budget grows by the removed set")
        .with_provenance(rule.clone());
    Ok(Some(UpperBound {
        m: inner.m + k,
        rule,
        strategy,
    }))
}

/// Width-1 path decomposition of a caterpillar tree.
pub fn caterpillar_bags(t: &Graph) -> Vec<Vec<usize>> {
    if t.n() <= 2 {
        return vec![(0..t.n()).collect()];
    }
    let spine: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) > 1).collect();
    let core = t.induced_subgraph(&spine);
    let start = (0..core.n()).find(|&v| core.degree(v) <= 1).unwrap_or(0);
    let mut order = vec![spine[start]];
    let mut prev = None;
    let mut cur = start;
    loop {
        let next = core.neighbors(cur).iter().find(|&v| Some(v) != prev);
        match next {
            Some(v) => {
                order.push(spine[v]);
                prev = Some(cur);
                cur = v;
            }
            None => break,
        }
    }
    let mut bags = Vec::new();
    for (idx, &s) in order.iter().enumerate() {
        for leaf in t.neighbors(s).iter().filter(|&l| t.degree(l) == 1) {
            bags.push(vec![s, leaf]);
        }
        if let Some(&next) = order.get(idx + 1) {
            bags.push(vec![s, next]);
        }
    }
    bags
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Budgets `m` with `ffn > m` for which no certificate exists.
    pub uncertified: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub ffn: usize,
    /// Largest `m` for which some induced subgraph certifies `ffn > m`.
    pub max_certified: Option<usize>,
    pub certificate: Option<Certificate>,
    /// Certificates never exceed the true value.
    pub forward_ok: bool,
    pub counterexample: Option<Counterexample>,
    pub subgraph_scope: String,
}

impl ConjectureReport {
    pub fn consistent(&self) -> bool {
        self.forward_ok && self.counterexample.is_none()
    }
}

/// Compares exhaustive induced-subgraph certificates with the exact value `ffn`.
pub fn check_conjecture(g: &Graph, ffn: usize) -> Result<ConjectureReport, BoundError> {
    if g.n() > EXHAUSTIVE_SUBGRAPH_LIMIT {
        return Err(BoundError::Precondition(format!(
            "exhaustive subgraph enumeration supports at most {EXHAUSTIVE_SUBGRAPH_LIMIT} nodes"
        )));
    }
    let (lb, cert) = lb_subgraph_expansion(g, usize::MAX);
    // An expansion certificate for m + 1 is exactly a conjecture certificate for m.
    let max_certified = lb.checked_sub(1);
    let forward_ok = lb <= ffn;
    let top = ffn.checked_sub(1);
    let uncertified: Vec<usize> = match top {
        Some(top) => (max_certified.map_or(0, |c| c + 1)..=top).collect(),
        None => vec![],
    };
    Ok(ConjectureReport {
        ffn,
        max_certified,
        certificate: (lb > 0).then_some(cert),
        forward_ok,
        counterexample: (!uncertified.is_empty()).then_some(Counterexample { uncertified }),
        subgraph_scope: "induced".into(),
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LowerEntry {
    pub value: usize,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UpperEntry {
    pub value: usize,
    pub rule: String,
    pub strategy: crate::engine::StrategyJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub lower: Vec<LowerEntry>,
    pub best_lower: usize,
    pub upper: Option<UpperEntry>,
    pub characterization: Option<usize>,
    pub forest_bound: Option<f64>,
}

/// Every applicable bound with its certificate or strategy.
pub fn bound_report(g: &Graph, hints: &UbHints) -> Result<BoundReport, BoundError> {
    if let Some(bags) = &hints.path_decomposition {
        strategies::validate_path_decomposition(g, bags)?;
    }
    if let Some(removal) = &hints.removal {
        g.node_set(removal.iter().copied())?;
    }
    let mut lower = Vec::new();
    let cert = |kind, m| Certificate {
        kind,
        v_prime: vec![],
        i: 0,
        m,
    };
    lower.push(LowerEntry {
        value: lb_min_degree(g),
        certificate: cert(CertificateKind::MinDegree, lb_min_degree(g)),
    });
    lower.push(LowerEntry {
        value: lb_edge_count(g),
        certificate: cert(CertificateKind::EdgeCount, lb_edge_count(g)),
    });
    lower.push(LowerEntry {
        value: lb_characterization(g),
        certificate: cert(CertificateKind::Characterization, lb_characterization(g)),
    });
    if let Ok((m, c)) = lb_expansion(g) {
        lower.push(LowerEntry { value: m, certificate: c });
    }
    let (m, c) = lb_subgraph_expansion(g, 20_000_000);
    lower.push(LowerEntry { value: m, certificate: c });
    let best_lower = lower.iter().map(|e| e.value).max().unwrap_or(0);
    let upper = ub_constructive(g, hints).ok().map(|u| UpperEntry {
        value: u.m,
        rule: u.rule,
        strategy: u.strategy.to_json(),
    });
    Ok(BoundReport {
        n: g.n(),
        lower,
        best_lower,
        upper,
        characterization: char_small_ffn(g),
        forest_bound: forest_bound(g).ok(),
    })
}
