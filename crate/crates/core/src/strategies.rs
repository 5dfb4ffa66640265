//! Explicit strategy constructions. Every constructor verifies its output with the engine
//! before returning it.

use serde::{Deserialize, Serialize};

use crate::engine::{self, Strategy, Variant};
use crate::error::ConstructError;
use crate::gadgets::LabeledGadget;
use crate::graph::Graph;
use crate::nodeset::NodeSet;

fn verified(g: &Graph, s: Strategy, variant: Variant, what: &str) -> Result<Strategy, ConstructError> {
    match engine::verify(g, &s, variant) {
        engine::Verdict::Win { .. } => Ok(s),
        engine::Verdict::Loss { remaining, .. } => Err(ConstructError::Verification(format!(
            "{what}: {} nodes still burn after {} steps",
            remaining.len(),
            s.len()
        ))),
    }
}

fn set(n: usize, nodes: impl IntoIterator<Item = usize>) -> NodeSet {
    NodeSet::from_nodes(n, nodes).expect("constructed nodes are in range")
}

/// One node per step.
pub fn strategy_edgeless(g: &Graph) -> Result<Strategy, ConstructError> {
    if !g.is_edgeless() {
        return Err(ConstructError::Precondition("graph has an edge".into()));
    }
    let steps = (0..g.n()).map(|v| set(g.n(), [v])).collect();
    let s = Strategy::new(g.n().min(1), steps)?.with_provenance("edgeless");
    verified(g, s, Variant::Firefighter, "edgeless")
}

/// `F_1 = V` on `K_n`.
pub fn strategy_clique(n: usize) -> Result<Strategy, ConstructError> {
    if n == 0 {
        return Err(ConstructError::Precondition("clique needs n >= 1".into()));
    }
    Ok(Strategy::new(n, vec![NodeSet::full(n)])?.with_provenance("clique"))
}

/// A single step extinguishing `nodes` on any graph (wins when `nodes = V`).
pub fn strategy_clique_on(g: &Graph, nodes: &[usize]) -> Strategy {
    let steps = if nodes.is_empty() {
        vec![]
    } else {
        vec![set(g.n(), nodes.iter().copied())]
    };
    Strategy::new(nodes.len(), steps)
        .expect("budget equals the step size")
        .with_provenance("clique")
}

/// Checks bag ranges, edge coverage and contiguity of every node's bags.
pub fn validate_path_decomposition(g: &Graph, bags: &[Vec<usize>]) -> Result<(), ConstructError> {
    let bad = |msg: String| Err(ConstructError::InvalidDecomposition(msg));
    let mut first = vec![None; g.n()];
    let mut last = vec![None; g.n()];
    for (t, bag) in bags.iter().enumerate() {
        for &v in bag {
            if v >= g.n() {
                return bad(format!("bag {t} names node {v} outside 0..{}", g.n()));
            }
            if first[v].is_none() {
                first[v] = Some(t);
            }
            if let Some(l) = last[v] {
                if l + 1 < t && l != t {
                    return bad(format!("node {v} occurs in bags {l} and {t} but not in between"));
                }
            }
            last[v] = Some(t);
        }
    }
    if let Some(v) = (0..g.n()).find(|&v| first[v].is_none()) {
        return bad(format!("node {v} is in no bag"));
    }
    for (u, v) in g.edges() {
        if !bags.iter().any(|b| b.contains(&u) && b.contains(&v)) {
            return bad(format!("edge {u}-{v} is in no bag"));
        }
    }
    Ok(())
}

/// `F_t = bag_t` in decomposition order, budget width + 1.
///
/// Falls back to an interleaved sweep (each bag, then its overlap with the next bag) if
/// the plain sweep fails to verify; the provenance names the variant that verified.
pub fn strategy_path_decomposition(g: &Graph, bags: &[Vec<usize>]) -> Result<Strategy, ConstructError> {
    validate_path_decomposition(g, bags)?;
    let n = g.n();
    let m = bags.iter().map(|b| set(n, b.iter().copied()).len()).max().unwrap_or(0);
    let sweep: Vec<NodeSet> = bags.iter().map(|b| set(n, b.iter().copied())).collect();
    let s = Strategy::new(m, sweep.clone())?.with_provenance("path_decomposition");
    if engine::is_winning(g, &s, Variant::Firefighter) {
        return Ok(s);
    }
    let mut steps = Vec::new();
    for (t, bag) in sweep.iter().enumerate() {
        steps.push(bag.clone());
        if let Some(next) = sweep.get(t + 1) {
            steps.push(bag.intersection(next));
        }
    }
    let s = Strategy::new(m, steps)?.with_provenance("path_decomposition_fallback");
    verified(g, s, Variant::Firefighter, "path decomposition")
}

/// Holds a centre `r` while solving each component of `T − r` recursively with `m − 1`.
pub fn strategy_tree_diameter(g: &Graph, m: usize) -> Result<Strategy, ConstructError> {
    if !g.is_tree() {
        return Err(ConstructError::Precondition("graph is not a tree".into()));
    }
    let diam = g.diameter().expect("trees are connected");
    if m == 0 || diam + 2 > 2 * m {
        return Err(ConstructError::Precondition(format!(
            "diameter {diam} exceeds 2m - 2 for m = {m}"
        )));
    }
    let nodes: Vec<usize> = (0..g.n()).collect();
    let steps = tree_steps(g, &nodes)
        .into_iter()
        .map(|f| set(g.n(), f))
        .collect();
    let s = Strategy::new(m, steps)?.with_provenance("tree_diameter");
    verified(g, s, Variant::Firefighter, "tree diameter")
}

/// Steps (as global node lists) for the subtree induced by `nodes`.
fn tree_steps(g: &Graph, nodes: &[usize]) -> Vec<Vec<usize>> {
    if nodes.len() == 1 {
        return vec![vec![nodes[0]]];
    }
    let t = g.induced_subgraph(nodes);
    let centre = (0..t.n())
        .min_by_key(|&v| {
            let ecc = t.distances_from(v).into_iter().map(|d| d.unwrap_or(usize::MAX)).max();
            (ecc, v)
        })
        .expect("nonempty");
    let mut rest = t.all_nodes();
    rest.remove(centre);
    let mut steps = Vec::new();
    for comp in t.components_within(&rest) {
        let sub: Vec<usize> = comp.iter().map(|v| nodes[v]).collect();
        for mut f in tree_steps(g, &sub) {
            f.push(nodes[centre]);
            steps.push(f);
        }
    }
    steps
}

/// Complete binary tree of depth `d` (heap order) with budget `⌈d/2⌉ + 1`.
pub fn strategy_binary_tree(d: usize) -> Result<Strategy, ConstructError> {
    let g = crate::graph::make_family(crate::graph::Family::BinaryTree(d))
        .map_err(|e| ConstructError::Precondition(e.to_string()))?;
    let steps = binary_tree_steps(d, 0)
        .into_iter()
        .map(|f| set(g.n(), f))
        .collect();
    let s = Strategy::new(d.div_ceil(2) + 1, steps)?.with_provenance("binary_tree");
    verified(&g, s, Variant::Firefighter, "binary tree")
}

fn binary_tree_steps(d: usize, root: usize) -> Vec<Vec<usize>> {
    let (left, right) = (2 * root + 1, 2 * root + 2);
    if d == 0 {
        return vec![vec![root]];
    }
    if d % 2 == 1 {
        let mut out = Vec::new();
        for child in [left, right] {
            for mut f in binary_tree_steps(d - 1, child) {
                f.push(root);
                out.push(f);
            }
        }
        out
    } else {
        let mut out = binary_tree_steps(d - 1, left);
        out.push(vec![left, root]);
        out.push(vec![root, right]);
        out.extend(binary_tree_steps(d - 1, right));
        out
    }
}

/// The seven-phase `4m`-strategy on a time gadget built from `G`, given a winning
/// `m`-strategy for `G` of length at most `T`.
pub fn strategy_time_gadget(gadget: &LabeledGadget, inner: &Strategy) -> Result<Strategy, ConstructError> {
    let n = gadget.graph.n();
    let m = gadget.label("A").len();
    let t = (1..).take_while(|j| gadget.get(&format!("P_1^{j}")).is_some()).count() - 1;
    let paths = 2 * t + 2;
    if inner.len() > t {
        return Err(ConstructError::Precondition(format!(
            "inner strategy has {} steps, gadget allows {t}",
            inner.len()
        )));
    }
    if inner.budget() > m {
        return Err(ConstructError::Precondition(format!(
            "inner budget {} exceeds m = {m}",
            inner.budget()
        )));
    }
    let blow = gadget.label("G_blowup").to_vec();
    let l = |name: &str| gadget.label(name).clone();
    let p = |i: usize, j: usize| l(&format!("P_{i}^{j}"));
    let union = |parts: &[NodeSet]| {
        parts.iter().fold(NodeSet::empty(n), |mut acc, s| {
            acc.union_with(s);
            acc
        })
    };
    let (a, b, x, y, z) = (l("A"), l("B"), l("X"), l("Y"), l("Z"));
    let sweep = |steps: &mut Vec<NodeSet>| {
        for i in 1..=paths {
            for j in 1..=t {
                steps.push(union(&[a.clone(), b.clone(), p(i, j), p(i, j + 1)]));
            }
        }
    };
    let mut steps = vec![union(&[a.clone(), b.clone(), p(1, 1)])];
    sweep(&mut steps);
    steps.push(union(&[a.clone(), b.clone(), x.clone()]));
    steps.push(union(&[x.clone(), y.clone()]));
    for k in 0..t {
        let mut f = y.clone();
        if let Some(fi) = inner.steps().get(k) {
            for v in fi {
                f.insert(blow[2 * v]);
                f.insert(blow[2 * v + 1]);
            }
        }
        steps.push(f);
    }
    steps.push(union(&[y.clone(), z.clone()]));
    steps.push(union(&[a.clone(), b.clone(), z.clone()]));
    sweep(&mut steps);
    let s = Strategy::new(4 * m, steps)?.with_provenance("time_gadget");
    verified(&gadget.graph, s, Variant::Firefighter, "time gadget")
}

/// Expected extinguished sets `(t, E_t)` of the seven-phase strategy: all paths after the
/// opening sweep, and the blow-up with `X`, `Y`, `Z` after the middle phases.
pub fn time_gadget_checkpoints(gadget: &LabeledGadget) -> [(usize, NodeSet); 2] {
    let t = (1..).take_while(|j| gadget.get(&format!("P_1^{j}")).is_some()).count() - 1;
    let mut middle = gadget.label("G_blowup").clone();
    for name in ["X", "Y", "Z"] {
        middle.union_with(gadget.label(name));
    }
    [
        (2 * t * t + 2 * t + 1, gadget.label("P").clone()),
        (2 * t * t + 3 * t + 5, middle),
    ]
}

/// Round-robin strategy on `G(m, X)`: clear `H^r` but `u_r`, then the paths, `c` and `X`
/// (running `inner` with `c` held), and repeat; the last round clears `H^m`.
pub fn strategy_g_of(gadget: &LabeledGadget, inner: &Strategy) -> Result<Strategy, ConstructError> {
    let n = gadget.graph.n();
    let m = (1..).take_while(|i| gadget.get(&format!("H^{i}")).is_some()).count();
    if m < 2 {
        return Err(ConstructError::Precondition("gadget has no H blocks".into()));
    }
    let beta = gadget.label("path^1").len();
    let x_nodes = gadget.label("X").to_vec();
    if inner.budget() + 1 > m {
        return Err(ConstructError::Precondition(format!(
            "inner budget {} must be at most m - 1 = {}",
            inner.budget(),
            m - 1
        )));
    }
    let one = |name: String| gadget.label(&name).first().expect("single-node label");
    let c = one("c".into());
    let u = |i: usize| one(format!("u_{i}"));
    let v = |i: usize, j: usize| one(format!("v^{i}_{j}"));
    let k = |i: usize| gadget.label(&format!("K^{i}")).to_vec();
    let w = |i: usize| gadget.label(&format!("W^{i}")).to_vec();
    let mut steps: Vec<Vec<usize>> = Vec::new();
    for r in 1..=m {
        for wj in w(r) {
            let mut f = k(r);
            f.push(wj);
            steps.push(f);
        }
        if r == m {
            break;
        }
        // Path 1 from u_1 towards c, holding u_2..u_r.
        let held: Vec<usize> = (2..=r).map(u).collect();
        let mut pairs = vec![(u(1), v(1, beta))];
        pairs.extend((1..beta).rev().map(|j| (v(1, j + 1), v(1, j))));
        pairs.push((v(1, 1), c));
        for (a, b) in pairs {
            let mut f = held.clone();
            f.extend([a, b]);
            steps.push(f);
        }
        // Paths 2..r from the u side with c held.
        for i in 2..=r {
            let held: Vec<usize> = (i + 1..=r).map(u).collect();
            let mut pairs = vec![(u(i), v(i, beta))];
            pairs.extend((1..beta).rev().map(|j| (v(i, j + 1), v(i, j))));
            for (a, b) in pairs {
                let mut f = held.clone();
                f.extend([c, a, b]);
                steps.push(f);
            }
        }
        for fi in inner.steps() {
            let mut f: Vec<usize> = fi.iter().map(|x| x_nodes[x]).collect();
            f.push(c);
            steps.push(f);
        }
        // Paths r+1..m-1 outwards from c, then hold their u.
        let mut held = Vec::new();
        for i in r + 1..m {
            let mut pairs: Vec<(usize, usize)> = (1..beta).map(|j| (v(i, j), v(i, j + 1))).collect();
            pairs.push((v(i, beta), u(i)));
            for (a, b) in pairs {
                let mut f = held.clone();
                f.extend([c, a, b]);
                steps.push(f);
            }
            held.push(u(i));
        }
        // Final path: release c once v^m_1 is covered.
        let mut f = held.clone();
        f.extend([c, v(m, 1)]);
        steps.push(f);
        let mut pairs: Vec<(usize, usize)> = (1..beta).map(|j| (v(m, j), v(m, j + 1))).collect();
        pairs.push((v(m, beta), u(m)));
        for (a, b) in pairs {
            let mut f = held.clone();
            f.extend([a, b]);
            steps.push(f);
        }
    }
    let sets = steps.into_iter().map(|f| set(n, f)).collect();
    let s = Strategy::new(m, sets)?.with_provenance("g_of");
    verified(&gadget.graph, s, Variant::Firefighter, "G(m, X)")
}

/// Recursively built winning strategy for `g_family(m)`.
pub fn strategy_g_family(gadget_levels: &[LabeledGadget]) -> Result<Strategy, ConstructError> {
    let mut inner = Strategy::new(1, vec![NodeSet::full(1)])?.with_provenance("edgeless");
    for g in gadget_levels {
        inner = strategy_g_of(g, &inner)?;
    }
    Ok(inner)
}

/// `F_j = K ∪ {w_j}` for each common neighbour `w_j` of an auxiliary graph.
pub fn strategy_aux_h(gadget: &LabeledGadget) -> Result<Strategy, ConstructError> {
    let n = gadget.graph.n();
    let k = gadget.label("K");
    let steps = gadget
        .label("W")
        .iter()
        .map(|w| {
            let mut f = k.clone();
            f.insert(w);
            f
        })
        .collect();
    let s = Strategy::new(k.len() + 1, steps)?.with_provenance("aux_h");
    debug_assert_eq!(s.steps().first().map(NodeSet::universe), Some(n));
    verified(&gadget.graph, s, Variant::Firefighter, "aux H")
}

/// Clique plus path end first, then the path swept back with two firefighters.
pub fn strategy_path_clique(gadget: &LabeledGadget) -> Result<Strategy, ConstructError> {
    let n = gadget.graph.n();
    let p = gadget.label("K").len();
    let v = |j: usize| gadget.label(&format!("v_{j}")).first().expect("single-node label");
    let mut first = gadget.label("K").clone();
    first.insert(v(p));
    let mut steps = vec![first];
    steps.extend((2..=p).rev().map(|j| set(n, [v(j), v(j - 1)])));
    let s = Strategy::new(p + 1, steps)?.with_provenance("path_clique");
    verified(&gadget.graph, s, Variant::Firefighter, "path clique")
}

/// One step per bin, extinguishing every item clique packed into it.
pub fn strategy_bin_packing(gadget: &LabeledGadget, bins: &[Vec<usize>]) -> Result<Strategy, ConstructError> {
    let n = gadget.graph.n();
    let steps: Vec<NodeSet> = bins
        .iter()
        .map(|bin| {
            bin.iter().fold(NodeSet::empty(n), |mut acc, &i| {
                acc.union_with(gadget.label(&format!("K_{}", i + 1)));
                acc
            })
        })
        .collect();
    let m = steps.iter().map(NodeSet::len).max().unwrap_or(0);
    let s = Strategy::new(m, steps)?.with_provenance("bin_packing");
    verified(&gadget.graph, s, Variant::Firefighter, "bin packing")
}

/// First-fit decreasing packing of item indices into bins of capacity `cap`.
pub fn first_fit_decreasing(items: &[usize], cap: usize) -> Option<Vec<Vec<usize>>> {
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(items[i]));
    let mut bins: Vec<(usize, Vec<usize>)> = Vec::new();
    for i in order {
        if items[i] > cap {
            return None;
        }
        match bins.iter_mut().find(|(load, _)| load + items[i] <= cap) {
            Some((load, bin)) => {
                *load += items[i];
                bin.push(i);
            }
            None => bins.push((items[i], vec![i])),
        }
    }
    Some(bins.into_iter().map(|(_, b)| b).collect())
}

/// Groups of three item indices, each summing to `m / k`, found by backtracking.
pub fn find_three_partition(a: &[usize]) -> Option<Vec<[usize; 3]>> {
    if a.is_empty() || a.len() % 3 != 0 {
        return None;
    }
    let k = a.len() / 3;
    let total: usize = a.iter().sum();
    if total % k != 0 {
        return None;
    }
    let target = total / k;
    let mut used = vec![false; a.len()];
    let mut out = Vec::new();
    fn go(a: &[usize], target: usize, used: &mut [bool], out: &mut Vec<[usize; 3]>) -> bool {
        let Some(i) = used.iter().position(|u| !u) else {
            return true;
        };
        used[i] = true;
        for j in i + 1..a.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            for l in j + 1..a.len() {
                if !used[l] && a[i] + a[j] + a[l] == target {
                    used[l] = true;
                    out.push([i, j, l]);
                    if go(a, target, used, out) {
                        return true;
                    }
                    out.pop();
                    used[l] = false;
                }
            }
            used[j] = false;
        }
        used[i] = false;
        false
    }
    go(a, target, &mut used, &mut out).then_some(out)
}

/// One step per triple: its three trees plus the centre.
pub fn strategy_three_partition(gadget: &LabeledGadget, a: &[usize]) -> Result<Strategy, ConstructError> {
    let triples = find_three_partition(a)
        .ok_or_else(|| ConstructError::Precondition("instance has no 3-partition".into()))?;
    let n = gadget.graph.n();
    let c = gadget.label("c").clone();
    let steps = triples
        .iter()
        .map(|tr| {
            tr.iter().fold(c.clone(), |mut acc, &i| {
                acc.union_with(gadget.label(&format!("T_{}", i + 1)));
                acc
            })
        })
        .collect::<Vec<_>>();
    debug_assert!(steps.iter().all(|s| s.universe() == n));
    let budget = crate::gadgets::three_partition_budget(a);
    let s = Strategy::new(budget, steps)?.with_provenance("three_partition");
    verified(&gadget.graph, s, Variant::Firefighter, "3-partition")
}

/// Which side of the transformed graph the fugitive may start on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StartParity {
    /// Anywhere: every step is played twice.
    Any,
    /// Original nodes only: `(F_1, ∅, F_2, ∅, …)`.
    Original,
    /// Intermediate nodes only: `(∅, F_1, ∅, F_2, …)`.
    Intermediate,
}

/// Lifts a firefighter strategy on `g` to the hunter game on `hunter_transform(g)`.
pub fn hunter_strategy_from_ff(s: &Strategy, g: &Graph, parity: StartParity) -> Strategy {
    let t = crate::gadgets::hunter_transform(g);
    let lift = |f: &NodeSet| f.shifted(t.n(), 0);
    let idle = NodeSet::empty(t.n());
    let mut steps = Vec::with_capacity(2 * s.len());
    for f in s.steps() {
        let (a, b) = match parity {
            StartParity::Any => (lift(f), lift(f)),
            StartParity::Original => (lift(f), idle.clone()),
            StartParity::Intermediate => (idle.clone(), lift(f)),
        };
        steps.push(a);
        steps.push(b);
    }
    let tag = match parity {
        StartParity::Any => "hunter_doubled",
        StartParity::Original => "hunter_original_start",
        StartParity::Intermediate => "hunter_intermediate_start",
    };
    Strategy::new(s.budget(), steps)
        .expect("lifting keeps step sizes")
        .with_provenance(tag)
}

/// Burning set to start from for a given parity on the transformed graph.
pub fn hunter_start_set(g: &Graph, parity: StartParity) -> NodeSet {
    let t = crate::gadgets::hunter_transform(g);
    let originals = NodeSet::full(g.n()).shifted(t.n(), 0);
    match parity {
        StartParity::Any => t.all_nodes(),
        StartParity::Original => originals,
        StartParity::Intermediate => originals.complement(),
    }
}

/// Restricts every step of a hunter strategy on `hunter_transform(g)` to the original nodes.
pub fn hunter_strategy_prune(s: &Strategy, g: &Graph) -> Result<Strategy, ConstructError> {
    let t = crate::gadgets::hunter_transform(g);
    let keep = NodeSet::full(g.n()).shifted(t.n(), 0);
    let steps = s.steps().iter().map(|f| f.intersection(&keep)).collect();
    let pruned = Strategy::new(s.budget(), steps)?.with_provenance("hunter_pruned");
    verified(&t, pruned, Variant::Hunter, "pruned hunter strategy")
}

/// Odd-indexed `(F_1, F_3, …)` and even-indexed `(F_2, F_4, …)` steps of a hunter strategy
/// on the transform, read as firefighter strategies on `g`.
pub fn split_hunter_strategy(s: &Strategy, g: &Graph) -> (Strategy, Strategy) {
    let down = |f: &NodeSet| set(g.n(), f.iter().filter(|&v| v < g.n()));
    let pick = |parity: usize, tag: &str| {
        let steps = s
            .steps()
            .iter()
            .enumerate()
            .filter(|(i, _)| i % 2 == parity)
            .map(|(_, f)| down(f))
            .collect();
        Strategy::new(s.budget(), steps)
            .expect("restriction keeps step sizes")
            .with_provenance(tag)
    };
    (pick(0, "hunter_odd_steps"), pick(1, "hunter_even_steps"))
}
