//! Reduction gadgets and named graph families with labeled block structure.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::GadgetError;
use crate::graph::{blowup2, Graph};
use crate::nodeset::NodeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetParams {
    pub alpha: usize,
    pub beta: usize,
}

impl Default for GadgetParams {
    fn default() -> Self {
        GadgetParams { alpha: 4, beta: 1 }
    }
}

impl GadgetParams {
    pub fn new(alpha: usize, beta: usize) -> Result<Self, GadgetError> {
        let p = GadgetParams { alpha, beta };
        p.validate()?;
        Ok(p)
    }

    /// Checks `2β + 2 ≥ α ≥ β + 3`.
    pub fn validate(&self) -> Result<(), GadgetError> {
        if 2 * self.beta + 2 >= self.alpha && self.alpha >= self.beta + 3 {
            Ok(())
        } else {
            Err(GadgetError::InvalidParams(format!(
                "need 2*beta + 2 >= alpha >= beta + 3, got alpha={}, beta={}",
                self.alpha, self.beta
            )))
        }
    }
}

/// Internal structure of a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    Clique,
    Independent,
    /// Arbitrary internal edges (e.g. an embedded input graph).
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGadget {
    pub graph: Graph,
    pub labels: BTreeMap<String, NodeSet>,
    /// Blocks partitioning the nodes, with their internal structure.
    pub blocks: Vec<(String, BlockKind)>,
    /// Block pairs that are completely joined; all other block pairs have no edges.
    pub joins: Vec<(String, String)>,
}

/// Wire form: `{"graph": {"n": int, "edges": [[u, v], ...]}, "labels": {name: [int, ...]}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledGadgetJson {
    pub graph: GraphJson,
    pub labels: BTreeMap<String, Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, crate::error::GraphError> {
        Graph::from_edges(self.n, self.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl LabeledGadget {
    pub fn label(&self, name: &str) -> &NodeSet {
        self.labels
            .get(name)
            .unwrap_or_else(|| panic!("gadget has no label '{name}'"))
    }

    pub fn get(&self, name: &str) -> Option<&NodeSet> {
        self.labels.get(name)
    }

    pub fn to_json(&self) -> LabeledGadgetJson {
        LabeledGadgetJson {
            graph: GraphJson::from_graph(&self.graph),
            labels: self
                .labels
                .iter()
                .map(|(k, v)| (k.clone(), v.to_vec()))
                .collect(),
        }
    }

    /// Checks that the blocks partition the nodes, each block has its declared internal
    /// structure, declared joins are complete and no other block pair shares an edge.
    /// Gadgets without a block structure pass trivially.
    pub fn audit(&self) -> Result<(), String> {
        let g = &self.graph;
        if self.blocks.is_empty() {
            return Ok(());
        }
        let mut seen = g.no_nodes();
        for (name, _) in &self.blocks {
            let s = self.get(name).ok_or_else(|| format!("block {name} has no label"))?;
            if !s.is_disjoint(&seen) {
                return Err(format!("block {name} overlaps an earlier block"));
            }
            seen.union_with(s);
        }
        if seen != g.all_nodes() {
            return Err(format!("blocks miss nodes {:?}", seen.complement().to_vec()));
        }
        for (name, kind) in &self.blocks {
            let s = self.label(name).to_vec();
            for (a, &u) in s.iter().enumerate() {
                for &v in &s[a + 1..] {
                    match (kind, g.has_edge(u, v)) {
                        (BlockKind::Clique, false) => return Err(format!("clique {name} misses {u}-{v}")),
                        (BlockKind::Independent, true) => return Err(format!("independent {name} has {u}-{v}")),
                        _ => {}
                    }
                }
            }
        }
        for (i, (x, _)) in self.blocks.iter().enumerate() {
            for (y, _) in &self.blocks[i + 1..] {
                let joined = self
                    .joins
                    .iter()
                    .any(|(a, b)| (a == x && b == y) || (a == y && b == x));
                let (sx, sy) = (self.label(x), self.label(y));
                for u in sx {
                    for v in sy {
                        if g.has_edge(u, v) != joined {
                            return Err(format!(
                                "blocks {x} and {y}: edge {u}-{v} is {}",
                                if joined { "missing" } else { "unexpected" }
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Accumulates nodes, labels, blocks and joins.
struct Builder {
    n: usize,
    labels: BTreeMap<String, Vec<usize>>,
    blocks: Vec<(String, BlockKind)>,
    joins: Vec<(String, String)>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            n: 0,
            labels: BTreeMap::new(),
            blocks: Vec::new(),
            joins: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn block(&mut self, name: impl Into<String>, size: usize, kind: BlockKind) -> Vec<usize> {
        let nodes: Vec<usize> = (self.n..self.n + size).collect();
        self.n += size;
        let name = name.into();
        if kind == BlockKind::Clique {
            for (a, &u) in nodes.iter().enumerate() {
                for &v in &nodes[a + 1..] {
                    self.edges.push((u, v));
                }
            }
        }
        self.labels.insert(name.clone(), nodes.clone());
        self.blocks.push((name, kind));
        nodes
    }

    /// Embeds `g` as a block and returns the new node ids.
    fn embed(&mut self, name: impl Into<String>, g: &Graph) -> Vec<usize> {
        let offset = self.n;
        let nodes = self.block(name, g.n(), BlockKind::Free);
        self.edges.extend(g.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
        nodes
    }

    fn join(&mut self, a: &str, b: &str) {
        let (xa, xb) = (self.labels[a].clone(), self.labels[b].clone());
        for &u in &xa {
            for &v in &xb {
                self.edges.push((u, v));
            }
        }
        self.joins.push((a.to_string(), b.to_string()));
    }

    fn label(&mut self, name: impl Into<String>, nodes: Vec<usize>) {
        self.labels.insert(name.into(), nodes);
    }

    fn finish(self) -> LabeledGadget {
        let graph = Graph::from_edges(self.n, self.edges).expect("builder edges are valid");
        let labels = self
            .labels
            .into_iter()
            .map(|(k, v)| {
                let s = NodeSet::from_nodes(self.n, v).expect("labels are in range");
                (k, s)
            })
            .collect();
        LabeledGadget {
            graph,
            labels,
            blocks: self.blocks,
            joins: self.joins,
        }
    }
}

/// `(m − 1)`-clique `K` plus `α` independent nodes `W` joined to all of `K`.
pub fn aux_h(m: usize, params: GadgetParams) -> Result<LabeledGadget, GadgetError> {
    params.validate()?;
    if m < 2 {
        return Err(GadgetError::InvalidParams(format!("aux_h needs m >= 2, got {m}")));
    }
    let mut b = Builder::new();
    let u = b.block("u", 1, BlockKind::Clique);
    b.block("K_rest", m - 2, BlockKind::Clique);
    b.block("W", params.alpha, BlockKind::Independent);
    b.join("u", "K_rest");
    b.join("u", "W");
    b.join("K_rest", "W");
    let mut k = u;
    k.extend(b.labels["K_rest"].clone());
    b.label("K", k);
    Ok(b.finish())
}

/// `X`, a node `c` joined to all of `X`, `m` paths of `β` nodes hanging from `c`, and `m`
/// copies `H^i` of [`aux_h`], the end of path `i` joined to the clique node `u_i`.
pub fn g_of(m: usize, x: &Graph, params: GadgetParams) -> Result<LabeledGadget, GadgetError> {
    g_of_labeled(m, x, &BTreeMap::new(), params)
}

fn g_of_labeled(
    m: usize,
    x: &Graph,
    inner_labels: &BTreeMap<String, NodeSet>,
    params: GadgetParams,
) -> Result<LabeledGadget, GadgetError> {
    params.validate()?;
    if m < 2 {
        return Err(GadgetError::InvalidParams(format!("g_of needs m >= 2, got {m}")));
    }
    let mut b = Builder::new();
    b.embed("X", x);
    b.block("c", 1, BlockKind::Clique);
    b.join("X", "c");
    for (name, set) in inner_labels {
        b.label(format!("X.{name}"), set.to_vec());
    }
    for i in 1..=m {
        let mut path = Vec::new();
        for j in 1..=params.beta {
            let name = format!("v^{i}_{j}");
            path.extend(b.block(name.clone(), 1, BlockKind::Clique));
            if j == 1 {
                b.join("c", &name);
            } else {
                b.join(&format!("v^{i}_{}", j - 1), &name);
            }
        }
        let u = b.block(format!("u_{i}"), 1, BlockKind::Clique);
        let rest = b.block(format!("K^{i}_rest"), m - 2, BlockKind::Clique);
        let w = b.block(format!("W^{i}"), params.alpha, BlockKind::Independent);
        b.join(&format!("v^{i}_{}", params.beta), &format!("u_{i}"));
        b.join(&format!("u_{i}"), &format!("K^{i}_rest"));
        b.join(&format!("u_{i}"), &format!("W^{i}"));
        b.join(&format!("K^{i}_rest"), &format!("W^{i}"));
        let mut k = u;
        k.extend(rest);
        let mut h = k.clone();
        h.extend(w);
        b.label(format!("K^{i}"), k);
        b.label(format!("H^{i}"), h);
        b.label(format!("path^{i}"), path);
    }
    Ok(b.finish())
}

/// `G_2 = G(2, K_1)` and `G_m = G(m, G_{m−1})`.
pub fn g_family(m: usize, params: GadgetParams) -> Result<LabeledGadget, GadgetError> {
    if m < 2 {
        return Err(GadgetError::InvalidParams(format!("g_family needs m >= 2, got {m}")));
    }
    let mut gadget = g_of(2, &Graph::new(1), params)?;
    for level in 3..=m {
        gadget = g_of_labeled(level, &gadget.graph.clone(), &gadget.labels, params)?;
    }
    Ok(gadget)
}

/// Node count of `g_family(m)`.
pub fn g_family_size(m: usize, params: GadgetParams) -> usize {
    (2..=m).fold(1, |x, level| x + 1 + level * (level - 1 + params.alpha + params.beta))
}

/// The timed fuse `H(G, T)`: `𝔾 = blowup2(G)`, `m`-cliques `A`, `B` and `P_i^j`,
/// `2m`-cliques `X`, `Y`, `Z`.
pub fn time_gadget(g: &Graph, t: usize, m: usize) -> Result<LabeledGadget, GadgetError> {
    if t < 2 {
        return Err(GadgetError::InvalidParams(format!("time gadget needs T >= 2, got {t}")));
    }
    if m < 1 {
        return Err(GadgetError::InvalidParams("time gadget needs m >= 1".into()));
    }
    let mut b = Builder::new();
    b.embed("G_blowup", &blowup2(g));
    b.block("A", m, BlockKind::Clique);
    b.block("B", m, BlockKind::Clique);
    b.block("X", 2 * m, BlockKind::Clique);
    b.block("Y", 2 * m, BlockKind::Clique);
    b.block("Z", 2 * m, BlockKind::Clique);
    b.join("G_blowup", "Y");
    b.join("A", "X");
    b.join("X", "Y");
    b.join("Y", "Z");
    b.join("Z", "B");
    let mut all_paths = Vec::new();
    for i in 1..=2 * t + 2 {
        let mut path = Vec::new();
        for j in 1..=t + 1 {
            let name = format!("P_{i}^{j}");
            path.extend(b.block(name.clone(), m, BlockKind::Clique));
            if j == 1 {
                b.join("A", &name);
            } else {
                b.join(&format!("P_{i}^{}", j - 1), &name);
            }
        }
        b.join(&format!("P_{i}^{}", t + 1), "B");
        all_paths.extend(path.iter().copied());
        b.label(format!("P_{i}"), path);
    }
    b.label("P", all_paths);
    Ok(b.finish())
}

/// Disjoint union of cliques of the given sizes.
pub fn binpacking_graph(sizes: &[usize]) -> Result<Graph, GadgetError> {
    Ok(binpacking_gadget(sizes)?.graph)
}

/// [`binpacking_graph`] with one label `K_k` per item.
pub fn binpacking_gadget(sizes: &[usize]) -> Result<LabeledGadget, GadgetError> {
    if sizes.contains(&0) {
        return Err(GadgetError::InvalidParams("item sizes must be positive".into()));
    }
    let mut b = Builder::new();
    for (k, &s) in sizes.iter().enumerate() {
        b.block(format!("K_{}", k + 1), s, BlockKind::Clique);
    }
    Ok(b.finish())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeShape {
    /// Each tree is a star whose hub is joined to `c`.
    Star,
    /// Each tree is a path whose first node is joined to `c`.
    Path,
    /// Each tree is heap-shaped (node `i` has parent `(i − 1) / 2`), root joined to `c`.
    Arbitrary,
}

/// Centre `c` joined to one node of each tree `T_i`, where `T_i` has `a_i + m` nodes and
/// `m = Σ a_i`.
pub fn three_partition_tree(a: &[usize], shape: TreeShape) -> Result<LabeledGadget, GadgetError> {
    if a.is_empty() || a.len() % 3 != 0 {
        return Err(GadgetError::InvalidParams(format!(
            "need 3k items, got {}",
            a.len()
        )));
    }
    let k = a.len() / 3;
    let m: usize = a.iter().sum();
    if m % k != 0 {
        return Err(GadgetError::InvalidParams(format!("m/k = {m}/{k} is not integral")));
    }
    let mut b = Builder::new();
    let c = b.block("c", 1, BlockKind::Clique)[0];
    for (idx, &ai) in a.iter().enumerate() {
        let size = ai + m;
        let nodes: Vec<usize> = (b.n..b.n + size).collect();
        b.n += size;
        let local: Vec<(usize, usize)> = match shape {
            TreeShape::Star => (1..size).map(|v| (0, v)).collect(),
            TreeShape::Path => (1..size).map(|v| (v - 1, v)).collect(),
            TreeShape::Arbitrary => (1..size).map(|v| ((v - 1) / 2, v)).collect(),
        };
        b.edges.extend(local.into_iter().map(|(u, v)| (nodes[u], nodes[v])));
        b.edges.push((c, nodes[0]));
        b.label(format!("T_{}", idx + 1), nodes);
    }
    let mut gadget = b.finish();
    gadget.blocks.clear();
    Ok(gadget)
}

/// Per-instance budget `m/k + 3m + 1`.
pub fn three_partition_budget(a: &[usize]) -> usize {
    let m: usize = a.iter().sum();
    let k = a.len() / 3;
    m / k + 3 * m + 1
}

/// Replaces every edge by `n + 1` paths through fresh intermediate nodes.
pub fn hunter_transform(g: &Graph) -> Graph {
    hunter_transform_labeled(g).graph
}

/// [`hunter_transform`] with labels `V` (original nodes) and `I` (intermediate nodes).
pub fn hunter_transform_labeled(g: &Graph) -> LabeledGadget {
    let n = g.n();
    let mut b = Builder::new();
    b.embed("V", &Graph::new(n));
    let mut inter = Vec::new();
    for (u, v) in g.edges() {
        for _ in 0..=n {
            let x = b.n;
            b.n += 1;
            b.edges.push((u, x));
            b.edges.push((v, x));
            inter.push(x);
        }
    }
    b.label("I", inter);
    let mut gadget = b.finish();
    gadget.blocks.clear();
    gadget
}

/// `K_p` plus a path `v_1 … v_p` whose end `v_p` is joined to the whole clique.
pub fn path_clique(p: usize) -> Result<LabeledGadget, GadgetError> {
    if p < 1 {
        return Err(GadgetError::InvalidParams("path_clique needs p >= 1".into()));
    }
    let mut b = Builder::new();
    b.block("K", p, BlockKind::Clique);
    for j in 1..=p {
        b.block(format!("v_{j}"), 1, BlockKind::Clique);
        if j > 1 {
            b.join(&format!("v_{}", j - 1), &format!("v_{j}"));
        }
    }
    b.join(&format!("v_{p}"), "K");
    b.label("path", (p..2 * p).collect());
    Ok(b.finish())
}
