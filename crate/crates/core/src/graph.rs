//! Simple undirected graphs on nodes `0..n`, standard families and structural recognizers.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::GraphError;
use crate::nodeset::NodeSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<NodeSet>,
}

impl Graph {
    /// The edgeless graph on `n` nodes.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![NodeSet::empty(n); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for node in [u, v] {
            if node >= n {
                return Err(GraphError::NodeOutOfRange { node, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(NodeSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &NodeSet {
        &self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> NodeSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).max()
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet::full(self.n())
    }

    pub fn no_nodes(&self) -> NodeSet {
        NodeSet::empty(self.n())
    }

    /// Builds a node set, checking that every index is in range.
    pub fn node_set<I>(&self, nodes: I) -> Result<NodeSet, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        NodeSet::from_nodes(self.n(), nodes).map_err(|node| GraphError::NodeOutOfRange {
            node,
            n: self.n(),
        })
    }

    /// Open neighbourhood `N(W)`: nodes outside `w` adjacent to some node of `w`.
    pub fn neighborhood(&self, w: &NodeSet) -> NodeSet {
        let mut out = NodeSet::empty(self.n());
        for u in w {
            out.union_with(&self.adj[u]);
        }
        out.difference_with(w);
        out
    }

    /// `W ∪ N(W)`.
    pub fn closed_neighborhood(&self, w: &NodeSet) -> NodeSet {
        let mut out = w.clone();
        for u in w {
            out.union_with(&self.adj[u]);
        }
        out
    }

    /// Like [`Graph::neighborhood`] but rejects sets from a different universe.
    pub fn try_neighborhood(&self, w: &NodeSet) -> Result<NodeSet, GraphError> {
        if w.universe() != self.n() {
            let node = w.iter().find(|&v| v >= self.n()).unwrap_or(w.universe());
            return Err(GraphError::NodeOutOfRange { node, n: self.n() });
        }
        Ok(self.neighborhood(w))
    }

    /// Adjacency rows as single words, available for graphs with at most 64 nodes.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        self.adj.iter().map(NodeSet::to_mask).collect()
    }

    /// Subgraph induced by `nodes`; node `nodes[i]` becomes node `i`.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Graph {
        let mut g = Graph::new(nodes.len());
        for (i, &u) in nodes.iter().enumerate() {
            for (j, &v) in nodes.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        g
    }

    /// Disjoint union; the nodes of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n() + other.n();
        let mut adj: Vec<NodeSet> = self.adj.iter().map(|s| s.shifted(n, 0)).collect();
        adj.extend(other.adj.iter().map(|s| s.shifted(n, self.n())));
        Graph { adj }
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<NodeSet> {
        self.components_within(&self.all_nodes())
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: &NodeSet) -> Vec<NodeSet> {
        let mut seen = NodeSet::empty(self.n());
        let mut out = Vec::new();
        for s in within {
            if seen.contains(s) {
                continue;
            }
            let mut comp = NodeSet::empty(self.n());
            comp.insert(s);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = self.neighborhood(&frontier);
                next.intersect_with(within);
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count() + 1 == self.n() && self.is_connected()
    }

    /// BFS distances from `s`; `None` for unreachable nodes.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Longest shortest-path distance; `None` if disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if self.n() == 0 {
            return None;
        }
        let mut best = 0;
        for s in 0..self.n() {
            for d in self.distances_from(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// A 2-colouring `(left, right)` where each component's smallest node is on the left.
    pub fn bipartition(&self) -> Option<(NodeSet, NodeSet)> {
        let mut side: Vec<Option<bool>> = vec![None; self.n()];
        for s in 0..self.n() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u] == Some(true);
                for v in &self.adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        _ => {}
                    }
                }
            }
        }
        let mut left = self.no_nodes();
        let mut right = self.no_nodes();
        for (v, s) in side.into_iter().enumerate() {
            if s == Some(true) {
                right.insert(v);
            } else {
                left.insert(v);
            }
        }
        Some((left, right))
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(NodeSet::is_empty)
    }

    /// True iff every component is a tree whose non-leaf nodes form a path.
    pub fn is_caterpillar_forest(&self) -> bool {
        if !self.is_forest() {
            return false;
        }
        self.components().iter().all(|comp| {
            if comp.len() <= 2 {
                return true;
            }
            let spine: Vec<usize> = comp.iter().filter(|&v| self.degree(v) > 1).collect();
            let core = self.induced_subgraph(&spine);
            core.max_degree().unwrap_or(0) <= 2 && core.is_connected()
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Every node becomes a 2-clique; cliques of adjacent nodes are fully joined.
pub fn blowup2(g: &Graph) -> Graph {
    let mut h = Graph::new(2 * g.n());
    for v in 0..g.n() {
        h.adj[2 * v].insert(2 * v + 1);
        h.adj[2 * v + 1].insert(2 * v);
    }
    for (u, v) in g.edges() {
        for a in [2 * u, 2 * u + 1] {
            for b in [2 * v, 2 * v + 1] {
                h.adj[a].insert(b);
                h.adj[b].insert(a);
            }
        }
    }
    h
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    /// `K_{1,n}`: a centre (node 0) with `n` leaves.
    Star(usize),
    /// Complete binary tree of the given depth in heap order, root 0.
    BinaryTree(usize),
    Edgeless(usize),
}

pub fn make_family(kind: Family) -> Result<Graph, GraphError> {
    let g = match kind {
        Family::Complete(n) => {
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v)?;
                }
            }
            g
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::InvalidSize(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?
        }
        Family::CompleteBipartite(a, b) => {
            let mut g = Graph::new(a + b);
            for u in 0..a {
                for v in a..a + b {
                    g.add_edge(u, v)?;
                }
            }
            g
        }
        Family::Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?,
        Family::Star(n) => Graph::from_edges(n + 1, (1..=n).map(|i| (0, i)))?,
        Family::BinaryTree(d) => {
            if d >= 30 {
                return Err(GraphError::InvalidSize(format!("binary tree depth {d} too large")));
            }
            let n = (1usize << (d + 1)) - 1;
            Graph::from_edges(n, (1..n).map(|i| ((i - 1) / 2, i)))?
        }
        Family::Edgeless(n) => Graph::new(n),
    };
    Ok(g)
}

impl FromStr for Family {
    type Err = GraphError;

    /// Parses forms such as `complete 4`, `complete_bipartite 2 3` or `binary_tree:3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ':' || c == ',')
            .filter(|p| !p.is_empty())
            .collect();
        let bad = || GraphError::InvalidSize(format!("unrecognised family '{s}'"));
        let num = |i: usize| -> Result<usize, GraphError> {
            parts.get(i).and_then(|p| p.parse().ok()).ok_or_else(bad)
        };
        let (name, arity) = match parts.first() {
            Some(name) => (*name, parts.len() - 1),
            None => return Err(bad()),
        };
        let family = match (name, arity) {
            ("complete", 1) => Family::Complete(num(1)?),
            ("cycle", 1) => Family::Cycle(num(1)?),
            ("complete_bipartite", 2) => Family::CompleteBipartite(num(1)?, num(2)?),
            ("path", 1) => Family::Path(num(1)?),
            ("star", 1) => Family::Star(num(1)?),
            ("binary_tree", 1) => Family::BinaryTree(num(1)?),
            ("edgeless", 1) => Family::Edgeless(num(1)?),
            _ => return Err(bad()),
        };
        Ok(family)
    }
}
