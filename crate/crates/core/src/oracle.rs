//! Exhaustive backward induction over every burning set. Independent of the solver and
//! meant for cross-checking it on graphs with at most [`ORACLE_LIMIT`] nodes.

use crate::engine::{step_mask, Strategy, Variant};
use crate::error::SolveError;
use crate::graph::Graph;
use crate::nodeset::NodeSet;

pub const ORACLE_LIMIT: usize = 16;

const UNREACHED: u32 = u32::MAX;

/// Distance to the empty set from every burning set under optimal `m`-moves.
#[derive(Debug, Clone)]
pub struct Oracle {
    n: usize,
    m: usize,
    variant: Variant,
    adj: Vec<u64>,
    moves: Vec<u64>,
    dist: Vec<u32>,
}

/// All subsets of `0..n` with at most `m` elements, in lexicographic order of their
/// sorted node lists.
pub fn all_moves(n: usize, m: usize) -> Vec<u64> {
    fn go(n: usize, m: usize, from: usize, cur: u64, out: &mut Vec<u64>) {
        out.push(cur);
        if m == 0 {
            return;
        }
        for v in from..n {
            go(n, m - 1, v + 1, cur | 1 << v, out);
        }
    }
    let mut out = Vec::new();
    go(n, m.min(n), 0, 0, &mut out);
    out
}

impl Oracle {
    pub fn new(g: &Graph, m: usize, variant: Variant) -> Result<Self, SolveError> {
        let n = g.n();
        if n > ORACLE_LIMIT {
            return Err(SolveError::TooLarge(format!(
                "oracle handles at most {ORACLE_LIMIT} nodes, got {n}"
            )));
        }
        let adj = g.adjacency_masks().expect("n <= 16");
        let moves = all_moves(n, m);
        let size = 1usize << n;
        let mut dist = vec![UNREACHED; size];
        dist[0] = 0;
        let mut round = 0u32;
        loop {
            round += 1;
            let mut changed = false;
            for b in 1..size as u64 {
                if dist[b as usize] != UNREACHED {
                    continue;
                }
                let hit = moves
                    .iter()
                    .any(|&f| dist[step_mask(&adj, b, f, variant) as usize] < round);
                if hit {
                    dist[b as usize] = round;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Ok(Oracle {
            n,
            m,
            variant,
            adj,
            moves,
            dist,
        })
    }

    /// Steps needed from burning set `b`, or `None` if it cannot be cleared.
    pub fn dist(&self, b: &NodeSet) -> Option<usize> {
        let d = self.dist[b.to_mask().expect("n <= 16") as usize];
        (d != UNREACHED).then_some(d as usize)
    }

    /// `T_m(G)`.
    pub fn shortest_t(&self) -> Option<usize> {
        self.dist(&NodeSet::full(self.n))
    }

    pub fn is_winning(&self) -> bool {
        self.shortest_t().is_some()
    }

    /// Greedy optimal strategy from `start`: each step takes the first move in
    /// [`all_moves`] order that lowers the distance by one.
    pub fn witness_from(&self, start: &NodeSet) -> Option<Strategy> {
        let mut b = start.to_mask().expect("n <= 16");
        let mut d = self.dist[b as usize];
        if d == UNREACHED {
            return None;
        }
        let mut steps = Vec::new();
        while d > 0 {
            let (f, next) = self
                .moves
                .iter()
                .map(|&f| (f, step_mask(&self.adj, b, f, self.variant)))
                .find(|&(_, next)| self.dist[next as usize] == d - 1)
                .expect("distance table is consistent");
            steps.push(NodeSet::from_mask(self.n, f));
            b = next;
            d -= 1;
        }
        Some(
            Strategy::new(self.m, steps)
                .expect("moves respect the budget")
                .with_provenance("oracle"),
        )
    }

    /// Every move from `b` that starts a shortest continuation, with the resulting set.
    pub fn optimal_moves(&self, b: &NodeSet) -> Vec<(NodeSet, NodeSet)> {
        let mask = b.to_mask().expect("n <= 16");
        let d = self.dist[mask as usize];
        if d == UNREACHED || d == 0 {
            return vec![];
        }
        self.moves
            .iter()
            .filter_map(|&f| {
                let next = step_mask(&self.adj, mask, f, self.variant);
                (self.dist[next as usize] == d - 1)
                    .then(|| (NodeSet::from_mask(self.n, f), NodeSet::from_mask(self.n, next)))
            })
            .collect()
    }

    pub fn witness(&self) -> Option<Strategy> {
        self.witness_from(&NodeSet::full(self.n))
    }
}

/// Smallest `m` with a winning `m`-strategy. The hunter count starts at 1 on nonempty
/// graphs, since an isolated node clears itself with no hunters at all.
pub fn oracle_ffn(g: &Graph, variant: Variant) -> Result<usize, SolveError> {
    let start = match variant {
        Variant::Hunter => g.n().min(1),
        Variant::Firefighter => 0,
    };
    for m in start..=g.n() {
        if Oracle::new(g, m, variant)?.is_winning() {
            return Ok(m);
        }
    }
    unreachable!("m = n always wins")
}

/// `T_m(G)` by backward induction.
pub fn oracle_shortest_t(g: &Graph, m: usize, variant: Variant) -> Result<Option<usize>, SolveError> {
    Ok(Oracle::new(g, m, variant)?.shortest_t())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::is_winning;
    use crate::graph::{make_family, Family};

    #[test]
    fn move_order() {
        assert_eq!(all_moves(3, 2), vec![0, 1, 3, 5, 2, 6, 4]);
        assert_eq!(all_moves(2, 0), vec![0]);
        assert_eq!(all_moves(3, 5).len(), 8);
    }

    #[test]
    fn small_families() {
        let ff = Variant::Firefighter;
        let cases = [
            (Family::Path(4), 2),
            (Family::Cycle(5), 3),
            (Family::Complete(4), 4),
            (Family::Star(4), 2),
            (Family::CompleteBipartite(2, 3), 3),
            (Family::Edgeless(3), 1),
        ];
        for (fam, want) in cases {
            let g = make_family(fam).unwrap();
            assert_eq!(oracle_ffn(&g, ff).unwrap(), want, "{fam:?}");
        }
        assert_eq!(oracle_ffn(&Graph::new(0), ff).unwrap(), 0);
    }

    #[test]
    fn witness_is_optimal_and_wins() {
        let g = make_family(Family::Path(5)).unwrap();
        let o = Oracle::new(&g, 2, Variant::Firefighter).unwrap();
        let w = o.witness().unwrap();
        assert_eq!(Some(w.len()), o.shortest_t());
        assert!(is_winning(&g, &w, Variant::Firefighter));
        let o = Oracle::new(&make_family(Family::Cycle(4)).unwrap(), 1, Variant::Firefighter).unwrap();
        assert!(o.witness().is_none());
    }

    #[test]
    fn hunter_on_triangle() {
        let k3 = make_family(Family::Complete(3)).unwrap();
        assert_eq!(oracle_ffn(&k3, Variant::Hunter).unwrap(), 2);
        assert_eq!(oracle_ffn(&Graph::new(1), Variant::Hunter).unwrap(), 1);
    }

    #[test]
    fn rejects_large_graphs() {
        assert!(Oracle::new(&Graph::new(17), 1, Variant::Firefighter).is_err());
    }
}
