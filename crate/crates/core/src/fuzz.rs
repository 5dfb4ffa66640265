//! Random strategy sampling. Each trial draws `len` steps of `m` distinct nodes from
//! stream `trial` of a ChaCha8 generator keyed by `seed`.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::engine::{self, Strategy, Variant};
use crate::graph::Graph;
use crate::nodeset::NodeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzConfig {
    pub m: usize,
    pub len: usize,
    pub trials: u64,
    pub seed: u64,
    pub variant: Variant,
}

#[derive(Debug, Clone, Serialize)]
pub struct FuzzReport {
    pub trials: u64,
    pub wins: u64,
    pub first_win_trial: Option<u64>,
    #[serde(skip)]
    pub first_win: Option<Strategy>,
}

/// The strategy drawn for one trial.
pub fn random_strategy(g: &Graph, cfg: &FuzzConfig, trial: u64) -> Strategy {
    let n = g.n();
    let k = cfg.m.min(n);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial);
    let steps = (0..cfg.len)
        .map(|_| {
            NodeSet::from_nodes(n, sample(&mut rng, n, k).into_iter())
                .expect("sampled nodes are in range")
        })
        .collect();
    Strategy::new(cfg.m, steps)
        .expect("steps hold at most m nodes")
        .with_provenance("fuzz")
}

pub fn fuzz(g: &Graph, cfg: &FuzzConfig) -> FuzzReport {
    let mut report = FuzzReport {
        trials: cfg.trials,
        wins: 0,
        first_win_trial: None,
        first_win: None,
    };
    let masks = g.adjacency_masks();
    for trial in 0..cfg.trials {
        let s = random_strategy(g, cfg, trial);
        let win = match &masks {
            Some(adj) => {
                let mut b = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
                for f in s.steps() {
                    if b == 0 {
                        break;
                    }
                    b = engine::step_mask(adj, b, f.to_mask().expect("n <= 64"), cfg.variant);
                }
                b == 0
            }
            None => engine::is_winning(g, &s, cfg.variant),
        };
        if win {
            report.wins += 1;
            if report.first_win.is_none() {
                report.first_win_trial = Some(trial);
                report.first_win = Some(s);
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn cfg(m: usize, len: usize, trials: u64) -> FuzzConfig {
        FuzzConfig {
            m,
            len,
            trials,
            seed: 7,
            variant: Variant::Firefighter,
        }
    }

    #[test]
    fn reproducible() {
        let g = make_family(Family::Cycle(6)).unwrap();
        let a = random_strategy(&g, &cfg(3, 5, 1), 4);
        let b = random_strategy(&g, &cfg(3, 5, 1), 4);
        assert_eq!(a.steps(), b.steps());
        assert!(a.steps().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn never_wins_below_ffn() {
        let g = make_family(Family::Cycle(5)).unwrap();
        assert_eq!(fuzz(&g, &cfg(2, 10, 300)).wins, 0);
    }

    #[test]
    fn finds_wins_and_agrees_with_engine() {
        let g = make_family(Family::Complete(3)).unwrap();
        let r = fuzz(&g, &cfg(3, 1, 5));
        assert_eq!(r.wins, 5);
        let w = r.first_win.unwrap();
        assert!(engine::is_winning(&g, &w, Variant::Firefighter));
        let p = make_family(Family::Path(3)).unwrap();
        let r = fuzz(&p, &cfg(2, 4, 200));
        assert!(r.wins > 0);
        assert!(engine::is_winning(&p, &r.first_win.unwrap(), Variant::Firefighter));
    }
}
