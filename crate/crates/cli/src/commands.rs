use std::io::Write;

use anyhow::{anyhow, Context};
use fflab_core::bounds::{
    bound_report, char_small_ffn, check_conjecture, forest_bound, lb_characterization, lb_edge_count,
    lb_expansion, lb_min_degree, lb_subgraph_expansion, ub_constructive, ConjectureReport, UbHints,
};
use fflab_core::engine::{verify as play, StrategyJson, Verdict};
use fflab_core::fuzz::{fuzz as sample, FuzzConfig};
use fflab_core::gadgets::{self, GadgetParams, LabeledGadget, LabeledGadgetJson, TreeShape};
use fflab_core::io::to_graph6;
use fflab_core::solver::{Limits, SearchStats, Solver};
use fflab_core::strategies as build;
use fflab_core::{is_winning, Graph, SolveError, Strategy, Variant};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::{load_graph, load_json, load_stream, load_strategy};
use crate::{
    BoundArgs, Check, EnumcheckArgs, Failure, FuzzArgs, GadgetArgs, GadgetKind, Shape, SolveArgs,
    VerifyArgs,
};

type Outcome = Result<(), Failure>;

fn emit<T: Serialize>(value: &T) -> Outcome {
    let text = serde_json::to_string_pretty(value)?;
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::from(e)),
        _ => Ok(()),
    }
}

fn limit(e: SolveError) -> Failure {
    Failure::Resource(e.to_string())
}

#[derive(Serialize)]
struct DecisionJson {
    m: usize,
    variant: Variant,
    time: Option<usize>,
    winning: bool,
    t_m: Option<usize>,
    witness: Option<StrategyJson>,
    stats: SearchStats,
}

pub fn solve(a: SolveArgs) -> Outcome {
    let g = load_graph(&a.input)?;
    let solver = Solver::with_limits(a.limits);
    let Some(m) = a.m else {
        let r = solver.ffn(&g, a.variant).map_err(limit)?;
        return emit(&r.to_json());
    };
    let d = solver.search(&g, m, a.variant, a.time).map_err(limit)?;
    emit(&DecisionJson {
        m,
        variant: a.variant,
        time: a.time,
        winning: d.is_winning(),
        t_m: d.shortest,
        witness: d.witness.as_ref().map(Strategy::to_json),
        stats: d.stats,
    })
}

#[derive(Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
enum VerifyJson {
    Win {
        m: usize,
        steps: usize,
        cleared_at: usize,
    },
    Lose {
        m: usize,
        steps: usize,
        remaining: Vec<usize>,
        closest_step: usize,
        closest_size: usize,
    },
}

pub fn verify(a: VerifyArgs) -> Outcome {
    let g = load_graph(&a.input)?;
    let s = load_strategy(&a.strategy, g.n())?;
    match play(&g, &s, a.variant) {
        Verdict::Win { cleared_at } => emit(&VerifyJson::Win {
            m: s.budget(),
            steps: s.len(),
            cleared_at,
        }),
        Verdict::Loss {
            remaining,
            closest,
            closest_size,
        } => {
            eprintln!(
                "strategy loses: {} nodes still burn after step {}",
                remaining.len(),
                s.len()
            );
            emit(&VerifyJson::Lose {
                m: s.budget(),
                steps: s.len(),
                remaining: remaining.to_vec(),
                closest_step: closest,
                closest_size,
            })?;
            Err(Failure::Lost)
        }
    }
}

pub fn bound(a: BoundArgs) -> Outcome {
    let g = load_graph(&a.input)?;
    let path_decomposition = match &a.pathdecomp {
        Some(p) => Some(load_json::<Vec<Vec<usize>>>(p)?),
        None => None,
    };
    let hints = UbHints {
        path_decomposition,
        removal: a.removal,
    };
    emit(&bound_report(&g, &hints)?)
}

#[derive(Serialize)]
struct GadgetJson {
    kind: &'static str,
    n: usize,
    gadget: LabeledGadgetJson,
    strategy: Option<StrategyJson>,
}

fn params(alpha: usize, beta: usize) -> Result<GadgetParams, Failure> {
    Ok(GadgetParams::new(alpha, beta)?)
}

/// A shortest winning `m`-strategy of at most `t` steps, if one exists.
fn inner_strategy(g: &Graph, m: usize, t: usize) -> Result<Option<Strategy>, Failure> {
    let d = Solver::default()
        .search(g, m, Variant::Firefighter, Some(t))
        .map_err(limit)?;
    Ok(d.witness)
}

pub fn gadget(a: GadgetArgs) -> Outcome {
    let construct = a.construct;
    let (kind, gadget, strategy): (&'static str, LabeledGadget, Option<Strategy>) = match a.kind {
        GadgetKind::TimeGadget { input, t, m } => {
            let g = load_graph(&input)?;
            let gadget = gadgets::time_gadget(&g, t, m)?;
            let strategy = if construct {
                match inner_strategy(&g, m, t)? {
                    Some(inner) => Some(build::strategy_time_gadget(&gadget, &inner)?),
                    None => {
                        eprintln!("no {t}-step {m}-strategy for the inner graph; nothing to construct");
                        None
                    }
                }
            } else {
                None
            };
            ("time_gadget", gadget, strategy)
        }
        GadgetKind::GFamily { m, alpha, beta } => {
            let p = params(alpha, beta)?;
            let levels = (2..=m.max(2))
                .map(|level| gadgets::g_family(level, p))
                .collect::<Result<Vec<_>, _>>()?;
            let gadget = levels.last().cloned().context("m must be at least 2")?;
            let strategy = construct
                .then(|| build::strategy_g_family(&levels))
                .transpose()?;
            ("g_family", gadget, strategy)
        }
        GadgetKind::AuxH { m, alpha, beta } => {
            let gadget = gadgets::aux_h(m, params(alpha, beta)?)?;
            let strategy = construct.then(|| build::strategy_aux_h(&gadget)).transpose()?;
            ("aux_h", gadget, strategy)
        }
        GadgetKind::HunterTransform { input } => {
            let g = load_graph(&input)?;
            let gadget = gadgets::hunter_transform_labeled(&g);
            let strategy = if construct {
                let r = Solver::default().ffn(&g, Variant::Firefighter).map_err(limit)?;
                let w = r.witness.ok_or_else(|| anyhow!("solver returned no witness"))?;
                let doubled = build::hunter_strategy_from_ff(&w, &g, build::StartParity::Any);
                if !is_winning(&gadget.graph, &doubled, Variant::Hunter) {
                    return Err(Failure::Lost);
                }
                Some(doubled)
            } else {
                None
            };
            ("hunter_transform", gadget, strategy)
        }
        GadgetKind::ThreePartition { items, shape } => {
            let shape = match shape {
                Shape::Star => TreeShape::Star,
                Shape::Spider => TreeShape::Path,
                Shape::Arbitrary => TreeShape::Arbitrary,
            };
            let gadget = gadgets::three_partition_tree(&items, shape)?;
            let strategy = construct
                .then(|| build::strategy_three_partition(&gadget, &items))
                .transpose()?;
            ("three_partition", gadget, strategy)
        }
        GadgetKind::Binpacking { items } => {
            let gadget = gadgets::binpacking_gadget(&items)?;
            let strategy = if construct {
                let cap = items.iter().copied().max().unwrap_or(0);
                let bins = build::first_fit_decreasing(&items, cap).context("items do not fit")?;
                Some(build::strategy_bin_packing(&gadget, &bins)?)
            } else {
                None
            };
            ("binpacking", gadget, strategy)
        }
        GadgetKind::PathClique { p } => {
            let gadget = gadgets::path_clique(p)?;
            let strategy = construct.then(|| build::strategy_path_clique(&gadget)).transpose()?;
            ("path_clique", gadget, strategy)
        }
    };
    emit(&GadgetJson {
        kind,
        n: gadget.graph.n(),
        gadget: gadget.to_json(),
        strategy: strategy.as_ref().map(Strategy::to_json),
    })
}

#[derive(Serialize)]
struct Record {
    index: usize,
    graph6: String,
    n: usize,
    ffn: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conjecture: Option<ConjectureReport>,
}

#[derive(Serialize)]
struct EnumcheckJson {
    check: &'static str,
    graphs: usize,
    checked: usize,
    failures: usize,
    records: Vec<Record>,
}

fn soundness_failure(g: &Graph, f: usize) -> anyhow::Result<Option<String>> {
    let mut lowers = vec![
        ("min_degree", lb_min_degree(g)),
        ("edge_count", lb_edge_count(g)),
        ("characterization", lb_characterization(g)),
        ("subgraph_expansion", lb_subgraph_expansion(g, usize::MAX).0),
    ];
    if let Ok((e, _)) = lb_expansion(g) {
        lowers.push(("expansion", e));
    }
    if let Some((rule, lb)) = lowers.into_iter().find(|&(_, lb)| lb > f) {
        return Ok(Some(format!("lower bound {rule} = {lb} exceeds ffn {f}")));
    }
    let ub = ub_constructive(g, &UbHints::default())?;
    if ub.m < f || !is_winning(g, &ub.strategy, Variant::Firefighter) {
        return Ok(Some(format!("upper bound {} via {} is unsound", ub.m, ub.rule)));
    }
    if let Ok(fb) = forest_bound(g) {
        if (f as f64) > fb {
            return Ok(Some(format!("forest bound {fb:.3} is below ffn {f}")));
        }
    }
    Ok(None)
}

fn check_one(index: usize, g: &Graph, check: Check, limits: Limits) -> Result<Option<Record>, Failure> {
    let f = Solver::with_limits(limits)
        .ffn(g, Variant::Firefighter)
        .map_err(limit)?
        .ffn;
    let record = |failure: Option<String>, conjecture: Option<ConjectureReport>| Record {
        index,
        graph6: to_graph6(g),
        n: g.n(),
        ffn: f,
        failure,
        conjecture,
    };
    Ok(match check {
        Check::Char => {
            let agrees = match char_small_ffn(g) {
                Some(v) => v == f,
                None => g.n() == 0 || f >= 3,
            };
            (!agrees).then(|| record(Some(format!("characterization gives {:?}", char_small_ffn(g))), None))
        }
        Check::Conjecture => {
            let r = check_conjecture(g, f)?;
            let failure = (!r.forward_ok).then(|| "certificate exceeds the exact value".to_string());
            (failure.is_some() || r.counterexample.is_some()).then(|| record(failure, Some(r)))
        }
        Check::BoundsSoundness => soundness_failure(g, f)?.map(|msg| record(Some(msg), None)),
    })
}

pub fn enumcheck(a: EnumcheckArgs) -> Outcome {
    let graphs = load_stream(&a.stream)?;
    let selected: Vec<(usize, &Graph)> = graphs.iter().enumerate().filter(|(_, g)| g.n() <= a.max_n).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs.unwrap_or(0))
        .build()
        .context("building worker pool")?;
    let results: Vec<Result<Option<Record>, Failure>> = pool.install(|| {
        selected
            .par_iter()
            .map(|&(i, g)| check_one(i, g, a.check, a.limits))
            .collect()
    });
    let mut records = Vec::new();
    for r in results {
        if let Some(rec) = r? {
            records.push(rec);
        }
    }
    let failures = records.iter().filter(|r| r.failure.is_some()).count();
    emit(&EnumcheckJson {
        check: match a.check {
            Check::Char => "char",
            Check::Conjecture => "conjecture",
            Check::BoundsSoundness => "bounds-soundness",
        },
        graphs: graphs.len(),
        checked: selected.len(),
        failures,
        records,
    })?;
    if failures > 0 {
        Err(Failure::Lost)
    } else {
        Ok(())
    }
}

#[derive(Serialize)]
struct FuzzJson {
    m: usize,
    steps: usize,
    trials: u64,
    seed: u64,
    variant: Variant,
    wins: u64,
    first_win_trial: Option<u64>,
    first_win: Option<StrategyJson>,
}

pub fn fuzz(a: FuzzArgs) -> Outcome {
    let g = load_graph(&a.input)?;
    let cfg = FuzzConfig {
        m: a.m,
        len: a.steps,
        trials: a.trials,
        seed: a.seed,
        variant: a.variant,
    };
    let r = sample(&g, &cfg);
    emit(&FuzzJson {
        m: a.m,
        steps: a.steps,
        trials: a.trials,
        seed: a.seed,
        variant: a.variant,
        wins: r.wins,
        first_win_trial: r.first_win_trial,
        first_win: r.first_win.as_ref().map(Strategy::to_json),
    })
}
