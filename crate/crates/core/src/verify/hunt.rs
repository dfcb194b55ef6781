//! Random near-threshold search for counterexamples.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{judge, Outcome, Statement};
use crate::error::{domain, Result};
use crate::extremal::choose2;
use crate::graph::Graph;
use crate::spectrum::{consecutive_even_starts, count_admissible, cycle_spectrum, CycleSpectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HuntConfig {
    /// Edge swaps attempted per trial after sampling.
    pub climb_steps: usize,
}

impl Default for HuntConfig {
    fn default() -> Self {
        HuntConfig { climb_steps: 4 }
    }
}

/// Edge count sampled at for `statement` on `n` vertices.
pub fn hunt_threshold(n: usize, statement: Statement) -> Result<usize> {
    let t = match statement {
        Statement::Admissible { k } | Statement::ConsecutiveEven { k } | Statement::EvenCycles { k } => {
            statement.check_domain(&Graph::empty(n)?)?;
            statement.required_edges(n).ok_or_else(|| crate::error::Error::Domain(format!("order {n} too small for k={k}")))?
        }
        // The floor keeps the equality case reachable for odd products.
        Statement::ConsecutiveEvenConjecture { k } => (2 * k + 1) * n.saturating_sub(1) / 2,
        other => return domain(format!("hunting supports t1, t3, t5 and c1, not {other}")),
    };
    if t > choose2(n) {
        return domain(format!("{t} edges do not fit on {n} vertices"));
    }
    Ok(t)
}

/// Smaller is closer to a counterexample.
fn objective(statement: Statement, spec: &CycleSpectrum) -> (usize, usize) {
    let qualifying = match statement {
        Statement::Admissible { k } => count_admissible(spec, k),
        Statement::EvenCycles { k } => (2..=k + 1).filter(|&i| spec.contains(2 * i)).count(),
        Statement::ConsecutiveEven { k } | Statement::ConsecutiveEvenConjecture { k } => consecutive_even_starts(spec, k).count(),
        _ => 0,
    };
    (qualifying, spec.even_lengths().count())
}

fn is_failure(statement: Statement, g: &Graph, spec: &CycleSpectrum) -> Result<bool> {
    Ok(judge(statement, g, spec)?.outcome == Outcome::FailCounterexample)
}

fn trial(n: usize, statement: Statement, threshold: usize, seed: u64, index: u64, config: HuntConfig) -> Result<Option<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let top = (threshold + 1).min(pairs.len());
    let e = rng.gen_range(threshold..=top);
    let mut g = Graph::from_edges(n, sample(&mut rng, pairs.len(), e).into_iter().map(|i| pairs[i]))?;
    let spec = cycle_spectrum(&g);
    if is_failure(statement, &g, &spec)? {
        return Ok(Some(g));
    }
    if e == 0 || e == pairs.len() {
        return Ok(None);
    }
    let mut score = objective(statement, &spec);
    for _ in 0..config.climb_steps {
        let present: Vec<(usize, usize)> = g.edges().collect();
        let absent: Vec<(usize, usize)> = pairs.iter().copied().filter(|&(u, v)| !g.has_edge(u, v)).collect();
        let (a, b) = present[rng.gen_range(0..present.len())];
        let (c, d) = absent[rng.gen_range(0..absent.len())];
        let next = g.without_edge(a, b)?.with_edge(c, d)?;
        let next_spec = cycle_spectrum(&next);
        let next_score = objective(statement, &next_spec);
        if next_score < score {
            if is_failure(statement, &next, &next_spec)? {
                return Ok(Some(next));
            }
            (g, score) = (next, next_score);
        }
    }
    Ok(None)
}

/// Samples random graphs with `threshold` or `threshold + 1` edges, hill-climbs
/// each by edge swaps, and returns the first counterexample by trial index.
///
/// Each trial draws from its own stream of a seeded generator, so the result
/// does not depend on how trials are scheduled.
pub fn near_threshold_search(n: usize, statement: Statement, trials: u64, seed: u64, config: HuntConfig) -> Result<Option<Graph>> {
    let threshold = hunt_threshold(n, statement)?;
    (0..trials)
        .into_par_iter()
        .map(|i| trial(n, statement, threshold, seed, i, config))
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .unwrap_or(Ok(None))
}
