//! Labeled graph enumeration and seeded sampling.
//!
//! Exhaustive enumeration walks edge masks in increasing numeric order, which
//! is graph6 string order for a fixed `n` (see [`Graph::edge_mask`]). Sampling
//! uses ChaCha8 seeded with [`rand::SeedableRng::seed_from_u64`], one stream
//! per sample index, so each sample is independent of thread scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::certificate::RhoMeasure;
use super::{Mode, SweepPlan};
use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph};
use crate::spectral::{spectral_radius, threshold};

const CHUNK: u64 = 1 << 12;

/// A graph admitted by the spectral filter.
#[derive(Clone, Debug, PartialEq)]
pub struct Qualified {
    pub graph: Graph,
    pub measure: RhoMeasure,
}

/// Number of labeled graphs on `[n]`, or `None` past `u128`.
pub fn labeled_graph_count(n: usize) -> Option<u128> {
    1u128.checked_shl(pair_count(n) as u32)
}

/// Errors unless all `2^C(n,2)` labeled graphs fit in the budget.
pub fn check_exhaustive_budget(n: usize, budget: u64) -> Result<u64> {
    let total = labeled_graph_count(n).unwrap_or(u128::MAX);
    if total > budget as u128 || pair_count(n) > 63 {
        return Err(Error::BudgetExceeded { needed: total, budget });
    }
    Ok(total as u64)
}

/// Splits `0..total` into fixed chunks, evaluates them in parallel and
/// returns the per-chunk results in index order.
pub(crate) fn par_ranges<T: Send>(total: u64, f: impl Fn(u64, u64) -> T + Sync) -> Vec<T> {
    let chunks = total.div_ceil(CHUNK);
    (0..chunks).into_par_iter().map(|c| f(c * CHUNK, ((c + 1) * CHUNK).min(total))).collect()
}

/// Every labeled graph on `[n]` passing `keep`, in graph6 order.
pub fn enumerate_filtered<T: Send>(n: usize, budget: u64, keep: impl Fn(Graph) -> Option<T> + Sync) -> Result<Vec<T>> {
    let total = check_exhaustive_budget(n, budget)?;
    let chunks = par_ranges(total, |lo, hi| {
        (lo..hi).filter_map(|mask| keep(Graph::from_edge_mask(n, mask).expect("n <= 11"))).collect::<Vec<_>>()
    });
    Ok(chunks.into_iter().flatten().collect())
}

/// Labeled graphs on `[n]` with spectral radius at least
/// `threshold(n, m) - margin`, in graph6 order.
pub fn enumerate_qualifying(n: usize, m: usize, margin: f64, tol: f64, budget: u64) -> Result<Vec<Qualified>> {
    let thr = threshold(n, m)?;
    let qualified = enumerate_filtered(n, budget, |g| {
        let r = spectral_radius(&g, tol).ok()?;
        (r.rho >= thr - margin).then_some(Qualified { graph: g, measure: RhoMeasure { rho: r.rho, residual: r.residual } })
    })?;
    Ok(qualified)
}

/// Generator for sample `index` of a run seeded with `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform labeled graph on `[n]`: every pair is an edge with probability 1/2.
pub fn random_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let pairs = pair_count(n);
    if pairs <= 64 {
        let mask = if pairs == 64 { rng.random::<u64>() } else { rng.random::<u64>() & ((1u64 << pairs) - 1) };
        return Graph::from_edge_mask(n, mask).expect("n <= 11");
    }
    let mut g = Graph::empty(n).expect("n >= 1");
    for v in 2..=n {
        for u in 1..v {
            if rng.random::<bool>() {
                g.add_edge(u, v).expect("valid pair");
            }
        }
    }
    g
}

/// Uniform sample from the qualifying graphs by rejection. Gives up after
/// `max_attempts` draws.
pub fn sample_qualifying(
    n: usize,
    thr: f64,
    margin: f64,
    tol: f64,
    rng: &mut impl Rng,
    max_attempts: u64,
) -> Result<Qualified> {
    for _ in 0..max_attempts {
        let g = random_graph(n, rng);
        let r = spectral_radius(&g, tol)?;
        if r.rho >= thr - margin {
            return Ok(Qualified { graph: g, measure: RhoMeasure { rho: r.rho, residual: r.residual } });
        }
    }
    Err(Error::BudgetExceeded { needed: max_attempts as u128 + 1, budget: max_attempts })
}

/// Mode description used in certificates.
pub fn describe(plan: &SweepPlan) -> String {
    match plan.mode {
        Mode::Exhaustive => "exhaustive".into(),
        Mode::FilteredExhaustive => "filtered-exhaustive".into(),
        Mode::Sampled { count, seed } => format!("sampled(count={count},seed={seed})"),
    }
}
