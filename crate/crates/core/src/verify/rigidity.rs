//! Rigidity of the extremal graphs under a single shift.
//!
//! If `ρ(G)` equals the radius of an extremal graph `A` and some `S_xy(G)` is
//! isomorphic to `A`, then `G` itself is isomorphic to `A`. Checked for
//! `A = A_m_plus_1` and `A = A1`.

use super::certificate::{Certificate, Kind, Measured, Outcome, Params, Partial, RhoMeasure, Sweep, Witness};
use super::enumerate::{check_exhaustive_budget, par_ranges, random_graph, sample_rng};
use super::{Mode, SweepPlan};
use crate::error::{Error, Result};
use crate::graph::{construct_extremal, graph6, iso, ExtremalParams, Graph};
use crate::shifting::shift_xy;
use crate::spectral::{closed_form_rho_extremal, spectral_radius};

struct Target {
    label: &'static str,
    graph: Graph,
    rho: f64,
}

fn targets(n: usize, m: usize) -> Result<[Target; 2]> {
    let make = |label, i| -> Result<Target> {
        let p = ExtremalParams::new(n, m, i)?;
        Ok(Target { label, graph: construct_extremal(p), rho: closed_form_rho_extremal(p) })
    };
    Ok([make("A_m_plus_1", m + 1)?, make("A1", 1)?])
}

enum Verdict {
    /// Radius matches no target, or no shifted image is extremal.
    NotMet,
    Rigid(&'static str, Vec<(usize, usize)>),
    Broken(&'static str, Vec<(usize, usize)>),
}

struct Eval {
    measure: RhoMeasure,
    verdict: Verdict,
}

fn evaluate(g: &Graph, targets: &[Target; 2], margin: f64, tol: f64) -> Result<Eval> {
    let r = spectral_radius(g, tol)?;
    let measure = RhoMeasure { rho: r.rho, residual: r.residual };
    let n = g.n();
    for t in targets {
        if (r.rho - t.rho).abs() > margin || g.edge_count() != t.graph.edge_count() {
            continue;
        }
        let mut pairs = Vec::new();
        for x in 1..=n {
            for y in 1..=n {
                if x != y && iso::are_isomorphic(&shift_xy(g, x, y)?, &t.graph)? {
                    pairs.push((x, y));
                }
            }
        }
        if pairs.is_empty() {
            continue;
        }
        let verdict = if iso::are_isomorphic(g, &t.graph)? {
            Verdict::Rigid(t.label, pairs)
        } else {
            Verdict::Broken(t.label, pairs)
        };
        return Ok(Eval { measure, verdict });
    }
    Ok(Eval { measure, verdict: Verdict::NotMet })
}

fn certificate(g: &Graph, eval: Eval, params: Params) -> Certificate {
    let (outcome, witness) = match eval.verdict {
        Verdict::NotMet => (
            Outcome::Pass,
            Witness::Within { quantity: "no extremal radius with an extremal shift; hypothesis not met".into(), value: eval.measure.rho, bound: 0.0 },
        ),
        Verdict::Rigid(label, pairs) => (Outcome::Pass, Witness::Rigid { extremal: label.into(), pairs }),
        Verdict::Broken(label, pairs) => (
            Outcome::Counterexample,
            Witness::Violation {
                quantity: "isomorphism to the extremal graph".into(),
                value: 0.0,
                bound: 1.0,
                detail: format!("{label} radius and shifted images at {pairs:?} are {label}, but the graph is not"),
            },
        ),
    };
    Certificate {
        kind: Kind::PROP,
        params,
        instance: vec![graph6::encode(g)],
        measured: Measured { rho: vec![eval.measure], ..Measured::default() },
        outcome,
        witness,
    }
}

fn params(plan: &SweepPlan) -> Params {
    plan.params("extremal-rigidity")
}

fn check_size(n: usize) -> Result<()> {
    if n > iso::MAX_N {
        return Err(Error::IsomorphismTooLarge { n, limit: iso::MAX_N });
    }
    Ok(())
}

fn tally(g: &Graph, targets: &[Target; 2], plan: &SweepPlan, params: &Params, part: &mut Partial) -> Result<()> {
    let eval = evaluate(g, targets, plan.margin, plan.tol)?;
    part.counts.examined += 1;
    match eval.verdict {
        Verdict::NotMet => return Ok(()),
        Verdict::Rigid(..) => part.counts.passed += 1,
        Verdict::Broken(..) => part.counts.counterexamples += 1,
    }
    part.counts.qualifying += 1;
    part.certificates.push(certificate(g, eval, params.clone()));
    Ok(())
}

/// Sweeps graphs on `[n]` (`n <= 8`, `n >= 2m + 2`), emitting a certificate
/// for each graph that meets a rigidity hypothesis.
pub fn check_extremal_rigidity(plan: &SweepPlan) -> Result<Sweep> {
    plan.validate()?;
    check_size(plan.n)?;
    let targets = targets(plan.n, plan.m)?;
    let params = params(plan);
    let parts = match plan.mode {
        Mode::Exhaustive | Mode::FilteredExhaustive => {
            let total = check_exhaustive_budget(plan.n, plan.budget)?;
            par_ranges(total, |lo, hi| {
                let mut part = Partial::default();
                for mask in lo..hi {
                    tally(&Graph::from_edge_mask(plan.n, mask)?, &targets, plan, &params, &mut part)?;
                }
                Ok(part)
            })
        }
        Mode::Sampled { count, seed } => par_ranges(count, |lo, hi| {
            let mut part = Partial::default();
            for index in lo..hi {
                tally(&random_graph(plan.n, &mut sample_rng(seed, index)), &targets, plan, &params, &mut part)?;
            }
            Ok(part)
        }),
    };
    let parts = parts.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(Partial::merge(parts).finish(Kind::PROP, params))
}

pub(crate) fn replay_graph(params: &Params, g: &Graph) -> Result<Certificate> {
    let plan = SweepPlan::exhaustive(params.n, params.m).with_margin(params.margin).with_tol(params.tol);
    plan.validate()?;
    check_size(g.n())?;
    let eval = evaluate(g, &targets(params.n, params.m)?, params.margin, params.tol)?;
    Ok(certificate(g, eval, params.clone()))
}
