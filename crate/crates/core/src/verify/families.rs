//! Rainbow-matching sweeps over families of `m + 1` graphs on `[n]`.

use std::collections::HashMap;

use rand::distr::weighted::WeightedIndex;
use rand::Rng;

use super::certificate::{Certificate, Kind, Measured, Outcome, Params, Partial, RhoMeasure, Sweep, Witness};
use super::enumerate::{check_exhaustive_budget, par_ranges, random_graph, sample_rng};
use super::{Mode, SweepPlan, CROSS_CHECK_TOL};
use crate::error::{Error, Result};
use crate::graph::{graph6, pair_count, recognize_extremal, ExtremalKind, Graph};
use crate::matching::{find_rainbow, GraphFamily, RainbowMatching};
use crate::spectral::{complete_split_rho, spectral_radius, threshold};

/// Tolerance and slack for re-checking members admitted only by the margin.
const REFINE_TOL: f64 = 1e-13;
const REFINE_SLACK: f64 = 1e-12;

/// Which families may fail to have a rainbow matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum T13Regime {
    /// `n < 3m + 2`: identical copies of `A1`.
    Below,
    /// `n = 3m + 2`: identical copies of `A1` or of `A_m_plus_1`.
    Critical,
    /// `n > 3m + 2`: identical copies of `A_m_plus_1`.
    Above,
}

impl T13Regime {
    pub fn for_params(n: usize, m: usize) -> Result<Self> {
        threshold(n, m)?;
        Ok(match n.cmp(&(3 * m + 2)) {
            std::cmp::Ordering::Less => T13Regime::Below,
            std::cmp::Ordering::Equal => T13Regime::Critical,
            std::cmp::Ordering::Greater => T13Regime::Above,
        })
    }

    pub fn tag(self) -> &'static str {
        match self {
            T13Regime::Below => "n<3m+2",
            T13Regime::Critical => "n=3m+2",
            T13Regime::Above => "n>3m+2",
        }
    }

    /// Label and defining set when `kind` is an allowed exception.
    pub fn allows(self, kind: ExtremalKind) -> Option<(String, Vec<usize>)> {
        match (self, kind) {
            (T13Regime::Below | T13Regime::Critical, ExtremalKind::A1 { clique }) => Some(("A1".into(), clique)),
            (T13Regime::Critical | T13Regime::Above, ExtremalKind::AmPlus1 { dominating }) => {
                Some(("A_m_plus_1".into(), dominating))
            }
            _ => None,
        }
    }
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// `max{C(n,2) - C(n-m,2), C(2m+1,2)}`.
pub fn t11_edge_bound(n: usize, m: usize) -> usize {
    (binom2(n) - binom2(n.saturating_sub(m))).max(binom2(2 * m + 1))
}

#[derive(Clone, Copy, Debug)]
enum Hypothesis {
    Spectral { thr: f64, regime: T13Regime },
    Edges { bound: usize },
}

struct Ctx {
    kind: Kind,
    n: usize,
    m: usize,
    margin: f64,
    tol: f64,
    hyp: Hypothesis,
}

impl Ctx {
    fn new(kind: Kind, plan: &SweepPlan) -> Result<Ctx> {
        let (n, m) = (plan.n, plan.m);
        let hyp = match kind {
            Kind::T13 => Hypothesis::Spectral { thr: threshold(n, m)?, regime: T13Regime::for_params(n, m)? },
            _ => {
                threshold(n, m)?;
                Hypothesis::Edges { bound: t11_edge_bound(n, m) }
            }
        };
        Ok(Ctx { kind, n, m, margin: plan.margin, tol: plan.tol, hyp })
    }

    fn regime_tag(&self) -> String {
        match self.hyp {
            Hypothesis::Spectral { regime, .. } => regime.tag().into(),
            Hypothesis::Edges { bound } => format!("e>{bound}"),
        }
    }

    fn k(&self) -> usize {
        self.m + 1
    }

    /// Whether `g` enters the candidate pool at all.
    fn candidate(&self, g: &Graph) -> Result<Option<Member>> {
        match self.hyp {
            Hypothesis::Edges { bound } => {
                Ok((g.edge_count() > bound).then(|| Member::plain(g.clone(), true, None)))
            }
            Hypothesis::Spectral { thr, .. } => {
                let r = spectral_radius(g, self.tol)?;
                if r.rho < thr - self.margin {
                    return Ok(None);
                }
                Ok(Some(self.spectral_member(g.clone(), RhoMeasure { rho: r.rho, residual: r.residual }, thr)))
            }
        }
    }

    fn spectral_member(&self, graph: Graph, measure: RhoMeasure, thr: f64) -> Member {
        let (n, m) = (self.n, self.m);
        let kind = recognize_extremal(&graph, m);
        let closed = match kind {
            ExtremalKind::A1 { .. } => Some((2 * m) as f64),
            ExtremalKind::AmPlus1 { .. } => Some(complete_split_rho(n, m)),
            ExtremalKind::Neither => None,
        };
        let cross = closed.map(|c| (measure.rho - c).abs() <= CROSS_CHECK_TOL);
        let near = (measure.rho - thr).abs() <= self.margin;
        let admitted = measure.rho >= thr - self.margin
            && (!near
                || match kind {
                    // Exact comparison: 2m >= surd iff n <= 3m + 2.
                    ExtremalKind::A1 { .. } => n <= 3 * m + 2,
                    ExtremalKind::AmPlus1 { .. } => n >= 3 * m + 2,
                    ExtremalKind::Neither => spectral_radius(&graph, REFINE_TOL)
                        .map_or(true, |r| r.rho >= thr - REFINE_SLACK),
                });
        Member { graph, rho: Some(measure), near, admitted, cross }
    }

    /// Re-evaluates a member of a replayed instance, which need not be a candidate.
    fn replay_member(&self, g: Graph) -> Result<Member> {
        match self.hyp {
            Hypothesis::Edges { bound } => {
                let ok = g.edge_count() > bound;
                Ok(Member::plain(g, ok, None))
            }
            Hypothesis::Spectral { thr, .. } => {
                let r = spectral_radius(&g, self.tol)?;
                Ok(self.spectral_member(g, RhoMeasure { rho: r.rho, residual: r.residual }, thr))
            }
        }
    }

    fn params(&self, mode: String) -> Params {
        Params { n: self.n, m: self.m, regime: self.regime_tag(), mode, margin: self.margin, tol: self.tol }
    }
}

#[derive(Clone, Debug)]
struct Member {
    graph: Graph,
    rho: Option<RhoMeasure>,
    /// Radius within the margin of the threshold.
    near: bool,
    /// Meets the hypothesis, after re-checking near-threshold radii.
    admitted: bool,
    /// Agreement with the closed form, for recognized extremal graphs.
    cross: Option<bool>,
}

impl Member {
    fn plain(graph: Graph, admitted: bool, rho: Option<RhoMeasure>) -> Member {
        Member { graph, rho, near: false, admitted, cross: None }
    }
}

enum Verdict {
    NotAdmitted,
    Rainbow(RainbowMatching),
    Exception(String, Vec<usize>),
    Failure,
}

fn judge(members: &[&Member], ctx: &Ctx) -> Verdict {
    if members.iter().any(|x| !x.admitted) {
        return Verdict::NotAdmitted;
    }
    let family = GraphFamily::new(members.iter().map(|x| x.graph.clone()).collect()).expect("same vertex set");
    if let Some(r) = find_rainbow(&family) {
        return Verdict::Rainbow(r);
    }
    if let Hypothesis::Spectral { regime, .. } = ctx.hyp {
        let first = &members[0].graph;
        if members.iter().all(|x| x.graph == *first) {
            if let Some((label, set)) = regime.allows(recognize_extremal(first, ctx.m)) {
                return Verdict::Exception(label, set);
            }
        }
    }
    Verdict::Failure
}

fn certificate(members: &[&Member], verdict: Verdict, ctx: &Ctx, params: Params) -> Certificate {
    let mut measured = Measured::default();
    let not_met = match ctx.hyp {
        Hypothesis::Spectral { thr, .. } => {
            measured.rho = members.iter().filter_map(|x| x.rho).collect();
            measured.threshold = Some(thr);
            measured.near_threshold = (1..=members.len()).filter(|&i| members[i - 1].near).collect();
            let low = members.iter().filter(|x| !x.admitted).filter_map(|x| x.rho).map(|r| r.rho).fold(f64::INFINITY, f64::min);
            Witness::Within { quantity: "rho below threshold; hypothesis not met".into(), value: low, bound: thr }
        }
        Hypothesis::Edges { bound } => {
            measured.edges = members.iter().map(|x| x.graph.edge_count()).collect();
            measured.bound = Some(bound as f64);
            let low = measured.edges.iter().copied().min().unwrap_or(0);
            Witness::Within { quantity: "edges at most bound; hypothesis not met".into(), value: low as f64, bound: bound as f64 }
        }
    };
    let (outcome, witness) = match verdict {
        Verdict::NotAdmitted => (Outcome::Pass, not_met),
        Verdict::Rainbow(r) => (Outcome::Pass, Witness::Rainbow(r)),
        Verdict::Exception(extremal, set) => (Outcome::Pass, Witness::Extremal { extremal, set }),
        Verdict::Failure => (
            Outcome::Counterexample,
            Witness::Violation {
                quantity: "rainbow matching".into(),
                value: 0.0,
                bound: ctx.k() as f64,
                detail: "no rainbow matching and the family is not a stated exception".into(),
            },
        ),
    };
    Certificate {
        kind: ctx.kind,
        params,
        instance: members.iter().map(|x| graph6::encode(&x.graph)).collect(),
        measured,
        outcome,
        witness,
    }
}

fn cross_check_certificate(member: &Member, ctx: &Ctx, params: Params) -> Certificate {
    let closed = match recognize_extremal(&member.graph, ctx.m) {
        ExtremalKind::A1 { .. } => (2 * ctx.m) as f64,
        _ => complete_split_rho(ctx.n, ctx.m),
    };
    let rho = member.rho.map_or(f64::NAN, |r| r.rho);
    let ok = member.cross != Some(false);
    Certificate {
        kind: ctx.kind,
        params,
        instance: vec![graph6::encode(&member.graph)],
        measured: Measured { rho: member.rho.into_iter().collect(), ..Measured::default() },
        outcome: if ok { Outcome::Pass } else { Outcome::Counterexample },
        witness: if ok {
            Witness::Within { quantity: "closed-form agreement".into(), value: (rho - closed).abs(), bound: CROSS_CHECK_TOL }
        } else {
            Witness::Violation {
                quantity: "closed-form agreement".into(),
                value: rho,
                bound: closed,
                detail: "iterative radius disagrees with the closed form".into(),
            }
        },
    }
}

fn tally(members: &[&Member], ctx: &Ctx, params: &Params, part: &mut Partial) {
    part.counts.examined += 1;
    let verdict = judge(members, ctx);
    match verdict {
        Verdict::NotAdmitted => {
            part.counts.refined_out += 1;
            return;
        }
        Verdict::Rainbow(_) => {
            part.counts.qualifying += 1;
            part.counts.passed += 1;
            return;
        }
        Verdict::Exception(..) => part.counts.exceptions += 1,
        Verdict::Failure => part.counts.counterexamples += 1,
    }
    part.counts.qualifying += 1;
    part.certificates.push(certificate(members, verdict, ctx, params.clone()));
}

/// Pool members' closed-form checks, as counts and certificates for mismatches.
fn pool_cross_checks(pool: &[Member], ctx: &Ctx, params: &Params) -> Partial {
    let mut part = Partial::default();
    for x in pool {
        if let Some(ok) = x.cross {
            part.counts.cross_checked += 1;
            if !ok {
                part.counts.counterexamples += 1;
                part.certificates.push(cross_check_certificate(x, ctx, params.clone()));
            }
        }
    }
    part
}

fn build_pool(ctx: &Ctx, budget: u64) -> Result<Vec<Member>> {
    let total = check_exhaustive_budget(ctx.n, budget)?;
    let chunks: Vec<Result<Vec<Member>>> = par_ranges(total, |lo, hi| {
        let mut out = Vec::new();
        for mask in lo..hi {
            if let Some(x) = ctx.candidate(&Graph::from_edge_mask(ctx.n, mask)?)? {
                out.push(x);
            }
        }
        Ok(out)
    });
    let mut pool = Vec::new();
    for c in chunks {
        pool.extend(c?);
    }
    Ok(pool)
}

fn exhaustive(ctx: &Ctx, plan: &SweepPlan, params: &Params) -> Result<Partial> {
    let pool = build_pool(ctx, plan.budget)?;
    let k = ctx.k();
    let q = pool.len() as u128;
    let total = q.checked_pow(k as u32).unwrap_or(u128::MAX);
    if total > plan.budget as u128 {
        return Err(Error::BudgetExceeded { needed: total, budget: plan.budget });
    }
    let head = pool_cross_checks(&pool, ctx, params);
    let parts = par_ranges(total as u64, |lo, hi| {
        let mut part = Partial::default();
        let mut members = Vec::with_capacity(k);
        let mut digits = vec![0usize; k];
        for t in lo..hi {
            members.clear();
            let mut rest = t;
            for d in digits.iter_mut().rev() {
                *d = (rest % q as u64) as usize;
                rest /= q as u64;
            }
            members.extend(digits.iter().map(|&d| &pool[d]));
            tally(&members, ctx, params, &mut part);
        }
        part
    });
    Ok(Partial::merge(std::iter::once(head).chain(parts).collect()))
}

/// For `m = 1` a pair `(G_1, G_2)` lacks a rainbow matching exactly when every
/// edge of `G_2` meets every edge of `G_1`. Only such `G_2` are searched.
fn filtered(ctx: &Ctx, plan: &SweepPlan, params: &Params) -> Result<Partial> {
    if ctx.m != 1 {
        return Err(Error::Usage("filtered-exhaustive mode needs m = 1".into()));
    }
    let n = ctx.n;
    let pool = build_pool(ctx, plan.budget)?;
    let q = pool.len() as u64;
    let index: HashMap<u64, usize> = pool.iter().enumerate().map(|(j, x)| (x.graph.edge_mask(), j)).collect();
    let pairs: Vec<(usize, usize, u64)> = (2..=n)
        .flat_map(|v| (1..v).map(move |u| (u, v)))
        .map(|(u, v)| (u, v, Graph::from_edges(n, &[(u, v)]).expect("valid pair").edge_mask()))
        .collect();
    let not_admitted = pool.iter().filter(|x| !x.admitted).count() as u64;
    let head = pool_cross_checks(&pool, ctx, params);

    let parts = par_ranges(q, |lo, hi| {
        let mut part = Partial::default();
        for i in lo as usize..hi as usize {
            let g1 = &pool[i];
            if !g1.admitted {
                part.counts.examined += q;
                part.counts.refined_out += q;
                continue;
            }
            let edges: Vec<(usize, usize)> = g1.graph.edges().collect();
            let meets_all: u64 = pairs
                .iter()
                .filter(|&&(u, v, _)| edges.iter().all(|&(a, b)| a == u || a == v || b == u || b == v))
                .fold(0, |acc, &(_, _, bit)| acc | bit);
            let mut candidates = Vec::new();
            let mut s = meets_all;
            loop {
                if let Some(&j) = index.get(&s) {
                    candidates.push(j);
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & meets_all;
            }
            candidates.sort_unstable();
            let skipped_out = not_admitted - candidates.iter().filter(|&&j| !pool[j].admitted).count() as u64;
            let skipped = q - candidates.len() as u64;
            part.counts.examined += skipped;
            part.counts.refined_out += skipped_out;
            part.counts.qualifying += skipped - skipped_out;
            part.counts.passed += skipped - skipped_out;
            part.counts.filtered += skipped - skipped_out;
            for j in candidates {
                tally(&[g1, &pool[j]], ctx, params, &mut part);
            }
        }
        part
    });
    Ok(Partial::merge(std::iter::once(head).chain(parts).collect()))
}

/// Uniform labeled graph with more than `bound` edges.
fn random_dense_graph(n: usize, bound: usize, rng: &mut impl Rng) -> Graph {
    let p = pair_count(n);
    // ln C(p, e) for e = bound+1 ..= p, then weights relative to the largest.
    let mut ln = Vec::with_capacity(p - bound);
    let mut acc = 0.0f64;
    for e in 0..=p {
        if e > bound {
            ln.push(acc);
        }
        if e < p {
            acc += ((p - e) as f64).ln() - ((e + 1) as f64).ln();
        }
    }
    let top = ln.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let dist = WeightedIndex::new(ln.iter().map(|l| (l - top).exp())).expect("positive weights");
    let e = bound + 1 + rng.sample(&dist);
    let pairs: Vec<(usize, usize)> = (2..=n).flat_map(|v| (1..v).map(move |u| (u, v))).collect();
    let chosen: Vec<(usize, usize)> = rand::seq::index::sample(rng, p, e).into_iter().map(|i| pairs[i]).collect();
    Graph::from_edges(n, &chosen).expect("valid pairs")
}

fn draw(ctx: &Ctx, rng: &mut impl Rng, attempts: u64) -> Result<Member> {
    match ctx.hyp {
        Hypothesis::Edges { bound } => Ok(Member::plain(random_dense_graph(ctx.n, bound, rng), true, None)),
        Hypothesis::Spectral { .. } => {
            for _ in 0..attempts {
                if let Some(x) = ctx.candidate(&random_graph(ctx.n, rng))? {
                    return Ok(x);
                }
            }
            Err(Error::BudgetExceeded { needed: attempts as u128 + 1, budget: attempts })
        }
    }
}

fn sampled(ctx: &Ctx, plan: &SweepPlan, params: &Params, count: u64, seed: u64) -> Result<Partial> {
    let parts = par_ranges(count, |lo, hi| {
        let mut part = Partial::default();
        for index in lo..hi {
            let mut rng = sample_rng(seed, index);
            let members = (0..ctx.k()).map(|_| draw(ctx, &mut rng, plan.budget)).collect::<Result<Vec<_>>>()?;
            let cross = pool_cross_checks(&members, ctx, params);
            part.counts += cross.counts;
            part.certificates.extend(cross.certificates);
            tally(&members.iter().collect::<Vec<_>>(), ctx, params, &mut part);
        }
        Ok(part)
    });
    Ok(Partial::merge(parts.into_iter().collect::<Result<Vec<_>>>()?))
}

fn run(kind: Kind, plan: &SweepPlan) -> Result<Sweep> {
    plan.validate()?;
    let ctx = Ctx::new(kind, plan)?;
    let params = ctx.params(super::enumerate::describe(plan));
    let part = match plan.mode {
        Mode::Exhaustive => exhaustive(&ctx, plan, &params)?,
        Mode::FilteredExhaustive => filtered(&ctx, plan, &params)?,
        Mode::Sampled { count, seed } => sampled(&ctx, plan, &params, count, seed)?,
    };
    Ok(part.finish(kind, params))
}

/// Families `(G_1, ..., G_{m+1})` on `[n]` whose members all have
/// `ρ(G_i) >= threshold(n, m) - margin`.
///
/// Each family must have a rainbow matching unless its members are identical
/// and recognized as the regime's extremal graph. Members admitted only by the
/// margin are re-checked (structurally when extremal, otherwise at a tighter
/// tolerance), and families holding one that falls below the threshold are
/// counted as `refined_out`.
///
/// Exhaustive mode forms all `|Q|^(m+1)` tuples of the qualifying set `Q` and
/// needs that count within the budget. Filtered mode (`m = 1`) searches only
/// pairs that can fail. Sampled mode draws each member uniformly from `Q` by
/// rejection, with the budget as the cap on draws per member.
pub fn check_t13(plan: &SweepPlan) -> Result<Sweep> {
    run(Kind::T13, plan)
}

/// Families whose members all have more than [`t11_edge_bound`] edges; each
/// must have a rainbow matching. Sampled members are uniform over such graphs.
pub fn check_t11(plan: &SweepPlan) -> Result<Sweep> {
    run(Kind::T11, plan)
}

/// Rebuilds the certificate for one family (or, for a single-graph T13
/// instance, one closed-form cross-check).
pub(crate) fn replay_family(kind: Kind, params: &Params, graphs: Vec<Graph>) -> Result<Certificate> {
    let plan = SweepPlan::new(params.n, params.m, Mode::Exhaustive).with_margin(params.margin).with_tol(params.tol);
    plan.validate()?;
    let ctx = Ctx::new(kind, &plan)?;
    let members = graphs.into_iter().map(|g| ctx.replay_member(g)).collect::<Result<Vec<_>>>()?;
    if kind == Kind::T13 && members.len() == 1 && members[0].cross.is_some() {
        return Ok(cross_check_certificate(&members[0], &ctx, params.clone()));
    }
    if members.len() != ctx.k() {
        return Err(Error::FamilyShape { n: ctx.n, m: ctx.m, members: members.len() });
    }
    let refs: Vec<&Member> = members.iter().collect();
    let verdict = judge(&refs, &ctx);
    Ok(certificate(&refs, verdict, &ctx, params.clone()))
}
