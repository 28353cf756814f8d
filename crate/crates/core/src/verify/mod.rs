//! Desk-scale verification sweeps with certificate output.
//!
//! Each check walks labeled graphs (or families of them) on `[n]`, either
//! exhaustively in graph6 order or by seeded sampling, and reports notable
//! instances (equality cases, stated exceptions, counterexamples) followed by
//! a summary. Spectral comparisons use a small margin, and whenever a case
//! hinges on equality the decision is taken by structural recognition.

mod certificate;
pub mod enumerate;
mod families;
mod replay;
mod rigidity;
mod t12;

pub use certificate::{Certificate, Counts, Kind, Measured, Outcome, Params, RhoMeasure, Sweep, Witness};
pub use enumerate::{enumerate_qualifying, Qualified};
pub use families::{check_t11, check_t13, t11_edge_bound, T13Regime};
pub use replay::replay;
pub use rigidity::check_extremal_rigidity;
pub use t12::{check_t12, T12Case};

use crate::error::{Error, Result};
use crate::spectral::DEFAULT_TOL;

pub const DEFAULT_MARGIN: f64 = 1e-9;
pub const DEFAULT_BUDGET: u64 = 100_000_000;
/// Agreement required between the iterative radius and a closed form.
pub const CROSS_CHECK_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every labeled graph, and every tuple of qualifying graphs.
    Exhaustive,
    /// Every tuple, but pairs that provably admit a rainbow matching are
    /// settled by a disjoint-edge filter instead of a search. Only `m = 1`.
    FilteredExhaustive,
    Sampled { count: u64, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepPlan {
    pub n: usize,
    pub m: usize,
    pub mode: Mode,
    /// Slack for spectral comparisons.
    pub margin: f64,
    /// Cap on enumerated instances (exhaustive) or draws (sampled).
    pub budget: u64,
    pub tol: f64,
}

impl SweepPlan {
    pub fn new(n: usize, m: usize, mode: Mode) -> Self {
        SweepPlan { n, m, mode, margin: DEFAULT_MARGIN, budget: DEFAULT_BUDGET, tol: DEFAULT_TOL }
    }

    pub fn exhaustive(n: usize, m: usize) -> Self {
        SweepPlan::new(n, m, Mode::Exhaustive)
    }

    pub fn filtered(n: usize, m: usize) -> Self {
        SweepPlan::new(n, m, Mode::FilteredExhaustive)
    }

    pub fn sampled(n: usize, m: usize, count: u64, seed: u64) -> Self {
        SweepPlan::new(n, m, Mode::Sampled { count, seed })
    }

    pub fn with_margin(mut self, margin: f64) -> Self {
        self.margin = margin;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.margin >= 0.0 && self.margin.is_finite()) {
            return Err(Error::Usage(format!("margin must be finite and non-negative, got {}", self.margin)));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidTolerance(self.tol));
        }
        if self.budget == 0 {
            return Err(Error::Usage("budget must be at least 1".into()));
        }
        if self.m == 0 {
            return Err(Error::Usage("m must be at least 1".into()));
        }
        if self.n > crate::graph::graph6::MAX_N {
            return Err(Error::Usage(format!("n must be at most {}", crate::graph::graph6::MAX_N)));
        }
        Ok(())
    }

    fn params(&self, regime: impl Into<String>) -> Params {
        Params {
            n: self.n,
            m: self.m,
            regime: regime.into(),
            mode: enumerate::describe(self),
            margin: self.margin,
            tol: self.tol,
        }
    }
}
