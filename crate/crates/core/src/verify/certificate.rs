use serde::Serialize;

use crate::matching::RainbowMatching;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Kind {
    /// Edge-count condition for rainbow matchings.
    T11,
    /// Spectral bound for a single graph with bounded matching number.
    T12,
    /// Spectral condition for rainbow matchings.
    T13,
    /// Property checks (extremal rigidity under shifting).
    PROP,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Pass,
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Params {
    pub n: usize,
    pub m: usize,
    pub regime: String,
    pub mode: String,
    pub margin: f64,
    pub tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RhoMeasure {
    pub rho: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Measured {
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rho: Vec<RhoMeasure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub nu: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    /// Members whose radius lies within the margin of the threshold.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub near_threshold: Vec<usize>,
}

/// Totals for one sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    /// Graphs or families looked at.
    pub examined: u64,
    /// Instances satisfying the hypothesis under test.
    pub qualifying: u64,
    /// Hypothesis met and conclusion checked directly (e.g. a rainbow matching found).
    pub passed: u64,
    /// Hypothesis met, conclusion fails, and the instance is a stated exception.
    pub exceptions: u64,
    pub counterexamples: u64,
    /// Admitted by the margin but shown below the threshold on re-check.
    pub refined_out: u64,
    /// Pairs settled without search by the disjoint-edge filter.
    pub filtered: u64,
    /// Extremal graphs whose radius was checked against the closed form.
    pub cross_checked: u64,
}

impl std::ops::AddAssign for Counts {
    fn add_assign(&mut self, o: Counts) {
        self.examined += o.examined;
        self.qualifying += o.qualifying;
        self.passed += o.passed;
        self.exceptions += o.exceptions;
        self.counterexamples += o.counterexamples;
        self.refined_out += o.refined_out;
        self.filtered += o.filtered;
        self.cross_checked += o.cross_checked;
    }
}

/// Certificates and counts gathered by one worker over a contiguous range.
#[derive(Debug, Default)]
pub(crate) struct Partial {
    pub certificates: Vec<Certificate>,
    pub counts: Counts,
}

impl Partial {
    pub fn merge(parts: Vec<Partial>) -> Partial {
        let mut all = Partial::default();
        for p in parts {
            all.certificates.extend(p.certificates);
            all.counts += p.counts;
        }
        all
    }

    /// Appends the summary certificate and closes the sweep.
    pub fn finish(mut self, kind: Kind, params: Params) -> Sweep {
        let outcome = if self.counts.counterexamples == 0 { Outcome::Pass } else { Outcome::Counterexample };
        self.certificates.push(Certificate {
            kind,
            params,
            instance: Vec::new(),
            measured: Measured::default(),
            outcome,
            witness: Witness::Summary(self.counts.clone()),
        });
        Sweep { certificates: self.certificates, counts: self.counts }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    Rainbow(RainbowMatching),
    /// Labeled extremal identification: `K_n`, `A1` or `A_m_plus_1` and the
    /// defining vertex set (clique or dominating set).
    Extremal { extremal: String, set: Vec<usize> },
    /// Within the bound / below the extremal value.
    Within { quantity: String, value: f64, bound: f64 },
    Violation { quantity: String, value: f64, bound: f64, detail: String },
    /// Shifted image pairs that met the rigidity hypothesis.
    Rigid { extremal: String, pairs: Vec<(usize, usize)> },
    Summary(Counts),
}

/// One verification record. Serialized as a single JSON line.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub kind: Kind,
    pub params: Params,
    /// graph6 strings, one per graph of the instance.
    pub instance: Vec<String>,
    pub measured: Measured,
    pub outcome: Outcome,
    pub witness: Witness,
}

impl Certificate {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("certificates serialize")
    }

    pub fn is_counterexample(&self) -> bool {
        self.outcome == Outcome::Counterexample
    }

    pub fn is_summary(&self) -> bool {
        matches!(self.witness, Witness::Summary(_))
    }
}

/// Output of one sweep: notable instances in enumeration order, then a summary.
#[derive(Clone, Debug, PartialEq)]
pub struct Sweep {
    pub certificates: Vec<Certificate>,
    pub counts: Counts,
}

impl Sweep {
    pub fn counterexamples(&self) -> impl Iterator<Item = &Certificate> {
        self.certificates.iter().filter(|c| c.is_counterexample())
    }

    pub fn has_counterexample(&self) -> bool {
        self.counts.counterexamples > 0
    }

    /// JSON lines, newline-terminated.
    pub fn to_json_lines(&self) -> String {
        self.certificates.iter().map(|c| c.to_json_line() + "\n").collect()
    }
}
