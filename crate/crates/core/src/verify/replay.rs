use super::certificate::{Certificate, Kind};
use super::{families, rigidity, t12, SweepPlan};
use crate::error::{Error, Result};
use crate::graph::{graph6, Graph};

/// Recomputes the certificate for the single instance recorded in `cert`.
///
/// The result carries the same `params`. For a certificate taken from a sweep
/// the replay is identical to it; a tampered one comes back with the outcome
/// the instance actually has. Summary certificates have no instance.
pub fn replay(cert: &Certificate) -> Result<Certificate> {
    if cert.is_summary() || cert.instance.is_empty() {
        return Err(Error::Usage("summary certificates cannot be replayed".into()));
    }
    let graphs = cert.instance.iter().map(|s| graph6::decode(s)).collect::<Result<Vec<Graph>>>()?;
    let p = &cert.params;
    if let Some(g) = graphs.iter().find(|g| g.n() != p.n) {
        return Err(Error::VertexCountMismatch(p.n, g.n()));
    }
    match cert.kind {
        Kind::T12 => {
            let [g] = graphs.as_slice() else {
                return Err(Error::Usage("T12 certificates hold one graph".into()));
            };
            let plan = SweepPlan::exhaustive(p.n, p.m).with_margin(p.margin).with_tol(p.tol);
            plan.validate()?;
            let case = t12::T12Case::for_params(p.n, p.m)?;
            let eval = t12::evaluate(g, &plan, case)?;
            let mut out = t12::certificate(g, &plan, case, &eval);
            out.params = p.clone();
            Ok(out)
        }
        Kind::T11 | Kind::T13 => families::replay_family(cert.kind, p, graphs),
        Kind::PROP => {
            let [g] = graphs.as_slice() else {
                return Err(Error::Usage("rigidity certificates hold one graph".into()));
            };
            rigidity::replay_graph(p, g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{check_extremal_rigidity, check_t11, check_t12, check_t13, Outcome, Witness};

    fn replays_identically(certs: &[Certificate]) {
        let mut seen = 0;
        for c in certs.iter().filter(|c| !c.is_summary()) {
            assert_eq!(&replay(c).unwrap(), c);
            seen += 1;
        }
        assert!(seen > 0);
    }

    #[test]
    fn sweep_certificates_replay() {
        replays_identically(&check_t12(&SweepPlan::exhaustive(5, 1)).unwrap().certificates);
        replays_identically(&check_t13(&SweepPlan::exhaustive(4, 1)).unwrap().certificates);
        replays_identically(&check_extremal_rigidity(&SweepPlan::exhaustive(6, 2)).unwrap().certificates);
    }

    #[test]
    fn forged_counterexample_replays_as_pass() {
        let sweep = check_t13(&SweepPlan::exhaustive(4, 1)).unwrap();
        let mut forged = sweep.certificates[0].clone();
        // A family of two complete graphs has a rainbow matching.
        forged.instance = vec!["C~".into(), "C~".into()];
        forged.outcome = Outcome::Counterexample;
        let r = replay(&forged).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        assert!(matches!(r.witness, Witness::Rainbow(_)));
    }

    #[test]
    fn t11_instance_replays() {
        let sweep = check_t11(&SweepPlan::exhaustive(4, 1)).unwrap();
        let mut c = sweep.certificates[0].clone();
        assert!(replay(&c).is_err());
        c.witness = Witness::Within { quantity: String::new(), value: 0.0, bound: 0.0 };
        c.instance = vec!["C~".into(), "Cr".into()];
        assert_eq!(replay(&c).unwrap().outcome, Outcome::Pass);
    }

    #[test]
    fn wrong_vertex_count() {
        let mut c = check_t12(&SweepPlan::exhaustive(5, 1)).unwrap().certificates[0].clone();
        c.instance = vec!["C~".into()];
        assert_eq!(replay(&c), Err(Error::VertexCountMismatch(5, 4)));
    }
}
