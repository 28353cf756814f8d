//! Matchings in single graphs and rainbow matchings in graph families.
//!
//! Member indices are 1-based, like vertex labels: member `1` is the first
//! graph of the family.

mod blossom;
mod constructive;
mod hall;
mod rainbow;

pub use blossom::{max_matching, Matching};
pub use constructive::{rainbow_from_clique_family, rainbow_from_split_family};
pub use hall::{hall_bipartite_matching, HallOutcome};
pub use rainbow::find_rainbow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Ordered list of graphs on a shared vertex set `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFamily {
    n: usize,
    members: Vec<Graph>,
}

impl GraphFamily {
    pub fn new(members: Vec<Graph>) -> Result<Self> {
        let n = members.first().ok_or(Error::EmptyFamily)?.n();
        if let Some(g) = members.iter().find(|g| g.n() != n) {
            return Err(Error::VertexCountMismatch(n, g.n()));
        }
        Ok(GraphFamily { n, members })
    }

    /// `k` copies of the same graph.
    pub fn repeated(g: &Graph, k: usize) -> Result<Self> {
        GraphFamily::new(vec![g.clone(); k])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    /// Member by 1-based index.
    pub fn member(&self, index: usize) -> &Graph {
        &self.members[index - 1]
    }
}

/// One edge taken from one member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Pick {
    pub index: usize,
    pub edge: (usize, usize),
}

/// Pairwise disjoint edges, the `j`-th drawn from a distinct member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RainbowMatching {
    pub picks: Vec<Pick>,
}

impl RainbowMatching {
    /// Builds a matching from picks, sorted by member index.
    pub fn new(mut picks: Vec<Pick>) -> Self {
        picks.sort_by_key(|p| p.index);
        RainbowMatching { picks }
    }

    pub fn len(&self) -> usize {
        self.picks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.picks.is_empty()
    }

    /// Checks every rainbow-matching invariant against `family`, including
    /// completeness (one pick per member). Returns the first violation.
    pub fn validate(&self, family: &GraphFamily) -> std::result::Result<(), String> {
        if self.picks.len() != family.len() {
            return Err(format!("{} picks for {} members", self.picks.len(), family.len()));
        }
        let mut seen_index = vec![false; family.len()];
        let mut seen_vertex = vec![false; family.n()];
        for p in &self.picks {
            if p.index == 0 || p.index > family.len() {
                return Err(format!("member index {} out of range", p.index));
            }
            if std::mem::replace(&mut seen_index[p.index - 1], true) {
                return Err(format!("member {} used twice", p.index));
            }
            let (u, v) = p.edge;
            if u == 0 || v == 0 || u > family.n() || v > family.n() || u == v {
                return Err(format!("bad edge {u} {v}"));
            }
            if !family.member(p.index).has_edge(u, v) {
                return Err(format!("edge {u} {v} is not in member {}", p.index));
            }
            for w in [u, v] {
                if std::mem::replace(&mut seen_vertex[w - 1], true) {
                    return Err(format!("vertex {w} covered twice"));
                }
            }
        }
        Ok(())
    }

    /// `index: u v` lines.
    pub fn to_lines(&self) -> String {
        self.picks.iter().map(|p| format!("{}: {} {}\n", p.index, p.edge.0, p.edge.1)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shape() {
        assert_eq!(GraphFamily::new(vec![]), Err(Error::EmptyFamily));
        let mixed = vec![Graph::empty(3).unwrap(), Graph::empty(4).unwrap()];
        assert_eq!(GraphFamily::new(mixed), Err(Error::VertexCountMismatch(3, 4)));
        let f = GraphFamily::repeated(&Graph::cycle(4).unwrap(), 2).unwrap();
        assert_eq!((f.n(), f.len()), (4, 2));
    }

    #[test]
    fn validation_catches_each_violation() {
        let f = GraphFamily::new(vec![Graph::cycle(4).unwrap(), Graph::cycle(4).unwrap()]).unwrap();
        let ok = RainbowMatching::new(vec![Pick { index: 2, edge: (3, 4) }, Pick { index: 1, edge: (1, 2) }]);
        assert_eq!(ok.validate(&f), Ok(()));
        assert_eq!(ok.picks[0].index, 1);
        assert_eq!(ok.to_lines(), "1: 1 2\n2: 3 4\n");

        let short = RainbowMatching::new(vec![Pick { index: 1, edge: (1, 2) }]);
        assert!(short.validate(&f).is_err());
        let twice = RainbowMatching::new(vec![Pick { index: 1, edge: (1, 2) }, Pick { index: 1, edge: (3, 4) }]);
        assert!(twice.validate(&f).is_err());
        let overlap = RainbowMatching::new(vec![Pick { index: 1, edge: (1, 2) }, Pick { index: 2, edge: (2, 3) }]);
        assert!(overlap.validate(&f).is_err());
        let missing = RainbowMatching::new(vec![Pick { index: 1, edge: (1, 3) }, Pick { index: 2, edge: (2, 4) }]);
        assert!(missing.validate(&f).is_err());
    }
}
