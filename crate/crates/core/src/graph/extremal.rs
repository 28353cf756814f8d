use serde::Serialize;

use super::{pair_count, Graph};
use crate::error::{Error, Result};

/// Parameters of the extremal graph `A^i_{n,m} = K_{i-1} ∨ (K_{2m-2i+3} ∪ co-K_{n-2m+i-2})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtremalParams {
    n: usize,
    m: usize,
    i: usize,
}

impl ExtremalParams {
    pub fn new(n: usize, m: usize, i: usize) -> Result<Self> {
        let bad = |reason| Err(Error::InvalidExtremalParams { n, m, i, reason });
        if m == 0 {
            return bad("m must be at least 1");
        }
        if n < 2 * m + 2 {
            return bad("need m <= (n - 2) / 2");
        }
        if i == 0 || i > m + 1 {
            return bad("need 1 <= i <= m + 1");
        }
        Ok(ExtremalParams { n, m, i })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn i(&self) -> usize {
        self.i
    }

    /// `C(i-1, 2) + (i-1)(n-i+1) + C(2m-2i+3, 2)`.
    pub fn edge_count(&self) -> usize {
        let (n, m, i) = (self.n, self.m, self.i);
        pair_count(i - 1) + (i - 1) * (n - i + 1) + pair_count(2 * m + 3 - 2 * i)
    }
}

/// Builds `A^i_{n,m}` with the canonical labeling: the dominating clique on
/// `[i-1]`, the inner clique on `[2m-i+2] \ [i-1]`, isolated-in-the-rest
/// vertices `[n] \ [2m-i+2]`.
pub fn construct_extremal(p: ExtremalParams) -> Graph {
    let (n, m, i) = (p.n, p.m, p.i);
    let mut g = Graph::empty(n).expect("n >= 4");
    let hub = i - 1;
    let inner_end = 2 * m + 2 - i;
    for u in 0..hub {
        for v in u + 1..n {
            g.set0(u, v, true);
        }
    }
    for u in hub..inner_end {
        for v in u + 1..inner_end {
            g.set0(u, v, true);
        }
    }
    g
}

/// Which of the two extremal families a graph belongs to, up to relabeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type")]
pub enum ExtremalKind {
    /// `K_{2m+1} ∪ (n-2m-1)K_1`; `clique` is the vertex set of the clique.
    A1 { clique: Vec<usize> },
    /// `K_m ∨ (n-m)K_1`; `dominating` holds the degree `n-1` vertices.
    #[serde(rename = "A_m_plus_1")]
    AmPlus1 { dominating: Vec<usize> },
    Neither,
}

impl ExtremalKind {
    pub fn label(&self) -> &'static str {
        match self {
            ExtremalKind::A1 { .. } => "A1",
            ExtremalKind::AmPlus1 { .. } => "A_m_plus_1",
            ExtremalKind::Neither => "neither",
        }
    }
}

/// Structural recognition of `A^1_{n,m}` and `A^{m+1}_{n,m}` from degrees and
/// edge placement. Invariant under relabeling, so it decides isomorphism to
/// either extremal graph exactly.
pub fn recognize_extremal(g: &Graph, m: usize) -> ExtremalKind {
    let n = g.n();
    if m == 0 || m >= n {
        return ExtremalKind::Neither;
    }
    let degrees = g.degrees();

    let dominating: Vec<usize> = (1..=n).filter(|&v| degrees[v - 1] == n - 1).collect();
    if dominating.len() == m {
        let rest: Vec<usize> = (1..=n).filter(|&v| degrees[v - 1] != n - 1).collect();
        if g.is_independent(&rest).expect("labels in range") {
            return ExtremalKind::AmPlus1 { dominating };
        }
    }

    let clique: Vec<usize> = (1..=n).filter(|&v| degrees[v - 1] > 0).collect();
    if clique.len() == 2 * m + 1
        && clique.iter().all(|&v| degrees[v - 1] == 2 * m)
        && g.edge_count() == pair_count(2 * m + 1)
    {
        return ExtremalKind::A1 { clique };
    }
    ExtremalKind::Neither
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, graphs_equal, join};

    fn a(n: usize, m: usize, i: usize) -> Graph {
        construct_extremal(ExtremalParams::new(n, m, i).unwrap())
    }

    #[test]
    fn params_validation() {
        assert!(ExtremalParams::new(6, 2, 1).is_ok());
        assert!(ExtremalParams::new(5, 2, 1).is_err());
        assert!(ExtremalParams::new(6, 0, 1).is_err());
        assert!(ExtremalParams::new(6, 2, 0).is_err());
        assert!(ExtremalParams::new(6, 2, 4).is_err());
    }

    #[test]
    fn a1_is_clique_plus_isolated() {
        let g = a(6, 2, 1);
        assert_eq!(g, Graph::clique_on(6, &[1, 2, 3, 4, 5]).unwrap());
        assert_eq!(g.edge_count(), 10);
        assert!(!g.is_connected());
    }

    #[test]
    fn star_case() {
        assert_eq!(a(4, 1, 2), Graph::star(4, 1).unwrap());
    }

    #[test]
    fn complete_split_case() {
        let g = a(10, 2, 3);
        let expected = join(&Graph::complete(2).unwrap(), &Graph::empty(8).unwrap());
        assert_eq!(g, expected);
        assert_eq!(g.edge_count(), 17);
        assert_eq!((g.degree(1), g.degree(2), g.degree(10)), (9, 9, 2));
        let rest: Vec<usize> = (3..=10).collect();
        assert!(g.is_independent(&rest).unwrap());
    }

    #[test]
    fn middle_member_matches_join_expansion() {
        // A^2_{7,2} = K_1 ∨ (K_3 ∪ 3K_1)
        let inner = disjoint_union(&Graph::complete(3).unwrap(), &Graph::empty(3).unwrap());
        let expected = join(&Graph::complete(1).unwrap(), &inner);
        assert!(graphs_equal(&a(7, 2, 2), &expected).unwrap());
    }

    #[test]
    fn edge_count_formula() {
        for n in 4..=14 {
            for m in 1..=(n - 2) / 2 {
                for i in 1..=m + 1 {
                    let p = ExtremalParams::new(n, m, i).unwrap();
                    assert_eq!(construct_extremal(p).edge_count(), p.edge_count(), "{n} {m} {i}");
                }
            }
        }
    }

    #[test]
    fn recognition() {
        assert_eq!(recognize_extremal(&a(8, 2, 3), 2), ExtremalKind::AmPlus1 { dominating: vec![1, 2] });
        assert_eq!(recognize_extremal(&a(8, 2, 1), 2), ExtremalKind::A1 { clique: vec![1, 2, 3, 4, 5] });
        assert_eq!(recognize_extremal(&Graph::cycle(6).unwrap(), 2), ExtremalKind::Neither);
        assert_eq!(recognize_extremal(&a(8, 2, 2), 2), ExtremalKind::Neither);
        // Relabeled copies are still recognized.
        let shifted = Graph::clique_on(6, &[2, 3, 4, 5, 6]).unwrap();
        assert_eq!(recognize_extremal(&shifted, 2), ExtremalKind::A1 { clique: vec![2, 3, 4, 5, 6] });
        assert!(!graphs_equal(&a(6, 2, 1), &shifted).unwrap());
    }

    #[test]
    fn recognition_roundtrip_small_grid() {
        for n in 4..=12 {
            for m in 1..=(n - 2) / 2 {
                assert_eq!(recognize_extremal(&a(n, m, 1), m).label(), "A1");
                assert_eq!(recognize_extremal(&a(n, m, m + 1), m).label(), "A_m_plus_1");
            }
        }
    }
}
