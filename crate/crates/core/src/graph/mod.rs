//! Simple undirected graphs on the labeled vertex set `1..=n`.
//!
//! Adjacency is kept as one bitset row per vertex. For `n <= 64` every row is
//! a single word, which is the case the verification sweeps live in; larger
//! graphs use multi-word rows with the same API.
//!
//! All public functions take and return 1-based vertex labels.

mod extremal;
pub mod graph6;
pub mod edgelist;
pub mod iso;

pub use extremal::{construct_extremal, recognize_extremal, ExtremalKind, ExtremalParams};

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `[n]`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let stride = n.div_ceil(WORD);
        Ok(Graph { n, stride, rows: vec![0; n * stride] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Graph::empty(n)?.complement())
    }

    /// Builds a graph from 1-based edge pairs. Repeated edges are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v, v + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `1 - 2 - ... - n - 1`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = Graph::path(n)?;
        if n >= 3 {
            g.add_edge(n, 1)?;
        }
        Ok(g)
    }

    /// Star with the given center joined to every other vertex.
    pub fn star(n: usize, center: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        g.check(center)?;
        for v in (1..=n).filter(|&v| v != center) {
            g.add_edge(center, v)?;
        }
        Ok(g)
    }

    /// Clique on the listed vertices, every other vertex isolated.
    pub fn clique_on(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (k, &u) in vertices.iter().enumerate() {
            g.check(u)?;
            for &v in &vertices[k + 1..] {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub(crate) fn row0(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub(crate) fn adj0(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.stride + v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub(crate) fn set0(&mut self, u: usize, v: usize, on: bool) {
        let (a, b) = (u * self.stride + v / WORD, v * self.stride + u / WORD);
        if on {
            self.rows[a] |= 1 << (v % WORD);
            self.rows[b] |= 1 << (u % WORD);
        } else {
            self.rows[a] &= !(1 << (v % WORD));
            self.rows[b] &= !(1 << (u % WORD));
        }
    }

    /// Adds `uv`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.set0(u - 1, v - 1, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u != v {
            self.set0(u - 1, v - 1, false);
        }
        Ok(())
    }

    /// Copy of the graph with `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// # Panics
    /// If either label is outside `1..=n`.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!((1..=self.n).contains(&u) && (1..=self.n).contains(&v), "vertex out of range");
        self.adj0(u - 1, v - 1)
    }

    /// # Panics
    /// If `v` is outside `1..=n`.
    pub fn degree(&self, v: usize) -> usize {
        assert!((1..=self.n).contains(&v), "vertex out of range");
        self.row0(v - 1).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (1..=self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Sorted 1-based neighbourhood of `v`.
    ///
    /// # Panics
    /// If `v` is outside `1..=n`.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        assert!((1..=self.n).contains(&v), "vertex out of range");
        (0..self.n).filter(|&w| self.adj0(v - 1, w)).map(|w| w + 1).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter(move |&v| self.adj0(u, v)).map(move |v| (u + 1, v + 1))
        })
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("n >= 1");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adj0(u, v) {
                    g.set0(u, v, true);
                }
            }
        }
        g
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Whether no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: &[usize]) -> Result<bool> {
        for &v in set {
            self.check(v)?;
        }
        Ok(set
            .iter()
            .enumerate()
            .all(|(k, &u)| set[k + 1..].iter().all(|&v| u == v || !self.adj0(u - 1, v - 1))))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u + 1).into_iter().map(|w| w - 1) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Subgraph induced by `set`, relabeled to `1..=|set|` in the order given.
    pub fn induced(&self, set: &[usize]) -> Result<Induced> {
        if set.is_empty() {
            return Err(Error::NoVertices);
        }
        for (k, &v) in set.iter().enumerate() {
            self.check(v)?;
            if set[..k].contains(&v) {
                return Err(Error::OverlappingParts);
            }
        }
        let mut graph = Graph::empty(set.len())?;
        for (a, &u) in set.iter().enumerate() {
            for (b, &v) in set.iter().enumerate().skip(a + 1) {
                if self.adj0(u - 1, v - 1) {
                    graph.set0(a, b, true);
                }
            }
        }
        Ok(Induced { graph, labels: set.to_vec() })
    }

    /// Applies a relabeling: vertex `v` of `self` becomes `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::VertexCountMismatch(perm.len(), self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            self.check(p)?;
            if std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::OverlappingParts);
            }
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.set0(perm[u - 1] - 1, perm[v - 1] - 1, true);
        }
        Ok(g)
    }

    /// Edge set as a bitmask indexed by the graph6 pair order, most significant
    /// bit first: pair `k` of `(1,2), (1,3), (2,3), (1,4), ...` is bit
    /// `C(n,2) - 1 - k`. Numeric order on masks is graph6 string order.
    ///
    /// Only for `n <= 11` (`C(n,2) <= 64`).
    pub fn edge_mask(&self) -> u64 {
        let total = pair_count(self.n);
        assert!(total <= 64, "edge masks need n <= 11");
        let mut mask = 0u64;
        let mut k = 0;
        for v in 1..self.n {
            for u in 0..v {
                if self.adj0(u, v) {
                    mask |= 1 << (total - 1 - k);
                }
                k += 1;
            }
        }
        mask
    }

    /// Inverse of [`Graph::edge_mask`].
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Graph> {
        let total = pair_count(n);
        if total > 64 {
            return Err(Error::Usage(format!("edge masks need n <= 11, got {n}")));
        }
        let mut g = Graph::empty(n)?;
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if mask >> (total - 1 - k) & 1 == 1 {
                    g.set0(u, v, true);
                }
                k += 1;
            }
        }
        Ok(g)
    }
}

/// `C(n, 2)`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Induced subgraph together with the original label of each new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl Induced {
    /// Original label of subgraph vertex `v`.
    pub fn lift(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    pub fn lift_edge(&self, (u, v): (usize, usize)) -> (usize, usize) {
        let (a, b) = (self.lift(u), self.lift(v));
        (a.min(b), a.max(b))
    }
}

/// Labeled equality: same vertex count and the same edge set.
pub fn graphs_equal(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::VertexCountMismatch(a.n, b.n));
    }
    Ok(a.rows == b.rows)
}

/// Union of graphs on disjoint label ranges: `b`'s vertices are shifted
/// to follow `a`'s.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut g = Graph::empty(a.n + b.n).expect("n >= 1");
    for (u, v) in a.edges() {
        g.set0(u - 1, v - 1, true);
    }
    for (u, v) in b.edges() {
        g.set0(a.n + u - 1, a.n + v - 1, true);
    }
    g
}

/// Join of graphs on disjoint label ranges: the disjoint union plus every
/// edge between the two parts.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let mut g = disjoint_union(a, b);
    for u in 0..a.n {
        for v in a.n..a.n + b.n {
            g.set0(u, v, true);
        }
    }
    g
}

/// Checks that `a` lives on `part` and `b` on its complement in `[n]`.
fn split_supports(a: &Graph, b: &Graph, part: &[usize]) -> Result<Vec<bool>> {
    if a.n != b.n {
        return Err(Error::VertexCountMismatch(a.n, b.n));
    }
    let mut inside = vec![false; a.n];
    for &v in part {
        a.check(v)?;
        if std::mem::replace(&mut inside[v - 1], true) {
            return Err(Error::OverlappingParts);
        }
    }
    let a_ok = a.edges().all(|(u, v)| inside[u - 1] && inside[v - 1]);
    let b_ok = b.edges().all(|(u, v)| !inside[u - 1] && !inside[v - 1]);
    if a_ok && b_ok {
        Ok(inside)
    } else {
        Err(Error::OverlappingParts)
    }
}

/// Union on a fixed vertex set `[n]`, where `a` is supported on `part` and `b`
/// on `[n] \ part`.
pub fn union_on(a: &Graph, b: &Graph, part: &[usize]) -> Result<Graph> {
    split_supports(a, b, part)?;
    let mut g = a.clone();
    for (i, w) in g.rows.iter_mut().enumerate() {
        *w |= b.rows[i];
    }
    Ok(g)
}

/// Join on a fixed vertex set `[n]`; see [`union_on`].
pub fn join_on(a: &Graph, b: &Graph, part: &[usize]) -> Result<Graph> {
    let inside = split_supports(a, b, part)?;
    let mut g = union_on(a, b, part)?;
    for u in 0..a.n {
        for v in 0..a.n {
            if inside[u] && !inside[v] {
                g.set0(u, v, true);
            }
        }
    }
    Ok(g)
}
