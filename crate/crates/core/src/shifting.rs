//! The `(x, y)`-shift (Kelmans operation) and related rewiring.
//!
//! `S_xy` replaces `y` by `x` in every edge `{y, w}` with `w != x`, unless
//! `{x, w}` is already an edge. All moves in one application are decided
//! against the original edge set.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::GraphFamily;

/// One non-identity shift performed by [`fully_shift`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftStep {
    pub x: usize,
    pub y: usize,
    pub edges_moved: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftTrace {
    pub steps: Vec<ShiftStep>,
    pub result: Graph,
}

fn shift_counted(g: &Graph, x: usize, y: usize) -> Result<(Graph, usize)> {
    if x == y {
        return Err(Error::SameShiftPair(x));
    }
    let n = g.n();
    if x == 0 || x > n {
        return Err(Error::VertexOutOfRange { vertex: x, n });
    }
    if y == 0 || y > n {
        return Err(Error::VertexOutOfRange { vertex: y, n });
    }
    let (x0, y0) = (x - 1, y - 1);
    let mut out = g.clone();
    let mut moved = 0;
    for w in 0..n {
        if w != x0 && g.adj0(y0, w) && !g.adj0(x0, w) {
            out.set0(y0, w, false);
            out.set0(x0, w, true);
            moved += 1;
        }
    }
    Ok((out, moved))
}

/// `S_xy(G)`. Defined for any ordered pair of distinct vertices.
pub fn shift_xy(g: &Graph, x: usize, y: usize) -> Result<Graph> {
    shift_counted(g, x, y).map(|(out, _)| out)
}

/// Whether `S_xy(G) = G` for every `x < y`.
///
/// Equivalent single-pass test: for each edge `{a, b}` with `a < b`, every
/// `c < b` other than `a` is adjacent to `a`, and every `c < a` is adjacent
/// to `b`.
pub fn is_shifted(g: &Graph) -> bool {
    g.edges().all(|(a, b)| (1..b).all(|c| c == a || g.has_edge(a, c)) && (1..a).all(|c| g.has_edge(c, b)))
}

/// `Σ_{e ∈ E} Σ_{v ∈ e} v`. Every non-identity shift with `x < y` lowers it.
pub fn potential(g: &Graph) -> usize {
    g.edges().map(|(u, v)| u + v).sum()
}

/// Repeats lexicographic sweeps over `x < y` (x ascending, then y ascending)
/// until a whole sweep changes nothing. Only non-identity shifts are logged.
pub fn fully_shift(g: &Graph) -> ShiftTrace {
    let n = g.n();
    let mut current = g.clone();
    let mut steps = Vec::new();
    loop {
        let mut changed = false;
        for x in 1..=n {
            for y in x + 1..=n {
                let (next, moved) = shift_counted(&current, x, y).expect("valid pair");
                if moved > 0 {
                    steps.push(ShiftStep { x, y, edges_moved: moved });
                    current = next;
                    changed = true;
                }
            }
        }
        if !changed {
            return ShiftTrace { steps, result: current };
        }
    }
}

/// Moves every neighbour of `v` that is not already adjacent to `u` (and is
/// not `u` itself) over to `u`.
pub fn rewire_neighbors(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let set = rewire_set(g, u, v)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if set.is_empty() {
        return Err(Error::EmptyRewireSet { u, v });
    }
    let mut out = g.clone();
    for w in set {
        out.remove_edge(v, w)?;
        out.add_edge(u, w)?;
    }
    Ok(out)
}

/// `N(v) \ (N(u) ∪ {u})`.
pub fn rewire_set(g: &Graph, u: usize, v: usize) -> Result<Vec<usize>> {
    let n = g.n();
    for w in [u, v] {
        if w == 0 || w > n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    Ok(g.neighbors(v).into_iter().filter(|&w| w != u && !g.has_edge(u, w)).collect())
}

/// Applies `S_xy` to every member.
pub fn shift_family(f: &GraphFamily, x: usize, y: usize) -> Result<GraphFamily> {
    let members = f.members().iter().map(|g| shift_xy(g, x, y)).collect::<Result<Vec<_>>>()?;
    GraphFamily::new(members)
}

/// Fully shifts every member independently.
pub fn fully_shift_family(f: &GraphFamily) -> GraphFamily {
    GraphFamily::new(f.members().iter().map(|g| fully_shift(g).result).collect()).expect("same shape as input")
}
