//! Perron root of the adjacency matrix, and the closed-form values it is
//! compared against.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ExtremalParams, Graph};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_ITERATIONS: usize = 1_000_000;

/// Spectral radius estimate with its a-posteriori certificate.
///
/// `vector` is scaled so its largest entry is 1 (all ones for an edgeless
/// graph). On a disconnected graph it may vanish on components whose own
/// spectral radius is smaller.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralResult {
    pub rho: f64,
    pub vector: Vec<f64>,
    /// `max_v |(A x)_v - rho x_v|`.
    pub residual: f64,
    pub iterations: usize,
}

impl SpectralResult {
    /// Perron vector entry of the 1-based vertex `v`.
    pub fn entry(&self, v: usize) -> f64 {
        self.vector[v - 1]
    }
}

fn adjacency_times(g: &Graph, x: &[f64], out: &mut [f64]) {
    for (v, slot) in out.iter_mut().enumerate() {
        let mut sum = 0.0;
        for (w, &word) in g.row0(v).iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                sum += x[w * 64 + bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
        }
        *slot = sum;
    }
}

/// Largest adjacency eigenvalue by power iteration on `A + I`.
///
/// The shift keeps `rho + 1` strictly dominant on bipartite graphs, where
/// plain power iteration would oscillate between `rho` and `-rho`. The
/// returned `rho` is the Rayleigh quotient of the final iterate, and
/// iteration stops once the eigen-residual drops below `tol * max(1, rho)`.
/// The start vector is all ones, so iteration counts are reproducible.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let n = g.n();
    let mut x = vec![1.0; n];
    if g.edge_count() == 0 {
        return Ok(SpectralResult { rho: 0.0, vector: x, residual: 0.0, iterations: 0 });
    }
    let mut ax = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for iteration in 1..=MAX_ITERATIONS {
        adjacency_times(g, &x, &mut ax);
        let num: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        let den: f64 = x.iter().map(|a| a * a).sum();
        let rho = num / den;
        residual = x.iter().zip(&ax).map(|(xv, axv)| (axv - rho * xv).abs()).fold(0.0, f64::max);
        if residual <= tol * rho.max(1.0) {
            return Ok(SpectralResult { rho, vector: x, residual, iterations: iteration });
        }
        let mut top = 0.0f64;
        for (xv, axv) in x.iter_mut().zip(&ax) {
            *xv += axv;
            top = top.max(*xv);
        }
        x.iter_mut().for_each(|xv| *xv /= top);
    }
    Err(Error::NonConvergence { iterations: MAX_ITERATIONS, residual })
}

/// `rho` at the default tolerance. Panics only if power iteration fails to
/// converge, which does not happen for simple graphs at the default tolerance.
pub fn rho(g: &Graph) -> f64 {
    spectral_radius(g, DEFAULT_TOL).expect("power iteration converges at the default tolerance").rho
}

/// `(m - 1 + sqrt((m - 1)^2 + 4m(n - m))) / 2`, the spectral radius of the
/// complete split graph `K_m ∨ (n-m)K_1`.
pub fn complete_split_rho(n: usize, m: usize) -> f64 {
    let (nf, mf) = (n as f64, m as f64);
    let disc = (mf - 1.0) * (mf - 1.0) + 4.0 * mf * (nf - mf);
    (mf - 1.0 + disc.sqrt()) / 2.0
}

/// `max{2m, (m - 1 + sqrt((m - 1)^2 + 4m(n - m))) / 2}` for `n >= 2m + 2`.
///
/// At `n = 3m + 2` the discriminant is `(3m + 1)^2` and both branches are
/// exactly `2m` in floating point.
pub fn threshold(n: usize, m: usize) -> Result<f64> {
    if m == 0 {
        return Err(Error::InvalidThresholdParams { n, m, reason: "m must be at least 1" });
    }
    if n < 2 * m + 2 {
        return Err(Error::InvalidThresholdParams { n, m, reason: "need n >= 2m + 2" });
    }
    Ok(((2 * m) as f64).max(complete_split_rho(n, m)))
}

/// Spectral radius of `A^i_{n,m}` in closed form.
///
/// `i = 1` gives `2m` and `i = m + 1` the complete-split surd. In between, the
/// three vertex classes (hub clique, inner clique, independent rest) form an
/// equitable partition, and the answer is the largest root of the 3x3 quotient
/// matrix's characteristic polynomial.
pub fn closed_form_rho_extremal(p: ExtremalParams) -> f64 {
    let (n, m, i) = (p.n(), p.m(), p.i());
    if i == 1 {
        return (2 * m) as f64;
    }
    if i == m + 1 {
        return complete_split_rho(n, m);
    }
    let hub = (i - 1) as f64;
    let inner = (2 * m + 3 - 2 * i) as f64;
    let rest = (n + i - 2 * m - 2) as f64;
    let q = [[hub - 1.0, inner, rest], [hub, inner - 1.0, 0.0], [hub, 0.0, 0.0]];
    largest_root_3x3(&q, (n - 1) as f64)
}

/// Largest eigenvalue of a 3x3 matrix with real spectrum, by Newton's method
/// on the characteristic polynomial started from an upper bound. Above its
/// largest root the polynomial is increasing and convex, so the iterates
/// decrease monotonically onto that root.
fn largest_root_3x3(q: &[[f64; 3]; 3], upper: f64) -> f64 {
    let trace = q[0][0] + q[1][1] + q[2][2];
    let minors = q[0][0] * q[1][1] - q[0][1] * q[1][0] + q[0][0] * q[2][2] - q[0][2] * q[2][0]
        + q[1][1] * q[2][2]
        - q[1][2] * q[2][1];
    let det = q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) - q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0])
        + q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
    let poly = |l: f64| ((l - trace) * l + minors) * l - det;
    let slope = |l: f64| (3.0 * l - 2.0 * trace) * l + minors;
    let mut l = upper;
    for _ in 0..200 {
        let d = slope(l);
        if d <= 0.0 {
            break;
        }
        let next = l - poly(l) / d;
        if next.partial_cmp(&l) != Some(std::cmp::Ordering::Less) {
            break;
        }
        l = next;
    }
    l
}

/// Before/after spectral radii for adding the non-edge `uv`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MonotoneCheck {
    pub before: f64,
    pub after: f64,
    /// `after >= before - tol`
    pub non_decreasing: bool,
    /// `after > before + tol`
    pub strict: bool,
}

/// Compares `rho(G + uv)` against `rho(G)`.
pub fn add_edge_rho_monotone_check(g: &Graph, u: usize, v: usize, tol: f64) -> Result<MonotoneCheck> {
    let bigger = g.with_edge(u, v)?;
    if g.has_edge(u, v) {
        return Err(Error::EdgePresent(u, v));
    }
    let before = spectral_radius(g, DEFAULT_TOL.min(tol))?.rho;
    let after = spectral_radius(&bigger, DEFAULT_TOL.min(tol))?.rho;
    Ok(MonotoneCheck { before, after, non_decreasing: after >= before - tol, strict: after > before + tol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{construct_extremal, disjoint_union};

    fn close(a: f64, b: f64, eps: f64) -> bool {
        (a - b).abs() <= eps
    }

    #[test]
    fn complete_graphs() {
        for n in 2..=12 {
            let r = spectral_radius(&Graph::complete(n).unwrap(), DEFAULT_TOL).unwrap();
            assert!(close(r.rho, (n - 1) as f64, 1e-12), "{n}: {}", r.rho);
            assert!(r.residual < 1e-12);
        }
    }

    #[test]
    fn star() {
        let r = spectral_radius(&Graph::star(4, 1).unwrap(), DEFAULT_TOL).unwrap();
        assert!(close(r.rho, 3f64.sqrt(), 1e-10));
        assert!(close(r.rho, 1.7320508, 1e-7));
        assert_eq!(r.entry(1), 1.0);
    }

    #[test]
    fn extremal_examples() {
        let a = construct_extremal(ExtremalParams::new(10, 2, 3).unwrap());
        let expected = (1.0 + 65f64.sqrt()) / 2.0;
        assert!(close(rho(&a), expected, 1e-10));
        assert!(close(expected, 4.5311289, 1e-7));
        for n in 6..=20 {
            let a1 = construct_extremal(ExtremalParams::new(n, 2, 1).unwrap());
            assert!(close(rho(&a1), 4.0, 1e-10), "n = {n}");
        }
    }

    #[test]
    fn edgeless_and_invalid_tolerance() {
        let r = spectral_radius(&Graph::empty(3).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!((r.rho, r.residual, r.iterations), (0.0, 0.0, 0));
        assert!(matches!(spectral_radius(&Graph::empty(3).unwrap(), 0.0), Err(Error::InvalidTolerance(_))));
        assert!(spectral_radius(&Graph::empty(3).unwrap(), f64::NAN).is_err());
    }

    #[test]
    fn unreachable_tolerance_reports_nonconvergence() {
        let g = Graph::path(7).unwrap();
        assert!(matches!(spectral_radius(&g, 1e-300), Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn residual_contract_and_vector_shape() {
        let g = Graph::from_edges(7, &[(1, 2), (2, 3), (3, 1), (3, 4), (5, 6)]).unwrap();
        for tol in [1e-4, 1e-8, 1e-12] {
            let r = spectral_radius(&g, tol).unwrap();
            assert!(r.residual <= tol * r.rho.max(1.0));
            assert!(r.vector.iter().all(|&x| x >= 0.0));
            assert!(close(r.vector.iter().cloned().fold(0.0, f64::max), 1.0, 0.0));
        }
    }

    #[test]
    fn disconnected_vector_support() {
        // K_4 ∪ K_2: the Perron vector lives on the K_4.
        let g = disjoint_union(&Graph::complete(4).unwrap(), &Graph::complete(2).unwrap());
        let r = spectral_radius(&g, 1e-12).unwrap();
        assert!(close(r.rho, 3.0, 1e-12));
        assert!(r.entry(5) < 1e-9 && r.entry(6) < 1e-9);
    }

    #[test]
    fn threshold_values() {
        assert!(close(threshold(10, 2).unwrap(), (1.0 + 65f64.sqrt()) / 2.0, 1e-15));
        assert_eq!(threshold(8, 2).unwrap(), 4.0);
        assert_eq!(threshold(4, 1).unwrap(), 2.0);
        assert!(close(complete_split_rho(4, 1), 3f64.sqrt(), 1e-15));
        for m in 1..=200 {
            assert_eq!(threshold(3 * m + 2, m).unwrap(), (2 * m) as f64, "m = {m}");
            assert_eq!(complete_split_rho(3 * m + 2, m), (2 * m) as f64);
        }
        assert!(threshold(5, 2).is_err());
        assert!(threshold(5, 0).is_err());
    }

    #[test]
    fn closed_forms() {
        let p = ExtremalParams::new(20, 3, 4).unwrap();
        assert!(close(closed_form_rho_extremal(p), (2.0 + 208f64.sqrt()) / 2.0, 1e-12));
        assert!(close(closed_form_rho_extremal(p), 8.2111026, 1e-7));
        assert_eq!(closed_form_rho_extremal(ExtremalParams::new(9, 3, 1).unwrap()), 6.0);
        let p = ExtremalParams::new(12, 3, 2).unwrap();
        assert!(close(closed_form_rho_extremal(p), rho(&construct_extremal(p)), 1e-8));
    }

    #[test]
    fn monotone_examples() {
        let p3 = Graph::path(3).unwrap();
        let c = add_edge_rho_monotone_check(&p3, 1, 3, 1e-9).unwrap();
        assert!(close(c.before, 2f64.sqrt(), 1e-9) && close(c.after, 2.0, 1e-9));
        assert!(c.strict);

        let k3_plus_two = Graph::clique_on(5, &[1, 2, 3]).unwrap();
        let c = add_edge_rho_monotone_check(&k3_plus_two, 4, 5, 1e-9).unwrap();
        assert!(c.non_decreasing && !c.strict);
        assert!(close(c.before, 2.0, 1e-9) && close(c.after, 2.0, 1e-9));

        let star = Graph::star(4, 1).unwrap();
        let c = add_edge_rho_monotone_check(&star, 2, 3, 1e-9).unwrap();
        assert!(c.strict && c.after > 3f64.sqrt());

        assert_eq!(add_edge_rho_monotone_check(&star, 1, 2, 1e-9), Err(Error::EdgePresent(1, 2)));
    }
}
