//! Rainbow matchings built directly for families of extremal graphs whose
//! members are not all labeled the same.

use super::{hall_bipartite_matching, GraphFamily, HallOutcome, Pick, RainbowMatching};
use crate::error::{Error, Result};
use crate::graph::{recognize_extremal, ExtremalKind};

fn check_shape(f: &GraphFamily, m: usize) -> Result<()> {
    if m == 0 || f.n() < 2 * m + 2 || f.len() != m + 1 {
        return Err(Error::FamilyShape { n: f.n(), m, members: f.len() });
    }
    Ok(())
}

/// Family of labeled copies of `K_m ∨ (n-m)K_1` whose dominating sets
/// `W_i` are not all equal.
///
/// Picks distinct representatives `x_i ∈ W_i` by Hall's condition, then `m + 1`
/// further vertices `y_i` outside `{x_i}` (smallest labels first), and
/// returns the edges `x_i y_i`.
pub fn rainbow_from_split_family(f: &GraphFamily, m: usize) -> Result<RainbowMatching> {
    check_shape(f, m)?;
    let dominating: Vec<Vec<usize>> = f
        .members()
        .iter()
        .enumerate()
        .map(|(k, g)| match recognize_extremal(g, m) {
            ExtremalKind::AmPlus1 { dominating } => Ok(dominating),
            _ => Err(Error::NotExtremal { index: k + 1, expected: "K_m ∨ (n-m)K_1" }),
        })
        .collect::<Result<_>>()?;
    if dominating.iter().all(|w| *w == dominating[0]) {
        return Err(Error::AllEqual("dominating"));
    }
    // Two distinct m-sets cover at least m + 1 vertices, so Hall's condition holds.
    let xs = match hall_bipartite_matching(&dominating) {
        HallOutcome::Transversal(xs) => xs,
        HallOutcome::Deficiency(_) => unreachable!("distinct m-sets always admit a transversal of size m + 1"),
    };
    let ys = (1..=f.n()).filter(|v| !xs.contains(v));
    let picks = xs
        .iter()
        .zip(ys)
        .enumerate()
        .map(|(k, (&x, y))| Pick { index: k + 1, edge: (x.min(y), x.max(y)) })
        .collect();
    Ok(RainbowMatching::new(picks))
}

/// Family of labeled copies of `K_{2m+1} ∪ (n-2m-1)K_1` whose clique sets
/// `U_i` are not all equal.
///
/// With `p` the first member and `q` the first member whose clique differs
/// from it, the greedy runs `p` first and `q` last, and starts from a vertex
/// of `U_p \ U_q`. Every intermediate member then still has at least three
/// uncovered clique vertices, and `q` at least two.
pub fn rainbow_from_clique_family(f: &GraphFamily, m: usize) -> Result<RainbowMatching> {
    check_shape(f, m)?;
    let cliques: Vec<Vec<usize>> = f
        .members()
        .iter()
        .enumerate()
        .map(|(k, g)| match recognize_extremal(g, m) {
            ExtremalKind::A1 { clique } => Ok(clique),
            _ => Err(Error::NotExtremal { index: k + 1, expected: "K_{2m+1} ∪ (n-2m-1)K_1" }),
        })
        .collect::<Result<_>>()?;
    let p = 0;
    let q = cliques.iter().position(|u| *u != cliques[p]).ok_or(Error::AllEqual("clique"))?;
    let order: Vec<usize> =
        std::iter::once(p).chain((0..cliques.len()).filter(|&k| k != p && k != q)).chain(std::iter::once(q)).collect();

    let mut covered = vec![false; f.n() + 1];
    let mut picks = Vec::with_capacity(order.len());
    for (step, &k) in order.iter().enumerate() {
        let free: Vec<usize> = cliques[k].iter().copied().filter(|&v| !covered[v]).collect();
        let (a, b) = if step == 0 {
            let start = *cliques[p].iter().find(|v| !cliques[q].contains(v)).expect("U_p != U_q with equal sizes");
            (start, *free.iter().find(|&&v| v != start).expect("clique has 2m + 1 >= 3 vertices"))
        } else {
            debug_assert!(free.len() >= if step == order.len() - 1 { 2 } else { 3 });
            (free[0], free[1])
        };
        covered[a] = true;
        covered[b] = true;
        picks.push(Pick { index: k + 1, edge: (a.min(b), a.max(b)) });
    }
    Ok(RainbowMatching::new(picks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{join_on, Graph};
    use crate::matching::find_rainbow;

    fn split(n: usize, w: &[usize]) -> Graph {
        join_on(&Graph::clique_on(n, w).unwrap(), &Graph::empty(n).unwrap(), w).unwrap()
    }

    #[test]
    fn split_family_examples() {
        let f = GraphFamily::new(vec![split(6, &[1, 2]), split(6, &[1, 2]), split(6, &[1, 3])]).unwrap();
        let r = rainbow_from_split_family(&f, 2).unwrap();
        assert_eq!(r.validate(&f), Ok(()));
        for p in &r.picks {
            let w = [&[1, 2][..], &[1, 2], &[1, 3]][p.index - 1];
            assert!(w.contains(&p.edge.0) || w.contains(&p.edge.1));
        }
        assert!(find_rainbow(&f).is_some());

        let f = GraphFamily::new(vec![split(4, &[1]), split(4, &[2])]).unwrap();
        let r = rainbow_from_split_family(&f, 1).unwrap();
        assert_eq!(r.validate(&f), Ok(()));
        assert_eq!(r.to_lines(), "1: 1 3\n2: 2 4\n");

        let same = GraphFamily::repeated(&split(6, &[1, 2]), 3).unwrap();
        assert_eq!(rainbow_from_split_family(&same, 2), Err(Error::AllEqual("dominating")));
    }

    #[test]
    fn split_family_precondition_errors() {
        let f = GraphFamily::new(vec![split(6, &[1, 2]), Graph::cycle(6).unwrap(), split(6, &[1, 3])]).unwrap();
        assert!(matches!(rainbow_from_split_family(&f, 2), Err(Error::NotExtremal { index: 2, .. })));
        let f = GraphFamily::new(vec![split(6, &[1, 2]), split(6, &[1, 3])]).unwrap();
        assert!(matches!(rainbow_from_split_family(&f, 2), Err(Error::FamilyShape { .. })));
    }

    #[test]
    fn clique_family_examples() {
        let f = GraphFamily::new(vec![
            Graph::clique_on(6, &[1, 2, 3, 4, 5]).unwrap(),
            Graph::clique_on(6, &[1, 2, 3, 4, 5]).unwrap(),
            Graph::clique_on(6, &[2, 3, 4, 5, 6]).unwrap(),
        ])
        .unwrap();
        let r = rainbow_from_clique_family(&f, 2).unwrap();
        assert_eq!(r.validate(&f), Ok(()));
        assert!(find_rainbow(&f).is_some());

        let f = GraphFamily::new(vec![Graph::clique_on(4, &[1, 2, 3]).unwrap(), Graph::clique_on(4, &[2, 3, 4]).unwrap()])
            .unwrap();
        let r = rainbow_from_clique_family(&f, 1).unwrap();
        assert_eq!(r.validate(&f), Ok(()));
        assert_eq!(r.to_lines(), "1: 1 2\n2: 3 4\n");

        let same = GraphFamily::repeated(&Graph::clique_on(6, &[1, 2, 3, 4, 5]).unwrap(), 3).unwrap();
        assert_eq!(rainbow_from_clique_family(&same, 2), Err(Error::AllEqual("clique")));
        assert!(matches!(
            rainbow_from_clique_family(&GraphFamily::repeated(&split(6, &[1, 2]), 3).unwrap(), 2),
            Err(Error::NotExtremal { index: 1, .. })
        ));
    }

    #[test]
    fn clique_family_when_first_member_is_the_odd_one() {
        let f = GraphFamily::new(vec![
            Graph::clique_on(8, &[4, 5, 6, 7, 8]).unwrap(),
            Graph::clique_on(8, &[1, 2, 3, 4, 5]).unwrap(),
            Graph::clique_on(8, &[1, 2, 3, 4, 5]).unwrap(),
        ])
        .unwrap();
        let r = rainbow_from_clique_family(&f, 2).unwrap();
        assert_eq!(r.validate(&f), Ok(()));
    }
}
