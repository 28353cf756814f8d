//! Rainbow matchings built directly for mixed families of extremal graphs.
//!
//! cargo run --example constructive_rainbow

use srm::graph::join_on;
use srm::matching::{hall_bipartite_matching, rainbow_from_clique_family, rainbow_from_split_family};
use srm::{Graph, GraphFamily};

fn split(n: usize, w: &[usize]) -> srm::Result<Graph> {
    join_on(&Graph::clique_on(n, w)?, &Graph::empty(n)?, w)
}

fn main() -> srm::Result<()> {
    let sets = vec![vec![1, 2], vec![1, 2], vec![1, 3]];
    println!("transversal of {sets:?}: {:?}", hall_bipartite_matching(&sets));

    let f = GraphFamily::new(sets.iter().map(|w| split(7, w)).collect::<srm::Result<_>>()?)?;
    let r = rainbow_from_split_family(&f, 2)?;
    print!("split family (dominating sets {sets:?}):\n{}", r.to_lines());
    assert_eq!(r.validate(&f), Ok(()));

    let cliques = [[1, 2, 3, 4, 5], [1, 2, 3, 4, 5], [3, 4, 5, 6, 7]];
    let f = GraphFamily::new(cliques.iter().map(|u| Graph::clique_on(7, u)).collect::<srm::Result<_>>()?)?;
    let r = rainbow_from_clique_family(&f, 2)?;
    print!("clique family (cliques {cliques:?}):\n{}", r.to_lines());
    assert_eq!(r.validate(&f), Ok(()));
    Ok(())
}
