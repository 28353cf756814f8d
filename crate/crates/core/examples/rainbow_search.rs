//! Exact rainbow-matching search and the matching number.
//!
//! cargo run --example rainbow_search

use srm::matching::max_matching;
use srm::{construct_extremal, find_rainbow, ExtremalParams, Graph, GraphFamily};

fn show(name: &str, f: &GraphFamily) {
    match find_rainbow(f) {
        Some(r) => print!("{name}: rainbow matching\n{}", r.to_lines()),
        None => println!("{name}: NONE"),
    }
}

fn main() -> srm::Result<()> {
    let stars = GraphFamily::new(vec![Graph::star(6, 1)?, Graph::star(6, 2)?, Graph::cycle(6)?])?;
    show("two stars and a hexagon", &stars);

    // Three identical copies of K_2 ∨ 7K_1 (n = 9, m = 2): every edge meets
    // the two hubs, so no three disjoint edges exist.
    let a = construct_extremal(ExtremalParams::new(9, 2, 3)?);
    println!("nu(A^3_{{9,2}}) = {}", max_matching(&a).size);
    show("three copies of A^3_{9,2}", &GraphFamily::repeated(&a, 3)?);

    let mut b = a.clone();
    b.add_edge(5, 6)?;
    show("two copies plus one with an extra edge", &GraphFamily::new(vec![a.clone(), a, b])?);
    Ok(())
}
