//! graph6 and edge-list input and output.
//!
//! cargo run --example graph6_io -- 'E~{?'

use srm::graph::{edgelist, graph6};
use srm::Graph;

fn main() -> srm::Result<()> {
    for code in std::env::args().skip(1) {
        let g = graph6::decode(&code)?;
        print!("{code}:\n{}", edgelist::format(&g));
    }

    let g = edgelist::parse("# a 5-cycle with one chord\nn 5\n1 2\n2 3\n3 4\n4 5\n5 1\n1 3\n")?;
    let code = graph6::encode(&g);
    println!("edge list -> {code}");
    assert_eq!(graph6::decode(&code)?, g);

    let big = Graph::complete(62)?;
    println!("K_62 encodes to {} bytes", graph6::encode(&big).len());
    Ok(())
}
