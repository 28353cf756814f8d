//! Perron roots and the spectral threshold max{2m, surd}.
//!
//! cargo run --example spectral_radius

use srm::graph::edgelist;
use srm::spectral::{add_edge_rho_monotone_check, complete_split_rho};
use srm::{spectral_radius, threshold, Graph};

fn main() -> srm::Result<()> {
    let petersen = edgelist::parse(
        "n 10\n1 2\n2 3\n3 4\n4 5\n5 1\n1 6\n2 7\n3 8\n4 9\n5 10\n6 8\n8 10\n10 7\n7 9\n9 6\n",
    )?;
    for (name, g) in [("K_5", Graph::complete(5)?), ("C_8", Graph::cycle(8)?), ("P_6", Graph::path(6)?), ("Petersen", petersen)] {
        let r = spectral_radius(&g, 1e-12)?;
        println!("{name:<9} rho = {:.12}  residual {:.1e}  iterations {}", r.rho, r.residual, r.iterations);
    }

    println!("\nthreshold(n, m) for m = 2:");
    for n in 6..=12 {
        let t = threshold(n, 2)?;
        let side = if complete_split_rho(n, 2) > 4.0 { "surd" } else { "2m" };
        println!("  n = {n:>2}: {t:.10} ({side})");
    }

    // Adding an edge between the isolated vertices of K_3 ∪ 2K_1 leaves rho at 2.
    let g = Graph::clique_on(5, &[1, 2, 3])?;
    let c = add_edge_rho_monotone_check(&g, 4, 5, 1e-9)?;
    println!("\nK_3 ∪ 2K_1 plus edge 45: {:.6} -> {:.6}, strict = {}", c.before, c.after, c.strict);
    Ok(())
}
