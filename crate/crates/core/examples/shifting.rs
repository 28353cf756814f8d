//! The (x,y)-shift, full shifting with a trace, and neighbour rewiring.
//!
//! cargo run --example shifting

use srm::graph::graph6;
use srm::shifting::{fully_shift, is_shifted, potential, rewire_neighbors, shift_xy};
use srm::{spectral_radius, Graph};

fn main() -> srm::Result<()> {
    let g = Graph::from_edges(6, &[(1, 4), (2, 5), (3, 6), (4, 5), (5, 6)])?;
    println!("start {}  potential {}  rho {:.6}", graph6::encode(&g), potential(&g), spectral_radius(&g, 1e-12)?.rho);

    let s = shift_xy(&g, 1, 5)?;
    println!("S_15  {:?}", s.edges().collect::<Vec<_>>());

    let trace = fully_shift(&g);
    for step in &trace.steps {
        println!("  shift ({}, {}) moved {} edge(s)", step.x, step.y, step.edges_moved);
    }
    let h = trace.result;
    println!(
        "fully shifted {:?}  shifted = {}  potential {}  rho {:.6}",
        h.edges().collect::<Vec<_>>(),
        is_shifted(&h),
        potential(&h),
        spectral_radius(&h, 1e-12)?.rho
    );

    // Star at 1 with a pendant path 1-4-5. The hub has the larger Perron
    // entry, so moving 5 from 4 over to 1 raises rho.
    let p = Graph::from_edges(5, &[(1, 2), (1, 3), (1, 4), (4, 5)])?;
    let before = spectral_radius(&p, 1e-12)?;
    let r = rewire_neighbors(&p, 1, 4)?;
    println!(
        "rewire (1,4): x_1 = {:.4}, x_4 = {:.4}; {:?}  rho {:.6} -> {:.6}",
        before.entry(1),
        before.entry(4),
        r.edges().collect::<Vec<_>>(),
        before.rho,
        spectral_radius(&r, 1e-12)?.rho
    );
    Ok(())
}
