//! Builds the graphs A^i_{n,m} and recognizes the two extreme members.
//!
//! cargo run --example extremal_graphs -- 9 2

use srm::spectral::closed_form_rho_extremal;
use srm::{construct_extremal, recognize_extremal, spectral_radius, ExtremalParams};

fn main() -> srm::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (n, m) = match args[..] {
        [n, m] => (n, m),
        _ => (9, 2),
    };
    println!("A^i_{{{n},{m}}}: i, edges, graph6, rho (closed form), rho (power iteration), recognized as");
    for i in 1..=m + 1 {
        let p = ExtremalParams::new(n, m, i)?;
        let g = construct_extremal(p);
        let r = spectral_radius(&g, 1e-12)?;
        println!(
            "{i}  {:>3}  {:<12} {:.10}  {:.10}  {}",
            g.edge_count(),
            srm::graph::graph6::encode(&g),
            closed_form_rho_extremal(p),
            r.rho,
            recognize_extremal(&g, m).label()
        );
    }
    Ok(())
}
