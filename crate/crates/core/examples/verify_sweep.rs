//! Verification sweeps with JSON-lines certificates, and certificate replay.
//!
//! cargo run --release --example verify_sweep

use srm::verify::{check_extremal_rigidity, check_t12, check_t13, replay, SweepPlan};

fn main() -> srm::Result<()> {
    // Pairs of graphs on 5 vertices with rho >= 2: the failing pairs are the
    // stated exceptions only.
    let sweep = check_t13(&SweepPlan::exhaustive(5, 1))?;
    print!("{}", sweep.to_json_lines());

    for c in sweep.certificates.iter().filter(|c| !c.is_summary()).take(3) {
        assert_eq!(&replay(c)?, c);
    }

    let t12 = check_t12(&SweepPlan::sampled(10, 3, 50_000, 42))?;
    println!("rho bound, n=10 m=3, sampled: {:?}", t12.counts);

    let rigid = check_extremal_rigidity(&SweepPlan::exhaustive(6, 2))?;
    println!("rigidity, n=6 m=2: {:?}", rigid.counts);
    Ok(())
}
