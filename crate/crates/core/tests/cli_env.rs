//! Kept in its own binary: the environment is process-wide.

use std::io::Cursor;

fn rho_exit(args: &[&str]) -> i32 {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    srm::cli::run(std::iter::once("srm").chain(args.iter().copied()), &mut Cursor::new(b"C~".to_vec()), &mut out, &mut err)
}

#[test]
fn srm_tol_is_read_and_the_flag_wins() {
    std::env::set_var("SRM_TOL", "0");
    assert_eq!(rho_exit(&["rho"]), 1);
    assert_eq!(rho_exit(&["rho", "--tol", "1e-8"]), 0);
    std::env::set_var("SRM_TOL", "1e-6");
    assert_eq!(rho_exit(&["rho"]), 0);
    std::env::remove_var("SRM_TOL");
}
