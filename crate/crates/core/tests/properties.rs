use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use srm::graph::{graph6, iso};
use srm::matching::find_rainbow;
use srm::shifting::{fully_shift, is_shifted, shift_family, shift_xy};
use srm::spectral::{add_edge_rho_monotone_check, closed_form_rho_extremal};
use srm::verify::{check_t11, check_t12, check_t13, enumerate_qualifying, replay, SweepPlan};
use srm::{construct_extremal, spectral_radius, threshold, ExtremalParams, Graph, GraphFamily};

fn eigen_rho(g: &Graph) -> f64 {
    let n = g.n();
    let a = DMatrix::from_fn(n, n, |i, j| if i != j && g.has_edge(i + 1, j + 1) { 1.0 } else { 0.0 });
    SymmetricEigen::new(a).eigenvalues.max()
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for v in 2..=n {
                for u in 1..v {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn power_iteration_matches_dense_eigensolver(g in graph_strategy(12)) {
        let r = spectral_radius(&g, 1e-10).unwrap();
        prop_assert!((r.rho - eigen_rho(&g)).abs() <= 1e-8);
        prop_assert!(r.residual <= 1e-10 * r.rho.max(1.0));
    }

    #[test]
    fn adding_an_edge_never_lowers_rho(g in graph_strategy(10), seed in any::<u64>()) {
        let n = g.n();
        let missing: Vec<(usize, usize)> = (2..=n).flat_map(|v| (1..v).map(move |u| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[(seed % missing.len() as u64) as usize];
        let c = add_edge_rho_monotone_check(&g, u, v, 1e-9).unwrap();
        prop_assert!(c.non_decreasing);
        if g.is_connected() {
            prop_assert!(c.strict);
        }
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(20)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }
}

#[test]
fn qualifying_count_on_four_vertices() {
    let thr = threshold(4, 1).unwrap();
    let oracle = (0..64u64).filter(|&m| eigen_rho(&Graph::from_edge_mask(4, m).unwrap()) >= thr - 1e-9).count();
    let q = enumerate_qualifying(4, 1, 1e-9, 1e-10, 1 << 20).unwrap();
    assert_eq!(q.len(), oracle);
    assert_eq!(q.len(), 26);
    assert!(q.windows(2).all(|w| graph6::encode(&w[0].graph) < graph6::encode(&w[1].graph)));
    assert!(q.iter().all(|x| x.graph.edge_count() > 0));
}

#[test]
fn complete_graph_always_qualifies() {
    for m in 1..=6 {
        for n in 2 * m + 2..=30 {
            let rho = spectral_radius(&Graph::complete(n).unwrap(), 1e-10).unwrap().rho;
            assert!(rho >= threshold(n, m).unwrap() - 1e-9, "n={n} m={m}");
        }
    }
}

#[test]
fn intermediate_extremal_graphs_match_the_quotient_root() {
    for m in 2..=5 {
        for n in 2 * m + 2..=2 * m + 8 {
            for i in 2..=m {
                let p = ExtremalParams::new(n, m, i).unwrap();
                let g = construct_extremal(p);
                assert!((eigen_rho(&g) - closed_form_rho_extremal(p)).abs() <= 1e-8, "n={n} m={m} i={i}");
            }
        }
    }
}

/// Sweeps `x < y` in the opposite order (y descending, then x descending).
fn fully_shift_reversed(g: &Graph) -> Graph {
    let n = g.n();
    let mut cur = g.clone();
    loop {
        let mut changed = false;
        for y in (2..=n).rev() {
            for x in (1..y).rev() {
                let next = shift_xy(&cur, x, y).unwrap();
                if next != cur {
                    cur = next;
                    changed = true;
                }
            }
        }
        if !changed {
            return cur;
        }
    }
}

#[test]
fn shift_fixed_point_depends_on_sweep_order() {
    // The path 2-3-4-1 ends as a triangle under the lexicographic order and
    // as a star under the reversed one.
    let p = Graph::from_edges(4, &[(2, 3), (3, 4), (1, 4)]).unwrap();
    assert_eq!(fully_shift(&p).result, Graph::clique_on(4, &[1, 2, 3]).unwrap());
    assert_eq!(fully_shift_reversed(&p), Graph::star(4, 1).unwrap());

    let mut differing = 0;
    for n in 2..=6 {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let g = Graph::from_edge_mask(n, mask).unwrap();
            let a = fully_shift(&g).result;
            let b = fully_shift_reversed(&g);
            assert!(is_shifted(&a) && is_shifted(&b));
            assert_eq!(a.edge_count(), g.edge_count());
            assert_eq!(b.edge_count(), g.edge_count());
            let r = spectral_radius(&g, 1e-10).unwrap().rho;
            for h in [&a, &b] {
                assert!(spectral_radius(h, 1e-10).unwrap().rho >= r - 1e-9);
            }
            if !iso::are_isomorphic(&a, &b).unwrap() {
                differing += 1;
            }
        }
    }
    assert!(differing > 0);
}

#[test]
fn single_shift_preserves_rainbow_failure() {
    // Exhaustive on pairs over 4 vertices, sampled triples over 6.
    let graphs: Vec<Graph> = (0..64u64).map(|m| Graph::from_edge_mask(4, m).unwrap()).collect();
    for a in &graphs {
        for b in &graphs {
            let f = GraphFamily::new(vec![a.clone(), b.clone()]).unwrap();
            let has = find_rainbow(&f).is_some();
            for x in 1..=4 {
                for y in x + 1..=4 {
                    if find_rainbow(&shift_family(&f, x, y).unwrap()).is_some() {
                        assert!(has);
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..5000 {
        let members: Vec<Graph> = (0..3).map(|_| Graph::from_edge_mask(6, rng.random::<u64>() & 0x7fff).unwrap()).collect();
        let f = GraphFamily::new(members).unwrap();
        let has = find_rainbow(&f).is_some();
        let (x, y) = (rng.random_range(1..=5), rng.random_range(2..=6));
        if x < y && find_rainbow(&shift_family(&f, x, y).unwrap()).is_some() {
            assert!(has);
        }
    }
}

#[test]
fn relabeled_extremal_graphs_are_the_equality_cases() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for (n, m, i) in [(8, 2, 1), (8, 2, 3), (6, 2, 1), (9, 2, 3)] {
        let mut perm: Vec<usize> = (1..=n).collect();
        perm.shuffle(&mut rng);
        let g = construct_extremal(ExtremalParams::new(n, m, i).unwrap()).relabel(&perm).unwrap();
        let mut cert = check_t12(&SweepPlan::sampled(n, m, 1, 0)).unwrap().certificates.pop().unwrap();
        cert.witness = srm::verify::Witness::Within { quantity: "rho".into(), value: 0.0, bound: 0.0 };
        cert.instance = vec![graph6::encode(&g)];
        let r = replay(&cert).unwrap();
        match r.witness {
            srm::verify::Witness::Extremal { extremal, .. } => {
                assert_eq!(extremal, if i == 1 { "A1" } else { "A_m_plus_1" });
            }
            other => panic!("n={n} m={m} i={i}: {other:?}"),
        }
    }
}

#[test]
fn sampled_certificates_replay_identically() {
    for sweep in [
        check_t13(&SweepPlan::sampled(5, 1, 3000, 4)).unwrap(),
        check_t11(&SweepPlan::exhaustive(4, 1)).unwrap(),
        check_t12(&SweepPlan::sampled(8, 2, 3000, 5)).unwrap(),
    ] {
        for c in sweep.certificates.iter().filter(|c| !c.is_summary()) {
            assert_eq!(&replay(c).unwrap(), c);
        }
    }
}

#[test]
fn t11_sampled_families_all_pass() {
    for (n, m) in [(6, 2), (8, 2), (9, 3), (12, 4)] {
        let sweep = check_t11(&SweepPlan::sampled(n, m, 2000, 8)).unwrap();
        assert_eq!(sweep.counts.counterexamples, 0, "n={n} m={m}");
        assert_eq!(sweep.counts.passed, 2000);
    }
}
